"""Exact spectral toolkit for photon-conversion Hamiltonians H = H0 + g H1.

Covers n-th harmonic generation, photon cascades and the general
multi-mode case: invariant sectors, their tridiagonal H1 matrices, certified
eigenvalues, and the reduced one-variable operator written in sl(2)
generators.
"""

from .errors import *  # noqa: F401,F403
from .matrix import (
    NormConstants,
    TridiagonalH1,
    build_tridiagonal,
    norm_constants,
    offdiag_sq,
    symmetrize_reduced,
    tridiagonal_from_squares,
)
from .model import General, HarmonicGeneration, Model, PhotonCascade, load_model, model_kind, validate
from .oracle import (
    MonomialCombo,
    PolyOperator,
    apply,
    brute_force_sector,
    build_operators,
    commutator_check,
    random_probes,
)
from .qes import (
    ReducedOperator,
    Sl2Term,
    format_terms,
    reduced_direct,
    sl2_expansion,
    sl2_generators,
    sl2_matrix,
    valid_primes,
)
from .sectors import (
    MonomialState,
    QuantumNumbers,
    SectorLabel,
    canonicalize,
    enumerate_sectors,
    make_sector,
    monomial,
    quantum_numbers,
    sector_basis,
)
from .spectral import (
    SectorSpectrum,
    Spectrum,
    char_poly_sequence,
    eigenvalues,
    full_spectrum,
    poly_spectrum,
    sturm_count,
)
from .suite import STANDARD_MODELS, sector_family, standard_models
from .verify import Report, verify_model

__version__ = "0.1.0"
