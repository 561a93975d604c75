"""Exact tridiagonal matrix of H1 on a sector.

In the orthonormal basis e_s = x^(Nvec+sn) y^(Mvec-sm) / sqrt(C_s) the
perturbation is a symmetric tridiagonal matrix with zero diagonal.  The
squared off-diagonal entries are positive integers and are kept exactly;
the floating entries are a derived view, scaled by a power of two when the
integers get too large for doubles.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial, prod

import numpy as np

from .errors import AsymmetryDetected, IndexOutOfRange, InvalidSector, NotTridiagonal
from .model import Model
from .qes import ReducedOperator
from .sectors import SectorLabel, basis_state, check_sector

# squared entries above 2**SAFE_LOG2 trigger power-of-two scaling
SAFE_LOG2 = 1000


@dataclass(frozen=True)
class NormConstants:
    c: tuple[int, ...]


@dataclass(frozen=True)
class TridiagonalH1:
    """Zero-diagonal symmetric tridiagonal matrix, stored by squared couplings.

    ``offdiag[t]`` couples basis states t and t+1 and equals
    ``sqrt(offdiag_sq[t]) / 2**scale_log2``.
    """

    dim: int
    offdiag_sq: tuple[int, ...]
    scale_log2: int = 0
    offdiag: np.ndarray = field(default=None, compare=False, repr=False)
    offdiag_sq_scaled: np.ndarray = field(default=None, compare=False, repr=False)

    @property
    def scale(self) -> float:
        return math.ldexp(1.0, self.scale_log2)

    @property
    def norm_inf_scaled(self) -> float:
        h = self.offdiag
        if h.size == 0:
            return 0.0
        padded = np.concatenate(([0.0], h, [0.0]))
        return float(np.max(padded[:-1] + padded[1:]))

    @property
    def norm_inf(self) -> float:
        return math.ldexp(self.norm_inf_scaled, self.scale_log2)

    def dense(self) -> np.ndarray:
        """Dense float copy (scaled units); for small matrices and plotting."""
        return np.diag(self.offdiag, 1) + np.diag(self.offdiag, -1)

    def to_json(self) -> dict:
        return {
            "dim": self.dim,
            "offdiag_sq": [str(v) for v in self.offdiag_sq],
            "scale_log2": self.scale_log2,
        }

    @classmethod
    def from_json(cls, data: dict) -> "TridiagonalH1":
        mat = tridiagonal_from_squares([int(v) for v in data["offdiag_sq"]])
        if mat.dim != int(data["dim"]) or mat.scale_log2 != int(data["scale_log2"]):
            raise ValueError("dim or scale_log2 inconsistent with offdiag_sq")
        return mat


def tridiagonal_from_squares(squares) -> TridiagonalH1:
    """Build the matrix from exact squared couplings h_1^2, ..., h_r^2."""
    squares = tuple(int(v) for v in squares)
    if any(v <= 0 for v in squares):
        raise InvalidSector("squared couplings must be positive")
    top = max((v.bit_length() for v in squares), default=0)
    k = top // 2 if top > SAFE_LOG2 else 0
    denom = 1 << (2 * k)
    # int / int is correctly rounded even for huge operands
    scaled_sq = np.array([v / denom for v in squares], dtype=float)
    return TridiagonalH1(
        dim=len(squares) + 1,
        offdiag_sq=squares,
        scale_log2=k,
        offdiag=np.sqrt(scaled_sq),
        offdiag_sq_scaled=scaled_sq,
    )


def norm_constants(model: Model, sector: SectorLabel) -> NormConstants:
    """C_s = prod_l (Nvec_l + n_l s)! * prod_k (Mvec_k - m_k s)!  for s = 0..r."""
    check_sector(model, sector)
    c = []
    for s in range(sector.r + 1):
        st = basis_state(model, sector, s)
        c.append(prod(factorial(a) for a in st.i) * prod(factorial(b) for b in st.j))
    return NormConstants(tuple(c))


def offdiag_sq(model: Model, sector: SectorLabel, s: int) -> int:
    """Squared coupling between basis states s-1 and s (1 <= s <= r)."""
    check_sector(model, sector)
    if not 1 <= s <= sector.r:
        raise IndexOutOfRange(f"s = {s} outside 1..{sector.r}")
    value = 1
    for Nl, nl in zip(sector.Nvec, model.n):
        for j in range(nl):
            value *= Nl + nl * (s - 1) + j + 1
    for Mk, mk in zip(sector.Mvec, model.m):
        for i in range(mk):
            value *= Mk - mk * (s - 1) - i
    return value


def build_tridiagonal(model: Model, sector: SectorLabel) -> TridiagonalH1:
    check_sector(model, sector)
    return tridiagonal_from_squares(
        offdiag_sq(model, sector, s) for s in range(1, sector.r + 1)
    )


def symmetrize_reduced(reduced: ReducedOperator, norms: NormConstants) -> TridiagonalH1:
    """Conjugate the monomial-basis matrix by diag(sqrt(C_s)).

    Entry (a, b) becomes M[a][b] * sqrt(C_a / C_b); symmetry and the squared
    couplings are checked with exact integer arithmetic only.
    """
    dim = reduced.dim
    C = norms.c
    if len(C) != dim:
        raise ValueError(f"{len(C)} norm constants for a {dim}x{dim} operator")
    if not reduced.is_tridiagonal():
        raise NotTridiagonal("reduced operator is not zero-diagonal tridiagonal")
    M = reduced.matrix
    squares = []
    for s in range(1, dim):
        below, above = M[s][s - 1], M[s - 1][s]
        # (M[s][s-1] sqrt(C_s/C_{s-1}))^2 == (M[s-1][s] sqrt(C_{s-1}/C_s))^2
        if below * C[s] != above * C[s - 1] or (below > 0) != (above > 0):
            raise AsymmetryDetected(
                f"link {s}: {below}*sqrt(C{s}/C{s-1}) != {above}*sqrt(C{s-1}/C{s})"
            )
        sq = Fraction(below * below * C[s], C[s - 1])
        if sq.denominator != 1 or sq != below * above:
            raise AsymmetryDetected(f"link {s}: squared coupling {sq} != {below * above}")
        squares.append(int(sq))
    return tridiagonal_from_squares(squares)
