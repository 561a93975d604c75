"""Certified eigenvalues of the sector matrices.

Eigenvalues come from bisection on Sturm counts of the characteristic
polynomials delta_s(E) = det(E - H1) restricted to the leading s x s block,
which obey delta_{s+1} = E delta_s - h_s^2 delta_{s-1}.  A LAPACK tridiagonal
solver is only used to cross-check.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Literal, Sequence

import numpy as np
from scipy.linalg import eigh_tridiagonal

from . import _sturm
from .errors import CrossCheckFailed, ToleranceTooSmall
from .matrix import TridiagonalH1, build_tridiagonal
from .model import Model
from .sectors import SectorLabel, basis_state, check_sector, quantum_numbers

DEFAULT_TOL = 1e-12
CROSSCHECK_MAX_DIM = 2000
_EPS = np.finfo(float).eps


@dataclass(frozen=True, eq=False)
class Spectrum:
    """Sorted eigenvalues of one sector matrix.

    Values are stored in the matrix's scaled units; ``eigenvalues`` undoes
    the power-of-two scale (overflowing to inf if unrepresentable, in which
    case use :meth:`mantissa_exponent`).
    """

    scaled: np.ndarray
    scale_log2: int
    certified_width: float
    method: Literal["sturm-bisection", "dense-crosscheck"]
    norm_inf: float
    crosscheck_deviation: float | None = None

    @property
    def eigenvalues(self) -> np.ndarray:
        return np.ldexp(self.scaled, self.scale_log2)

    @property
    def dim(self) -> int:
        return self.scaled.size

    def mantissa_exponent(self) -> list[tuple[float, int]]:
        mant, expo = np.frexp(self.scaled)
        return [(float(a), int(b) + self.scale_log2) for a, b in zip(mant, expo)]

    @property
    def min_gap(self) -> float:
        if self.dim < 2:
            return math.inf
        return math.ldexp(float(np.min(np.diff(self.scaled))), self.scale_log2)

    @property
    def symmetry_defect(self) -> float:
        """max |lambda_i + lambda_{dim-1-i}|."""
        return math.ldexp(float(np.max(np.abs(self.scaled + self.scaled[::-1]))), self.scale_log2)


def _to_scaled(matrix: TridiagonalH1, e: float) -> float:
    return math.ldexp(float(e), -matrix.scale_log2)


def char_poly_sequence(matrix: TridiagonalH1, e: float) -> np.ndarray:
    """delta_0(e), ..., delta_{r+1}(e) in the matrix's scaled units.

    Whenever |delta_s| exceeds 2**512 the running pair and everything after
    it is multiplied by 2**-512, so entries are exact values only up to such
    positive factors; signs are always exact.
    """
    h2 = matrix.offdiag_sq_scaled
    x = _to_scaled(matrix, e)
    out = np.empty(matrix.dim + 1)
    out[0] = 1.0
    out[1] = x
    prev, cur = 1.0, x
    for s in range(matrix.dim - 1):
        nxt = x * cur - h2[s] * prev
        if abs(nxt) > _sturm.RESCALE_ABOVE:
            nxt *= _sturm.RESCALE_BY
            cur *= _sturm.RESCALE_BY
        prev, cur = cur, nxt
        out[s + 2] = nxt
    return out


def sturm_count(matrix: TridiagonalH1, e: float) -> int:
    """Number of eigenvalues below ``e``.

    If ``e`` is itself an eigenvalue it is treated as lying just above it,
    so that eigenvalue is counted.
    """
    probes = np.array([_to_scaled(matrix, e)])
    return int(_sturm.sturm_counts(matrix.offdiag_sq_scaled, probes)[0])


def _bisect_all(h2: np.ndarray, bound: float, width: float, dim: int):
    lo = np.full(dim, -bound)
    hi = np.full(dim, bound)
    index = np.arange(dim)
    steps = max(1, math.ceil(math.log2(2.0 * bound / width)))
    for _ in range(steps):
        mid = 0.5 * (lo + hi)
        counts = _sturm.sturm_counts(h2, mid)
        above = counts > index
        hi = np.where(above, mid, hi)
        lo = np.where(above, lo, mid)
    return lo, hi


def dense_eigenvalues(matrix: TridiagonalH1) -> Spectrum:
    """LAPACK implicit-shift QL/QR eigenvalues (no certificate)."""
    if matrix.dim == 1:
        vals = np.zeros(1)
    else:
        vals = eigh_tridiagonal(
            np.zeros(matrix.dim), matrix.offdiag, eigvals_only=True, lapack_driver="stev"
        )
    return Spectrum(np.sort(vals), matrix.scale_log2, math.nan, "dense-crosscheck", matrix.norm_inf)


def eigenvalues(matrix: TridiagonalH1, tol: float = DEFAULT_TOL) -> Spectrum:
    """Bracket every eigenvalue to width <= tol * max(1, ||H||_inf).

    For dim <= 2000 the result is compared with :func:`dense_eigenvalues`
    and CrossCheckFailed is raised if they differ by more than ten widths.
    """
    if not tol > 0:
        raise ValueError("tol must be positive")
    norm = matrix.norm_inf_scaled
    unit = math.ldexp(1.0, -matrix.scale_log2)
    width = tol * max(unit, norm)
    if width < 4 * _EPS * norm:
        raise ToleranceTooSmall(
            f"tol = {tol:g} is below what double precision can resolve at this scale"
        )
    bound = norm * (1 + 4 * _EPS) + width
    lo, hi = _bisect_all(matrix.offdiag_sq_scaled, bound, width, matrix.dim)
    mid = 0.5 * (lo + hi)
    spec = Spectrum(
        scaled=mid,
        scale_log2=matrix.scale_log2,
        certified_width=math.ldexp(float(np.max(hi - lo)), matrix.scale_log2),
        method="sturm-bisection",
        norm_inf=matrix.norm_inf,
    )
    if matrix.dim <= CROSSCHECK_MAX_DIM:
        dense = dense_eigenvalues(matrix).scaled
        dev = float(np.max(np.abs(dense - mid)))
        if dev > 10 * width:
            raise CrossCheckFailed(
                f"bisection and dense solver differ by {dev:g} (limit {10 * width:g}, scaled units)"
            )
        spec = Spectrum(
            spec.scaled, spec.scale_log2, spec.certified_width, spec.method,
            spec.norm_inf, math.ldexp(dev, matrix.scale_log2),
        )
    return spec


@dataclass(frozen=True, eq=False)
class SectorSpectrum:
    """Spectrum of H = H0 + g H1 on one sector; iterates as (E_total, lambda)."""

    sector: SectorLabel
    e0: Fraction
    g: float
    spectrum: Spectrum = field(repr=False)

    @property
    def lambdas(self) -> np.ndarray:
        return self.spectrum.eigenvalues

    @property
    def total(self) -> np.ndarray:
        return float(self.e0) + self.g * self.lambdas

    def __iter__(self) -> Iterator[tuple[float, float]]:
        return iter(zip(self.total.tolist(), self.lambdas.tolist()))

    def __len__(self) -> int:
        return self.spectrum.dim

    def to_json(self) -> dict:
        e0 = self.e0
        return {
            "sector": {"N": list(self.sector.Nvec), "M": list(self.sector.Mvec), "r": self.sector.r},
            "eigenvalues": self.lambdas.tolist(),
            "certified_width": self.spectrum.certified_width,
            "e0": str(e0.numerator) if e0.denominator == 1 else f"{e0.numerator}/{e0.denominator}",
            "g": self.g,
            "total": self.total.tolist(),
            "scale_log2": self.spectrum.scale_log2,
            "norm_inf": self.spectrum.norm_inf,
            "method": self.spectrum.method,
        }

    @classmethod
    def from_json(cls, data: dict) -> "SectorSpectrum":
        k = int(data.get("scale_log2", 0))
        sec = data["sector"]
        spec = Spectrum(
            scaled=np.ldexp(np.asarray(data["eigenvalues"], dtype=float), -k),
            scale_log2=k,
            certified_width=float(data["certified_width"]),
            method=data.get("method", "sturm-bisection"),
            norm_inf=float(data.get("norm_inf", math.nan)),
        )
        label = SectorLabel(tuple(sec["N"]), tuple(sec["M"]), int(sec["r"]))
        return cls(label, Fraction(data["e0"]), float(data["g"]), spec)


def full_spectrum(model: Model, sector: SectorLabel, tol: float = DEFAULT_TOL) -> SectorSpectrum:
    """E_total = E0 + g * lambda over the eigenvalues lambda of the sector matrix."""
    check_sector(model, sector)
    e0 = quantum_numbers(model, basis_state(model, sector, 0)).e0
    spec = eigenvalues(build_tridiagonal(model, sector), tol)
    return SectorSpectrum(sector, e0, model.g, spec)


def poly_spectrum(
    matrix: TridiagonalH1, poly_coeffs: Sequence[float], tol: float = DEFAULT_TOL
) -> np.ndarray:
    """Sorted values P(lambda), P(t) = c0 + c1 t + c2 t^2 + ... (ascending powers)."""
    if len(poly_coeffs) == 0:
        raise ValueError("poly_coeffs must be nonempty")
    lam = eigenvalues(matrix, tol).eigenvalues
    return np.sort(np.polynomial.polynomial.polyval(lam, np.asarray(poly_coeffs, dtype=float)))
