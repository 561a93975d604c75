"""Reduced one-variable operator of H1 on a sector and its sl(2) form.

On a sector x^Nvec y^Mvec P(zeta), H1 acts as

    H1_red = (1/zeta) prod_l prod_j (Nvec_l - j + n_l D)
             + zeta prod_k prod_i (Mvec_k - i - m_k D),      D = zeta d/dzeta

which preserves the polynomials of degree <= r.  Writing D = J0 + r/2 and
pulling out the one factor of each product that combines with 1/zeta or
zeta into J- = d/dzeta or J+ = zeta^2 d/dzeta - r zeta gives a polynomial in
the sl(2) generators.  Everything here is exact (ints and Fractions).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import prod
from typing import Literal, Sequence

from .errors import InvalidSector, NonIntegerEntry
from .model import Model
from .sectors import SectorLabel, check_sector

Generator = Literal["J+", "J-"]
ExactMatrix = list[list[Fraction]]


@dataclass(frozen=True)
class ReducedOperator:
    """Integer matrix of H1_red on the monomials 1, zeta, ..., zeta^r.

    Column t holds the coefficients of the image of zeta^t.
    """

    dim: int
    matrix: tuple[tuple[int, ...], ...]
    built_from: Literal["direct", "sl2"]

    def __post_init__(self):
        M = self.matrix
        if len(M) != self.dim or any(len(row) != self.dim for row in M):
            raise ValueError("matrix shape does not match dim")

    def is_tridiagonal(self) -> bool:
        """True when all entries off the first sub/super-diagonal vanish."""
        M = self.matrix
        return all(
            M[a][b] == 0
            for a in range(self.dim)
            for b in range(self.dim)
            if abs(a - b) != 1
        )

    def same_matrix(self, other: "ReducedOperator") -> bool:
        return self.dim == other.dim and self.matrix == other.matrix

    def to_json(self) -> dict:
        return {
            "dim": self.dim,
            "matrix": [[str(v) for v in row] for row in self.matrix],
            "built_from": self.built_from,
        }

    @classmethod
    def from_json(cls, data: dict) -> "ReducedOperator":
        rows = tuple(tuple(int(v) for v in row) for row in data["matrix"])
        return cls(int(data["dim"]), rows, data["built_from"])


@dataclass(frozen=True)
class Sl2Term:
    """``scalar * leading * prod_c (J0 + c)`` with the leading generator on the left."""

    leading: Generator
    scalar: Fraction
    factors: tuple[Fraction, ...]

    def __str__(self) -> str:
        parts = [_fmt_scalar(self.scalar), self.leading]
        for c in self.factors:
            if c == 0:
                parts.append("(J0)")
            elif c > 0:
                parts.append(f"(J0 + {c})")
            else:
                parts.append(f"(J0 - {-c})")
        return " * ".join(parts)


def _fmt_scalar(x: Fraction) -> str:
    return f"({x})" if x < 0 else str(x)


def format_terms(terms: Sequence[Sl2Term]) -> str:
    return " + ".join(str(t) for t in terms)


def reduced_direct(model: Model, sector: SectorLabel) -> ReducedOperator:
    """Matrix of H1_red from its defining products, column by column.

    zeta^t maps to lower(t) zeta^(t-1) + upper(t) zeta^(t+1) with
    lower(t) = prod (Nvec_l - j + n_l t) and upper(t) = prod (Mvec_k - i - m_k t).
    """
    check_sector(model, sector)
    dim = sector.r + 1
    M = [[0] * dim for _ in range(dim)]
    for t in range(dim):
        lower = prod(
            Nl - j + nl * t
            for Nl, nl in zip(sector.Nvec, model.n)
            for j in range(nl)
        )
        upper = prod(
            Mk - i - mk * t
            for Mk, mk in zip(sector.Mvec, model.m)
            for i in range(mk)
        )
        # restric kills lower(0); the choice of r kills upper(r)
        if t == 0 and lower != 0:
            raise InvalidSector(f"{sector}: constant term not annihilated by the 1/zeta part")
        if t == sector.r and upper != 0:
            raise InvalidSector(f"{sector}: zeta^r not annihilated by the zeta part")
        if t > 0:
            M[t - 1][t] = lower
        if t < sector.r:
            M[t + 1][t] = upper
    return ReducedOperator(dim, tuple(map(tuple, M)), "direct")


def sl2_generators(r: int) -> tuple[ExactMatrix, ExactMatrix, ExactMatrix]:
    """Matrices of (J+, J0, J-) on the basis zeta^t, t = 0..r.

    J- zeta^t = t zeta^(t-1),  J0 zeta^t = (t - r/2) zeta^t,
    J+ zeta^t = (t - r) zeta^(t+1).
    """
    if r < 0:
        raise ValueError("r must be >= 0")
    dim = r + 1
    zero = Fraction(0)
    Jp = [[zero] * dim for _ in range(dim)]
    J0 = [[zero] * dim for _ in range(dim)]
    Jm = [[zero] * dim for _ in range(dim)]
    half_r = Fraction(r, 2)
    for t in range(dim):
        J0[t][t] = t - half_r
        if t > 0:
            Jm[t - 1][t] = Fraction(t)
        if t < r:
            Jp[t + 1][t] = Fraction(t - r)
    return Jp, J0, Jm


def _default_lprime(model: Model, sector: SectorLabel) -> int:
    return next(l for l in range(model.N) if sector.Nvec[l] < model.n[l])


def _default_kprime(model: Model, sector: SectorLabel) -> int:
    return next(k for k in range(model.M) if sector.Mvec[k] // model.m[k] == sector.r)


def valid_primes(model: Model, sector: SectorLabel) -> list[tuple[int, int]]:
    """Every admissible (l', k') pair for :func:`sl2_expansion` (0-based)."""
    ls = [l for l in range(model.N) if sector.Nvec[l] < model.n[l]]
    ks = [k for k in range(model.M) if sector.Mvec[k] // model.m[k] == sector.r]
    return [(l, k) for l in ls for k in ks]


def sl2_expansion(
    model: Model,
    sector: SectorLabel,
    lprime: int | None = None,
    kprime: int | None = None,
) -> list[Sl2Term]:
    """The two-term sl(2) polynomial equal to H1_red on ``sector``.

    ``lprime``/``kprime`` (0-based) pick which mode absorbs 1/zeta and zeta;
    by default the smallest admissible index is used.  Any admissible choice
    yields the same operator.
    """
    check_sector(model, sector)
    r = sector.r
    half_r = Fraction(r, 2)
    lp = _default_lprime(model, sector) if lprime is None else lprime
    kp = _default_kprime(model, sector) if kprime is None else kprime
    if not (0 <= lp < model.N and sector.Nvec[lp] < model.n[lp]):
        raise InvalidSector(f"l' = {lp} does not satisfy Nvec_l' < n_l'")
    if not (0 <= kp < model.M and sector.Mvec[kp] // model.m[kp] == r):
        raise InvalidSector(f"k' = {kp} does not satisfy floor(Mvec_k'/m_k') = r")

    minus_shifts = []
    for l, (Nl, nl) in enumerate(zip(sector.Nvec, model.n)):
        for j in range(nl):
            if l == lp and j == Nl:
                continue
            minus_shifts.append(Fraction(Nl - j, nl) + half_r)
    plus_shifts = []
    for k, (Mk, mk) in enumerate(zip(sector.Mvec, model.m)):
        for i in range(mk):
            if k == kp and i == Mk % mk:
                continue
            plus_shifts.append(Fraction(i - Mk, mk) + half_r)

    n_pow = prod(Fraction(nl) ** nl for nl in model.n)
    m_pow = prod(Fraction(-mk) ** mk for mk in model.m)
    return [
        Sl2Term("J-", n_pow, tuple(minus_shifts)),
        Sl2Term("J+", m_pow, tuple(plus_shifts)),
    ]


def _matmul(A: ExactMatrix, B: ExactMatrix) -> ExactMatrix:
    dim = len(A)
    C = [[Fraction(0)] * dim for _ in range(dim)]
    for a in range(dim):
        row = C[a]
        for k, x in enumerate(A[a]):
            if x == 0:
                continue
            Bk = B[k]
            for b in range(dim):
                if Bk[b] != 0:
                    row[b] += x * Bk[b]
    return C


def sl2_matrix(terms: Sequence[Sl2Term], r: int) -> ReducedOperator:
    """Evaluate sl(2) terms as exact matrix products on P_r.

    Raises NonIntegerEntry if the sum is not an integer matrix, which only
    happens when a term was built with the wrong excluded factor.
    """
    Jp, J0, Jm = sl2_generators(r)
    dim = r + 1
    total = [[Fraction(0)] * dim for _ in range(dim)]
    for term in terms:
        prod_m = Jp if term.leading == "J+" else Jm
        for c in term.factors:
            shifted = [row[:] for row in J0]
            for t in range(dim):
                shifted[t][t] += c
            prod_m = _matmul(prod_m, shifted)
        for a in range(dim):
            for b in range(dim):
                total[a][b] += term.scalar * prod_m[a][b]
    out = []
    for a, row in enumerate(total):
        for b, v in enumerate(row):
            if v.denominator != 1:
                raise NonIntegerEntry(f"entry ({a},{b}) = {v} is not an integer")
        out.append(tuple(int(v) for v in row))
    return ReducedOperator(dim, tuple(out), "sl2")


def operator_order(model: Model) -> int:
    return max(sum(model.n), sum(model.m))
