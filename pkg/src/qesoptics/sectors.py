"""Invariant sectors of H0 and the integrals of motion A_l, B_k.

A monomial x^i y^j is labelled by its unperturbed energy E0 and by the
integer invariants alpha_l, beta_k.  Monomials sharing these labels differ by
integer powers of zeta = x^n / y^m, so each common eigenspace is

    x^Nvec y^Mvec * span(1, zeta, ..., zeta^r)

with Nvec_l < n_l for some l and r = min_k floor(Mvec_k / m_k).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .errors import DimensionMismatch, InvalidSector, NegativeExponent
from .model import Model


@dataclass(frozen=True, order=True)
class MonomialState:
    """Exponents of the Bargmann monomial x^i y^j."""

    i: tuple[int, ...]
    j: tuple[int, ...]

    @property
    def degree(self) -> int:
        return sum(self.i) + sum(self.j)

    def __str__(self) -> str:
        return format_monomial(self)


@dataclass(frozen=True)
class QuantumNumbers:
    e0: Fraction
    alpha: tuple[int, ...]
    beta: tuple[int, ...]


@dataclass(frozen=True, order=True)
class SectorLabel:
    """Canonical label (Nvec, Mvec) of a sector, with its derived r."""

    Nvec: tuple[int, ...]
    Mvec: tuple[int, ...]
    r: int

    @property
    def dim(self) -> int:
        return self.r + 1

    def __str__(self) -> str:
        return format_sector(self)


def monomial(i, j) -> MonomialState:
    return MonomialState(tuple(int(a) for a in i), tuple(int(b) for b in j))


def _check_state(model: Model, state: MonomialState) -> None:
    if len(state.i) != model.N or len(state.j) != model.M:
        raise DimensionMismatch(
            f"state has {len(state.i)}+{len(state.j)} exponents, "
            f"model needs {model.N}+{model.M}"
        )
    if any(a < 0 for a in state.i + state.j):
        raise NegativeExponent(f"negative exponent in {state}")


def quantum_numbers(model: Model, state: MonomialState) -> QuantumNumbers:
    _check_state(model, state)
    i, j, n, m = state.i, state.j, model.n, model.m
    e0 = sum((f * a for f, a in zip(model.nu, i)), Fraction(0))
    e0 += sum((f * b for f, b in zip(model.mu, j)), Fraction(0))
    alpha = tuple(n[l + 1] * i[l] - n[l] * i[l + 1] for l in range(model.N - 1))
    beta = tuple(m[k + 1] * j[k] - m[k] * j[k + 1] for k in range(model.M - 1))
    return QuantumNumbers(e0, alpha, beta)


def sector_r(model: Model, Mvec) -> int:
    return min(b // mk for b, mk in zip(Mvec, model.m))


def make_sector(model: Model, Nvec, Mvec) -> SectorLabel:
    """Build a validated sector label, deriving r from Mvec."""
    Nvec = tuple(int(a) for a in Nvec)
    Mvec = tuple(int(b) for b in Mvec)
    if len(Nvec) != model.N or len(Mvec) != model.M:
        raise InvalidSector(
            f"sector has {len(Nvec)}+{len(Mvec)} entries, model needs {model.N}+{model.M}"
        )
    sector = SectorLabel(Nvec, Mvec, sector_r(model, Mvec) if Mvec else 0)
    check_sector(model, sector)
    return sector


def check_sector(model: Model, sector: SectorLabel) -> None:
    """Raise InvalidSector unless ``sector`` is a canonical label for ``model``."""
    if len(sector.Nvec) != model.N or len(sector.Mvec) != model.M:
        raise InvalidSector(f"sector {sector} does not match model dimensions")
    if any(a < 0 for a in sector.Nvec + sector.Mvec):
        raise InvalidSector(f"sector {sector} has negative entries")
    if not any(a < nl for a, nl in zip(sector.Nvec, model.n)):
        raise InvalidSector(f"sector {sector}: need Nvec_l < n_l for some l")
    r = sector_r(model, sector.Mvec)
    if sector.r != r:
        raise InvalidSector(f"sector {sector}: r = {sector.r} but Mvec gives r = {r}")


def canonicalize(model: Model, state: MonomialState) -> SectorLabel:
    """Label of the sector containing ``state``.

    The state is shifted down in powers of zeta as far as the x exponents
    allow: s0 = max_l(-floor(i_l / n_l)).
    """
    _check_state(model, state)
    s0 = max(-(a // nl) for a, nl in zip(state.i, model.n))
    Nvec = tuple(a + s0 * nl for a, nl in zip(state.i, model.n))
    Mvec = tuple(b - s0 * mk for b, mk in zip(state.j, model.m))
    if any(b < 0 for b in Mvec):
        raise NegativeExponent(f"canonical shift of {state} left a negative y exponent")
    return SectorLabel(Nvec, Mvec, sector_r(model, Mvec))


def basis_state(model: Model, sector: SectorLabel, s: int) -> MonomialState:
    return MonomialState(
        tuple(a + s * nl for a, nl in zip(sector.Nvec, model.n)),
        tuple(b - s * mk for b, mk in zip(sector.Mvec, model.m)),
    )


def sector_basis(model: Model, sector: SectorLabel) -> list[MonomialState]:
    """Monomials x^(Nvec + s n) y^(Mvec - s m) for s = 0..r, ascending in s."""
    check_sector(model, sector)
    return [basis_state(model, sector, s) for s in range(sector.r + 1)]


def _bounded_vectors(length: int, total: int) -> Iterator[tuple[int, ...]]:
    # all nonnegative integer vectors with sum <= total
    if length == 0:
        yield ()
        return
    for head in range(total + 1):
        for tail in _bounded_vectors(length - 1, total - head):
            yield (head,) + tail


def monomials_up_to(model: Model, max_photons: int) -> Iterator[MonomialState]:
    N = model.N
    for v in _bounded_vectors(model.N + model.M, max_photons):
        yield MonomialState(v[:N], v[N:])


def enumerate_sectors(model: Model, max_photons: int) -> list[SectorLabel]:
    """All sectors holding at least one monomial with at most ``max_photons`` quanta.

    Sorted lexicographically on (Nvec, Mvec).
    """
    if max_photons < 0:
        raise ValueError("max_photons must be >= 0")
    found = {canonicalize(model, st) for st in monomials_up_to(model, max_photons)}
    return sorted(found, key=lambda sec: (sec.Nvec, sec.Mvec))


_SECTOR_RE = re.compile(r"^\s*N\s*=\s*([\d,\s]*);\s*M\s*=\s*([\d,\s]*)$")
_MONO_RE = re.compile(r"^\s*i\s*=\s*([\d,\s]*);\s*j\s*=\s*([\d,\s]*)$")


def _ints(group: str) -> tuple[int, ...]:
    return tuple(int(tok) for tok in group.split(",") if tok.strip())


def format_sector(sector: SectorLabel) -> str:
    return "N={};M={}".format(
        ",".join(map(str, sector.Nvec)), ",".join(map(str, sector.Mvec))
    )


def format_monomial(state: MonomialState) -> str:
    return "i={};j={}".format(",".join(map(str, state.i)), ",".join(map(str, state.j)))


def parse_sector(model: Model, text: str) -> SectorLabel:
    """Parse ``"N=0,0;M=1"`` into a validated label."""
    match = _SECTOR_RE.match(text)
    if not match:
        raise InvalidSector(f"cannot parse sector {text!r}; expected e.g. 'N=0,0;M=1'")
    return make_sector(model, _ints(match.group(1)), _ints(match.group(2)))


def parse_monomial(model: Model, text: str) -> MonomialState:
    """Parse ``"i=4;j=0"`` into a monomial of matching dimensions."""
    match = _MONO_RE.match(text)
    if not match:
        raise ValueError(f"cannot parse monomial {text!r}; expected e.g. 'i=4;j=0'")
    state = MonomialState(_ints(match.group(1)), _ints(match.group(2)))
    _check_state(model, state)
    return state
