"""Brute-force checks in the Bargmann monomial basis.

Operators are normal-ordered differential polynomials acting on monomials
x^i y^j with exact rational coefficients (a -> d/dx, a^+ -> x).  Nothing
here uses zeta, sector labels or the closed-form matrix entries, so it can
be compared against those independently.
"""

from __future__ import annotations

import random
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial, prod
from typing import NamedTuple, Sequence

from .errors import DimensionMismatch, SeedTooLarge
from .model import Model
from .sectors import MonomialState, quantum_numbers

Signature = tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...], tuple[int, ...]]
MonomialCombo = dict[MonomialState, Fraction]


@dataclass(frozen=True)
class PolyOperator:
    """sum coeff * x^xpow y^ypow d_x^dxpow d_y^dypow (multiplications on the left)."""

    N: int
    M: int
    terms: dict[Signature, Fraction] = field(default_factory=dict)

    @classmethod
    def from_terms(cls, N: int, M: int, terms) -> "PolyOperator":
        acc: dict[Signature, Fraction] = defaultdict(Fraction)
        for coeff, xpow, ypow, dxpow, dypow in terms:
            acc[(tuple(xpow), tuple(ypow), tuple(dxpow), tuple(dypow))] += Fraction(coeff)
        return cls(N, M, {k: v for k, v in acc.items() if v != 0})

    def __len__(self) -> int:
        return len(self.terms)


@dataclass(frozen=True)
class OperatorSet:
    H0: PolyOperator
    H1: PolyOperator
    A: tuple[PolyOperator, ...]
    B: tuple[PolyOperator, ...]

    def named(self) -> dict[str, PolyOperator]:
        ops = {"H0": self.H0, "H1": self.H1}
        ops.update({f"A{l + 1}": op for l, op in enumerate(self.A)})
        ops.update({f"B{k + 1}": op for k, op in enumerate(self.B)})
        return ops

    def pairs(self) -> list[tuple[str, str]]:
        names = list(self.named())
        return [(a, b) for idx, a in enumerate(names) for b in names[idx + 1:]]


def _unit(size: int, pos: int, value: int = 1) -> tuple[int, ...]:
    return tuple(value if q == pos else 0 for q in range(size))


def build_operators(model: Model) -> OperatorSet:
    N, M = model.N, model.M
    zx, zy = (0,) * N, (0,) * M
    h0 = [(f, _unit(N, l), zy, _unit(N, l), zy) for l, f in enumerate(model.nu)]
    h0 += [(f, zx, _unit(M, k), zx, _unit(M, k)) for k, f in enumerate(model.mu)]
    h1 = [
        (1, zx, tuple(model.m), tuple(model.n), zy),
        (1, tuple(model.n), zy, zx, tuple(model.m)),
    ]
    A = []
    for l in range(N - 1):
        A.append(PolyOperator.from_terms(N, M, [
            (model.n[l + 1], _unit(N, l), zy, _unit(N, l), zy),
            (-model.n[l], _unit(N, l + 1), zy, _unit(N, l + 1), zy),
        ]))
    B = []
    for k in range(M - 1):
        B.append(PolyOperator.from_terms(N, M, [
            (model.m[k + 1], zx, _unit(M, k), zx, _unit(M, k)),
            (-model.m[k], zx, _unit(M, k + 1), zx, _unit(M, k + 1)),
        ]))
    return OperatorSet(
        PolyOperator.from_terms(N, M, h0),
        PolyOperator.from_terms(N, M, h1),
        tuple(A),
        tuple(B),
    )


def _falling(p: int, k: int) -> int:
    # d^k x^p = p (p-1) ... (p-k+1) x^(p-k); zero when k > p
    if k > p:
        return 0
    return prod(range(p - k + 1, p + 1))


def apply(op: PolyOperator, state: MonomialState) -> MonomialCombo:
    if len(state.i) != op.N or len(state.j) != op.M:
        raise DimensionMismatch(f"state {state} does not fit an operator on {op.N}+{op.M} modes")
    out: MonomialCombo = defaultdict(Fraction)
    for (xpow, ypow, dxpow, dypow), coeff in op.terms.items():
        factor = coeff
        for p, k in zip(state.i + state.j, dxpow + dypow):
            factor *= _falling(p, k)
            if factor == 0:
                break
        if factor == 0:
            continue
        i = tuple(p - k + a for p, k, a in zip(state.i, dxpow, xpow))
        j = tuple(p - k + a for p, k, a in zip(state.j, dypow, ypow))
        out[MonomialState(i, j)] += factor
    return {st: c for st, c in out.items() if c != 0}


def apply_combo(op: PolyOperator, combo: MonomialCombo) -> MonomialCombo:
    out: MonomialCombo = defaultdict(Fraction)
    for st, c in combo.items():
        for img, d in apply(op, st).items():
            out[img] += c * d
    return {st: c for st, c in out.items() if c != 0}


class CommutatorResult(NamedTuple):
    ok: bool
    witness: MonomialState | None
    residual: MonomialCombo | None


def commutator_check(
    opA: PolyOperator, opB: PolyOperator, probes: Sequence[MonomialState]
) -> CommutatorResult:
    """Check [A, B] s == 0 exactly on each probe; stop at the first failure."""
    for st in probes:
        ab = apply_combo(opA, apply(opB, st))
        ba = apply_combo(opB, apply(opA, st))
        residual = {k: ab.get(k, 0) - ba.get(k, 0) for k in set(ab) | set(ba)}
        residual = {k: v for k, v in residual.items() if v != 0}
        if residual:
            return CommutatorResult(False, st, residual)
    return CommutatorResult(True, None, None)


def random_probes(model: Model, count: int = 50, max_exponent: int = 30, seed: int = 0):
    rng = random.Random(seed)
    return [
        MonomialState(
            tuple(rng.randint(0, max_exponent) for _ in range(model.N)),
            tuple(rng.randint(0, max_exponent) for _ in range(model.M)),
        )
        for _ in range(count)
    ]


@dataclass(frozen=True)
class OracleSector:
    """States sharing the seed's quantum numbers and H1 between them.

    ``squared[a][b]`` is sign(h) * h**2 for the orthonormal-basis element
    h = <state a| H1 |state b>.  ``leaked`` lists images of H1 that fell
    outside ``states`` (empty unless the photon cutoff truncated the sector).
    """

    states: tuple[MonomialState, ...]
    squared: tuple[tuple[Fraction, ...], ...]
    leaked: tuple[MonomialState, ...]

    def offdiag_sq(self) -> list[Fraction]:
        return [self.squared[t + 1][t] for t in range(len(self.states) - 1)]


def _chain(first: int, weights: Sequence[int], invariants: Sequence[int], limit: int):
    # solve w_{l+1} e_l - w_l e_{l+1} = inv_l for e_{l+1}, starting from e_0 = first
    vec = [first]
    for l, inv in enumerate(invariants):
        num = weights[l + 1] * vec[-1] - inv
        if num < 0 or num % weights[l]:
            return None
        vec.append(num // weights[l])
    return tuple(vec) if sum(vec) <= limit else None


def _exact_norm(state: MonomialState) -> int:
    return prod(factorial(a) for a in state.i + state.j)


def brute_force_sector(
    model: Model, seed: MonomialState, max_photons: int | None = None
) -> OracleSector:
    """Scan every monomial with at most ``max_photons`` quanta for the seed's labels.

    The scan fixes the first exponent of each group and solves the integer
    invariants for the rest, so every lattice point with matching
    (alpha, beta) is visited once; E0 is then matched exactly.  With
    ``max_photons=None`` the cutoff is E0 / min(frequency), which bounds the
    degree of any monomial at that energy.
    """
    qn = quantum_numbers(model, seed)
    if max_photons is None:
        max_photons = int(qn.e0 // min(model.nu + model.mu))
    if seed.degree > max_photons:
        raise SeedTooLarge(f"seed {seed} has {seed.degree} quanta > {max_photons}")

    xs = [v for a in range(max_photons + 1)
          if (v := _chain(a, model.n, qn.alpha, max_photons)) is not None]
    ys = [v for b in range(max_photons + 1)
          if (v := _chain(b, model.m, qn.beta, max_photons)) is not None]
    by_energy: dict[Fraction, list[tuple[int, ...]]] = defaultdict(list)
    for j in ys:
        by_energy[sum((f * b for f, b in zip(model.mu, j)), Fraction(0))].append(j)
    states = []
    for i in xs:
        ex = sum((f * a for f, a in zip(model.nu, i)), Fraction(0))
        for j in by_energy.get(qn.e0 - ex, ()):
            st = MonomialState(i, j)
            if st.degree <= max_photons and quantum_numbers(model, st) == qn:
                states.append(st)
    states.sort(key=lambda st: (sum(st.i), st.i, st.j))

    index = {st: a for a, st in enumerate(states)}
    norms = [_exact_norm(st) for st in states]
    H1 = build_operators(model).H1
    dim = len(states)
    squared = [[Fraction(0)] * dim for _ in range(dim)]
    leaked = set()
    for b, st in enumerate(states):
        for img, c in apply(H1, st).items():
            a = index.get(img)
            if a is None:
                leaked.add(img)
                continue
            # <img|H1|st> in the orthonormal basis: c * sqrt(C_img / C_st)
            sq = c * c * Fraction(norms[a], norms[b])
            squared[a][b] = sq if c > 0 else -sq
    return OracleSector(
        tuple(states), tuple(map(tuple, squared)), tuple(sorted(leaked))
    )
