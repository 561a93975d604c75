"""Run every brute-force check for one model and collect a report."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from .matrix import build_tridiagonal, norm_constants, symmetrize_reduced
from .model import Model
from .oracle import brute_force_sector, build_operators, commutator_check, random_probes
from .qes import reduced_direct, sl2_expansion, sl2_matrix, valid_primes
from .sectors import (
    basis_state,
    canonicalize,
    enumerate_sectors,
    format_monomial,
    format_sector,
    monomials_up_to,
    quantum_numbers,
    sector_basis,
)
from .spectral import eigenvalues
from .suite import sector_family


@dataclass
class Check:
    name: str
    passed: bool
    witness: Any = None

    def to_json(self) -> dict:
        out = {"name": self.name, "status": "pass" if self.passed else "fail"}
        if self.witness is not None:
            out["witness"] = self.witness
        return out


@dataclass
class Report:
    checks: list[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, name: str, passed: bool, witness: Any = None) -> None:
        self.checks.append(Check(name, passed, None if passed else witness))

    def to_json(self) -> dict:
        return {
            "passed": self.passed,
            "n_checks": len(self.checks),
            "n_failed": sum(not c.passed for c in self.checks),
            "checks": [c.to_json() for c in self.checks],
        }


def _combo_json(combo) -> dict:
    return {format_monomial(st): str(c) for st, c in sorted(combo.items())}


def check_commutators(model: Model, report: Report, seed: int = 0, probes: int = 50) -> None:
    ops = build_operators(model).named()
    pts = random_probes(model, probes, 30, seed)
    for a, b in build_operators(model).pairs():
        res = commutator_check(ops[a], ops[b], pts)
        witness = None
        if not res.ok:
            witness = {"state": format_monomial(res.witness), "residual": _combo_json(res.residual)}
        report.add(f"commute[{a},{b}]", res.ok, witness)


def check_completeness(model: Model, report: Report, max_photons: int = 12) -> None:
    """Every monomial up to the cutoff sits in exactly the basis of its sector."""
    seen = set()
    for st in monomials_up_to(model, max_photons):
        sec = canonicalize(model, st)
        if sec in seen:
            continue
        seen.add(sec)
        basis = sector_basis(model, sec)
        scan = brute_force_sector(model, st, max_photons)
        expected = [b for b in basis if b.degree <= max_photons]
        ok = list(scan.states) == expected
        report.add(
            f"completeness[{format_sector(sec)}]", ok,
            {"scan": [format_monomial(s) for s in scan.states],
             "basis": [format_monomial(s) for s in expected]},
        )
    listed = set(enumerate_sectors(model, max_photons))
    report.add("enumerate_sectors", listed == seen,
               {"missing": sorted(map(format_sector, seen - listed)),
                "extra": sorted(map(format_sector, listed - seen))})


def check_sector(model: Model, sector, report: Report, tol: float = 1e-12) -> None:
    tag = format_sector(sector)
    direct = reduced_direct(model, sector)
    mismatched = [
        [l, k] for l, k in valid_primes(model, sector)
        if not sl2_matrix(sl2_expansion(model, sector, l, k), sector.r).same_matrix(direct)
    ]
    report.add(f"sl2_equality[{tag}]", not mismatched, {"bad_primes": mismatched})

    tri = build_tridiagonal(model, sector)
    sym = symmetrize_reduced(direct, norm_constants(model, sector))
    report.add(f"similarity[{tag}]", sym.offdiag_sq == tri.offdiag_sq,
               {"symmetrized": list(map(str, sym.offdiag_sq)),
                "built": list(map(str, tri.offdiag_sq))})

    oracle = brute_force_sector(model, basis_state(model, sector, 0))
    ok = (list(oracle.states) == sector_basis(model, sector)
          and [int(v) for v in oracle.offdiag_sq()] == list(tri.offdiag_sq)
          and all(v.denominator == 1 for v in oracle.offdiag_sq())
          and not oracle.leaked)
    report.add(f"oracle[{tag}]", ok,
               {"states": [format_monomial(s) for s in oracle.states],
                "squared": [str(v) for v in oracle.offdiag_sq()]})

    e0s = {quantum_numbers(model, st) for st in sector_basis(model, sector)}
    report.add(f"quantum_numbers_constant[{tag}]", len(e0s) == 1)

    spec = eigenvalues(tri, tol)
    simple = spec.min_gap > 2 * spec.certified_width
    symmetric = spec.symmetry_defect <= 2 * spec.certified_width
    report.add(f"spectrum[{tag}]", simple and symmetric,
               {"min_gap": spec.min_gap, "symmetry_defect": spec.symmetry_defect,
                "certified_width": spec.certified_width})


def verify_model(
    model: Model,
    max_r: int = 6,
    max_photons: int = 12,
    seed: int = 0,
    max_excess: int = 2,
) -> Report:
    report = Report()
    check_commutators(model, report, seed)
    check_completeness(model, report, max_photons)
    for sector in sector_family(model, max_r, max_excess):
        check_sector(model, sector, report)
    return report
