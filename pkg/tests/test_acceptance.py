"""Acceptance criteria, one test each.

Every test prints a single ``criterion k: PASS|FAIL`` line with its timing,
and the same lines are repeated in the pytest terminal summary.
"""

import math
import random
import time
from fractions import Fraction

import numpy as np
import pytest

from qesoptics._sturm import sturm_counts
from qesoptics.matrix import build_tridiagonal, norm_constants, symmetrize_reduced
from qesoptics.model import Model
from qesoptics.oracle import brute_force_sector, build_operators, commutator_check, random_probes
from qesoptics.qes import reduced_direct, sl2_expansion, sl2_matrix, valid_primes
from qesoptics.sectors import basis_state, make_sector, monomial
from qesoptics.spectral import char_poly_sequence, eigenvalues, sturm_count
from qesoptics.suite import STANDARD_MODELS, sector_family
from qesoptics.verify import Report, check_completeness

SUITE = sorted(STANDARD_MODELS)


def report(log, k, title, ok, seconds, limit=None, detail=""):
    timing = f"{seconds:.2f}s" + (f" (limit {limit:g}s)" if limit is not None else "")
    line = f"criterion {k}: {'PASS' if ok else 'FAIL'}  {title}  [{timing}]"
    if detail:
        line += f"  {detail}"
    log[k] = line
    print(line)


def test_criterion_1_small_spectra(models, acceptance):
    shg, thg, c2 = models["shg"], models["thg"], models["cascade2"]
    cases = [
        (shg, [0], [2], [-4.0, 0.0, 4.0]),
        (shg, [1], [1], [-math.sqrt(6), math.sqrt(6)]),
        (thg, [0], [1], [-math.sqrt(6), math.sqrt(6)]),
        (c2, [0, 0], [1], [-1.0, 1.0]),
    ]
    # load the compiled kernel before timing
    sturm_counts(np.array([1.0]), np.zeros(1))
    start = time.perf_counter()
    worst = 0.0
    for model, Nvec, Mvec, want in cases:
        spec = eigenvalues(build_tridiagonal(model, make_sector(model, Nvec, Mvec)), tol=1e-13)
        worst = max(worst, float(np.max(np.abs(spec.eigenvalues - np.array(want)))))
    seconds = time.perf_counter() - start
    ok = worst <= 1e-12 and seconds < 1.0
    report(acceptance, 1, "small-sector spectra", ok, seconds, 1, f"max error {worst:.2e}")
    assert worst <= 1e-12
    assert seconds < 1.0


def test_criterion_2_sl2_equality(models, acceptance):
    start = time.perf_counter()
    failures, count = [], 0
    for name in SUITE:
        model = models[name]
        for sec in sector_family(model, 20):
            direct = reduced_direct(model, sec)
            for lp, kp in valid_primes(model, sec):
                count += 1
                if not sl2_matrix(sl2_expansion(model, sec, lp, kp), sec.r).same_matrix(direct):
                    failures.append((name, sec, lp, kp))
    seconds = time.perf_counter() - start
    ok = not failures and seconds < 30
    report(acceptance, 2, "sl(2) form equals direct reduction", ok, seconds, 30,
           f"{count} comparisons, {len(failures)} failures")
    assert not failures, failures[:5]
    assert seconds < 30


def test_criterion_3_oracle_equivalence(models, acceptance):
    start = time.perf_counter()
    failures, count = [], 0
    for name in SUITE:
        model = models[name]
        for sec in sector_family(model, 20):
            count += 1
            oracle = brute_force_sector(model, basis_state(model, sec, 0))
            built = [Fraction(v) for v in build_tridiagonal(model, sec).offdiag_sq]
            if oracle.leaked or oracle.offdiag_sq() != built:
                failures.append((name, sec))
    seconds = time.perf_counter() - start
    ok = not failures and seconds < 60
    report(acceptance, 3, "Fock-space oracle equals closed form", ok, seconds, 60,
           f"{count} sectors, {len(failures)} failures")
    assert not failures, failures[:5]
    assert seconds < 60


_SCALE_RUNS = {}


@pytest.mark.parametrize("r", [100, 1000, 10_000])
def test_criterion_4_spectra_at_scale(shg, acceptance, r):
    sturm_counts(np.array([1.0]), np.zeros(1))
    start = time.perf_counter()
    mat = build_tridiagonal(shg, make_sector(shg, [0], [r]))
    spec = eigenvalues(mat)
    bound = 2 * mat.norm_inf + 1
    total = sturm_count(mat, bound) - sturm_count(mat, -bound)
    seconds = time.perf_counter() - start
    simple = total == mat.dim and spec.min_gap > 2 * spec.certified_width
    symmetric = spec.symmetry_defect <= 1e-9 * mat.norm_inf
    ok = simple and symmetric and seconds < 10
    _SCALE_RUNS[r] = (ok, seconds, f"r={r}: {seconds:.2f}s gap {spec.min_gap:.3g} "
                      f"width {spec.certified_width:.2g} defect/norm "
                      f"{spec.symmetry_defect / mat.norm_inf:.1e}")
    runs = [_SCALE_RUNS[k] for k in sorted(_SCALE_RUNS)]
    report(acceptance, 4, "large-r SHG spectra simple and symmetric",
           all(run[0] for run in runs), max(run[1] for run in runs), 10,
           "; ".join(run[2] for run in runs))
    assert total == mat.dim
    assert spec.min_gap > 2 * spec.certified_width
    assert symmetric
    assert seconds < 10


def test_criterion_5_commutators(models, acceptance):
    start = time.perf_counter()
    failures, pairs = [], 0
    for name in SUITE:
        model = models[name]
        ops = build_operators(model)
        named = ops.named()
        probes = random_probes(model, 50, 30, seed=0)
        for a, b in ops.pairs():
            pairs += 1
            res = commutator_check(named[a], named[b], probes)
            if not res.ok:
                failures.append((name, a, b, res.witness))
    bad = Model(nu=(Fraction(1),), mu=(Fraction(1),), n=(2,), m=(1,))
    bad_ops = build_operators(bad)
    broken = commutator_check(bad_ops.H0, bad_ops.H1, [monomial([2], [0])])
    seconds = time.perf_counter() - start
    caught = not broken.ok and bool(broken.residual)
    ok = not failures and caught and seconds < 10
    report(acceptance, 5, "commutation suite and broken-constraint witness", ok, seconds, 10,
           f"{pairs} pairs x 50 probes, witness {broken.witness}")
    assert not failures, failures
    assert caught
    assert seconds < 10


def test_criterion_6_completeness(models, acceptance):
    start = time.perf_counter()
    rep = Report()
    for name in SUITE:
        check_completeness(models[name], rep, max_photons=12)
    seconds = time.perf_counter() - start
    failed = [c.name for c in rep.checks if not c.passed]
    report(acceptance, 6, "exhaustive scan up to 12 photons matches sector bases",
           not failed, seconds, None, f"{len(rep.checks)} checks, {len(failed)} failures")
    assert not failed, failed[:5]


def test_criterion_7_parity(models, acceptance):
    rng = random.Random(0)
    start = time.perf_counter()
    failures, sectors = [], 0
    for name in SUITE:
        model = models[name]
        for sec in sector_family(model, 50):
            sectors += 1
            mat = build_tridiagonal(model, sec)
            span = 2 * max(1.0, mat.norm_inf)
            sign = (-1) ** (sec.r + 1)
            for _ in range(100):
                e = rng.uniform(-span, span)
                plus = char_poly_sequence(mat, e)[-1]
                minus = char_poly_sequence(mat, -e)[-1]
                if minus != sign * plus:
                    failures.append((name, sec, e))
                    break
    seconds = time.perf_counter() - start
    report(acceptance, 7, "characteristic polynomial parity", not failures, seconds, None,
           f"{sectors} sectors x 100 probes, {len(failures)} failures")
    assert not failures, failures[:5]


def test_criterion_8_similarity(models, acceptance):
    start = time.perf_counter()
    failures, count = [], 0
    for name in SUITE:
        model = models[name]
        for sec in sector_family(model, 20):
            count += 1
            sym = symmetrize_reduced(reduced_direct(model, sec), norm_constants(model, sec))
            if sym.offdiag_sq != build_tridiagonal(model, sec).offdiag_sq:
                failures.append((name, sec))
    seconds = time.perf_counter() - start
    report(acceptance, 8, "symmetrized reduction equals tridiagonal form", not failures,
           seconds, None, f"{count} sectors, {len(failures)} failures")
    assert not failures, failures[:5]
