from fractions import Fraction

import pytest

from qesoptics.errors import DimensionMismatch, SeedTooLarge
from qesoptics.model import Model
from qesoptics.oracle import (
    apply,
    apply_combo,
    brute_force_sector,
    build_operators,
    commutator_check,
    random_probes,
)
from qesoptics.sectors import basis_state, monomial, quantum_numbers, sector_basis
from qesoptics.suite import STANDARD_MODELS, sector_family


def test_operator_shapes(shg, cascade2, general):
    ops = build_operators(shg)
    assert len(ops.H1) == 2 and ops.A == () and ops.B == ()
    assert list(ops.named()) == ["H0", "H1"]
    c = build_operators(cascade2)
    assert len(c.A) == 1 and c.pairs() == [("H0", "H1"), ("H0", "A1"), ("H1", "A1")]
    assert len(build_operators(general).A) == 1


def test_apply_examples(shg):
    H1 = build_operators(shg).H1
    # y d_x^2 x^4 = 12 x^2 y
    assert apply(H1, monomial([4], [0])) == {monomial([2], [1]): 12}
    # x^2 d_y y^2 = 2 x^2 y
    assert apply(H1, monomial([0], [2])) == {monomial([2], [1]): 2}
    assert apply(H1, monomial([2], [1])) == {monomial([0], [2]): 2, monomial([4], [0]): 1}
    assert apply(H1, monomial([1], [0])) == {}


def test_h0_is_diagonal_with_energy(models):
    for model in models.values():
        H0 = build_operators(model).H0
        for st in random_probes(model, 10, 8, seed=3):
            e0 = quantum_numbers(model, st).e0
            assert apply(H0, st) == ({st: e0} if e0 else {})


def test_apply_dimension_mismatch(shg):
    with pytest.raises(DimensionMismatch):
        apply(build_operators(shg).H1, monomial([1, 1], [0]))


def test_apply_combo_linear(shg):
    H1 = build_operators(shg).H1
    combo = {monomial([4], [0]): Fraction(1), monomial([0], [2]): Fraction(-6)}
    assert apply_combo(H1, combo) == {}


@pytest.mark.parametrize("name", sorted(STANDARD_MODELS))
def test_all_commutators_vanish(models, name):
    model = models[name]
    probes = random_probes(model, 50, 30, seed=0)
    ops = build_operators(model).named()
    for a, b in build_operators(model).pairs():
        res = commutator_check(ops[a], ops[b], probes)
        assert res.ok, (a, b, res.witness)


def test_broken_constraint_gives_witness():
    # bypasses validation on purpose: 2 * 1 != 1 * 1
    bad = Model(nu=(Fraction(1),), mu=(Fraction(1),), n=(2,), m=(1,))
    ops = build_operators(bad)
    res = commutator_check(ops.H0, ops.H1, [monomial([2], [0])])
    assert not res.ok
    assert res.witness == monomial([2], [0])
    assert res.residual == {monomial([0], [1]): -2}


def test_random_probes_reproducible(cascade2):
    assert random_probes(cascade2, 5, seed=7) == random_probes(cascade2, 5, seed=7)
    assert random_probes(cascade2, 5, seed=7) != random_probes(cascade2, 5, seed=8)
    assert all(max(p.i + p.j) <= 30 for p in random_probes(cascade2, 50))


def test_brute_force_shg(shg):
    out = brute_force_sector(shg, monomial([4], [0]))
    assert out.states == (monomial([0], [2]), monomial([2], [1]), monomial([4], [0]))
    assert out.offdiag_sq() == [4, 12]
    assert out.leaked == ()
    # symmetric in the orthonormal basis
    assert out.squared[0][1] == out.squared[1][0]


def test_brute_force_cascade(cascade2):
    out = brute_force_sector(cascade2, monomial([1, 1], [0]))
    assert out.states == (monomial([0, 0], [1]), monomial([1, 1], [0]))
    assert out.offdiag_sq() == [1]


def test_seed_too_large(shg):
    with pytest.raises(SeedTooLarge):
        brute_force_sector(shg, monomial([4], [0]), max_photons=3)


def test_truncated_scan_reports_leaks(shg):
    out = brute_force_sector(shg, monomial([0], [2]), max_photons=3)
    assert out.states == (monomial([0], [2]), monomial([2], [1]))
    assert out.leaked == (monomial([4], [0]),)


@pytest.mark.parametrize("name", sorted(STANDARD_MODELS))
def test_oracle_matches_sector_basis(models, name):
    model = models[name]
    for sec in sector_family(model, 8, 1):
        for s in {0, sec.r}:
            out = brute_force_sector(model, basis_state(model, sec, s))
            assert set(out.states) == set(sector_basis(model, sec))
            assert out.leaked == ()
