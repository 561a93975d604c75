from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from qesoptics.errors import DimensionMismatch, InvalidSector
from qesoptics.sectors import (
    MonomialState,
    SectorLabel,
    canonicalize,
    enumerate_sectors,
    format_monomial,
    format_sector,
    make_sector,
    monomial,
    monomials_up_to,
    parse_monomial,
    parse_sector,
    quantum_numbers,
    sector_basis,
)
from qesoptics.suite import STANDARD_MODELS


def labels_by_scan(model, max_photons):
    """Group all monomials up to the cutoff by (E0, alpha, beta) without zeta."""
    groups = {}
    for v in product(range(max_photons + 1), repeat=model.N + model.M):
        if sum(v) > max_photons:
            continue
        st_ = MonomialState(v[: model.N], v[model.N:])
        groups.setdefault(quantum_numbers(model, st_), set()).add(st_)
    return groups


def test_quantum_numbers_cascade(cascade2):
    qn = quantum_numbers(cascade2, monomial([2, 1], [3]))
    assert qn.e0 == 13 and qn.alpha == (1,) and qn.beta == ()


def test_quantum_numbers_shg(shg):
    qn = quantum_numbers(shg, monomial([4], [0]))
    assert qn.e0 == 2 and qn.alpha == () and qn.beta == ()


def test_quantum_numbers_vacuum(models):
    for model in models.values():
        qn = quantum_numbers(model, MonomialState((0,) * model.N, (0,) * model.M))
        assert qn.e0 == 0 and set(qn.alpha) <= {0} and set(qn.beta) <= {0}


def test_quantum_numbers_dimension_mismatch(shg):
    with pytest.raises(DimensionMismatch):
        quantum_numbers(shg, monomial([1, 1], [0]))


def test_canonicalize_shg_matches_exhaustive_scan(shg):
    expected = SectorLabel((0,), (2,), 2)
    assert canonicalize(shg, monomial([4], [0])) == expected
    assert canonicalize(shg, monomial([0], [2])) == expected
    # every monomial with E0 = 2 is in this one sector
    scan = {s for s in monomials_up_to(shg, 6) if quantum_numbers(shg, s).e0 == 2}
    assert scan == {monomial([4], [0]), monomial([2], [1]), monomial([0], [2])}
    assert {canonicalize(shg, s) for s in scan} == {expected}


def test_canonicalize_cascade_already_canonical(cascade2):
    assert canonicalize(cascade2, monomial([0, 0], [1])) == SectorLabel((0, 0), (1,), 1)


def test_sector_basis_examples(shg, cascade2):
    assert sector_basis(shg, make_sector(shg, [0], [2])) == [
        monomial([0], [2]), monomial([2], [1]), monomial([4], [0])]
    assert sector_basis(shg, make_sector(shg, [1], [0])) == [monomial([1], [0])]
    assert sector_basis(cascade2, make_sector(cascade2, [0, 0], [1])) == [
        monomial([0, 0], [1]), monomial([1, 1], [0])]


def test_sector_basis_matches_scan(cascade2):
    groups = labels_by_scan(cascade2, 4)
    basis = set(sector_basis(cascade2, make_sector(cascade2, [0, 0], [1])))
    assert groups[quantum_numbers(cascade2, monomial([1, 1], [0]))] == basis


@pytest.mark.parametrize(
    "Nvec, Mvec, r",
    [((2,), (1,), 1), ((0,), (2,), 1), ((-1,), (2,), 2)],
)
def test_invalid_sectors(shg, Nvec, Mvec, r):
    with pytest.raises(InvalidSector):
        sector_basis(shg, SectorLabel(Nvec, Mvec, r))


def test_enumerate_shg(shg):
    got = enumerate_sectors(shg, 2)
    assert [(s.Nvec, s.Mvec, s.r) for s in got] == [
        ((0,), (0,), 0), ((0,), (1,), 1), ((0,), (2,), 2), ((1,), (0,), 0), ((1,), (1,), 1)]


def test_enumerate_vacuum_only(models):
    for model in models.values():
        got = enumerate_sectors(model, 0)
        assert got == [SectorLabel((0,) * model.N, (0,) * model.M, 0)]


def test_enumerate_cascade(cascade2):
    got = {(s.Nvec, s.Mvec, s.r) for s in enumerate_sectors(cascade2, 1)}
    assert got == {((0, 0), (0,), 0), ((1, 0), (0,), 0), ((0, 1), (0,), 0), ((0, 0), (1,), 1)}


@pytest.mark.parametrize("name", list(STANDARD_MODELS))
def test_enumerate_covers_every_monomial_once(models, name):
    model = models[name]
    sectors = enumerate_sectors(model, 6)
    assert sectors == sorted(sectors, key=lambda s: (s.Nvec, s.Mvec))
    owners = {}
    for sec in sectors:
        for st_ in sector_basis(model, sec):
            assert st_ not in owners
            owners[st_] = sec
    for st_ in monomials_up_to(model, 6):
        assert canonicalize(model, st_) == owners[st_]
    # each listed sector holds at least one monomial under the cutoff
    assert all(min(s.degree for s in sector_basis(model, sec)) <= 6 for sec in sectors)


def test_enumerate_includes_sectors_with_high_canonical_member():
    from qesoptics.model import validate

    # sum(m) > sum(n): degree falls along the sector, so s = 0 is the heaviest member
    down = validate({"nu": ["2"], "mu": ["1"], "n": [1], "m": [2]})
    sec = canonicalize(down, monomial([1], [0]))
    assert sec == SectorLabel((0,), (2,), 1)
    assert sec in enumerate_sectors(down, 1)


@st.composite
def model_and_state(draw):
    name = draw(st.sampled_from(sorted(STANDARD_MODELS)))
    from qesoptics.suite import standard_models

    model = standard_models()[name]
    i = tuple(draw(st.lists(st.integers(0, 30), min_size=model.N, max_size=model.N)))
    j = tuple(draw(st.lists(st.integers(0, 30), min_size=model.M, max_size=model.M)))
    return model, MonomialState(i, j)


@settings(max_examples=200)
@given(model_and_state())
def test_sector_invariants(pair):
    model, state = pair
    sec = canonicalize(model, state)
    assert any(a < nl for a, nl in zip(sec.Nvec, model.n))
    assert all(b - mk * sec.r >= 0 for b, mk in zip(sec.Mvec, model.m))
    assert sec.r == min(b // mk for b, mk in zip(sec.Mvec, model.m))
    basis = sector_basis(model, sec)
    assert state in basis
    labels = {quantum_numbers(model, b) for b in basis}
    assert labels == {quantum_numbers(model, state)}
    assert all(canonicalize(model, b) == sec for b in basis)
    assert isinstance(next(iter(labels)).e0, Fraction)


def test_text_forms(cascade2):
    sec = make_sector(cascade2, [0, 0], [1])
    assert format_sector(sec) == "N=0,0;M=1"
    assert parse_sector(cascade2, "N=0,0;M=1") == sec
    st_ = monomial([1, 1], [0])
    assert format_monomial(st_) == "i=1,1;j=0"
    assert parse_monomial(cascade2, "i=1,1;j=0") == st_
    with pytest.raises(InvalidSector):
        parse_sector(cascade2, "N=0;M=1")
    with pytest.raises(ValueError):
        parse_monomial(cascade2, "x=1")
