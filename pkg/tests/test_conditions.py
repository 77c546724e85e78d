from fractions import Fraction as F
from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from dmspectrum.chow import ModelId
from dmspectrum.conditions import (
    CONTRACTED,
    ELLIPTIC,
    INT,
    NEITHER,
    PARABOLIC,
    SIGMA_INT,
    check_int,
    check_sigma_int,
    enumerate_types,
    lattice_condition,
    model_label,
    pair_profiles,
    select_model,
)
from dmspectrum.covering import CoveringType, parse_type, units, weight_vector
from dmspectrum.errors import BadWeightSum, UnsupportedDimension, UnsupportedProfile

from conftest import row_ct


def _kappas(mu):
    return {p.pair: p.kappa for p in pair_profiles(mu)}


def test_profiles_row2():
    mu = (F(1, 4), F(1, 4), F(5, 12), F(1, 2), F(7, 12))
    k = _kappas(mu)
    assert (k[(1, 2)], k[(1, 3)], k[(1, 4)], k[(1, 5)], k[(3, 4)]) == (2, 3, 4, 6, 12)
    kinds = {p.pair: p.kind for p in pair_profiles(mu)}
    assert [p for p, v in kinds.items() if v == PARABOLIC] == [(3, 5)]
    assert [p for p, v in kinds.items() if v == CONTRACTED] == [(4, 5)]


def test_profiles_row1():
    mu = (F(1, 4), F(1, 4), F(1, 4), F(7, 12), F(2, 3))
    prof = {p.pair: p for p in pair_profiles(mu)}
    assert all(prof[p].kappa == 2 for p in combinations((1, 2, 3), 2))
    assert all(prof[(i, 4)].kappa == 6 and prof[(i, 5)].kappa == 12 for i in (1, 2, 3))
    assert prof[(4, 5)].kind == CONTRACTED and prof[(4, 5)].kappa is None
    assert not any(p.kind == PARABOLIC for p in prof.values())


def test_profiles_symmetric():
    prof = pair_profiles((F(2, 5),) * 5)
    assert len(prof) == 10 and all(p.kind == ELLIPTIC and p.kappa == 5 for p in prof)


def test_bad_weight_sum():
    with pytest.raises(BadWeightSum):
        pair_profiles((F(1, 5),) * 5)
    with pytest.raises(BadWeightSum):
        check_int((F(1, 5),) * 5)


def test_check_int_examples():
    assert check_int(parse_type("12;3,3,5,6,7").mu)
    assert check_int((F(2, 5),) * 5)
    assert not check_int(parse_type("18;2,7,7,7,13").mu)


def test_check_sigma_int_examples():
    r = check_sigma_int(parse_type("18;2,7,7,7,13").mu)
    assert (r.condition, r.S) == (SIGMA_INT, (2, 3, 4))
    assert check_sigma_int(parse_type("12;3,3,5,6,7").mu).condition == INT
    r9 = check_sigma_int(parse_type("20;6,6,9,9,10").mu)
    assert r9.condition == SIGMA_INT and len(r9.S) == 2
    assert r9.S in r9.all_S


def test_int_reported_before_sigma_int():
    # row 1 satisfies INT; a symmetry set would also work, but INT is the stronger statement
    r = check_sigma_int(parse_type("12;3,3,3,7,8").mu)
    assert r.condition == INT and r.S is None


def test_neither():
    # kappa = 12/5 on the {1,2} pair: not even a half-integer
    r = check_sigma_int(parse_type("12;1,6,6,5,6").mu)
    assert r.condition == NEITHER and not r.is_lattice


def test_select_model_examples(rows):
    assert check_sigma_int(row_ct(rows, 3).mu).model == ModelId("B10")
    m1 = check_sigma_int(row_ct(rows, 1).mu).model
    assert m1.tag == "B9" and m1.contracted == ((4, 5),)
    m16 = check_sigma_int(row_ct(rows, 16).mu).model
    assert m16.tag == "B14"


def test_select_model_relabels_contracted_pair():
    # contracted pair {1,2}: catalogue wants it at {4,5}
    mu = (F(7, 12), F(2, 3), F(1, 4), F(1, 4), F(1, 4))
    m = select_model(check_sigma_int(mu), 5)
    assert m.tag == "B9" and m.contracted == ((1, 2),)
    assert m.to_catalogue((1, 2)) == (4, 5)


def test_select_model_b7_hub():
    r = check_sigma_int(parse_type("18;2,7,7,7,13").mu)
    assert r.model.tag == "B7"
    assert sorted(r.model.contracted) == [(2, 5), (3, 5), (4, 5)]


def test_select_model_errors():
    with pytest.raises(UnsupportedDimension):
        select_model(check_sigma_int((F(1, 2),) * 4), 4)
    # two contracted pairs through a common point: no catalogued surface
    mu = (F(4, 5), F(3, 10), F(3, 10), F(3, 10), F(3, 10))
    report = check_sigma_int(mu)
    assert len(report.contracted_pairs) == 4
    with pytest.raises(UnsupportedProfile):
        select_model(report, 5)
    assert report.model is None
    six = (F(1, 3),) * 6
    with pytest.raises(UnsupportedProfile):
        select_model(check_sigma_int(six), 6)


def test_table_condition_model_and_parabolic(rows):
    for r in rows:
        rep = check_sigma_int(r.ct.mu)
        assert rep.condition == r.condition, r.index
        assert model_label(rep) == r.model, r.index
        assert tuple(rep.parabolic_pairs) == r.parabolic, r.index


def test_sigma_int_report_invariants(rows):
    for r in rows:
        rep = lattice_condition(r.ct)
        if rep.condition == SIGMA_INT:
            assert len({r.ct.mu[i - 1] for i in rep.S}) == 1
            for p in rep.pairs:
                if p.kind == ELLIPTIC:
                    assert ((2 if p.in_S else 1) * p.kappa).denominator == 1
        else:
            assert all(p.kappa.denominator == 1 for p in rep.pairs if p.kind == ELLIPTIC)


def test_cusps_are_galois_invariant(rows):
    for r in rows:
        mu1 = r.ct.mu
        for k in units(r.ct.d):
            muk = weight_vector(r.ct, k).mu
            for i, j in combinations(range(r.ct.N), 2):
                assert (mu1[i] + mu1[j] == 1) == (muk[i] + muk[j] == 1)


def test_branch_orders_integral_on_table(rows):
    for r in rows:
        rep = lattice_condition(r.ct)
        for k in units(r.ct.d):
            if rep.condition == SIGMA_INT and k % 2 == 0:
                continue
            muk = weight_vector(r.ct, k).mu
            for p in rep.pairs:
                if p.kind == ELLIPTIC:
                    i, j = p.pair
                    assert (p.kappa * (1 - muk[i - 1] - muk[j - 1])).denominator == 1, (r.index, k, p.pair)


def test_enumerate_examples():
    twelve = enumerate_types(12, 5, "nonarithmetic")
    assert [str(ct) for ct in twelve] == ["12;3,3,3,7,8", "12;3,3,5,6,7", "12;4,4,4,5,7", "12;4,4,5,5,6"]
    assert CoveringType(3, (1, 1, 1, 1, 2)) in enumerate_types(3, 5, "int")
    assert enumerate_types(2, 5, "int") == []


def test_enumerate_is_sorted_and_canonical():
    out = enumerate_types(15, 5, "all")
    assert out == sorted(out, key=lambda c: (c.d, c.a))
    assert all(list(c.a) == sorted(c.a) and sum(c.a) == 2 * c.d for c in out)


def test_enumerate_filter_validation():
    with pytest.raises(ValueError):
        enumerate_types(10, 5, "bogus")


@pytest.mark.slow
def test_sweep_finds_exactly_the_table(surface):
    found = enumerate_types(42, 5, "nonarithmetic")
    assert {c for c in found} == {r.ct for r in surface}


@given(st.integers(3, 20))
def test_prefilter_agrees_with_full_check(d):
    lattices = set(enumerate_types(d, 5, "sigmaint", min_d=d))
    for ct in enumerate_types(d, 5, "all", min_d=d):
        assert check_sigma_int(ct.mu).is_lattice == (ct in lattices)
