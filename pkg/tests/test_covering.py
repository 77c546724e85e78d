from fractions import Fraction as F
from math import gcd

import pytest
from hypothesis import given

from dmspectrum.covering import (
    UNIFORMIZING,
    UNITARY,
    CoveringType,
    conjugate_classes,
    genus,
    is_arithmetic,
    parse_type,
    primitive_dimensions,
    units,
    validate_type,
    weight_vector,
)
from dmspectrum.errors import (
    OutOfRange,
    PreconditionFailed,
    RejectDegree,
    RejectGcd,
    RejectLength,
    RejectRange,
    RejectSum,
)

from conftest import covering_types


def test_validate_accepts_table_type():
    ct = validate_type(12, [3, 3, 5, 6, 7])
    assert ct.N == 5 and ct.n == 2
    assert str(ct) == "12;3,3,5,6,7"


@pytest.mark.parametrize("d,a,err", [
    (12, [3, 3, 5, 6, 8], RejectSum),
    (4, [2, 2, 2, 2], RejectGcd),
    (1, [1, 1, 1, 1], RejectDegree),
    (5, [0, 1, 2, 3, 4], RejectRange),
    (5, [5, 1, 2, 1, 1], RejectRange),
    (3, [1, 1, 1], RejectLength),
])
def test_validate_rejections(d, a, err):
    with pytest.raises(err) as info:
        validate_type(d, a)
    assert info.value.condition in ("sum", "gcd", "degree", "range", "length")


def test_parse_type_whitespace_and_errors():
    assert parse_type(" 12 ; 3, 3,5 ,6,7 ") == CoveringType(12, (3, 3, 5, 6, 7))
    with pytest.raises(ValueError, match="position"):
        parse_type("12;3,x,5,6,7")
    with pytest.raises(ValueError, match="no ';'"):
        parse_type("12,3,3,5,6,7")
    with pytest.raises(RejectSum):
        parse_type("12;3,3,5,6,8")


def test_weight_vectors_by_hand():
    ct = CoveringType(12, (3, 3, 5, 6, 7))
    w1 = weight_vector(ct, 1)
    assert w1.mu == (F(1, 4), F(1, 4), F(5, 12), F(1, 2), F(7, 12))
    assert w1.sigma == 2 and w1.signature == (1, 2)
    w5 = weight_vector(ct, 5)
    assert w5.mu == (F(1, 4), F(1, 4), F(1, 12), F(1, 2), F(11, 12))
    assert w5.sigma == 2 and w5.signature == (1, 2)
    w7 = weight_vector(CoveringType(15, (4, 6, 6, 6, 8)), 7)
    assert w7.mu == (F(13, 15), F(4, 5), F(4, 5), F(4, 5), F(11, 15))
    assert w7.sigma == 4 and w7.signature == (3, 0)


def test_weight_vector_range():
    ct = CoveringType(12, (3, 3, 5, 6, 7))
    with pytest.raises(OutOfRange):
        weight_vector(ct, 0)
    with pytest.raises(OutOfRange):
        weight_vector(ct, 12)


def test_conjugate_classes_examples():
    assert [p.reps for p in conjugate_classes(CoveringType(12, (3, 3, 5, 6, 7)))] == [(1, 11), (5, 7)]
    pairs = conjugate_classes(CoveringType(18, (2, 7, 7, 7, 13)))
    assert [(p.reps, p.kind, p.uniformizing_rep) for p in pairs] == [
        ((1, 17), UNIFORMIZING, 1), ((5, 13), UNITARY, None), ((7, 11), UNIFORMIZING, 11)]
    only = conjugate_classes(CoveringType(3, (1, 1, 1, 1, 2)))
    assert [(p.reps, p.kind) for p in only] == [((1, 2), UNIFORMIZING)]


def test_conjugate_classes_d2_single_pair():
    pairs = conjugate_classes(CoveringType(2, (1, 1, 1, 1)))
    assert [p.reps for p in pairs] == [(1, 1)]
    assert primitive_dimensions(CoveringType(2, (1, 1, 1, 1))) == (2, 0)


@pytest.mark.parametrize("t,g", [("12;3,3,5,6,7", 12), ("2;1,1,1,1", 1), ("42;13,15,15,15,26", 58)])
def test_genus_examples(t, g):
    assert genus(parse_type(t)) == g


@pytest.mark.parametrize("t,dims", [("12;3,3,5,6,7", (12, 0)), ("15;4,6,6,6,8", (24, 6)),
                                    ("20;6,6,6,9,13", (24, 12))])
def test_primitive_dimensions_examples(t, dims):
    assert primitive_dimensions(parse_type(t)) == dims


def test_is_arithmetic_examples():
    assert is_arithmetic(parse_type("3;1,1,1,1,2"))
    assert not is_arithmetic(parse_type("12;3,3,5,6,7"))
    assert not is_arithmetic(parse_type("18;2,7,7,7,13"))
    with pytest.raises(PreconditionFailed):
        is_arithmetic(parse_type("5;1,1,1,1,1"))


@given(covering_types())
def test_sigma_integral_and_bounded(ct):
    for k in units(ct.d):
        w = weight_vector(ct, k)
        assert w.sigma.denominator == 1
        assert 0 < w.sigma < ct.N
        assert sum(w.signature) == w.s - 2


@given(covering_types())
def test_signature_flips_under_conjugation(ct):
    for k in units(ct.d):
        w, wbar = weight_vector(ct, k), weight_vector(ct, ct.d - k)
        assert wbar.signature == w.signature[::-1]
        for x, y in zip(w.mu, wbar.mu):
            if x:
                assert x + y == 1


@given(covering_types())
def test_genus_is_total_rank(ct):
    # 2g = dim H^1 = sum over all nontrivial characters of the eigenspace rank
    total = sum(weight_vector(ct, k).s - 2 for k in range(1, ct.d) if weight_vector(ct, k).s >= 2)
    assert 2 * genus(ct) == total


@given(covering_types())
def test_conjugate_pair_count_and_unitary_symmetry(ct):
    pairs = conjugate_classes(ct)
    phi = len(units(ct.d))
    assert len(pairs) == max(1, phi // 2)
    for p in pairs:
        s1, s2 = p.signatures
        assert (s1[1] == 0) == (s2[0] == 0)


@given(covering_types())
def test_dim_p_divisible_when_all_coprime(ct):
    if all(gcd(x, ct.d) == 1 for x in ct.a) and ct.d > 2:
        assert primitive_dimensions(ct)[0] % (2 * (ct.N - 2)) == 0


def test_table_genus_and_dimensions(rows):
    for r in rows:
        assert genus(r.ct) == r.genus, r.index
        assert primitive_dimensions(r.ct) == (r.dim_P, r.dim_U), r.index
