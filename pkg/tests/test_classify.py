import pytest
from hypothesis import given, strategies as st

from dmspectrum.classify import invariants, partition, trace_field
from dmspectrum.covering import parse_type
from dmspectrum.dataset import known_edges
from dmspectrum.errors import InconsistentKnownEdges

NINE = [[1, 4], [2], [3], [5, 13], [6, 7], [8, 9], [10], [11, 12], [14, 15]]


def test_trace_field_identifications():
    assert trace_field(15) == trace_field(30)
    assert trace_field(12) != trace_field(18)
    assert trace_field(1).degree == 1 and trace_field(2).degree == 1
    assert trace_field(42).degree == 6 and trace_field(7).canonical_d == 14


@given(st.integers(1, 200), st.integers(1, 200))
def test_trace_field_equality_rule(m, n):
    same = m == n or {m, n} == {min(m, n), 2 * min(m, n)} and min(m, n) % 2 == 1
    assert (trace_field(m) == trace_field(n)) == same


def test_invariants_examples(surface):
    by = {r.index: r.ct for r in surface}
    i2 = invariants(by[2])
    assert i2.trace_field == trace_field(12) and not i2.cocompact
    assert [str(x) for x in i2.spectrum] == ["1", "5/17", "0"]
    assert [str(x) for x in i2.relative_euler] == ["1", "1/17"]
    i1 = invariants(by[1])
    assert i1.cocompact and [str(x) for x in i1.relative_euler] == ["1", "1/13"]
    assert invariants(by[5]) == invariants(by[13])


def test_builtin_nine_classes(surface):
    cts = [r.ct for r in surface]
    assert partition(cts, known_edges(surface)) == NINE
    # cocompactness is not needed to separate the classes
    assert partition(cts, known_edges(surface), with_cocompactness=False) == NINE


def test_partition_small_inputs(surface):
    by = {r.index: r.ct for r in surface}
    assert partition([by[8]]) == [[1]]
    assert partition([by[8], by[9], by[10]]) == [[1, 2], [3]]
    assert partition([]) == []


def test_partition_order_independent(surface):
    cts = [r.ct for r in surface]
    rev = list(reversed(cts))
    classes = partition(rev)
    n = len(cts)
    mapped = sorted(sorted(n + 1 - i for i in cls) for cls in classes)
    assert mapped == NINE


def test_inconsistent_edges_detected(surface):
    by = {r.index: r.ct for r in surface}
    with pytest.raises(InconsistentKnownEdges):
        partition([by[8], by[10]], known_edges=[(1, 2)])


def test_distinct_classes_differ_in_field_or_spectrum(surface):
    by = {r.index: invariants(r.ct) for r in surface}
    for a in NINE:
        for b in NINE:
            if a < b:
                x, y = by[a[0]], by[b[0]]
                assert (x.trace_field, x.spectrum) != (y.trace_field, y.spectrum)


def test_threefold_has_its_own_dimension():
    inv = invariants(parse_type("12;7,5,3,3,3,3"))
    assert inv.dimension == 3 and inv.relative_euler is None and not inv.cocompact
