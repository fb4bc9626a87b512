import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import multisegments
from multiseg.core import (
    EMPTY,
    INFINITY,
    Cmp,
    Multisegment,
    Segment,
    Support,
    ascending_order,
    ascending_orderings,
    at_point,
    is_ascending,
    left_truncate,
    lex_compare_at,
    linked,
    mult_left_truncate,
    multisegments_with_support,
    seg_intersection,
    seg_union,
)
from oracles import brute_multisegments

M = Multisegment.of
S = Segment


def test_segment_rejects_empty():
    with pytest.raises(ValueError):
        Segment.make(2, 1)
    with pytest.raises(ValueError):
        Multisegment([S(3, 1)])


def test_segment_basics():
    s = S(1, 4)
    assert s.length == 4
    assert list(s.points()) == [1, 2, 3, 4]
    assert repr(S(2, 2)) == "[2]"
    assert s.contains(S(2, 3)) and not S(2, 3).contains(s)


@pytest.mark.parametrize(
    "s, t, expected",
    [((0, 3), (3, 8), True), ((0, 5), (2, 3), False), ((0, 1), (3, 4), False),
     ((0, 1), (2, 3), True), ((2, 2), (2, 2), False)],
)
def test_linked(s, t, expected):
    assert linked(S(*s), S(*t)) is expected
    assert linked(S(*t), S(*s)) is expected


def test_union_and_intersection():
    assert seg_union(S(0, 3), S(3, 8)) == S(0, 8)
    assert seg_intersection(S(0, 3), S(3, 8)) == S(3, 3)
    assert seg_union(S(1, 3), S(2, 5)) == S(1, 5)
    assert seg_intersection(S(1, 3), S(2, 5)) == S(2, 3)
    assert seg_intersection(S(0, 1), S(3, 4)) is None
    with pytest.raises(ValueError):
        seg_union(S(0, 1), S(3, 4))


def test_left_truncate():
    assert left_truncate(S(0, 3)) == S(1, 3)
    assert left_truncate(S(2, 2)) is None
    assert left_truncate(S(1, 5)) == S(2, 5)
    assert mult_left_truncate(M((0, 3), (1, 1), (1, 1))) == M((1, 3))
    assert mult_left_truncate(EMPTY) == EMPTY
    assert mult_left_truncate(M((1, 4), (1, 5))) == M((2, 4), (2, 5))


def test_at_point():
    h = M((0, 3), (1, 2), (1, 4), (1, 5), (2, 3))
    assert at_point(h, 1) == M((1, 2), (1, 4), (1, 5))
    assert at_point(h, 7) == EMPTY
    assert at_point(M((1, 2), (1, 2)), 1) == M((1, 2), (1, 2))


def test_multiset_arithmetic():
    m = M((0, 3), (1, 2))
    assert m + None == m
    assert m + [S(1, 2), None] == M((0, 3), (1, 2), (1, 2))
    assert (m + S(1, 2)).count(S(1, 2)) == 2
    assert m - S(1, 2) == M((0, 3))
    with pytest.raises(ValueError):
        m - S(4, 4)
    assert M((1, 2), (0, 3), (1, 2)).items() == [(0, 3, 1), (1, 2, 2)]


@given(multisegments(), multisegments())
def test_canonical_form_is_order_free(m1, m2):
    joined = Multisegment(list(m1) + list(m2))
    assert joined == Multisegment(list(m2)[::-1] + list(m1)[::-1])
    assert hash(joined) == hash(m1 + m2)
    assert joined.support() == m1.support() + m2.support()


def test_support_arithmetic():
    s = M((0, 2), (1, 1)).support()
    assert s.points == (0, 1, 1, 2)
    assert s - M((1, 1)).support() == M((0, 2)).support()
    with pytest.raises(ValueError):
        s - M((5, 5)).support()
    assert Support([1]).issubset(s) and not Support([3]).issubset(s)


def test_lex_compare_at():
    assert lex_compare_at(M((1, 3)), M((1, 4), (1, 2)), 1) is Cmp.LT
    assert lex_compare_at(M((1, 4), (1, 2)), M((1, 3)), 1) is Cmp.GT
    m = M((1, 3), (1, 1))
    assert lex_compare_at(m, m, 1) is Cmp.EQ
    assert lex_compare_at(M((1, 5)), INFINITY, 1) is Cmp.LT
    assert lex_compare_at(INFINITY, M((1, 5)), 1) is Cmp.GT
    assert lex_compare_at(INFINITY, INFINITY, 1) is Cmp.EQ
    # more segments but dominated pointwise the other way
    assert lex_compare_at(M((1, 5)), M((1, 3), (1, 3)), 1) is Cmp.INCOMPARABLE
    with pytest.raises(ValueError):
        lex_compare_at(M((2, 3)), M((1, 3)), 1)


@given(st.lists(st.integers(1, 4), min_size=0, max_size=3), st.lists(st.integers(1, 4), max_size=3))
def test_lex_compare_matches_definition(e1, e2):
    m1 = Multisegment(S(1, b) for b in e1)
    m2 = Multisegment(S(1, b) for b in e2)
    d1, d2 = sorted(e1, reverse=True), sorted(e2, reverse=True)

    def le(x, y):
        return len(x) <= len(y) and all(p <= q for p, q in zip(x, y))

    got = lex_compare_at(m1, m2, 1)
    if d1 == d2:
        assert got is Cmp.EQ
    elif le(d1, d2):
        assert got is Cmp.LT
    elif le(d2, d1):
        assert got is Cmp.GT
    else:
        assert got is Cmp.INCOMPARABLE


def test_ascending_order_examples():
    assert ascending_order(M((1, 3), (1, 6), (2, 4))) == (S(1, 3), S(1, 6), S(2, 4))
    assert ascending_order(M((3, 4), (0, 2))) == (S(0, 2), S(3, 4))
    assert ascending_order(EMPTY) == ()


def test_ascending_order_window_exhaustive():
    for m in brute_multisegments(0, 4, 6):
        assert is_ascending(ascending_order(m))


@given(multisegments(max_size=4))
def test_ascending_orderings_are_exactly_the_valid_permutations(m):
    import itertools

    valid = {p for p in itertools.permutations(m.segments) if is_ascending(p)}
    assert set(ascending_orderings(m)) == valid


def test_multisegments_with_support():
    got = multisegments_with_support([0, 1, 1, 2])
    expected = {
        m for m in brute_multisegments(0, 2, 4) if m.support().points == (0, 1, 1, 2)
    }
    assert set(got) == expected
    assert len(got) == len(set(got))
