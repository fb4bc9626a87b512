import itertools

import pytest
from hypothesis import given

from conftest import multisegments
from multiseg.core import EMPTY, INFINITY, Cmp, Multisegment, Segment
from multiseg.finechain import (
    chains_coincide,
    fc_compare,
    fine_chain,
    fs,
    trd,
    trr,
)
from multiseg.removal import NotAdmissible, is_admissible, r_mult
from multiseg.zpos import iu_successors

M = Multisegment.of
S = Segment

N32 = M((1, 3), (1, 5), (2, 2))
H32 = M((0, 3), (1, 2), (1, 4), (1, 5), (2, 3))
H33 = M((0, 4), (1, 5))


def test_fs_examples():
    assert fs(N32, H32) == M((1, 4), (1, 5))
    assert fs(M((1, 6)), H32) == EMPTY  # lowest level not admissible
    assert fs(M((0, 1), (1, 2)), H33) == M((0, 4))
    assert fs(EMPTY, H32) == EMPTY


def test_truncations():
    assert trr(N32, H32) == M((0, 3), (1, 2), (2, 4), (2, 5), (2, 3))
    assert trd(N32, H32) == M((2, 3), (2, 5), (2, 2))
    assert (trd(EMPTY, H32), trr(EMPTY, H32)) == (EMPTY, H32)
    assert trd(M((1, 1)), M((1, 3))) == EMPTY
    assert trr(M((1, 1)), M((1, 3))) == M((2, 3))


def test_fine_chain_examples():
    expected = (M((0, 4)), M((1, 4), (1, 5)), M((2, 4)))
    c1 = fine_chain(M((0, 1), (1, 2)), H33)
    c2 = fine_chain(M((0, 2), (1, 1)), H33)
    assert c1.terms == expected and c2.terms == expected
    assert c1.points == (0, 1, 2)
    assert chains_coincide(M((0, 1), (1, 2)), M((0, 2), (1, 1)), H33)
    assert fc_compare(M((0, 1), (1, 2)), M((0, 2), (1, 1)), H33) is Cmp.EQ
    assert len(fine_chain(EMPTY, H33)) == 0


def test_coincide_requires_admissibility():
    n = M((0, 1), (1, 2))
    assert chains_coincide(n, n, H33)
    assert not chains_coincide(n, M((0, 5)), H33)


def test_fc_compare_errors_and_reversal_example():
    h = M((0, 3), (1, 3))
    upper, lower = M((0, 2), (1, 3)), M((0, 3), (1, 2))
    assert fc_compare(upper, lower, h) in (Cmp.LT, Cmp.EQ)
    with pytest.raises(ValueError):
        fc_compare(M((0, 1)), M((0, 2)), h)
    with pytest.raises(NotAdmissible):
        fc_compare(M((5, 5)), M((5, 5)), h)


@given(multisegments(0, 4, 4), multisegments(0, 4, 5))
def test_chain_invariants(n, h):
    if r_mult(n, h) is INFINITY:
        return
    ch = fine_chain(n, h)
    for i, (term, (ni, hi), c) in enumerate(zip(ch.terms, ch.states, ch.points)):
        assert ni.min_point() == c
        assert all(s.a == c for s in term)
        assert term.issubmultiset(hi.at_point(c))
        assert fine_chain(ni, hi).terms == ch.terms[i:]


@given(multisegments(0, 4, 4), multisegments(0, 4, 5))
def test_fs_is_local_and_order_free(n, h):
    if not n:
        return
    a = n.min_point()
    low = n.at_point(a)
    base = fs(n, h)
    assert base == fs(low, h) == fs(low, h.at_point(a))
    for order in set(itertools.permutations(low.segments)):
        assert fs(n, h, order=order) == base


@given(multisegments(0, 4, 4), multisegments(0, 4, 5))
def test_multiple_truncation(n, h):
    if n and not is_admissible(n.at_point(n.min_point()), h):
        return
    assert r_mult(n, h) == r_mult(trd(n, h), trr(n, h))


@given(multisegments(0, 3, 4), multisegments(0, 3, 5))
def test_moves_lower_the_chain_order_reversed(n, h):
    if r_mult(n, h) is INFINITY:
        return
    for m in iu_successors(n):
        if r_mult(m, h) is not INFINITY:
            assert fc_compare(n, m, h) in (Cmp.LT, Cmp.EQ)
