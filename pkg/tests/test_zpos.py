import networkx as nx
import pytest
from hypothesis import given

from conftest import multisegments
from multiseg.core import EMPTY, Multisegment, Segment
from multiseg.zpos import (
    downset,
    elementary_iu,
    interval_Z,
    is_generic,
    iu_successors,
    leq_Z,
    support_class,
)
from oracles import brute_multisegments, iu_graph

M = Multisegment.of
S = Segment


def test_elementary_iu_examples():
    assert elementary_iu(M((0, 2), (1, 3)), S(0, 2), S(1, 3)) == M((0, 3), (1, 2))
    assert elementary_iu(M((0, 3), (1, 1), (2, 2)), S(1, 1), S(2, 2)) == M((0, 3), (1, 2))
    with pytest.raises(ValueError):
        elementary_iu(M((0, 3), (1, 2)), S(0, 3), S(1, 2))
    with pytest.raises(ValueError):
        elementary_iu(M((0, 2)), S(0, 2), S(1, 3))


def test_iu_successors_examples():
    assert iu_successors(M((0, 3), (1, 2))) == []
    assert iu_successors(M((0, 2), (1, 3))) == [M((0, 3), (1, 2))]
    assert set(iu_successors(M((1, 1), (2, 2), (3, 3)))) == {
        M((1, 2), (3, 3)), M((1, 1), (2, 3)),
    }


def test_leq_examples():
    assert leq_Z(M((0, 3), (1, 2)), M((0, 2), (1, 3)))
    m = M((0, 2), (1, 3))
    assert leq_Z(m, m)
    assert not leq_Z(M((0, 2), (1, 3)), M((0, 3), (1, 2)))
    assert not leq_Z(M((0, 1)), M((0, 2)))


def test_interval():
    m = M((0, 2), (1, 3))
    assert interval_Z(m, m) == {m}
    assert interval_Z(M((0, 3), (1, 2)), m) == {m, M((0, 3), (1, 2))}
    top = M((1, 1), (2, 2), (3, 3))
    mid = M((1, 2), (3, 3))
    bottom = M((1, 3))
    assert leq_Z(bottom, mid) and leq_Z(mid, top)
    assert interval_Z(bottom, top) == {bottom, mid, M((1, 1), (2, 3)), top}
    assert interval_Z(bottom, mid) == {bottom, mid}
    with pytest.raises(ValueError):
        interval_Z(top, bottom)


def test_generic():
    assert is_generic(M((0, 3), (1, 2)))
    assert not is_generic(M((0, 2), (1, 3)))
    assert is_generic(EMPTY)


@given(multisegments(max_size=4))
def test_successor_invariants(m):
    for n in iu_successors(m):
        assert n.support() == m.support()
        assert n != m and leq_Z(n, m) and not leq_Z(m, n)
    if is_generic(m):
        assert iu_successors(m) == []


@given(multisegments(max_size=4))
def test_reachability_matches_networkx(m):
    g = iu_graph(m)
    assert downset(m) == set(nx.descendants(g, m)) | {m}
    assert nx.is_directed_acyclic_graph(g)


def test_support_class_against_graph_oracle():
    for m in [M((0, 2), (1, 3), (2, 4)), M((0, 0), (1, 1), (2, 2), (3, 3)), M((0, 1), (1, 2), (1, 1))]:
        sc = support_class(m.support())
        g = nx.DiGraph()
        for x in sc.elements:
            g.add_node(x)
            for y in iu_successors(x):
                g.add_edge(x, y)
        closure = nx.transitive_closure_dag(g)
        for i, x in enumerate(sc.elements):
            below = set(sc.members_of(sc.down[i]))
            assert below == set(closure.successors(x)) | {x}
        full = (1 << len(sc)) - 1
        red = nx.transitive_reduction(g)
        assert {(sc.elements[lo], sc.elements[hi]) for lo, hi in sc.hasse(full)} == {
            (v, u) for u, v in red.edges
        }


def test_antisymmetry_exhaustive_small_window():
    for m in brute_multisegments(0, 3, 4):
        for x in downset(m):
            if x != m:
                assert not leq_Z(m, x)
