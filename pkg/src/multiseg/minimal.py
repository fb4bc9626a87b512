"""Local minimizability, fibers of the removal map, and greedy descent.

The fiber of ``(h, p)`` is every multisegment ``m`` with ``r(m, h) = p``.
Each removal deletes exactly the points of the removed segment from ``h``,
so every member of a fiber has support ``support(h) - support(p)``; that
makes enumeration finite.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .core import INFINITY, Multisegment, RemovalOutcome, Segment, sub_multisegments
from .finechain import fine_chain, fs
from .removal import NotAdmissible, r_mult, upsilon
from .zpos import iu_successors, support_class


def _require_admissible(n: Multisegment, h: Multisegment) -> RemovalOutcome:
    out = r_mult(n, h)
    if out is INFINITY:
        raise NotAdmissible(f"{n!r} is not admissible to {h!r}")
    return out


def _contain_count(segs, inner: Segment) -> int:
    return sum(1 for s in segs if s.contains(inner))


def is_locally_minimizable(n: Multisegment, h: Multisegment) -> bool:
    """Some ``D`` in ``n[a+1]`` lies in more first segments than segments of ``n[a]``."""
    if not n:
        raise ValueError("locally minimizable is defined for non-empty n")
    _require_admissible(n, h)
    a = n.min_point()
    low = n.at_point(a)
    f = fs(n, h)
    return any(
        _contain_count(low, d) < _contain_count(f, d)
        for d in set(n.at_point(a + 1))
    )


def one_segment_witness(n: Multisegment, h: Multisegment) -> Optional[tuple]:
    """A pair ``(D, Dbar)`` with ``D`` in ``n[a]``, ``Dbar`` in ``n[a+1]``,
    ``Dbar ⊄ D`` and ``Dbar ⊆ Υ(D, h)``; such a pair forces local
    minimizability."""
    _require_admissible(n, h)
    if not n:
        return None
    a = n.min_point()
    for d in sorted(set(n.at_point(a))):
        first = upsilon(d, h)
        for dbar in sorted(set(n.at_point(a + 1))):
            if not d.contains(dbar) and first.contains(dbar):
                return d, dbar
    return None


def chain_minimizable(n: Multisegment, h: Multisegment) -> Optional[int]:
    """Index of the first locally minimizable state of the fine chain."""
    _require_admissible(n, h)
    for j, (nj, hj) in enumerate(fine_chain(n, h).states):
        if is_locally_minimizable(nj, hj):
            return j
    return None


def descend_step(n: Multisegment, h: Multisegment) -> Optional[Multisegment]:
    """First one-move successor of ``n`` (canonical order) with the same outcome."""
    target = _require_admissible(n, h)
    for m in iu_successors(n):
        if r_mult(m, h) == target:
            return m
    return None


def descent_path(n: Multisegment, h: Multisegment) -> list:
    path = [n]
    while True:
        nxt = descend_step(path[-1], h)
        if nxt is None:
            return path
        path.append(nxt)


def find_minimal(n: Multisegment, h: Multisegment) -> Multisegment:
    """Greedy descent to the minimum of the fiber containing ``n``."""
    return descent_path(n, h)[-1]


@dataclass(frozen=True)
class FiberReport:
    base: Multisegment
    target: Multisegment
    members: tuple
    hasse_edges: tuple  # (lower, upper) covering pairs
    minimal_elements: tuple
    maximal_elements: tuple

    @property
    def minimum(self) -> Optional[Multisegment]:
        if len(self.minimal_elements) == 1:
            return self.minimal_elements[0]
        return None


def enumerate_fiber(h: Multisegment, p: RemovalOutcome) -> FiberReport:
    if p is INFINITY:
        raise ValueError("the fiber over ∞ is not enumerated")
    hs, ps = h.support(), p.support()
    if not ps.issubset(hs):
        return FiberReport(h, p, (), (), (), ())
    sc = support_class(hs - ps)
    mask = 0
    for i, m in enumerate(sc.elements):
        if r_mult(m, h) == p:
            mask |= 1 << i
    el = sc.elements
    return FiberReport(
        base=h,
        target=p,
        members=tuple(sc.members_of(mask)),
        hasse_edges=tuple((el[x], el[y]) for x, y in sc.hasse(mask)),
        minimal_elements=tuple(el[i] for i in sc.minimal(mask)),
        maximal_elements=tuple(el[i] for i in sc.maximal(mask)),
    )


def fibers_of(h: Multisegment) -> dict:
    """Partition every multisegment with support inside ``support(h)`` by outcome.

    Returns ``{outcome: [members]}`` with ``∞`` included.
    """
    groups: dict = {}
    for m in sub_multisegments(h.support()):
        groups.setdefault(r_mult(m, h), []).append(m)
    return groups

