"""The Zelevinsky order: intersection-union moves and poset navigation.

``m' <=_Z m`` when ``m'`` is reachable from ``m`` by elementary
intersection-union moves.  Moves preserve the support, so each support class
is a finite poset; :func:`support_class` builds one lazily (all elements, the
one-step moves, and down-sets as bitmasks) and caches it.
"""
from __future__ import annotations

import threading
from collections import deque
from typing import Iterable

from .core import (
    Multisegment,
    Segment,
    Support,
    linked,
    multisegments_with_support,
    seg_intersection,
    seg_union,
)


def elementary_iu(m: Multisegment, s: Segment, t: Segment) -> Multisegment:
    """Replace the linked pair ``s, t`` of ``m`` by their union and intersection."""
    if not linked(s, t):
        raise ValueError(f"{s!r} and {t!r} are not linked")
    if s == t or m.count(s) < 1 or m.count(t) < 1:
        raise ValueError(f"{s!r}, {t!r} not both in {m!r}")
    return (m - (s, t)) + [seg_union(s, t), seg_intersection(s, t)]


def linked_pairs(m: Multisegment) -> list:
    """Distinct linked pairs ``(s, t)`` with ``s < t`` in canonical order."""
    distinct = sorted(set(m))
    return [
        (s, t)
        for i, s in enumerate(distinct)
        for t in distinct[i + 1:]
        if linked(s, t)
    ]


def iu_successors(m: Multisegment) -> list:
    """All distinct one-move results, sorted canonically."""
    return sorted({elementary_iu(m, s, t) for s, t in linked_pairs(m)})


def is_generic(m: Multisegment) -> bool:
    segs = m.segments
    return not any(
        linked(s, t) for i, s in enumerate(segs) for t in segs[i + 1:]
    )


def downset(m: Multisegment) -> set:
    """Everything reachable from ``m`` (``m`` included), by breadth-first search."""
    seen = {m}
    queue = deque([m])
    while queue:
        x = queue.popleft()
        for y in iu_successors(x):
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return seen


def leq_Z(lower: Multisegment, upper: Multisegment) -> bool:
    """Decide ``lower <=_Z upper`` by search from ``upper``."""
    if lower == upper:
        return True
    if lower.support() != upper.support():
        return False
    seen = {upper}
    queue = deque([upper])
    while queue:
        x = queue.popleft()
        for y in iu_successors(x):
            if y == lower:
                return True
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return False


def interval_Z(lower: Multisegment, upper: Multisegment) -> set:
    """``{x : lower <=_Z x <=_Z upper}``."""
    if not leq_Z(lower, upper):
        raise ValueError(f"{lower!r} is not <=_Z {upper!r}")
    return {x for x in downset(upper) if leq_Z(lower, x)}


def _sumsq(m: Multisegment) -> int:
    return sum((s.b - s.a + 1) ** 2 for s in m)


class SupportClass:
    """All multisegments with one support, ordered by ``<=_Z``.

    ``down[i]`` is an int bitmask of the indices ``j`` with
    ``elements[j] <=_Z elements[i]``.
    """

    def __init__(self, support: Support):
        self.support = support
        self.elements = sorted(multisegments_with_support(support.points))
        self.index = {m: i for i, m in enumerate(self.elements)}
        self.succ = [
            [self.index[y] for y in iu_successors(m)] for m in self.elements
        ]
        down = [0] * len(self.elements)
        # a move strictly increases the sum of squared lengths, so lower
        # elements come first in this order
        order = sorted(range(len(self.elements)), key=lambda i: -_sumsq(self.elements[i]))
        for i in order:
            mask = 1 << i
            for j in self.succ[i]:
                mask |= down[j]
            down[i] = mask
        self.down = down

    def __len__(self) -> int:
        return len(self.elements)

    def leq(self, lower: Multisegment, upper: Multisegment) -> bool:
        return bool(self.down[self.index[upper]] >> self.index[lower] & 1)

    def mask(self, members: Iterable[Multisegment]) -> int:
        out = 0
        for m in members:
            out |= 1 << self.index[m]
        return out

    def members_of(self, mask: int) -> list:
        return [self.elements[i] for i in _bits(mask)]

    def minimal(self, mask: int) -> list:
        """Indices in ``mask`` with nothing else of ``mask`` strictly below."""
        return [i for i in _bits(mask) if self.down[i] & mask == 1 << i]

    def maximal(self, mask: int) -> list:
        return [
            i for i in _bits(mask)
            if not any(j != i and self.down[j] >> i & 1 for j in _bits(mask))
        ]

    def hasse(self, mask: int) -> list:
        """Covering pairs ``(lower, upper)`` of the order restricted to ``mask``."""
        edges = []
        for y in _bits(mask):
            below = self.down[y] & mask & ~(1 << y)
            for x in _bits(below):
                if not any(
                    z != x and self.down[z] >> x & 1 for z in _bits(below)
                ):
                    edges.append((x, y))
        return edges


def _bits(mask: int):
    i = 0
    while mask:
        if mask & 1:
            yield i
        mask >>= 1
        i += 1


_cache: dict = {}
_cache_lock = threading.Lock()


def support_class(support: Support) -> SupportClass:
    key = support.points
    sc = _cache.get(key)
    if sc is None:
        with _cache_lock:
            sc = _cache.get(key)
            if sc is None:
                sc = SupportClass(support)
                _cache[key] = sc
    return sc


def clear_cache() -> None:
    with _cache_lock:
        _cache.clear()
