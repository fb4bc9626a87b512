"""First-segment maps, truncations, fine chains and the fine-chain order."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .core import EMPTY, INFINITY, Cmp, Multisegment, lex_compare_at
from .removal import NotAdmissible, r_mult, r_seg, upsilon


def fs(n: Multisegment, h: Multisegment, order: Optional[Sequence] = None) -> Multisegment:
    """First segments of the removal sequences for the lowest level of ``n``.

    With ``a`` the smallest start point of ``n``, the segments of ``n[a]`` are
    removed one after another from ``h``; the first chain member of each
    removal is collected.  Returns the empty multisegment when ``n[a]`` is not
    admissible.  ``order`` optionally fixes the processing order of ``n[a]``.
    """
    if not n:
        return EMPTY
    if order is None:
        order = n.at_point(n.min_point()).segments
    firsts = []
    r = h
    for s in order:
        r2 = r_seg(s, r)
        if r2 is INFINITY:
            return EMPTY
        firsts.append(upsilon(s, r))
        r = r2
    return Multisegment(firsts)


def trr(n: Multisegment, h: Multisegment) -> Multisegment:
    """``h`` with every first segment of ``fs(n, h)`` left-truncated."""
    f = fs(n, h)
    return (h - f.segments) + f.left_truncate()


def trd(n: Multisegment, h: Multisegment = EMPTY) -> Multisegment:
    """``n`` with its lowest level left-truncated (``h`` is not consulted)."""
    if not n:
        return n
    low = n.at_point(n.min_point())
    return (n - low.segments) + low.left_truncate()


@dataclass(frozen=True)
class FineChain:
    terms: tuple   # fs(n_i, h_i)
    states: tuple  # (n_i, h_i)
    points: tuple  # smallest start point c_i of n_i

    def __len__(self) -> int:
        return len(self.terms)


def fine_chain(n: Multisegment, h: Multisegment) -> FineChain:
    terms, states, points = [], [], []
    while n:
        states.append((n, h))
        points.append(n.min_point())
        f = fs(n, h)
        terms.append(f)
        h = (h - f.segments) + f.left_truncate()
        n = trd(n)
    return FineChain(tuple(terms), tuple(states), tuple(points))


def chains_coincide(n: Multisegment, n2: Multisegment, h: Multisegment) -> bool:
    if r_mult(n, h) is INFINITY or r_mult(n2, h) is INFINITY:
        return False
    return fine_chain(n, h).terms == fine_chain(n2, h).terms


def fc_compare(n: Multisegment, n2: Multisegment, h: Multisegment) -> Cmp:
    """Compare fine chains at their first differing term."""
    if n.support() != n2.support():
        raise ValueError(f"{n!r} and {n2!r} have different supports")
    for x in (n, n2):
        if r_mult(x, h) is INFINITY:
            raise NotAdmissible(f"{x!r} is not admissible to {h!r}")
    return compare_chains(fine_chain(n, h), fine_chain(n2, h))


def compare_chains(c1: FineChain, c2: FineChain) -> Cmp:
    for s1, s2, c in zip(c1.terms, c2.terms, c1.points):
        if s1 != s2:
            return lex_compare_at(s1, s2, c)
    return Cmp.EQ
