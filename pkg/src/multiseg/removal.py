"""The removal process ``r(Δ, h)`` and its multisegment extension.

Removing ``Δ = [a, b]`` from ``h`` picks a nested chain of segments
``Δ_1 ⊇ Δ_2 ⊇ ... ⊇ Δ_r`` of ``h``, deletes the points ``a..b`` across the
chain, and reinserts what is left of each segment.  When ``Δ`` is not
admissible the outcome is the absorbing symbol :data:`INFINITY`.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .core import (
    INFINITY,
    Multisegment,
    RemovalOutcome,
    Segment,
    ascending_order,
)


class NotAdmissible(ValueError):
    """Raised by operations whose contract requires admissibility."""


@dataclass(frozen=True)
class RemovalSequence:
    segments: tuple
    truncations: tuple  # aligned with segments; None marks an empty truncation

    @property
    def upsilon(self) -> Segment:
        return self.segments[0]

    def is_nested(self) -> bool:
        segs = self.segments
        return all(segs[i].contains(segs[i + 1]) for i in range(len(segs) - 1))


def admissible_seg(delta: Segment, h: Multisegment) -> bool:
    a, b = delta
    return any(s.a == a and s.b >= b for s in h)


def removal_sequence(delta: Segment, h: Multisegment) -> RemovalSequence:
    a, b = delta
    first = None
    for s in h:
        if s.a == a and s.b >= b:
            first = s  # h is sorted, so the first hit is the shortest
            break
    if first is None:
        raise NotAdmissible(f"{delta!r} is not admissible to {h!r}")
    chain = [first]
    prev = first
    while True:
        nxt = None
        for s in h:
            # a chain member starting beyond b+1 would not lose any point of Δ
            if prev.a < s.a <= b + 1 and b <= s.b < prev.b:
                nxt = s
                break
        if nxt is None:
            break
        chain.append(nxt)
        prev = nxt
    truncs = []
    for i, s in enumerate(chain[:-1]):
        truncs.append(Segment(chain[i + 1].a, s.b))
    last = chain[-1]
    truncs.append(Segment(b + 1, last.b) if last.b > b else None)
    return RemovalSequence(tuple(chain), tuple(truncs))


def upsilon(delta: Segment, h: Multisegment) -> Segment:
    """First segment of the removal sequence for ``(delta, h)``."""
    a, b = delta
    for s in h:
        if s.a == a and s.b >= b:
            return s
    raise NotAdmissible(f"{delta!r} is not admissible to {h!r}")


def r_seg(delta: Segment, h: RemovalOutcome) -> RemovalOutcome:
    if h is INFINITY or not admissible_seg(delta, h):
        return INFINITY
    seq = removal_sequence(delta, h)
    return (h - seq.segments) + [t for t in seq.truncations if t is not None]


def r_mult(m: Multisegment, h: RemovalOutcome) -> RemovalOutcome:
    """Fold :func:`r_seg` over ``m`` in ascending order."""
    for s in ascending_order(m):
        if h is INFINITY:
            break
        h = r_seg(s, h)
    return h


def r_sequence(seq, h: RemovalOutcome) -> RemovalOutcome:
    """Fold :func:`r_seg` over an explicit sequence of segments."""
    for s in seq:
        h = r_seg(s, h)
    return h


def is_admissible(m: Multisegment, h: RemovalOutcome) -> bool:
    return r_mult(m, h) is not INFINITY


def epsilon(delta: Segment, h: Multisegment) -> int:
    """Number of segments of ``h`` starting at ``a(delta)`` that contain it."""
    a, b = delta
    return sum(1 for s in h if s.a == a and s.b >= b)


def removed_points(delta: Segment, h: Multisegment) -> Optional[list]:
    """Per chain member, the points deleted from it (for diagrams)."""
    if not admissible_seg(delta, h):
        return None
    seq = removal_sequence(delta, h)
    out = []
    for s, t in zip(seq.segments, seq.truncations):
        kept = set(t.points()) if t is not None else set()
        out.append((s, [p for p in s.points() if p not in kept]))
    return out
