"""Minimality criteria for a pair of linked segments ``Δ < Δ'``.

Three conditions on a triple ``(Δ, Δ', h)`` are compared here: the
non-overlapping property (read off the removal sequence of ``Δ``), the
intermediate segment property (a witness segment in ``h``), and
preservation of the η-vector of ``Δ'`` under ``r(Δ, ·)``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .core import INFINITY, Multisegment, Segment, precedes, seg_intersection, seg_union
from .removal import (
    NotAdmissible,
    admissible_seg,
    epsilon,
    r_mult,
    r_seg,
    removal_sequence,
)


@dataclass(frozen=True)
class EtaVector:
    segment: Segment
    values: tuple  # values[i] = epsilon([a+i, b], h); not monotone in general


def eta(delta: Segment, h: Multisegment) -> EtaVector:
    a, b = delta
    return EtaVector(delta, tuple(epsilon(Segment(x, b), h) for x in range(a, b + 1)))


def _check_pair(delta: Segment, delta2: Segment) -> None:
    if not precedes(delta, delta2):
        raise ValueError(f"need {delta!r} < {delta2!r} (linked, b smaller)")


def _check_triple(delta: Segment, delta2: Segment, h: Multisegment) -> None:
    if not admissible_seg(delta, h):
        raise NotAdmissible(f"{delta!r} is not admissible to {h!r}")
    _check_pair(delta, delta2)


def overlap_segment(delta: Segment, delta2: Segment, h: Multisegment) -> Optional[Segment]:
    """Shortest member of the removal sequence of ``delta`` containing ``a(delta2) - 1``."""
    _check_triple(delta, delta2, h)
    point = delta2.a - 1
    best = None
    # nested sequence: members containing a point form a prefix
    for s in removal_sequence(delta, h).segments:
        if s.has_point(point):
            best = s
        else:
            break
    return best


def non_overlapping(delta: Segment, delta2: Segment, h: Multisegment) -> bool:
    bar = overlap_segment(delta, delta2, h)
    if bar is None:
        # unreachable for linked Δ < Δ': a(Δ') - 1 lies in Δ ⊆ Δ_1
        return True
    return not bar.contains(delta2)


def intermediate_witness(delta: Segment, delta2: Segment, h: Multisegment) -> Optional[Segment]:
    _check_pair(delta, delta2)
    for s in h:
        if delta.a <= s.a < delta2.a and delta.b <= s.b < delta2.b:
            return s
    return None


def intermediate_segment(delta: Segment, delta2: Segment, h: Multisegment) -> bool:
    return intermediate_witness(delta, delta2, h) is not None


def eta_preserved(delta: Segment, delta2: Segment, h: Multisegment) -> bool:
    _check_triple(delta, delta2, h)
    return eta(delta2, h).values == eta(delta2, r_seg(delta, h)).values


def construct_smaller(delta: Segment, delta2: Segment, h: Multisegment) -> Optional[tuple]:
    """``({Δ∩Δ', Δ∪Δ'}, outcome)`` when the pair overlaps, else ``None``.

    Requires ``Δ`` admissible to ``h`` and ``Δ'`` admissible to ``r(Δ, h)``.
    """
    _check_triple(delta, delta2, h)
    if not admissible_seg(delta2, r_seg(delta, h)):
        raise NotAdmissible(f"{delta2!r} is not admissible to r({delta!r}, h)")
    if non_overlapping(delta, delta2, h):
        return None
    smaller = Multisegment([seg_intersection(delta, delta2), seg_union(delta, delta2)])
    out = r_mult(smaller, h)
    assert out is not INFINITY
    return smaller, out


@dataclass(frozen=True)
class TripleReport:
    non_overlapping: bool
    eta_preserved: bool
    intermediate_segment: bool
    eta_before: tuple
    eta_after: tuple

    @property
    def agree(self) -> bool:
        return self.non_overlapping == self.eta_preserved == self.intermediate_segment


def evaluate_triple(delta: Segment, delta2: Segment, h: Multisegment) -> TripleReport:
    _check_triple(delta, delta2, h)
    return TripleReport(
        non_overlapping=non_overlapping(delta, delta2, h),
        eta_preserved=eta_preserved(delta, delta2, h),
        intermediate_segment=intermediate_segment(delta, delta2, h),
        eta_before=eta(delta2, h).values,
        eta_after=eta(delta2, r_seg(delta, h)).values,
    )
