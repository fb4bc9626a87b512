"""Segments, multisegments and the elementary orderings on them.

A segment ``[a, b]`` is an integer interval with ``b >= a``.  Empty segments
are never materialised: operations that could produce one return ``None``
and multiset arithmetic silently drops it.

A :class:`Multisegment` is an immutable multiset of segments kept as a
sorted tuple (duplicates express multiplicity), so equality and hashing
are plain tuple operations.
"""
from __future__ import annotations

import enum
from collections import Counter
from typing import Iterable, Iterator, NamedTuple, Optional, Union


class Segment(NamedTuple):
    """The integer interval ``[a, b]``.

    Tuple ordering on ``(a, b)`` is the left-first order used to pick the
    next segment in a removal sequence.
    """

    a: int
    b: int

    @classmethod
    def make(cls, a: int, b: int) -> "Segment":
        if b < a:
            raise ValueError(f"segment [{a},{b}] is empty (b < a)")
        return cls(int(a), int(b))

    def __repr__(self) -> str:
        if self.a == self.b:
            return f"[{self.a}]"
        return f"[{self.a},{self.b}]"

    @property
    def length(self) -> int:
        return self.b - self.a + 1

    def points(self) -> range:
        return range(self.a, self.b + 1)

    def contains(self, other: "Segment") -> bool:
        """Non-strict containment ``other ⊆ self``."""
        return self.a <= other.a and other.b <= self.b

    def has_point(self, c: int) -> bool:
        return self.a <= c <= self.b

    def is_singleton(self) -> bool:
        return self.a == self.b


def linked(s: Segment, t: Segment) -> bool:
    """True when ``s ∪ t`` is a segment and neither contains the other.

    Adjacent segments such as ``[0,1]`` and ``[2,3]`` are linked.
    """
    if max(s.a, t.a) > min(s.b, t.b) + 1:
        return False
    return not (s.contains(t) or t.contains(s))


def precedes(s: Segment, t: Segment) -> bool:
    """``s < t``: linked with ``b(s) < b(t)``."""
    return s.b < t.b and linked(s, t)


def seg_union(s: Segment, t: Segment) -> Segment:
    if max(s.a, t.a) > min(s.b, t.b) + 1:
        raise ValueError(f"union of {s!r} and {t!r} is not a segment")
    return Segment(min(s.a, t.a), max(s.b, t.b))


def seg_intersection(s: Segment, t: Segment) -> Optional[Segment]:
    a, b = max(s.a, t.a), min(s.b, t.b)
    if b < a:
        return None
    return Segment(a, b)


def left_truncate(s: Segment) -> Optional[Segment]:
    """``[a+1, b]``, or ``None`` for a singleton."""
    if s.a == s.b:
        return None
    return Segment(s.a + 1, s.b)


class _Infinity:
    """The symbol recording a non-admissible removal."""

    _instance: Optional["_Infinity"] = None
    __slots__ = ()

    def __new__(cls) -> "_Infinity":
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "∞"

    def __reduce__(self):
        return (_Infinity, ())


INFINITY = _Infinity()


class Multisegment:
    """An immutable multiset of non-empty segments.

    >>> m = Multisegment.of((1, 2), (0, 3), (1, 2))
    >>> m
    {[0,3], [1,2], [1,2]}
    >>> m.count(Segment(1, 2))
    2
    """

    __slots__ = ("_segs", "_hash")

    def __init__(self, segments: Iterable[Segment] = ()):
        segs = []
        for s in segments:
            if s is None:
                continue
            if not isinstance(s, Segment):
                s = Segment.make(*s)
            elif s.b < s.a:
                raise ValueError(f"segment [{s.a},{s.b}] is empty (b < a)")
            segs.append(s)
        segs.sort()
        self._segs = tuple(segs)
        self._hash = hash(self._segs)

    @classmethod
    def of(cls, *pairs) -> "Multisegment":
        return cls(Segment.make(*p) for p in pairs)

    @classmethod
    def _from_sorted(cls, segs: tuple) -> "Multisegment":
        m = cls.__new__(cls)
        m._segs = segs
        m._hash = hash(segs)
        return m

    # container protocol -------------------------------------------------

    def __iter__(self) -> Iterator[Segment]:
        return iter(self._segs)

    def __len__(self) -> int:
        return len(self._segs)

    def __bool__(self) -> bool:
        return bool(self._segs)

    def __contains__(self, s: object) -> bool:
        return s in self._segs

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Multisegment):
            return self._segs == other._segs
        return NotImplemented

    def __hash__(self) -> int:
        return self._hash

    def __lt__(self, other: "Multisegment") -> bool:
        # canonical (lexicographic) order, used only for deterministic output
        return self._segs < other._segs

    def __repr__(self) -> str:
        return "{" + ", ".join(repr(s) for s in self._segs) + "}"

    @property
    def segments(self) -> tuple:
        return self._segs

    def count(self, s: Segment) -> int:
        return self._segs.count(s)

    def items(self) -> list:
        """Canonical form: sorted ``(a, b, multiplicity)`` triples."""
        return [(s.a, s.b, k) for s, k in sorted(Counter(self._segs).items())]

    # multiset arithmetic ------------------------------------------------

    def __add__(self, other) -> "Multisegment":
        if other is None:
            return self
        if isinstance(other, Segment):
            return Multisegment._from_sorted(tuple(sorted(self._segs + (other,))))
        extra = tuple(s for s in other if s is not None)
        return Multisegment._from_sorted(tuple(sorted(self._segs + extra)))

    def __sub__(self, other) -> "Multisegment":
        if other is None:
            return self
        if isinstance(other, Segment):
            other = (other,)
        segs = list(self._segs)
        for s in other:
            try:
                segs.remove(s)
            except ValueError:
                raise ValueError(f"{s!r} is not in {self!r}") from None
        return Multisegment._from_sorted(tuple(segs))

    def issubmultiset(self, other: "Multisegment") -> bool:
        mine, theirs = Counter(self._segs), Counter(other._segs)
        return all(theirs[s] >= k for s, k in mine.items())

    # derived multisegments ----------------------------------------------

    def at_point(self, c: int) -> "Multisegment":
        """The segments starting at ``c``."""
        return Multisegment._from_sorted(tuple(s for s in self._segs if s.a == c))

    def left_truncate(self) -> "Multisegment":
        """Drop singletons and left-truncate the rest."""
        return Multisegment._from_sorted(
            tuple(Segment(s.a + 1, s.b) for s in self._segs if s.a != s.b)
        )

    def min_point(self) -> Optional[int]:
        return self._segs[0].a if self._segs else None

    def support(self) -> "Support":
        return Support(p for s in self._segs for p in s.points())

    @property
    def total_length(self) -> int:
        return sum(s.b - s.a + 1 for s in self._segs)


EMPTY = Multisegment()

RemovalOutcome = Union[Multisegment, _Infinity]


class Support:
    """A multiset of integer points (the cuspidal support of a multisegment)."""

    __slots__ = ("_points",)

    def __init__(self, points: Iterable[int] = ()):
        self._points = tuple(sorted(points))

    @property
    def points(self) -> tuple:
        return self._points

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Support):
            return self._points == other._points
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._points)

    def __len__(self) -> int:
        return len(self._points)

    def __iter__(self):
        return iter(self._points)

    def __repr__(self) -> str:
        return f"Support{self._points}"

    def __add__(self, other: "Support") -> "Support":
        return Support(self._points + other._points)

    def __sub__(self, other: "Support") -> "Support":
        left = Counter(self._points)
        left.subtract(other._points)
        if any(v < 0 for v in left.values()):
            raise ValueError(f"{other!r} is not contained in {self!r}")
        return Support(left.elements())

    def issubset(self, other: "Support") -> bool:
        theirs = Counter(other._points)
        return all(theirs[p] >= k for p, k in Counter(self._points).items())


class Cmp(enum.Enum):
    LT = "LT"
    EQ = "EQ"
    GT = "GT"
    INCOMPARABLE = "INCOMPARABLE"


def _at_c_leq(ends1: list, ends2: list) -> bool:
    if len(ends1) > len(ends2):
        return False
    return all(x <= y for x, y in zip(ends1, ends2))


def lex_compare_at(m1: RemovalOutcome, m2: RemovalOutcome, c: int) -> Cmp:
    """Compare two multisegments concentrated at the point ``c``.

    Segments are listed by decreasing end point; ``m1 <= m2`` when ``m1`` has
    no more segments and is dominated position by position.  ``∞`` sits
    above every multisegment.
    """
    if m1 is INFINITY or m2 is INFINITY:
        if m1 is m2:
            return Cmp.EQ
        return Cmp.LT if m2 is INFINITY else Cmp.GT
    for s in (*m1, *m2):
        if s.a != c:
            raise ValueError(f"segment {s!r} does not start at {c}")
    if m1 == m2:
        return Cmp.EQ
    e1 = sorted((s.b for s in m1), reverse=True)
    e2 = sorted((s.b for s in m2), reverse=True)
    if _at_c_leq(e1, e2):
        return Cmp.LT
    if _at_c_leq(e2, e1):
        return Cmp.GT
    return Cmp.INCOMPARABLE


def ascending_order(m: Multisegment) -> tuple:
    """An ascending ordering: sorted by ``(a, b)``.

    Two segments with the same start are never linked, so sorting by start
    point already satisfies the ascending condition.
    """
    return m.segments


def is_ascending(seq) -> bool:
    return all(
        not linked(s, t) or s.a < t.a
        for i, s in enumerate(seq)
        for t in seq[i + 1:]
    )


def multisegments_with_support(points: Iterable[int]) -> list:
    """Every multisegment whose support is exactly the multiset ``points``."""
    remaining = Counter(points)
    out: list = []
    chosen: list = []

    def rec(min_end: Optional[int]) -> None:
        live = [p for p, k in remaining.items() if k > 0]
        if not live:
            out.append(Multisegment(chosen))
            return
        p = min(live)
        # segments from the same start are chosen with non-decreasing ends
        if min_end is None or chosen[-1].a != p:
            min_end = p
        q = p
        while remaining[q] > 0:
            if q >= min_end:
                for x in range(p, q + 1):
                    remaining[x] -= 1
                chosen.append(Segment(p, q))
                rec(q)
                chosen.pop()
                for x in range(p, q + 1):
                    remaining[x] += 1
            q += 1

    rec(None)
    return out


def sub_multisegments(support: Support) -> list:
    """Every multisegment whose support is a sub-multiset of ``support``."""
    counts = sorted(Counter(support.points).items())
    out: list = []

    def rec(i: int, picked: list) -> None:
        if i == len(counts):
            out.extend(multisegments_with_support(picked))
            return
        p, k = counts[i]
        for j in range(k + 1):
            rec(i + 1, picked + [p] * j)

    rec(0, [])
    return out


def ascending_orderings(m: Multisegment):
    """Every distinct ordering of ``m`` satisfying the ascending condition."""
    remaining = Counter(m.segments)
    seq: list = []
    total = len(m)

    def rec():
        if len(seq) == total:
            yield tuple(seq)
            return
        live = sorted(s for s, k in remaining.items() if k > 0)
        for s in live:
            # a linked segment with a smaller start must come first
            if any(linked(t, s) and t.a < s.a for t in live if t != s):
                continue
            remaining[s] -= 1
            seq.append(s)
            yield from rec()
            seq.pop()
            remaining[s] += 1

    yield from rec()


def window_segments(lo: int, hi: int) -> list:
    return [Segment(a, b) for a in range(lo, hi + 1) for b in range(a, hi + 1)]


def enumerate_multisegments(window: tuple, max_points: int):
    """Every multisegment with support in ``[A, B]`` and at most ``max_points``
    points, each once, in canonical (lexicographic) order."""
    lo, hi = window
    if lo > hi or max_points < 0:
        raise ValueError(f"bad window {window!r} / max_points {max_points}")
    segs = window_segments(lo, hi)
    cur: list = []

    def rec(i: int, left: int):
        yield Multisegment._from_sorted(tuple(cur))
        for j in range(i, len(segs)):
            s = segs[j]
            if s.b - s.a + 1 <= left:
                cur.append(s)
                yield from rec(j, left - (s.b - s.a + 1))
                cur.pop()

    yield from rec(0, max_points)


def mult_left_truncate(m: Multisegment) -> Multisegment:
    """``⁻m``: every non-singleton segment left-truncated, singletons dropped."""
    return m.left_truncate()


def at_point(m: Multisegment, c: int) -> Multisegment:
    return m.at_point(c)
