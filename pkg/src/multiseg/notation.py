"""Text formats: parsing, JSON encoding and the dot-and-line diagram."""
from __future__ import annotations

import enum
import json
import re
from collections import Counter
from typing import Any, Iterable, Optional

from .core import INFINITY, Multisegment, RemovalOutcome, Segment, Support


class ParseError(ValueError):
    pass


_SEG = re.compile(r"\[\s*(-?\d+)\s*(?:,\s*(-?\d+)\s*)?\](?:\^(\d+))?")
_SEP = re.compile(r"[\s,+]*")
_EMPTY_WORDS = {"", "∅", "{}", "[]", "empty"}
_INF_WORDS = {"∞", "inf", "infinity"}


def _segment(a: str, b: Optional[str]) -> Segment:
    lo, hi = int(a), int(a if b is None else b)
    if hi < lo:
        raise ParseError(f"segment [{lo},{hi}] has b < a")
    return Segment(lo, hi)


def parse_segment(text: str) -> Segment:
    """``"[a,b]"`` or ``"[a]"``."""
    m = _SEG.fullmatch(text.strip())
    if m is None or m.group(3) is not None:
        raise ParseError(f"not a segment: {text!r}")
    return _segment(m.group(1), m.group(2))


def _from_json(data: Any) -> Multisegment:
    if not isinstance(data, list):
        raise ParseError("expected a JSON list of [a, b] pairs")
    segs = []
    for item in data:
        if (
            not isinstance(item, list)
            or len(item) not in (1, 2)
            or not all(isinstance(x, int) and not isinstance(x, bool) for x in item)
        ):
            raise ParseError(f"bad pair {item!r}")
        segs.append(_segment(str(item[0]), str(item[-1])))
    return Multisegment(segs)


def parse_multisegment(text: str) -> Multisegment:
    """Accept JSON (``[[0,3],[1,2]]``), compact (``[0,3]+[1,2]+[1,2]``) or the
    printed form (``{[0,3], [1,2]^2}``)."""
    t = text.strip()
    if t in _EMPTY_WORDS:
        return Multisegment()
    if t.startswith("[["):
        try:
            return _from_json(json.loads(t))
        except json.JSONDecodeError as e:
            raise ParseError(f"malformed JSON: {e}") from None
    if t.startswith("{") and t.endswith("}"):
        t = t[1:-1]
    segs: list = []
    pos = 0
    while True:
        sep = _SEP.match(t, pos)
        pos = sep.end()
        if sep.group().strip() and (not segs or pos == len(t)):
            raise ParseError(f"stray separator in {text!r}")
        if pos == len(t):
            break
        if segs and not sep.group().strip():
            raise ParseError(f"missing separator at offset {pos} in {text!r}")
        m = _SEG.match(t, pos)
        if m is None:
            raise ParseError(f"unexpected text at offset {pos} in {text!r}")
        segs.extend([_segment(m.group(1), m.group(2))] * int(m.group(3) or 1))
        pos = m.end()
    if not segs:
        raise ParseError(f"no segments in {text!r}")
    return Multisegment(segs)


def parse_outcome(text: str) -> RemovalOutcome:
    if text.strip().lower() in _INF_WORDS:
        return INFINITY
    return parse_multisegment(text)


def format_multisegment(m: RemovalOutcome) -> str:
    """Compact printed form with multiplicities: ``{[0,3], [1,2]^2}``."""
    if m is INFINITY:
        return "∞"
    parts = []
    for s, k in sorted(Counter(m.segments).items()):
        parts.append(repr(s) if k == 1 else f"{s!r}^{k}")
    return "{" + ", ".join(parts) + "}"


def to_json(obj: Any) -> Any:
    """Library values to JSON-ready data; ``∞`` becomes ``"infinity"``."""
    if obj is INFINITY:
        return "infinity"
    if isinstance(obj, Segment):
        return [obj.a, obj.b]
    if isinstance(obj, Multisegment):
        return [[s.a, s.b] for s in obj]
    if isinstance(obj, Support):
        return list(obj.points)
    if isinstance(obj, enum.Enum):
        return obj.value
    if isinstance(obj, dict):
        return {str(k): to_json(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, set, frozenset)):
        items = [to_json(x) for x in obj]
        return sorted(items) if isinstance(obj, (set, frozenset)) else items
    return obj


def multisegment_from_json(data: Any) -> RemovalOutcome:
    if data == "infinity":
        return INFINITY
    return _from_json(data)


def segment_from_json(data: Any) -> Segment:
    if not isinstance(data, list) or len(data) != 2:
        raise ParseError(f"bad segment {data!r}")
    return _segment(str(data[0]), str(data[1]))


MARKERS = {"removed": "*", "first": "#", "truncated": "+"}


def render_diagram(h: Multisegment, marks: Iterable = ()) -> str:
    """One row per segment, points printed as exponents in aligned columns.

    ``marks`` holds ``(segment, points, tag)`` triples; each triple decorates
    one copy of ``segment``, bracketing the given points with the tag's
    marker (``tag`` is a name from :data:`MARKERS` or a single character).
    """
    segs = h.segments
    if not segs:
        return ""
    lo = min(s.a for s in segs)
    hi = max(s.b for s in segs)
    width = max(len(str(x)) for x in (lo, hi))
    rows = []
    tagged: list = [dict() for _ in segs]
    for seg, points, tag in marks:
        marker = MARKERS.get(tag, tag)
        if len(marker) != 1:
            raise ValueError(f"unknown marker tag {tag!r}")
        row = next(
            (i for i, s in enumerate(segs) if s == seg and not tagged[i]),
            None,
        )
        if row is None:
            row = next((i for i, s in enumerate(segs) if s == seg), None)
        if row is None:
            raise ValueError(f"{seg!r} is not a segment of {h!r}")
        for p in points:
            if not seg.has_point(p):
                raise ValueError(f"point {p} is outside {seg!r}")
            tagged[row][p] = marker
    for s, tags in zip(segs, tagged):
        cells = []
        for x in range(lo, hi + 1):
            if s.has_point(x):
                m = tags.get(x, " ")
                cell = f"{m}{x:>{width}}{m}"
            else:
                cell = " " * (width + 2)
            cells.append(cell)
        line = ""
        for x, cell in zip(range(lo, hi + 1), cells):
            if line:
                line += "-" if s.has_point(x) and s.has_point(x - 1) else " "
            line += cell
        rows.append(line.rstrip())
    return "\n".join(rows) + "\n"
