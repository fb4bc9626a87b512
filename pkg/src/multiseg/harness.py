"""Brute-force verification of the calculus' general statements.

Every property is checked unit by unit, one unit per base multisegment
``h`` of the window.  A property supplies

* ``cases(unit)``: the inputs to examine for that ``h`` (or ``scan`` for a
  faster grouped sweep yielding ``(inputs, ok)`` pairs), and
* ``check(**inputs)``: a self-contained evaluation returning ``None`` or the
  two disagreeing sides.  Counterexamples are always produced by
  ``check``, so replaying one through :func:`replay` reproduces it.

Reports are plain JSON; the certificate id is a hash of everything except
the elapsed time, so identical sweeps give identical ids.
"""
from __future__ import annotations

import hashlib
import itertools
import json
import os
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Iterable, Iterator, Optional

from .core import (
    EMPTY,
    INFINITY,
    Cmp,
    Multisegment,
    Segment,
    ascending_orderings,
    enumerate_multisegments,
    is_ascending,
    left_truncate,
    lex_compare_at,
    linked,
    precedes,
    seg_intersection,
    seg_union,
    sub_multisegments,
    window_segments,
)
from .finechain import chains_coincide, compare_chains, fine_chain, fs, trd, trr
from .minimal import (
    chain_minimizable,
    enumerate_fiber,
    find_minimal,
    is_locally_minimizable,
    one_segment_witness,
)
from .notation import multisegment_from_json, segment_from_json, to_json
from .removal import (
    admissible_seg,
    is_admissible,
    r_mult,
    r_seg,
    r_sequence,
    removal_sequence,
    upsilon,
)
from .twoseg import evaluate_triple, non_overlapping
from .zpos import downset, is_generic, iu_successors, leq_Z, support_class

DEFAULT_BUDGET = 10**6
DEFAULT_SAMPLES = 1000


class UnknownProperty(KeyError):
    pass


# ---------------------------------------------------------------------------
# per-h context


class Unit:
    """One base multisegment ``h`` plus lazily computed shared data."""

    def __init__(self, h: Multisegment, window: tuple):
        self.h = h
        self.window = window
        self._out: dict = {}
        self._chain: dict = {}

    @cached_property
    def subs(self) -> list:
        return sub_multisegments(self.h.support())

    def outcome(self, n: Multisegment):
        out = self._out.get(n)
        if out is None:
            out = self._out[n] = r_mult(n, self.h)
        return out

    def chain(self, n: Multisegment):
        c = self._chain.get(n)
        if c is None:
            c = self._chain[n] = fine_chain(n, self.h)
        return c

    @cached_property
    def admissible(self) -> list:
        return [n for n in self.subs if self.outcome(n) is not INFINITY]

    @cached_property
    def segments(self) -> list:
        return window_segments(*self.window)

    @cached_property
    def admissible_segments(self) -> list:
        return [s for s in self.segments if admissible_seg(s, self.h)]

    @cached_property
    def partner_segments(self) -> list:
        # Δ' may stick out one step past the window
        lo, hi = self.window
        return window_segments(lo, hi + 1)

    @cached_property
    def fibers(self) -> dict:
        """``outcome -> FiberReport`` for every admissible outcome."""
        outs = sorted({self.outcome(n) for n in self.admissible})
        return {p: enumerate_fiber(self.h, p) for p in outs}

    @cached_property
    def levels(self) -> list:
        """Distinct non-empty single-start levels ``n[c]`` of sub-multisegments."""
        seen = set()
        for n in self.subs:
            for c in {s.a for s in n}:
                seen.add(n.at_point(c))
        return sorted(seen)


# ---------------------------------------------------------------------------
# registry


@dataclass
class Property:
    id: str
    summary: str
    fields: dict  # input name -> "mult" | "seg"
    check: Callable[..., Optional[tuple]]
    cases: Optional[Callable[[Unit], Iterable[dict]]] = None
    scan: Optional[Callable[[Unit], Iterator[tuple]]] = None
    only_if: Callable[[Multisegment], bool] = field(default=lambda h: True)

    def run_unit(self, unit: Unit) -> tuple:
        """``(instances, first failing inputs or None)`` for one unit."""
        count = 0
        if self.scan is not None:
            pairs = self.scan(unit)
        else:
            pairs = ((inp, self.check(**inp) is None) for inp in self.cases(unit))
        for inputs, ok in pairs:
            count += 1
            if not ok:
                return count, inputs
        return count, None


REGISTRY: dict = {}


def register(pid: str, summary: str, fields: dict, **kw):
    def deco(check):
        REGISTRY[pid] = Property(pid, summary, fields, check, **kw)
        return check

    return deco


def get_property(pid: str) -> Property:
    try:
        return REGISTRY[pid]
    except KeyError:
        raise UnknownProperty(f"unknown property {pid!r}; known: {', '.join(REGISTRY)}") from None


H = {"h": "mult"}
HN = {"h": "mult", "n": "mult"}
HD = {"h": "mult", "delta": "seg"}
HDD = {"h": "mult", "delta": "seg", "delta2": "seg"}


def _mismatch(lhs, rhs) -> Optional[tuple]:
    return None if lhs == rhs else (lhs, rhs)


def _below(m: Multisegment, a: int) -> Multisegment:
    return Multisegment._from_sorted(tuple(s for s in m if s.a < a))


# --- removal process --------------------------------------------------------


def _each_admissible_delta(u: Unit):
    for d in u.admissible_segments:
        yield {"h": u.h, "delta": d}


@register("L1", "r(Δ,h) = r(⁻Δ, h*) after truncating Υ(Δ,h)", HD, cases=_each_admissible_delta)
def _l1(h, delta):
    first = upsilon(delta, h)
    star = (h - first) + left_truncate(first)
    rest = left_truncate(delta)
    return _mismatch(r_seg(delta, h), star if rest is None else r_seg(rest, star))


@register("L2", "segments starting below a(Δ) are untouched", HD, cases=_each_admissible_delta)
def _l2(h, delta):
    return _mismatch(_below(r_seg(delta, h), delta.a), _below(h, delta.a))


@register(
    "L3", "r(Δ,h) = h − Δ when Δ ∈ h", HD,
    cases=lambda u: ({"h": u.h, "delta": d} for d in sorted(set(u.h))),
)
def _l3(h, delta):
    if delta not in h:
        return None
    return _mismatch(r_seg(delta, h), h - delta)


def _l4_cases(u: Unit):
    segs = u.admissible_segments
    for d, d2 in itertools.combinations(segs, 2):
        if d.a == d2.a and admissible_seg(d2, r_seg(d, u.h)) and admissible_seg(d, r_seg(d2, u.h)):
            yield {"h": u.h, "delta": d, "delta2": d2}


@register("L4", "Υ exchange for two segments with one start", HDD, cases=_l4_cases)
def _l4(h, delta, delta2):
    lhs = Multisegment([upsilon(delta, h), upsilon(delta2, r_seg(delta, h))])
    rhs = Multisegment([upsilon(delta2, h), upsilon(delta, r_seg(delta2, h))])
    return _mismatch(lhs, rhs)


def _l5_cases(u: Unit):
    for d, d2 in itertools.combinations_with_replacement(u.segments, 2):
        if not linked(d, d2):
            yield {"h": u.h, "delta": d, "delta2": d2}


@register("L5", "unlinked removals commute (∞ absorbing)", HDD, cases=_l5_cases)
def _l5(h, delta, delta2):
    if linked(delta, delta2):
        return None
    return _mismatch(r_seg(delta2, r_seg(delta, h)), r_seg(delta, r_seg(delta2, h)))


@register(
    "nesting", "removal sequences are nested with strictly increasing starts", HD,
    cases=lambda u: ({"h": u.h, "delta": d} for d in u.segments),
)
def _nesting(h, delta):
    if not admissible_seg(delta, h):
        return None
    segs = removal_sequence(delta, h).segments
    ok = segs[0].a == delta.a and segs[-1].b >= delta.b
    ok = ok and all(p.a < s.a and s.b < p.b for p, s in zip(segs, segs[1:]))
    return None if ok else (list(segs), "nested chain from a(Δ) ending at or after b(Δ)")


def _each_sub(u: Unit):
    for n in u.subs:
        yield {"h": u.h, "n": n}


@register("ascending-independence", "every ascending ordering gives the same outcome", HN, cases=_each_sub)
def _ascending(h, n):
    base = r_mult(n, h)
    for order in ascending_orderings(n):
        if not is_ascending(order):
            return (list(order), "ascending ordering")
        out = r_sequence(order, h)
        if out != base:
            return (base, out)
    return None


@register("ascending-order", "the canonical ordering is ascending", H, cases=lambda u: [{"h": u.h}])
def _ascending_order(h):
    return None if is_ascending(h.segments) else (list(h.segments), "ascending ordering")


@register("forced-support", "support(r(n,h)) = support(h) − support(n)", HN, cases=_each_sub)
def _forced_support(h, n):
    out = r_mult(n, h)
    if out is INFINITY:
        return None
    return _mismatch(out.support(), h.support() - n.support())


# --- first segments and fine chains ----------------------------------------


@register(
    "fs-well-definedness", "fs does not depend on the order of the lowest level", HN,
    cases=lambda u: ({"h": u.h, "n": lv} for lv in u.levels),
)
def _fs_orders(h, n):
    if not n:
        return None
    low = n.at_point(n.min_point())
    base = fs(n, h)
    for order in sorted(set(itertools.permutations(low.segments))):
        other = fs(n, h, order=order)
        if other != base:
            return (base, other)
    return None


@register(
    "locality", "fs(n,h) = fs(n[a],h) = fs(n[a],h[a])", HN,
    cases=lambda u: ({"h": u.h, "n": n} for n in u.subs if n),
)
def _locality(h, n):
    if not n:
        return None
    a = n.min_point()
    low = n.at_point(a)
    lhs = fs(n, h)
    for rhs in (fs(low, h), fs(low, h.at_point(a))):
        if rhs != lhs:
            return (lhs, rhs)
    return None


def _mt_cases(u: Unit):
    for n in u.subs:
        if not n or is_admissible(n.at_point(n.min_point()), u.h):
            yield {"h": u.h, "n": n}


@register(
    "multiple-truncation", "r(n,h) = r(trd(n), trr(n,h)) when n[a] is admissible", HN,
    cases=_mt_cases,
)
def _multiple_truncation(h, n):
    if n and not is_admissible(n.at_point(n.min_point()), h):
        return None
    return _mismatch(r_mult(n, h), r_mult(trd(n, h), trr(n, h)))


def _coincidence_scan(u: Unit):
    by_out: dict = {}
    by_chain: dict = {}
    adm = u.admissible
    for n in adm:
        by_out.setdefault(u.outcome(n), []).append(n)
        by_chain.setdefault(u.chain(n).terms, []).append(n)
    bad = None
    for groups in (by_out, by_chain):
        for members in groups.values():
            first = members[0]
            for n in members[1:]:
                if u.chain(n).terms != u.chain(first).terms or u.outcome(n) != u.outcome(first):
                    bad = bad or (first, n)
    k = len(adm)
    for _ in range(k * (k - 1) // 2 - (1 if bad else 0)):
        yield None, True
    if bad:
        yield {"h": u.h, "n": bad[0], "n2": bad[1]}, False


@register(
    "coincidence", "equal outcomes ⇔ equal fine chains", {"h": "mult", "n": "mult", "n2": "mult"},
    scan=_coincidence_scan,
)
def _coincidence(h, n, n2):
    out1, out2 = r_mult(n, h), r_mult(n2, h)
    lhs = out1 == out2 and out1 is not INFINITY
    return _mismatch(lhs, chains_coincide(n, n2, h))


def _classes(u: Unit) -> dict:
    """support points -> (SupportClass, admissible mask)."""
    out: dict = {}
    for n in u.admissible:
        sc = support_class(n.support())
        key = sc.support.points
        if key not in out:
            out[key] = [sc, 0]
        out[key][1] |= 1 << sc.index[n]
    return out


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _order_reversal_scan(u: Unit):
    for sc, mask in _classes(u).values():
        for hi in _bits(mask):
            upper = sc.elements[hi]
            for lo in _bits(sc.down[hi] & mask):
                lower = sc.elements[lo]
                c = compare_chains(u.chain(upper), u.chain(lower))
                yield {"h": u.h, "lower": lower, "upper": upper}, c in (Cmp.LT, Cmp.EQ)


@register(
    "order-reversal", "lower ≤_Z upper ⇒ fine chain of upper ≤ that of lower",
    {"h": "mult", "lower": "mult", "upper": "mult"}, scan=_order_reversal_scan,
)
def _order_reversal(h, lower, upper):
    if r_mult(lower, h) is INFINITY or r_mult(upper, h) is INFINITY:
        return None
    if not leq_Z(lower, upper):
        return None
    c = compare_chains(fine_chain(upper, h), fine_chain(lower, h))
    return None if c in (Cmp.LT, Cmp.EQ) else (c, "LT or EQ")


def _fs_or_inf(m: Multisegment, h: Multisegment):
    return fs(m, h) if is_admissible(m, h) else INFINITY


def _replacements(m1: Multisegment, hi: int):
    for s in sorted(set(m1)):
        for b2 in range(s.b + 1, hi + 1):
            yield (m1 - s) + Segment(s.a, b2)


def _sr_cases(u: Unit):
    for m1 in u.levels:
        for m2 in _replacements(m1, u.window[1]):
            yield {"h": u.h, "m1": m1, "m2": m2}


@register(
    "single-replacement", "lengthening one segment can only raise fs (∞ on top)",
    {"h": "mult", "m1": "mult", "m2": "mult"}, cases=_sr_cases,
)
def _single_replacement(h, m1, m2):
    if not m1 or len({s.a for s in m1}) != 1:
        return None
    if m2 not in set(_replacements(m1, max(s.b for s in m2))):
        return None
    c = m1.min_point()
    cmp = lex_compare_at(_fs_or_inf(m1, h), _fs_or_inf(m2, h), c)
    return None if cmp in (Cmp.LT, Cmp.EQ) else (cmp, "LT or EQ")


@register(
    "quotient-poset", "induced orders on fiber classes are antisymmetric and reversed", HN,
    cases=lambda u: (
        {"h": u.h, "n": sc.elements[next(_bits(mask))]} for sc, mask in _classes(u).values()
    ),
)
def _quotient(h, n):
    sc = support_class(n.support())
    groups: dict = {}
    for i, m in enumerate(sc.elements):
        out = r_mult(m, h)
        if out is not INFINITY:
            groups[out] = groups.get(out, 0) | 1 << i
    keys = sorted(groups)
    chains = {
        k: {fine_chain(sc.elements[i], h) for i in _bits(groups[k])} for k in keys
    }

    def z_le(p, q):
        return any(sc.down[j] & groups[p] for j in _bits(groups[q]))

    def fc_le(p, q):
        return any(
            compare_chains(c1, c2) in (Cmp.LT, Cmp.EQ)
            for c1 in chains[p] for c2 in chains[q]
        )

    for p, q in itertools.product(keys, repeat=2):
        if p == q:
            continue
        if z_le(p, q) and z_le(q, p):
            return ((p, q), "⪯_Z antisymmetric")
        if fc_le(p, q) and fc_le(q, p):
            return ((p, q), "⪯^fc antisymmetric")
        if z_le(p, q) and not fc_le(q, p):
            return ((p, q), "⪯_Z reversed by ⪯^fc")
    return None


# --- fibers and minimality ---------------------------------------------------


def _convexity_scan(u: Unit):
    for sc, adm in _classes(u).values():
        fib: dict = {}
        for i in _bits(adm):
            out = u.outcome(sc.elements[i])
            fib[out] = fib.get(out, 0) | 1 << i
        up = [0] * len(sc)
        for j, d in enumerate(sc.down):
            for i in _bits(d):
                up[i] |= 1 << j
        for mask in fib.values():
            for hi in _bits(mask):
                for lo in _bits(sc.down[hi] & mask):
                    between = sc.down[hi] & up[lo]
                    stray = between & ~mask
                    inputs = {"h": u.h, "lower": sc.elements[lo], "upper": sc.elements[hi]}
                    if stray:
                        inputs["middle"] = sc.elements[next(_bits(stray))]
                        yield inputs, False
                        return
                    inputs["middle"] = sc.elements[hi]
                    yield inputs, True


@register(
    "convexity", "fibers are convex for ≤_Z",
    {"h": "mult", "lower": "mult", "middle": "mult", "upper": "mult"},
    scan=_convexity_scan,
)
def _convexity(h, lower, middle, upper):
    out = r_mult(upper, h)
    if out is INFINITY or r_mult(lower, h) != out:
        return None
    if not (leq_Z(lower, middle) and leq_Z(middle, upper)):
        return None
    return _mismatch(r_mult(middle, h), out)


def _each_outcome(u: Unit):
    for p in u.fibers:
        yield {"h": u.h, "p": p}


@register("unique-minimum", "every non-empty fiber has exactly one minimal element",
          {"h": "mult", "p": "mult"}, cases=_each_outcome)
def _unique_minimum(h, p):
    rep = enumerate_fiber(h, p)
    if not rep.members:
        return None
    mins = list(rep.minimal_elements)
    return None if len(mins) == 1 else (mins, "one minimal element")


def _greedy_scan(u: Unit):
    for p, rep in u.fibers.items():
        for n in rep.members:
            yield {"h": u.h, "n": n}, find_minimal(n, u.h) == rep.minimum


@register("greedy-correctness", "greedy descent reaches the fiber minimum", HN, scan=_greedy_scan)
def _greedy(h, n):
    p = r_mult(n, h)
    if p is INFINITY:
        return None
    return _mismatch(find_minimal(n, h), enumerate_fiber(h, p).minimum)


def _minimizable_scan(u: Unit):
    for p, rep in u.fibers.items():
        for n in rep.members:
            ok = (chain_minimizable(n, u.h) is None) == (n in rep.minimal_elements)
            yield {"h": u.h, "n": n}, ok


@register(
    "minimizability-iff-nonminimality", "no minimizable chain state ⇔ n is the fiber minimum",
    HN, scan=_minimizable_scan,
)
def _minimizable(h, n):
    p = r_mult(n, h)
    if p is INFINITY:
        return None
    lhs = chain_minimizable(n, h) is None
    return _mismatch(lhs, n in enumerate_fiber(h, p).minimal_elements)


@register(
    "one-segment-witness", "a one-segment witness forces local minimizability", HN,
    cases=lambda u: ({"h": u.h, "n": n} for n in u.admissible if n),
)
def _witness(h, n):
    if not n or r_mult(n, h) is INFINITY:
        return None
    if one_segment_witness(n, h) is None:
        return None
    return _mismatch(is_locally_minimizable(n, h), True)


@register(
    "highest-derivative-shadow", "r(h,h) = ∅ and h is the minimum of its fiber", H,
    cases=lambda u: [{"h": u.h}],
)
def _hd_shadow(h):
    lhs = (r_mult(h, h), find_minimal(h, h), enumerate_fiber(h, EMPTY).minimum)
    return _mismatch(lhs, (EMPTY, h, h))


@register(
    "generic-shadow", "for generic h every fiber minimum is generic", {"h": "mult", "p": "mult"},
    cases=lambda u: _each_outcome(u) if is_generic(u.h) else (),
)
def _generic_shadow(h, p):
    if not is_generic(h):
        return None
    rep = enumerate_fiber(h, p)
    if rep.minimum is None:
        return None
    return None if is_generic(rep.minimum) else (rep.minimum, "generic")


@register(
    "singleton-maximum", "the all-singleton multisegment is the top of the fiber over ∅", H,
    cases=lambda u: [{"h": u.h}],
)
def _singleton_max(h):
    singles = Multisegment(Segment(p, p) for p in h.support())
    return _mismatch(list(enumerate_fiber(h, EMPTY).maximal_elements), [singles])


# --- two-segment criteria ----------------------------------------------------


def _pairs(u: Unit):
    for d in u.admissible_segments:
        for d2 in u.partner_segments:
            if precedes(d, d2):
                yield d, d2


@register(
    "three-way-equivalence", "non-overlapping ⇔ η preserved ⇔ intermediate segment", HDD,
    cases=lambda u: ({"h": u.h, "delta": d, "delta2": d2} for d, d2 in _pairs(u)),
)
def _three_way(h, delta, delta2):
    rep = evaluate_triple(delta, delta2, h)
    if rep.agree:
        return None
    return (
        {"non_overlapping": rep.non_overlapping, "eta_preserved": rep.eta_preserved},
        {"intermediate_segment": rep.intermediate_segment},
    )


def _iu_cases(u: Unit):
    for d, d2 in _pairs(u):
        if admissible_seg(d2, r_seg(d, u.h)):
            yield {"h": u.h, "delta": d, "delta2": d2}


@register(
    "IU-criterion", "overlap ⇔ replacing Δ,Δ' by ∩,∪ keeps the outcome", HDD, cases=_iu_cases,
)
def _iu(h, delta, delta2):
    if not admissible_seg(delta2, r_seg(delta, h)):
        return None
    lhs = not non_overlapping(delta, delta2, h)
    pair = Multisegment([delta, delta2])
    moved = Multisegment([seg_intersection(delta, delta2), seg_union(delta, delta2)])
    return _mismatch(lhs, r_mult(moved, h) == r_mult(pair, h))


def _transitivity_cases(u: Unit):
    for d, d2 in _pairs(u):
        for a3 in range(d2.a + 1, d2.b + 1):
            d3 = Segment(a3, d2.b)
            if precedes(d, d3):
                yield {"h": u.h, "delta": d, "delta2": d2, "delta3": d3}


@register(
    "transitivity-corollary", "non-overlapping persists when Δ' is shortened on the left",
    {"h": "mult", "delta": "seg", "delta2": "seg", "delta3": "seg"}, cases=_transitivity_cases,
)
def _transitivity(h, delta, delta2, delta3):
    if delta3.b != delta2.b or delta3.a < delta2.a or not precedes(delta, delta3):
        return None
    if not non_overlapping(delta, delta2, h):
        return None
    return _mismatch(non_overlapping(delta, delta3, h), True)


def _bridge_cases(u: Unit):
    for d, d2 in _pairs(u):
        if d2.a == d.a + 1 and is_admissible(Multisegment([d, d2]), u.h):
            yield {"h": u.h, "delta": d, "delta2": d2}


@register(
    "bridge", "for a(Δ') = a(Δ)+1: non-overlapping ⇔ {Δ,Δ'} not locally minimizable", HDD,
    cases=_bridge_cases,
)
def _bridge(h, delta, delta2):
    pair = Multisegment([delta, delta2])
    if delta2.a != delta.a + 1 or not is_admissible(pair, h):
        return None
    return _mismatch(non_overlapping(delta, delta2, h), not is_locally_minimizable(pair, h))


# --- Zelevinsky order --------------------------------------------------------


@register(
    "support-preservation", "intersection-union moves keep the support", H,
    cases=lambda u: [{"h": u.h}],
)
def _support_preservation(h):
    for m in iu_successors(h):
        if m.support() != h.support():
            return (m, h)
    return None


@register(
    "strict-descent", "a move goes strictly down (so ≤_Z is antisymmetric)", H,
    cases=lambda u: [{"h": u.h}],
)
def _strict_descent(h):
    for m in iu_successors(h):
        if m == h or not leq_Z(m, h) or leq_Z(h, m):
            return (m, h)
    return None


@register(
    "generic-minimal", "generic multisegments admit no move", H, cases=lambda u: [{"h": u.h}],
)
def _generic_minimal(h):
    if not is_generic(h):
        return None
    return _mismatch(iu_successors(h), [])


@register(
    "poset-cache", "cached down-sets agree with breadth-first search", H,
    cases=lambda u: [{"h": u.h}],
)
def _poset_cache(h):
    sc = support_class(h.support())
    cached = set(sc.members_of(sc.down[sc.index[h]]))
    return _mismatch(sorted(cached), sorted(downset(h)))


# ---------------------------------------------------------------------------
# driver


def decode_inputs(prop: Property, data: dict) -> dict:
    out = {}
    for name, kind in prop.fields.items():
        raw = data[name]
        out[name] = segment_from_json(raw) if kind == "seg" else multisegment_from_json(raw)
    return out


def replay(property_id: str, inputs: dict) -> Optional[tuple]:
    """Re-evaluate a recorded counterexample; returns the two sides or ``None``."""
    prop = get_property(property_id)
    return prop.check(**decode_inputs(prop, inputs))


def _random_multisegment(rng: random.Random, window: tuple, max_points: int) -> Multisegment:
    segs = window_segments(*window)
    left = rng.randint(0, max_points)
    chosen = []
    while left:
        fits = [s for s in segs if s.length <= left]
        s = rng.choice(fits)
        chosen.append(s)
        left -= s.length
    return Multisegment(chosen)


def count_multisegments(window: tuple, max_points: int) -> int:
    """Count by a polynomial product, independent of the enumerator."""
    lo, hi = window
    coeffs = [1] + [0] * max_points
    for length in range(1, hi - lo + 2):
        for _ in range(hi - lo + 2 - length):
            # multiply by 1/(1 - x^length)
            for k in range(length, max_points + 1):
                coeffs[k] += coeffs[k - length]
    return sum(coeffs)


def _budget() -> int:
    env = os.environ.get("MULTISEG_BUDGET")
    return int(env) if env else DEFAULT_BUDGET


def _run_chunk(args) -> list:
    pid, window, hs = args
    prop = get_property(pid)
    out = []
    for h in hs:
        if not prop.only_if(h):
            out.append((0, None))
            continue
        count, bad = prop.run_unit(Unit(h, window))
        out.append((count, bad))
        if bad is not None:
            break
    return out


def _digest(body: dict) -> str:
    text = json.dumps(body, sort_keys=True, ensure_ascii=False, separators=(",", ":"))
    return hashlib.sha256(text.encode("utf-8")).hexdigest()


def verify(
    property_id: str,
    window: tuple,
    max_points: int,
    seed: Optional[int] = None,
    budget: Optional[int] = None,
    samples: int = DEFAULT_SAMPLES,
    workers: int = 1,
) -> dict:
    """Check a property on every multisegment of the window (or a seeded sample).

    Returns a JSON-ready report with ``status`` ``"certificate"`` or
    ``"counterexample"``.
    """
    prop = get_property(property_id)
    lo, hi = window
    if lo > hi or max_points < 0:
        raise ValueError(f"bad window {window!r} / max_points {max_points}")
    budget = _budget() if budget is None else budget
    total = count_multisegments(window, max_points)
    started = time.perf_counter()
    if total <= budget:
        mode = "exhaustive"
        hs = list(enumerate_multisegments(window, max_points))
    else:
        mode = "sampled"
        rng = random.Random(0 if seed is None else seed)
        hs = [_random_multisegment(rng, window, max_points) for _ in range(samples)]

    chunk = max(1, len(hs) // (4 * max(workers, 1)) or 1)
    jobs = [(property_id, window, hs[i:i + chunk]) for i in range(0, len(hs), chunk)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_run_chunk, jobs))
    else:
        results = []
        for job in jobs:
            res = _run_chunk(job)
            results.append(res)
            if res and res[-1][1] is not None:
                break

    instances = units = 0
    failure = None
    for res in results:
        for count, bad in res:
            units += 1
            instances += count
            if bad is not None:
                failure = bad
                break
        if failure is not None:
            break

    body = {
        "property": property_id,
        "summary": prop.summary,
        "space": {
            "window": [lo, hi],
            "max_points": max_points,
            "mode": mode,
            "seed": seed,
            "population": total,
        },
        "units": units,
        "instances": instances,
    }
    if failure is None:
        body["status"] = "certificate"
    else:
        sides = prop.check(**failure)
        if sides is None:
            raise RuntimeError(f"{property_id}: scan flagged {failure!r} but check passed")
        body["status"] = "counterexample"
        body["counterexample"] = {
            "inputs": to_json(failure),
            "lhs": to_json(sides[0]),
            "rhs": to_json(sides[1]),
        }
    return {
        "id": _digest(body),
        **body,
        "elapsed": round(time.perf_counter() - started, 3),
    }


def verify_all(window: tuple, max_points: int, **kw) -> list:
    return [verify(pid, window, max_points, **kw) for pid in REGISTRY]
