"""Command-line front end: ``multiseg <subcommand> ...``.

Exit codes: 0 success or certificate, 1 domain error, 2 counterexample,
64 usage error.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from . import harness
from .core import INFINITY, Multisegment
from .finechain import chains_coincide, fc_compare, fine_chain
from .minimal import (
    chain_minimizable,
    descent_path,
    enumerate_fiber,
    is_locally_minimizable,
    one_segment_witness,
)
from .notation import (
    ParseError,
    format_multisegment,
    parse_multisegment,
    parse_outcome,
    parse_segment,
    render_diagram,
    to_json,
)
from .removal import (
    NotAdmissible,
    admissible_seg,
    r_mult,
    r_seg,
    removal_sequence,
    removed_points,
)
from .twoseg import construct_smaller, evaluate_triple
from .zpos import downset, is_generic, iu_successors, leq_Z

EXIT_OK, EXIT_DOMAIN, EXIT_COUNTEREXAMPLE, EXIT_USAGE = 0, 1, 2, 64


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(EXIT_USAGE)


def _fmt(x) -> str:
    if isinstance(x, Multisegment) or x is INFINITY:
        return format_multisegment(x)
    return repr(x)


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(to_json(payload), ensure_ascii=False, sort_keys=True))
    else:
        print(text)


def _window(text: str) -> tuple:
    try:
        lo, hi = (int(x) for x in text.split(":"))
    except ValueError:
        raise UsageError(f"window must look like A:B, got {text!r}") from None
    if lo > hi:
        raise UsageError(f"empty window {text!r}")
    return lo, hi


def _marks(specs) -> list:
    out = []
    for item in specs or ():
        try:
            seg, points, tag = item.rsplit(":", 2)
            pts = [int(p) for p in points.split(",") if p]
        except ValueError:
            raise UsageError(f"mark must look like SEG:P1,P2:TAG, got {item!r}") from None
        out.append((parse_segment(seg), pts, tag))
    return out


# --- subcommands ------------------------------------------------------------


def cmd_remove(args) -> int:
    h = parse_multisegment(args.h)
    if (args.delta is None) == (args.m is None):
        raise UsageError("give exactly one of --delta or --m")
    if args.delta is not None:
        delta = parse_segment(args.delta)
        out = r_seg(delta, h)
        payload = {"h": h, "delta": delta, "outcome": out}
        lines = [_fmt(out)]
        if args.trace and out is not INFINITY:
            seq = removal_sequence(delta, h)
            payload["sequence"] = list(seq.segments)
            payload["truncations"] = list(seq.truncations)
            marks = [(s, pts, "removed") for s, pts in removed_points(delta, h)]
            lines = [
                "sequence:    " + ", ".join(map(repr, seq.segments)),
                "truncations: " + ", ".join("∅" if t is None else repr(t) for t in seq.truncations),
                render_diagram(h, marks).rstrip("\n"),
                "outcome:     " + _fmt(out),
            ]
    else:
        m = parse_multisegment(args.m)
        out = r_mult(m, h)
        payload = {"h": h, "m": m, "outcome": out}
        lines = [_fmt(out)]
        if args.trace:
            steps, cur = [], h
            for s in m.segments:
                cur = r_seg(s, cur)
                steps.append({"segment": s, "outcome": cur})
                if cur is INFINITY:
                    break
            payload["steps"] = steps
            lines = [f"remove {st['segment']!r}: {_fmt(st['outcome'])}" for st in steps]
    _emit(args, payload, "\n".join(lines))
    return EXIT_DOMAIN if out is INFINITY else EXIT_OK


def _require(n: Multisegment, h: Multisegment) -> None:
    if r_mult(n, h) is INFINITY:
        raise NotAdmissible(f"{format_multisegment(n)} is not admissible to {format_multisegment(h)}")


def cmd_chain(args) -> int:
    n, h = parse_multisegment(args.n), parse_multisegment(args.h)
    _require(n, h)
    ch = fine_chain(n, h)
    payload = {"n": n, "h": h, "terms": list(ch.terms), "points": list(ch.points),
               "outcome": r_mult(n, h)}
    lines = [f"c={c}: {_fmt(t)}" for c, t in zip(ch.points, ch.terms)]
    if args.compare:
        n2 = parse_multisegment(args.compare)
        _require(n2, h)
        cmp = fc_compare(n, n2, h)
        same = chains_coincide(n, n2, h)
        payload.update(compare=n2, order=cmp, coincide=same)
        lines.append(f"compare: {cmp.value}; coincide: {str(same).lower()}")
    if args.render:
        for i, ((_, hi), t) in enumerate(zip(ch.states, ch.terms)):
            marks = [(s, [s.a], "first") for s in t]
            lines.append(f"-- step {i}")
            lines.append(render_diagram(hi, marks).rstrip("\n"))
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def cmd_zpos(args) -> int:
    m = parse_multisegment(args.m)
    succ = iu_successors(m)
    payload = {"m": m, "generic": is_generic(m), "successors": succ}
    lines = [f"generic: {str(is_generic(m)).lower()}"]
    lines += ["successor: " + _fmt(s) for s in succ]
    if args.down:
        down = sorted(downset(m))
        payload["downset"] = down
        lines += ["below: " + _fmt(x) for x in down]
    if args.leq:
        lower = parse_multisegment(args.leq)
        ok = leq_Z(lower, m)
        payload["leq"] = {"lower": lower, "holds": ok}
        lines.append(f"{_fmt(lower)} <=_Z {_fmt(m)}: {str(ok).lower()}")
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def cmd_minimal(args) -> int:
    n, h = parse_multisegment(args.n), parse_multisegment(args.h)
    _require(n, h)
    path = descent_path(n, h)
    payload = {"n": n, "h": h, "minimal": path[-1], "outcome": r_mult(n, h)}
    lines = [_fmt(path[-1])]
    if args.trace:
        payload["path"] = path
        lines = [_fmt(x) for x in path]
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def cmd_fiber(args) -> int:
    h, p = parse_multisegment(args.h), parse_outcome(args.p)
    if p is INFINITY:
        raise NotAdmissible("the target must be a multisegment, not ∞")
    rep = enumerate_fiber(h, p)
    payload = {
        "h": h, "p": p, "members": list(rep.members),
        "minimal": list(rep.minimal_elements), "maximal": list(rep.maximal_elements),
        "hasse": [list(e) for e in rep.hasse_edges],
    }
    lines = [f"members ({len(rep.members)}):"]
    lines += ["  " + _fmt(x) for x in rep.members]
    lines.append("minimal: " + ", ".join(map(_fmt, rep.minimal_elements)))
    lines.append("maximal: " + ", ".join(map(_fmt, rep.maximal_elements)))
    lines += [f"cover: {_fmt(lo)} < {_fmt(hi)}" for lo, hi in rep.hasse_edges]
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def cmd_minimizable(args) -> int:
    n, h = parse_multisegment(args.n), parse_multisegment(args.h)
    _require(n, h)
    if not n:
        raise NotAdmissible("local minimizability needs a non-empty n")
    local = is_locally_minimizable(n, h)
    witness = one_segment_witness(n, h)
    idx = chain_minimizable(n, h)
    payload = {"n": n, "h": h, "locally_minimizable": local,
               "witness": witness, "chain_index": idx}
    lines = [f"locally minimizable: {str(local).lower()}"]
    if witness:
        lines.append(f"witness: {witness[0]!r}, {witness[1]!r}")
    lines.append("chain: " + ("none" if idx is None else f"state {idx}"))
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def cmd_twoseg(args) -> int:
    d, d2 = parse_segment(args.delta), parse_segment(args.delta2)
    h = parse_multisegment(args.h)
    try:
        rep = evaluate_triple(d, d2, h)
    except NotAdmissible:
        raise
    except ValueError as e:
        raise NotAdmissible(str(e)) from None
    payload = {
        "delta": d, "delta2": d2, "h": h,
        "non_overlapping": rep.non_overlapping,
        "eta_preserved": rep.eta_preserved,
        "intermediate_segment": rep.intermediate_segment,
        "eta_before": list(rep.eta_before), "eta_after": list(rep.eta_after),
        "agree": rep.agree,
    }
    lines = [
        f"non-overlapping:      {str(rep.non_overlapping).lower()}",
        f"eta preserved:        {str(rep.eta_preserved).lower()} "
        f"{rep.eta_before} -> {rep.eta_after}",
        f"intermediate segment: {str(rep.intermediate_segment).lower()}",
    ]
    if admissible_seg(d2, r_seg(d, h)):
        smaller = construct_smaller(d, d2, h)
        payload["smaller"] = None if smaller is None else {"n": smaller[0], "outcome": smaller[1]}
        if smaller:
            lines.append(f"smaller: {_fmt(smaller[0])} -> {_fmt(smaller[1])}")
    lines.append("agree" if rep.agree else "COUNTEREXAMPLE: conditions disagree")
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK if rep.agree else EXIT_COUNTEREXAMPLE


def cmd_check(args) -> int:
    if args.list:
        for pid, prop in harness.REGISTRY.items():
            print(f"{pid}: {prop.summary}")
        return EXIT_OK
    if args.property is None:
        raise UsageError("missing property id (use --list to see them)")
    if args.window is None or args.points is None:
        raise UsageError("check needs --window A:B and --points N")
    ids = list(harness.REGISTRY) if args.property == "all" else [args.property]
    try:
        reports = [
            harness.verify(pid, _window(args.window), args.points, seed=args.seed,
                           samples=args.samples, workers=args.workers)
            for pid in ids
        ]
    except harness.UnknownProperty as e:
        raise UsageError(e.args[0]) from None
    out = reports[0] if len(reports) == 1 else reports
    print(json.dumps(out, ensure_ascii=False, sort_keys=True, indent=None if args.json else 2))
    bad = any(r["status"] != "certificate" for r in reports)
    return EXIT_COUNTEREXAMPLE if bad else EXIT_OK


def cmd_render(args) -> int:
    h = parse_multisegment(args.h)
    text = render_diagram(h, _marks(args.mark))
    if args.json:
        print(json.dumps({"h": to_json(h), "diagram": text}, ensure_ascii=False))
    else:
        sys.stdout.write(text)
    return EXIT_OK


# --- parser -----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="multiseg", description="Multisegment removal, fine chains and minimality.")
    sub = p.add_subparsers(dest="command", parser_class=_Parser, metavar="COMMAND")

    def add(name, func, help_):
        sp = sub.add_parser(name, help=help_, description=help_)
        sp.add_argument("--json", action="store_true", help="machine-readable output")
        sp.set_defaults(func=func)
        return sp

    sp = add("remove", cmd_remove, "run the removal process r(Δ, h) or r(m, h)")
    sp.add_argument("--delta", help="segment, e.g. [0,3]")
    sp.add_argument("--m", help="multisegment removed in ascending order")
    sp.add_argument("--h", required=True, help="multisegment, JSON or [0,5]+[3,8]")
    sp.add_argument("--trace", action="store_true", help="show the removal sequence")

    sp = add("chain", cmd_chain, "fine chain of (n, h), optionally compared with another n")
    sp.add_argument("--n", required=True)
    sp.add_argument("--h", required=True)
    sp.add_argument("--compare", metavar="N2", help="second multisegment to compare")
    sp.add_argument("--render", action="store_true", help="draw every step with first segments marked")

    sp = add("zpos", cmd_zpos, "intersection-union moves and the Zelevinsky order")
    sp.add_argument("--m", required=True)
    sp.add_argument("--down", action="store_true", help="list the whole down-set")
    sp.add_argument("--leq", metavar="LOWER", help="test LOWER <=_Z m")

    sp = add("minimal", cmd_minimal, "greedy descent to the minimum of the fiber of n")
    sp.add_argument("--n", required=True)
    sp.add_argument("--h", required=True)
    sp.add_argument("--trace", action="store_true", help="print the descent path")

    sp = add("fiber", cmd_fiber, "all m with r(m, h) = p, with the order restricted to them")
    sp.add_argument("--h", required=True)
    sp.add_argument("--p", required=True)

    sp = add("minimizable", cmd_minimizable, "local and fine-chain minimizability of (n, h)")
    sp.add_argument("--n", required=True)
    sp.add_argument("--h", required=True)

    sp = add("twoseg", cmd_twoseg, "compare the three two-segment minimality conditions")
    sp.add_argument("--delta", required=True)
    sp.add_argument("--delta2", required=True)
    sp.add_argument("--h", required=True)

    sp = add("check", cmd_check, "verify a registered property on a window (JSON report)")
    sp.add_argument("property", nargs="?", help="property id, or 'all'")
    sp.add_argument("--window", metavar="A:B")
    sp.add_argument("--points", type=int, metavar="N")
    sp.add_argument("--seed", type=int)
    sp.add_argument("--samples", type=int, default=harness.DEFAULT_SAMPLES,
                    help="units drawn when the window exceeds the budget")
    sp.add_argument("--workers", type=int, default=1)
    sp.add_argument("--list", action="store_true", help="list property ids")

    sp = add("render", cmd_render, "draw a multisegment as rows of exponents")
    sp.add_argument("--h", required=True)
    sp.add_argument("--mark", action="append", metavar="SEG:POINTS:TAG",
                    help="e.g. [1,4]:1:first (tags: removed, first, truncated)")
    return p


def main(argv: Optional[list] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command is None:
        parser.print_usage(sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except (UsageError, ParseError) as e:
        print(f"multiseg: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (NotAdmissible, ValueError) as e:
        print(f"multiseg: {e}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
