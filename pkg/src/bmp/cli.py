"""Command-line front end.

Exit codes: 0 success, 1 certificate or conjecture/theorem violation,
2 usage, parse or size error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .certify import Multipacking, load_certificate, verify_broadcast, verify_multipacking
from .construct import approx_multipacking
from .distance import all_pairs, radius_diameter
from .errors import BmpError
from .exact import default_cap, gb_exact, mp_exact
from .generators import parse_generator
from .graph import Graph, encode_graph6, format_edge_list, parse_edge_list, parse_graph6
from .harness import (
    compute_bounds,
    enumerate_connected,
    gnp_stream,
    graph6_stream,
    summarize,
    sweep,
)

EXIT_OK, EXIT_VIOLATION, EXIT_ERROR = 0, 1, 2


def _emit(obj) -> None:
    print(json.dumps(obj, sort_keys=False))


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text()


def load_graph(args) -> Graph:
    if args.gen:
        return parse_generator(args.gen)
    if not args.input:
        raise BmpError("give a graph with --gen KIND:PARAMS or --input FILE")
    text = _read_text(args.input)
    fmt = args.format
    if fmt is None:
        fmt = "graph6" if args.input.endswith((".g6", ".graph6")) else "edgelist"
    if fmt == "graph6":
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if len(lines) != 1:
            raise BmpError(f"expected exactly one graph6 line, got {len(lines)}")
        return parse_graph6(lines[0])
    return parse_edge_list(text)


def _add_graph_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--gen", metavar="KIND:PARAMS", help="generator, e.g. cycle:5, grid:5x5, fig3b, gnp:40,0.1,seed=7")
    p.add_argument("--input", metavar="FILE", help="graph file ('-' for stdin)")
    p.add_argument("--format", choices=["edgelist", "graph6"], help="input format (default: by extension)")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.add_argument("--cap", type=int, default=None, help="exact-solver vertex cap (default: BMP_CAP or 24)")


# -- verbs ---------------------------------------------------------------------------


def cmd_solve(args) -> int:
    g = load_graph(args)
    which = "both" if args.both or not (args.mp or args.gb) else ("mp" if args.mp else "gb")
    dm = all_pairs(g)
    results = []
    if which in ("mp", "both"):
        results.append(mp_exact(g, cap=args.cap, dm=dm))
    if which in ("gb", "both"):
        results.append(gb_exact(g, cap=args.cap, dm=dm))
    if args.json:
        _emit([r.to_json() for r in results] if len(results) > 1 else results[0].to_json())
    else:
        for r in results:
            w = r.to_json()["witness"]
            print(f"{r.parameter}={r.value}  witness={w}  nodes={r.nodes_explored}  {r.elapsed * 1000:.1f} ms")
    return EXIT_OK


def cmd_bounds(args) -> int:
    g = load_graph(args)
    report = compute_bounds(g, cap=args.cap)
    if args.json:
        _emit(report.to_json())
    else:
        def show(iv):
            return str(iv[0]) if iv[0] == iv[1] else f"[{iv[0]}, {iv[1]}]"

        print(f"n={report.n}  radius={report.radius}  diameter={report.diameter}")
        print(f"mp={show(report.mp)}  gb={show(report.gb)}  approx={report.approx_size}")
        for c in report.checks:
            tight = "  (tight)" if c.tight else ""
            print(f"  {c.status:7s}  {c.name}: {show(c.lhs)} vs {show(c.rhs)}{tight}")
    return EXIT_VIOLATION if report.failures else EXIT_OK


def cmd_approx(args) -> int:
    g = load_graph(args)
    dm = all_pairs(g)
    packing, trace = approx_multipacking(g, dm)
    verified = verify_multipacking(dm, packing) is None
    out = {"multipacking": list(packing.members), "size": len(packing), "verified": verified,
           "trace": trace.to_json()}
    cap = default_cap() if args.cap is None else args.cap
    if g.n <= cap:
        mp = mp_exact(g, cap=cap, dm=dm).value
        out["mp_exact"] = mp
        out["ratio"] = round(mp / len(packing), 6)
    else:
        out["mp_exact"] = None
    if args.json:
        _emit(out)
    else:
        print(f"multipacking {out['multipacking']}  size={len(packing)}  verified={verified}")
        print(f"mode={trace.mode}  k={trace.k}  k'={trace.k_prime}  alpha={trace.alpha}  beta={trace.beta}")
        print(f"P1={trace.p1}  P2={trace.p2}  extension={trace.extension}")
        print(f"guarantee: size >= {trace.target} = max(1, ceil(d/6 + r/3 - 3/2)) with d={trace.diameter}, r={trace.radius}")
        if out["mp_exact"] is None:
            print(f"exact mp skipped (n={g.n} > cap {cap})")
        else:
            print(f"exact mp={out['mp_exact']}  ratio mp/approx={out['ratio']}")
    return EXIT_OK if verified else EXIT_VIOLATION


def cmd_verify(args) -> int:
    g = load_graph(args)
    cert = load_certificate(_read_text(args.cert))
    kind = "multipacking" if isinstance(cert, Multipacking) else "broadcast"
    if args.kind and args.kind != kind:
        raise BmpError(f"certificate holds a {kind}, but --kind {args.kind} was requested")
    dm = all_pairs(g)
    if kind == "multipacking":
        violation = verify_multipacking(dm, cert)
        value = len(cert)
    else:
        violation = verify_broadcast(dm, cert)
        value = cert.cost
    out = {"kind": kind, "ok": violation is None, "value": value,
           "violation": None if violation is None else violation.to_json()}
    if args.json:
        _emit(out)
    elif violation is None:
        label = "size" if kind == "multipacking" else "cost"
        print(f"ok: valid {kind}, {label} {value}")
    else:
        print(f"violation: {violation.kind} center={violation.center} radius={violation.radius} "
              f"witness={list(violation.witness)}")
    return EXIT_OK if violation is None else EXIT_VIOLATION


def _dump_violation(rec) -> None:
    bar = "!" * 72
    lines = [
        bar,
        "CONJECTURE VIOLATION: gb > 2 mp",
        f"graph6: {rec.graph6}",
        f"mp = {rec.mp}, multipacking = {list(rec.mp_witness)}",
        f"gb = {rec.gb}, broadcast = {dict(rec.gb_witness)}",
        bar,
    ]
    text = "\n".join(lines)
    print(text)
    print(text, file=sys.stderr)


def cmd_sweep(args) -> int:
    sources = [bool(args.graph6), args.enumerate is not None, bool(args.gnp)]
    if sum(sources) != 1:
        raise BmpError("choose exactly one of --graph6 FILE, --enumerate N, --gnp N,P")
    if args.graph6:
        if args.graph6 == "-":
            stream = graph6_stream(sys.stdin)
        else:
            stream = graph6_stream(Path(args.graph6).read_text().splitlines())
    elif args.enumerate is not None:
        stream = enumerate_connected(args.enumerate)
    else:
        try:
            n_txt, p_txt = args.gnp.split(",")
            n, p = int(n_txt), float(p_txt)
        except ValueError:
            raise BmpError(f"--gnp expects N,P, got {args.gnp!r}") from None
        stream = gnp_stream(n, p, args.count, args.seed)

    summary = summarize([])
    status = EXIT_OK
    for rec in sweep(stream, cap=args.cap, jobs=args.jobs):
        summary.add(rec)
        if args.json:
            _emit(rec.to_json(timing=args.timing))
        elif hasattr(rec, "reason"):
            print(f"{rec.graph_id}: skipped ({rec.reason})")
        elif args.verbose:
            flag = {"ok": "", "tight": "  gb = 2mp", "violation": "  VIOLATION"}[rec.conjecture]
            print(f"{rec.graph_id:>12s}  {rec.graph6:12s}  mp={rec.mp}  gb={rec.gb}{flag}")
        if getattr(rec, "failures", ()):
            status = EXIT_VIOLATION
        if getattr(rec, "conjecture", None) == "violation":
            _dump_violation(rec)
            status = EXIT_VIOLATION
            break
    s = summary.to_json()
    if args.json:
        _emit({"summary": s})
    else:
        print(f"graphs: {s['graphs']}  skipped: {len(s['skipped'])}  max gb/mp: {s['max_ratio']}")
        print("histogram gb/mp: " + ", ".join(f"{k}: {v}" for k, v in s["histogram"].items()))
        print(f"graphs with gb = 2mp: {len(s['extremal_graph6'])}")
        for code in s["extremal_graph6"][: args.show]:
            print(f"  {code}")
        if s["theorem_failures"]:
            print(f"THEOREM FAILURES (library bug): {s['theorem_failures']}")
    return status


def cmd_gen(args) -> int:
    g = parse_generator(args.kind)
    if args.format == "graph6":
        print(encode_graph6(g).decode("ascii"))
    else:
        sys.stdout.write(format_edge_list(g))
    return EXIT_OK


def cmd_dist(args) -> int:
    g = load_graph(args)
    dm = all_pairs(g)
    rd = radius_diameter(dm) if dm.connected else None
    if args.json:
        out = {"n": g.n, "dist": [list(r) for r in dm.dist], "unreachable": -1}
        if rd:
            out.update(radius=rd.radius, diameter=rd.diameter, center=rd.center,
                       diametral_pair=list(rd.diametral_pair))
        _emit(out)
    else:
        width = max(2, len(str(max(0, dm.max_distance()))) + 1)
        for row in dm.dist:
            print("".join(f"{('.' if d < 0 else d):>{width}}" for d in row))
        if rd:
            print(f"radius={rd.radius} (center {rd.center})  diameter={rd.diameter} "
                  f"(pair {rd.diametral_pair[0]}-{rd.diametral_pair[1]})")
        else:
            print("disconnected")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bmp", description="Broadcast domination and multipacking toolkit")
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("solve", help="exact mp and/or gb")
    _add_graph_args(p)
    grp = p.add_mutually_exclusive_group()
    grp.add_argument("--mp", action="store_true")
    grp.add_argument("--gb", action="store_true")
    grp.add_argument("--both", action="store_true")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("bounds", help="radius, diameter, mp, gb and every inequality")
    _add_graph_args(p)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("approx", help="polynomial-time multipacking with its guarantee")
    _add_graph_args(p)
    p.set_defaults(func=cmd_approx)

    p = sub.add_parser("verify", help="check a multipacking or broadcast certificate")
    _add_graph_args(p)
    p.add_argument("--cert", required=True, metavar="FILE", help="certificate JSON ('-' for stdin)")
    p.add_argument("--kind", choices=["multipacking", "broadcast"])
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sweep", help="check bounds and the conjecture over many graphs")
    p.add_argument("--graph6", metavar="FILE", help="newline-delimited graph6 ('-' for stdin)")
    p.add_argument("--enumerate", type=int, metavar="N", help="all connected labeled graphs on N <= 6 vertices")
    p.add_argument("--gnp", metavar="N,P", help="random G(n,p) graphs")
    p.add_argument("--count", type=int, default=100, help="number of gnp samples")
    p.add_argument("--seed", type=int, default=0, help="first gnp seed")
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    p.add_argument("--cap", type=int, default=None)
    p.add_argument("--json", action="store_true", help="one JSON record per line, then a summary")
    p.add_argument("--timing", action="store_true", help="include per-graph millis in JSON records")
    p.add_argument("--verbose", "-v", action="store_true", help="print every record in text mode")
    p.add_argument("--show", type=int, default=10, help="extremal graphs to list in text mode")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("gen", help="print a generated graph")
    p.add_argument("kind", metavar="KIND:PARAMS")
    p.add_argument("--format", choices=["edgelist", "graph6"], default="edgelist")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("dist", help="distance matrix, radius and diameter")
    _add_graph_args(p)
    p.set_defaults(func=cmd_dist)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (BmpError, OSError, IndexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
