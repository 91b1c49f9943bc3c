"""Command-line front end: ``c5t analyze|reduce|construct|search|bounds``.

Exit codes: 0 success, 1 a C5 is present where the command forbids one,
2 usage or parse error.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional

from . import __version__
from .blocks import check_claim1, check_claim2, decompose_blocks, strip_nontriangle_edges
from .bounds import ASYMPTOTIC_MARKER, CONSTANTS, eval_bound, report
from .construct import bg_projective, parse_named, projective_plane_incidence
from .detect import count_triangles, find_c4, find_c5, girth
from .errors import C5Present
from .graph import Graph, GraphError
from .io import ParseError, digest, dumps, envelope, read_graph, write_graph
from .reduce import select_edges, verify_reduction
from .search import DEFAULT_CAP, SearchCapError, exact_ex

EXIT_OK, EXIT_C5, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _load(args) -> tuple[Graph, Optional[list[str]], str]:
    text = _read_input(args.input)
    try:
        g, labels = read_graph(text, args.format, getattr(args, "labels", False))
    except (ParseError, GraphError) as exc:
        raise UsageError(f"{args.input}: {exc}") from None
    return g, labels, text


def _write(path: Optional[str], text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def _named(cycle, labels):
    if cycle is None:
        return None
    return [labels[v] for v in cycle] if labels else list(cycle)


def _fmt_cycle(cycle) -> str:
    return "free" if cycle is None else "-".join(map(str, cycle))


def analyze_payload(g: Graph, labels=None, provenance: str = "") -> dict:
    c4 = find_c4(g)
    c5 = find_c5(g)
    stripped = strip_nontriangle_edges(g)
    dec = decompose_blocks(g)
    claim1 = check_claim1(g)
    claim2 = check_claim2(stripped)
    return {
        "n": g.n,
        "m": g.m,
        "triangles": count_triangles(g),
        "girth": girth(g),
        "c4": _named(c4, labels),
        "c5": _named(c5, labels),
        "stripped_edges": stripped.m,
        "blocks": dec.counts(),
        "claim1": claim1.to_dict(),
        "claim2": claim2.to_dict(),
        "bounds": report(g, provenance).to_dict(),
    }


def cmd_analyze(args) -> int:
    g, labels, text = _load(args)
    payload = analyze_payload(g, labels, args.input)
    if args.json:
        sys.stdout.write(dumps(envelope("analyze", digest(text), payload)))
        return EXIT_OK
    b = payload["blocks"]
    rows = [
        ("vertices", g.n),
        ("edges", g.m),
        ("triangles", payload["triangles"]),
        ("girth", payload["girth"] if payload["girth"] is not None else "none (forest)"),
        ("C4", _fmt_cycle(payload["c4"])),
        ("C5", _fmt_cycle(payload["c5"])),
        ("edges in triangles", payload["stripped_edges"]),
        ("blocks", f"{b['crown']} crown, {b['k4']} K4, {b['invalid']} invalid"),
        ("crown/K4 dichotomy", _claim_word(payload["claim1"])),
        ("C4s inside one block", _claim_word(payload["claim2"])),
    ]
    ratio = payload["bounds"]["ratio"]
    rows.append(("t / n^1.5", "undefined" if ratio is None else f"{ratio:.6f}"))
    _print_rows(rows)
    return EXIT_OK


def _claim_word(rep: dict) -> str:
    if rep["precondition_failed"]:
        return "not applicable (" + rep["details"]["reason"] + ")"
    return "pass" if rep["passed"] else "FAIL"


def _print_rows(rows) -> None:
    width = max(len(k) for k, _ in rows)
    for k, v in rows:
        print(f"{k:<{width}}  {v}")


def cmd_reduce(args) -> int:
    g, labels, text = _load(args)
    try:
        r = select_edges(g)
    except C5Present as exc:
        print(f"error: input contains a C5: {'-'.join(map(str, _named(exc.witness, labels)))}",
              file=sys.stderr)
        if args.json:
            payload = {"c5": _named(exc.witness, labels), "verification": None}
            sys.stdout.write(dumps(envelope("reduce", digest(text), payload)))
        return EXIT_C5
    ver = verify_reduction(g, r)
    _write(args.out, write_graph(r.g0, args.format, labels))
    payload = {
        "stats": dict(r.stats),
        "blocks": r.decomposition.counts(),
        "g0_girth": girth(r.g0),
        "verification": ver.to_dict(),
    }
    if args.json:
        sys.stdout.write(dumps(envelope("reduce", digest(text), payload)))
    elif args.out != "-":
        gg = payload["g0_girth"]
        print(f"triangles {r.stats['triangles']}  g0 edges {r.g0.m}  g0 girth "
              f"{'none (forest)' if gg is None else gg}  "
              f"verification {'pass' if ver.passed else 'FAIL'}")
    return EXIT_OK if ver.passed else EXIT_C5


def cmd_construct(args) -> int:
    try:
        if args.kind == "pp":
            g = projective_plane_incidence(args.q).graph
            prov = f"pp q={args.q}"
        elif args.kind == "bg":
            g = bg_projective(args.q, args.side)
            prov = f"bg q={args.q} side={args.side}"
        else:
            g = parse_named(args.name)
            prov = f"named {args.name}"
    except GraphError as exc:
        raise UsageError(str(exc)) from None
    t = count_triangles(g)
    _write(args.out, write_graph(g, args.format))
    stats = {"construction": prov, "n": g.n, "m": g.m, "triangles": t}
    stream = sys.stdout if args.out not in (None, "-") else sys.stderr
    if args.json:
        stream.write(dumps(envelope("construct", digest(prov), stats)))
    else:
        print(f"n {g.n}  m {g.m}  t {t}", file=stream)
    return EXIT_OK


def _load_table(path: str) -> dict[int, str]:
    lines = {}
    if os.path.exists(path):
        with open(path, encoding="utf-8") as fh:
            for raw in fh:
                raw = raw.strip()
                if raw:
                    lines[json.loads(raw)["n"]] = raw
    return lines


def _record_line(rec) -> str:
    d = rec.result_dict()
    d["run"] = rec.run_dict()
    return json.dumps(d, separators=(",", ":"))


def cmd_search(args) -> int:
    ns = [args.n] if args.n is not None else list(range(args.range[0], args.range[1] + 1))
    cap = args.cap if args.cap is not None else DEFAULT_CAP
    try:
        records = [exact_ex(n, cap=cap, workers=args.workers, symmetry=args.symmetry,
                            use_bound=not args.no_bound) for n in ns]
    except (SearchCapError, ValueError) as exc:
        raise UsageError(str(exc)) from None

    if args.out:
        table = _load_table(args.out)
        changed = False
        for rec in records:
            old = table.get(rec.n)
            if old is not None:
                kept = json.loads(old)
                kept.pop("run", None)
                if kept == json.loads(json.dumps(rec.result_dict())):
                    continue
            table[rec.n] = _record_line(rec)
            changed = True
        if changed:
            _write(args.out, "".join(table[n] + "\n" for n in sorted(table)))

    if args.json:
        result = [r.result_dict() for r in records]
        run = [dict(n=r.n, **r.run_dict()) for r in records]
        key = f"search ns={ns} cap={cap} symmetry={args.symmetry} bound={not args.no_bound}"
        sys.stdout.write(dumps(envelope("search", digest(key), result, run)))
    else:
        print(f"{'n':>3}  {'ex(n,K3,C5)':>11}  {'nodes':>10}  {'seconds':>8}")
        for r in records:
            print(f"{r.n:>3}  {r.max_triangles:>11}  {r.nodes_explored:>10}  {r.elapsed:>8.3f}")
    return EXIT_OK


def cmd_bounds(args) -> int:
    payload: dict = {
        "marker": ASYMPTOTIC_MARKER,
        "constants": [{"name": c.name, "value": c.value, "role": c.role} for c in CONSTANTS.values()],
    }
    if args.n:
        payload["evaluations"] = [
            {"n": n, **{c.name: eval_bound(n, c) for c in CONSTANTS.values()}} for n in args.n
        ]
    key = f"bounds n={args.n}"
    if args.input:
        g, _, text = _load(args)
        payload["report"] = report(g, args.input).to_dict()
        key += digest(text)
    if args.json:
        sys.stdout.write(dumps(envelope("bounds", digest(key), payload)))
        return EXIT_OK
    print(f"constants (multiply n^1.5; {ASYMPTOTIC_MARKER})")
    _print_rows([(c.name, f"{c.value:.6f}  {c.role}") for c in CONSTANTS.values()])
    for row in payload.get("evaluations", []):
        print(f"n = {row['n']}: " + "  ".join(f"{c}={row[c]:.4f}" for c in CONSTANTS))
    if "report" in payload:
        rep = payload["report"]
        r = "undefined" if rep["ratio"] is None else f"{rep['ratio']:.6f}"
        print(f"{args.input}: n {rep['n']}  t {rep['t']}  t/n^1.5 {r}")
    return EXIT_OK


def _add_input(p, optional=False):
    if optional:
        p.add_argument("input", nargs="?", help="graph file ('-' for stdin)")
    else:
        p.add_argument("input", help="graph file ('-' for stdin)")
    p.add_argument("--format", choices=("edgelist", "graph6"), default="edgelist")
    p.add_argument("--labels", action="store_true",
                   help="treat edge-list tokens as arbitrary labels, numbered by first appearance")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="c5t", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"c5t {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="triangles, C4/C5 witnesses, blocks, density ratio")
    _add_input(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("reduce", help="select one edge per triangle and verify the result")
    _add_input(p)
    p.add_argument("--out", required=True, help="where to write the selected subgraph")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("construct", help="write a generated graph")
    p.add_argument("kind", choices=("pp", "bg", "named"))
    p.add_argument("--q", type=int, help="prime order of the projective plane")
    p.add_argument("--side", choices=("A", "B"), default="B", help="colour class to double (bg)")
    p.add_argument("--name", help="named graph, e.g. book-3, complete-4, cycle-5")
    p.add_argument("--out")
    p.add_argument("--format", choices=("edgelist", "graph6"), default="edgelist")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("search", help="exact ex(n, K3, C5) for small n")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--n", type=int)
    g.add_argument("--range", type=int, nargs=2, metavar=("A", "B"))
    p.add_argument("--out", help="JSON-lines table to merge results into")
    p.add_argument("--cap", type=int, help=f"largest n allowed (default {DEFAULT_CAP})")
    p.add_argument("--workers", type=int, help="process count (default $C5T_THREADS or 1)")
    p.add_argument("--symmetry", action="store_true", help="degree-ordered symmetry pruning")
    p.add_argument("--no-bound", action="store_true", help="disable triangle-potential pruning")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("bounds", help="asymptotic constants and t/n^1.5 ratios")
    _add_input(p, optional=True)
    p.add_argument("--n", type=int, action="append", help="evaluate c*n^1.5 at this n (repeatable)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_bounds)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "construct":
        if args.kind in ("pp", "bg") and args.q is None:
            parser.error(f"construct {args.kind} requires --q")
        if args.kind == "named" and not args.name:
            parser.error("construct named requires --name")
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"c5t: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
