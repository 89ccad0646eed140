"""Command-line interface.

Exit codes: 0 success, 1 domain/precondition error, 2 resource budget
exceeded, 3 parse error. Errors are also written to stderr as one JSON object.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path

from . import __version__
from .classify import Limits, classify
from .cover import build_cover, cover_to_dot, find_arc_cycle
from .errors import GraphParseError, HomShiftError
from .folding import find_collapsing_map, stiff_reduce
from .gluing import count_extensions, glue_rect, pattern_from_json, pattern_to_json
from .graph import to_dot
from .sofic import DEFAULT_PAIR_BUDGET, minimal_gluing_distance
from .validation import check_graph
from .walkgraph import DEFAULT_BUDGET, build_walk_graph, diameter, growth_probe, walk_graph_to_dot


def _load_graph(spec):
    if spec is None:
        raise GraphParseError("no graph given (use -g FILE or -g fixture:NAME[:K])")
    if spec.startswith("fixture:"):
        return check_graph(spec)
    path = Path(spec)
    try:
        text = path.read_text()
    except OSError as exc:
        raise GraphParseError(f"cannot read {spec}: {exc.strerror}") from None
    return check_graph(text)


def _write(path, text):
    if path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def _dump_json(args, data):
    if args.json:
        _write(args.json, json.dumps(data, indent=2, sort_keys=True) + "\n")


def _fmt(x):
    return "inf" if x == math.inf else str(x)


def cmd_classify(args, g):
    limits = Limits(
        max_n=args.max_n if args.max_n is not None else 2,
        walk_budget=args.budget or DEFAULT_BUDGET,
        pair_budget=args.pair_budget,
        collapse_budget=args.collapse_budget,
    )
    report = classify(g, limits)
    if args.json:
        _write(args.json, report.dumps())
    if args.dot:
        _write(args.dot, to_dot(g))
    print(f"transitive: {report.transitive}")
    print(f"mixing: {report.mixing}")
    for name in ("phased_SI", "phased_block_gluing", "SI", "block_gluing"):
        v = getattr(report, name)
        print(f"{name}: {v.value}" + (f"  [{v.rule}]" if v.rule else ""))
    dist = report.gluing_distance
    cap = report.gluing_distance_cap
    print(f"gluing_distance: {dist if dist is not None else f'none up to {cap}'}")
    return 0


def cmd_fold(args, g):
    policy = "random" if args.seed is not None else "lexicographic"
    seq = stiff_reduce(g, policy=policy, seed=args.seed)
    data = seq.to_json()
    _dump_json(args, data)
    if args.dot:
        _write(args.dot, to_dot(seq.terminal, name="terminal"))
    for v, w in data["steps"]:
        print(f"fold {v} -> {w}")
    print("terminal: " + ", ".join(f"{u}-{v}" for u, v in data["terminal"]))
    if args.collapse:
        res = find_collapsing_map(g, node_budget=args.collapse_budget)
        print(f"collapsible: {res.status}")
    return 0


def cmd_cover(args, g):
    root = g.index(args.root) if args.root is not None else 0
    cycle = find_arc_cycle(g, root)
    names = g.names
    data = {"finite": cycle is None, "root": names[root]}
    if cycle is None:
        tree = build_cover(g, root, node_budget=args.budget or 1_000_000)
        data["nodes"] = [[names[v] for v in w] for w in tree.walks]
        print(f"finite ({len(tree)} nodes)")
        for w in tree.walks:
            print("  (" + ",".join(names[v] for v in w) + ")")
    else:
        data["certificate"] = [[names[u], names[v]] for u, v in cycle]
        tree = build_cover(g, root, depth_cap=args.depth, node_budget=args.budget or 1_000_000)
        print("infinite")
        print("  arc cycle: " + " -> ".join(f"({names[u]},{names[v]})" for u, v in cycle))
    _dump_json(args, data)
    if args.dot:
        _write(args.dot, cover_to_dot(tree))
    return 0


def cmd_walk_diam(args, g):
    wg = build_walk_graph(g, args.n, args.budget or DEFAULT_BUDGET)
    d = diameter(wg)
    _dump_json(args, {"n": args.n, "vertices": len(wg), "edges": wg.n_edges, "diameter": _fmt(d)})
    if args.dot:
        _write(args.dot, walk_graph_to_dot(wg))
    print(_fmt(d))
    return 0


def cmd_growth(args, g):
    probe = growth_probe(g, args.max_n if args.max_n is not None else 3, args.budget or DEFAULT_BUDGET)
    _dump_json(args, probe.to_json())
    if args.csv:
        _write(args.csv, probe.to_csv())
    else:
        sys.stdout.write(probe.to_csv())
    return 0


def cmd_gluing_distance(args, g):
    cap = args.max_n if args.max_n is not None else 2
    res = minimal_gluing_distance(g, cap, args.budget or DEFAULT_BUDGET, args.pair_budget)
    names = g.names
    checks = []
    for c in res.checks:
        entry = {"distance": c.distance, "holds": c.holds}
        if c.witness is not None:
            entry["witness"] = [[names[t], names[b]] for t, b in c.witness]
        checks.append(entry)
        line = f"distance {c.distance}: {'yes' if c.holds else 'no'}"
        if c.witness is not None:
            line += "  witness " + " ".join(f"{t}/{b}" for t, b in entry["witness"])
        print(line)
    _dump_json(args, {"distance": res.distance, "cap": 2 * cap, "checks": checks})
    print(f"minimal even distance: {res.distance if res.distance is not None else f'none up to {2 * cap}'}")
    return 0


def _read_json(path):
    try:
        return json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise GraphParseError(f"cannot read pattern {path}: {exc}") from None


def cmd_glue(args, g):
    a = pattern_from_json(g, _read_json(args.a))
    b = pattern_from_json(g, _read_json(args.b))
    res = glue_rect(g, a, b, args.separation, state_budget=args.budget or 200_000)
    if res is None:
        _dump_json(args, {"found": False})
        print("not found")
        return 0
    _dump_json(args, {
        "found": True,
        "phase": res.phase_name,
        "b_offset": list(res.b_offset),
        "strip": pattern_to_json(res.strip),
    })
    print(f"phase: {res.phase_name}")
    sys.stdout.write(res.strip.to_text())
    return 0


def cmd_extensions(args, g):
    data = _read_json(args.boundary)
    bottom = [g.index(x) for x in data["bottom"]]
    right = [g.index(x) for x in data["right"]]
    n = len(bottom) - 1
    if len(right) != n + 1 or bottom[n] != right[0]:
        raise GraphParseError("boundary needs bottom and right of equal length sharing the corner")
    boundary = {(i, 0): bottom[i] for i in range(n + 1)}
    boundary.update({(n, i): right[i] for i in range(n + 1)})
    count = count_extensions(g, boundary, n)
    _dump_json(args, {"n": n, "extensions": count})
    print(count)
    return 0


COMMANDS = {
    "classify": cmd_classify,
    "fold": cmd_fold,
    "cover": cmd_cover,
    "walk-diam": cmd_walk_diam,
    "growth": cmd_growth,
    "gluing-distance": cmd_gluing_distance,
    "glue": cmd_glue,
    "extensions": cmd_extensions,
}


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-g", "--graph", help="edge-list file, or fixture:NAME[:K]")
    common.add_argument("--json", metavar="FILE", help="write a JSON artifact ('-' for stdout)")
    common.add_argument("--dot", metavar="FILE", help="write a DOT rendering")
    common.add_argument("--budget", type=int, help="vertex/node budget for the enumeration")
    common.add_argument("--seed", type=int, help="seed for randomised fold order")
    common.add_argument("--max-n", type=int, dest="max_n", help="largest walk radius n to try")
    common.add_argument("--pair-budget", type=int, default=DEFAULT_PAIR_BUDGET)
    common.add_argument("--collapse-budget", type=int, default=200_000)

    parser = argparse.ArgumentParser(prog="homshift", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("classify", parents=[common], help="full classification report")
    p = sub.add_parser("fold", parents=[common], help="fold to a stiff graph")
    p.add_argument("--collapse", action="store_true", help="also search for a collapsing map")
    p = sub.add_parser("cover", parents=[common], help="universal cover finiteness")
    p.add_argument("--root")
    p.add_argument("--depth", type=int, default=6, help="depth cap for DOT output of infinite covers")
    p = sub.add_parser("walk-diam", parents=[common], help="diameter of the walk graph")
    p.add_argument("-n", type=int, required=True)
    p = sub.add_parser("growth", parents=[common], help="walk-graph diameters for n = 0..max-n")
    p.add_argument("--csv", metavar="FILE")
    sub.add_parser("gluing-distance", parents=[common], help="smallest even block-gluing distance")
    p = sub.add_parser("glue", parents=[common], help="glue two rectangular patterns")
    p.add_argument("--a", required=True, metavar="FILE", help="JSON grid, top row first")
    p.add_argument("--b", required=True, metavar="FILE")
    p.add_argument("--separation", type=int, required=True)
    p = sub.add_parser("extensions", parents=[common], help="count extensions of an L-shaped boundary")
    p.add_argument("--boundary", required=True, metavar="FILE",
                   help='JSON {"bottom": [...], "right": [...]}')
    return parser


def run(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        g = _load_graph(args.graph)
        return COMMANDS[args.command](args, g)
    except HomShiftError as exc:
        sys.stderr.write(json.dumps({"error": exc.kind, "message": str(exc)}) + "\n")
        return exc.exit_code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
