"""Command-line interface: ``cactuskit <command> [--input PATH] [--format json|dot]``.

Exit codes: 0 success, 1 domain error (not a cactus, disconnected, oracle
size cap, invalid labelling), 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Callable, Sequence

from . import bench as bench_mod
from . import distances, labelling, oracle, selection
from .decomposition import decompose, tree_to_dict
from .generator import GenSpec, random_cactus
from .graph import (
    Graph,
    GraphError,
    GraphFormatError,
    NotCactusError,
    graph_to_dict,
    is_cactus,
    parse_graph,
    to_dot,
)
from .results import _num

EXIT_OK, EXIT_DOMAIN, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _nums(values) -> list:
    return [_num(v) for v in values]


def _dist_map(d) -> dict:
    return {"source": d.source, "dist": _nums(d.dist), "predecessor": list(d.predecessor)}


def _set_dot(g: Graph, result) -> str:
    members = getattr(result, "members", None)
    if members is None:
        members = result.s1 | result.s2
    return to_dot(g, members)


# name -> solver(g, t, args)
def _fast_ops() -> dict[str, Callable]:
    return {
        "apsp": lambda g, t, a: {"dist": [_nums(row) for row in distances.apsp(g, t)]},
        "sssp": lambda g, t, a: _dist_map(distances.sssp(g, t, a.source)),
        "dominate": lambda g, t, a: selection.min_dominating_set(g, t),
        "cover2": lambda g, t, a: selection.min_2nc_set(g, t),
        "mis": lambda g, t, a: selection.max_independent_set(g, t),
        "m2is": lambda g, t, a: selection.max_2_independent_set(g, t),
        "mw2is": lambda g, t, a: selection.max_weight_2_colorable(g, t),
        "fvs": lambda g, t, a: selection.min_weight_fvs(g, t),
        "span-max": lambda g, t, a: distances.max_height_spanning_tree(g, t),
        "span-min": lambda g, t, a: distances.min_height_spanning_tree(g, t),
        "label-l21": lambda g, t, a: labelling.label_l21(g, t),
        "label-l01": lambda g, t, a: labelling.label_l01(g, t),
        "label-t21": lambda g, t, a: labelling.label_t21(g, t),
    }


def _oracle_ops() -> dict[str, Callable]:
    def heights(g, which):
        hi, lo = oracle.oracle_spanning_heights(g)
        return {"height": _num(hi if which == "max" else lo)}

    def label(g, scheme):
        span, labels = oracle.oracle_labelling(g, scheme)
        if scheme == "t21":
            return {
                "vertex_labels": labels[: g.n],
                "edge_labels": [[u, v, labels[g.n + i]] for i, (u, v) in enumerate(g.edges)],
                "span": span,
            }
        return {"labels": labels, "span": span}

    return {
        "apsp": lambda g, a: {"dist": [_nums(oracle.oracle_sssp(g, x).dist) for x in range(g.n)]},
        "sssp": lambda g, a: _dist_map(oracle.oracle_sssp(g, a.source)),
        "dominate": lambda g, a: oracle.oracle_min_subset(g, "dominate"),
        "cover2": lambda g, a: oracle.oracle_min_subset(g, "cover2"),
        "mis": lambda g, a: oracle.oracle_max_independent(g, 1),
        "m2is": lambda g, a: oracle.oracle_max_independent(g, 2),
        "mw2is": lambda g, a: oracle.oracle_max_independent(g, 2, weighted=True),
        "fvs": lambda g, a: oracle.oracle_min_subset(g, "fvs", weighted=True),
        "span-max": lambda g, a: heights(g, "max"),
        "span-min": lambda g, a: heights(g, "min"),
        "label-l21": lambda g, a: label(g, "l21"),
        "label-l01": lambda g, a: label(g, "l01"),
        "label-t21": lambda g, a: label(g, "t21"),
    }


_SET_OPS = {"dominate", "cover2", "mis", "m2is", "mw2is", "fvs"}


def _read_text(path: str | None) -> bytes:
    if path is None or path == "-":
        return sys.stdin.buffer.read()
    try:
        with open(path, "rb") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _read_graph(args) -> Graph:
    return parse_graph(_read_text(args.input))


def _emit(obj) -> None:
    if hasattr(obj, "to_dict"):
        obj = obj.to_dict()
    if isinstance(obj, str):
        sys.stdout.write(obj)
    else:
        json.dump(obj, sys.stdout)
        sys.stdout.write("\n")


def _require_json(args, cmd: str) -> None:
    if args.format != "json":
        raise UsageError(f"--format {args.format} is not available for '{cmd}'")


# ---------------------------------------------------------------- commands


def cmd_verify(args) -> int:
    _require_json(args, "verify")
    g = _read_graph(args)
    g.require_connected()
    rep = is_cactus(g)
    _emit({"is_cactus": rep.is_cactus, "witness": list(rep.witness) if rep.witness else None})
    if not rep.is_cactus:
        print(f"not a cactus: edge {rep.witness[0]}-{rep.witness[1]} lies on two cycles", file=sys.stderr)
        return EXIT_DOMAIN
    return EXIT_OK


def cmd_decompose(args) -> int:
    _require_json(args, "decompose")
    g = _read_graph(args)
    _emit(tree_to_dict(decompose(g)))
    return EXIT_OK


def _check_source(args, g: Graph) -> None:
    source = getattr(args, "source", None)
    if source is not None and not 0 <= source < g.n:
        raise UsageError(f"--source {args.source} out of range 0..{g.n - 1}")


def cmd_fast(args) -> int:
    cmd = args.command
    if args.format == "dot" and cmd not in _SET_OPS:
        raise UsageError(f"--format dot is only available for {', '.join(sorted(_SET_OPS))} and gen")
    g = _read_graph(args)
    _check_source(args, g)
    t = decompose(g)
    result = _fast_ops()[cmd](g, t, args)
    _emit(_set_dot(g, result) if args.format == "dot" else result)
    return EXIT_OK


def cmd_oracle(args) -> int:
    _require_json(args, "oracle")
    g = _read_graph(args)
    g.require_connected()
    _check_source(args, g)
    _emit(_oracle_ops()[args.problem](g, args))
    return EXIT_OK


def cmd_validate(args) -> int:
    _require_json(args, "validate")
    g = _read_graph(args)
    try:
        data = json.loads(_read_text(args.labels))
    except json.JSONDecodeError as exc:
        raise GraphFormatError(f"malformed labelling JSON: {exc.msg}", f"line {exc.lineno} column {exc.colno}") from None
    if not isinstance(data, dict):
        raise GraphFormatError("labelling must be a JSON object")
    try:
        if args.scheme == "t21":
            edge_labels = {(int(u), int(v)): c for u, v, c in data["edge_labels"]}
            violations = labelling.validate_t21(g, data["vertex_labels"], edge_labels)
        else:
            check = labelling.validate_l21 if args.scheme == "l21" else labelling.validate_l01
            violations = check(g, data["labels"])
    except (KeyError, TypeError, ValueError) as exc:
        raise GraphFormatError(f"bad labelling: {exc}") from None
    _emit({"valid": not violations, "violations": [v.to_dict() for v in violations]})
    return EXIT_OK if not violations else EXIT_DOMAIN


def cmd_gen(args) -> int:
    try:
        spec = GenSpec(
            block_count=args.blocks,
            cycle_fraction=Fraction(args.cycle_frac),
            min_len=args.min_len,
            max_len=args.max_len,
            edge_weight=tuple(args.edge_weight),
            vertex_weight=tuple(args.vertex_weight),
            seed=args.seed,
        )
        g = random_cactus(spec)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(str(exc)) from None
    _emit(to_dot(g) if args.format == "dot" else graph_to_dict(g))
    return EXIT_OK


def cmd_bench(args) -> int:
    _require_json(args, "bench")
    if args.reps < bench_mod.MIN_REPS:
        raise UsageError(f"--reps must be at least {bench_mod.MIN_REPS}")
    try:
        records = bench_mod.bench(args.op, args.sizes, seed=args.seed, reps=args.reps)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    out = {"records": [r.to_dict() for r in records]}
    if len(records) >= 2:
        out["exponent"] = bench_mod.fit_exponent(records)
    for r in records:
        print(f"{r.operation:10s} n={r.n:<9d} median {r.seconds:.4f}s over {r.repetitions}", file=sys.stderr)
    _emit(out)
    return EXIT_OK


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", "-i", metavar="PATH", help="graph JSON file (default: stdin)")
    common.add_argument("--format", choices=("json", "dot"), default="json")

    p = argparse.ArgumentParser(prog="cactuskit", description="Algorithms on cactus graphs.")
    sub = p.add_subparsers(dest="command", required=True, metavar="COMMAND")

    sub.add_parser("verify", parents=[common], help="check that the graph is a cactus").set_defaults(func=cmd_verify)
    sub.add_parser("decompose", parents=[common], help="blocks and block-cut tree").set_defaults(func=cmd_decompose)
    helps = {
        "apsp": "all-pairs shortest path lengths",
        "sssp": "single-source shortest paths",
        "dominate": "minimum dominating set",
        "cover2": "minimum 2-neighbourhood cover",
        "mis": "maximum independent set",
        "m2is": "maximum 2-independent set",
        "mw2is": "maximum-weight 2-colourable subgraph",
        "fvs": "minimum-weight feedback vertex set",
        "span-max": "maximum-height spanning tree",
        "span-min": "minimum-height spanning tree",
        "label-l21": "L(2,1)-labelling",
        "label-l01": "L(0,1)-labelling",
        "label-t21": "(2,1)-total labelling",
    }
    for name, text in helps.items():
        sp = sub.add_parser(name, parents=[common], help=text)
        if name == "sssp":
            sp.add_argument("--source", "-s", type=int, default=0)
        sp.set_defaults(func=cmd_fast)

    sp = sub.add_parser("validate", parents=[common], help="check a labelling")
    sp.add_argument("--scheme", choices=labelling.SCHEMES, required=True)
    sp.add_argument("--labels", metavar="PATH", required=True, help="labelling JSON as emitted by label-*")
    sp.set_defaults(func=cmd_validate)

    sp = sub.add_parser("oracle", parents=[common], help="brute-force reference answer (small graphs)")
    sp.add_argument("problem", choices=sorted(helps))
    sp.add_argument("--source", "-s", type=int, default=0)
    sp.set_defaults(func=cmd_oracle)

    sp = sub.add_parser("gen", help="generate a random cactus")
    sp.add_argument("--format", choices=("json", "dot"), default="json")
    sp.add_argument("--blocks", type=int, required=True)
    sp.add_argument("--cycle-frac", default="1/2", help="probability a block is a cycle, e.g. 1/2")
    sp.add_argument("--min-len", type=int, default=3)
    sp.add_argument("--max-len", type=int, default=6)
    sp.add_argument("--edge-weight", type=int, nargs=2, default=(1, 1), metavar=("LO", "HI"))
    sp.add_argument("--vertex-weight", type=int, nargs=2, default=(1, 1), metavar=("LO", "HI"))
    sp.add_argument("--seed", type=int, default=0)
    sp.set_defaults(func=cmd_gen)

    sp = sub.add_parser("bench", help="time an operation over growing generated cacti")
    sp.add_argument("--format", choices=("json", "dot"), default="json")
    sp.add_argument("--op", required=True, choices=sorted(bench_mod.OPERATIONS))
    sp.add_argument("--sizes", type=int, nargs="+", default=[1000, 10000, 100000])
    sp.add_argument("--reps", type=int, default=bench_mod.MIN_REPS)
    sp.add_argument("--seed", type=int, default=0)
    sp.set_defaults(func=cmd_bench)
    return p


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (UsageError, GraphFormatError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (NotCactusError, GraphError, oracle.OracleCapExceeded, labelling.LabellingDefect) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
