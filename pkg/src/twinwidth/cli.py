"""The ``tww`` command.

Exit codes: 0 success, 1 a reproduce fixture failed, 2 usage error or invalid
input, 3 I/O error.  ``-`` as a path means stdin or stdout.
"""
from __future__ import annotations

import argparse
import json
import os
import re
import sys

from . import bounds, families, fixtures, io, products, sequences, solver
from .errors import TwinWidthError
from .graph import Graph, sequence_width

DEFAULT_SEED = 0


class _IOFailure(Exception):
    pass


def _read(path: str) -> str:
    try:
        if path == "-":
            return sys.stdin.read()
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise _IOFailure(f"cannot read {path}: {exc.strerror}") from None


def _write(path: str | None, text: str) -> None:
    try:
        if path is None or path == "-":
            sys.stdout.write(text)
            sys.stdout.flush()
            return
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    except OSError as exc:
        raise _IOFailure(f"cannot write {path}: {exc.strerror}") from None


def _json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def _graph(path):
    return io.read_edge_list(_read(path))


def _sequence(path):
    return io.read_sequence(_read(path))


def parse_duration(text: str) -> float:
    m = re.fullmatch(r"\s*(\d+(?:\.\d*)?)\s*(ms|s|m|h)?\s*", text)
    if not m:
        raise argparse.ArgumentTypeError(f"bad duration {text!r} (try 60s, 5m, 1h)")
    scale = {"ms": 0.001, "s": 1, "m": 60, "h": 3600, None: 1}[m.group(2)]
    return float(m.group(1)) * scale


def env_seed() -> int:
    raw = os.environ.get("TWW_SEED")
    if raw is None:
        return DEFAULT_SEED
    try:
        return int(raw)
    except ValueError:
        raise TwinWidthError(f"TWW_SEED must be an integer, got {raw!r}") from None


# -- subcommands -------------------------------------------------------------

def cmd_family(args) -> int:
    names = families.family_parameters(args.name)
    params = {}
    for p in names:
        value = getattr(args, p)
        if value is None:
            raise TwinWidthError(f"family {args.name} needs --{p}")
        params[p] = value
    seed = args.seed if args.seed is not None else env_seed()
    g = families.generate(families.FamilySpec(args.name, params, seed))
    _write(args.output, io.write_edge_list(g))
    return 0


def _rotation(path):
    if path is None:
        return None
    return products.RotationMap.from_edge_ends(io.read_rotation_lines(_read(path)))


def cmd_product(args) -> int:
    g, h = _graph(args.g), _graph(args.h)
    kind = args.kind
    rot = None
    if kind in products.PRODUCTS:
        out = products.PRODUCTS[kind](g, h)
    elif kind == "l_corona":
        out = products.l_corona(g, h, args.ell)
    elif kind == "rooted":
        out = products.rooted(g, h, args.root)
    else:
        rot_g, rot_h = _rotation(args.rot_g), _rotation(args.rot_h)
        if kind == "replacement":
            rot = products.replacement_rotation(g, h, rot_g, rot_h)
            out = Graph(rot.n, rot.multigraph_edges())
        else:
            rot = products.zigzag_rotation(g, h, rot_g, rot_h)
            out = products.zigzag(g, h, rot_g, rot_h)
    if args.rotation_out:
        if rot is None:
            raise TwinWidthError("--rotation-out applies to replacement and zigzag only")
        _write(args.rotation_out, io.write_rotation_lines(rot.edge_ends()))
    _write(args.output, io.write_edge_list(out))
    return 0


def _factor_sequence(path, g):
    if path is not None:
        return _sequence(path)
    return solver.greedy_upper(g)[1]


def cmd_sequence(args) -> int:
    kind = args.product
    g = _graph(args.g)
    seq_g = _factor_sequence(args.seq_g, g)
    if kind == "tensor_star":
        res = sequences.tensor_star_sequence(g, seq_g, args.star_n)
    else:
        if args.h is None:
            raise TwinWidthError(f"product {kind} needs a second graph")
        h = _graph(args.h)
        if kind == "rooted":
            rest = sequences.rooted_remainder(h, args.root)
            res = sequences.rooted_sequence(g, seq_g, h, args.root,
                                            _factor_sequence(args.seq_h, rest))
        elif kind in ("replacement", "zigzag"):
            fn = sequences.replacement_sequence if kind == "replacement" else sequences.zigzag_sequence
            res = fn(g, seq_g, h, _rotation(args.rot_g), _rotation(args.rot_h))
        else:
            seq_h = _factor_sequence(args.seq_h, h)
            if kind == "l_corona":
                res = sequences.l_corona_sequence(g, seq_g, h, seq_h, args.ell)
            else:
                fn = {"cartesian": sequences.cartesian_sequence,
                      "tensor": sequences.tensor_sequence,
                      "strong": sequences.strong_sequence,
                      "lexicographic": sequences.lex_sequence,
                      "corona": sequences.corona_sequence}[kind]
                res = fn(g, seq_g, h, seq_h)
    if args.output:
        _write(args.output, io.write_sequence(res.sequence))
    if args.graph_out:
        _write(args.graph_out, io.write_edge_list(res.graph))
    record = res.to_dict()
    record["holds"] = res.holds
    _write(args.json, _json(record))
    return 0


def cmd_bounds(args) -> int:
    g = _graph(args.graph)
    seq_width = sequence_width(g, _sequence(args.sequence)) if args.sequence else None
    exact = None
    if args.exact:
        res = solver.tww_exact(g, solver.SearchBudget(max_time=args.time, max_nodes=args.nodes))
        exact = res.value
    rep = bounds.bound_report(g, args.id or args.graph, sequence_width=seq_width, exact=exact)
    text = _json(rep.to_dict())
    if args.report:
        _write(args.report, text)
    else:
        _write(None, text)
    return 0


def _budget(args):
    return solver.SearchBudget(max_time=args.time, max_nodes=args.nodes)


def _solver_options(args):
    return dict(memo="off" if args.no_memo else "canonical", twins=not args.no_twins,
                symmetry=not args.no_symmetry, assume_transitive=args.transitive)


def cmd_exact(args) -> int:
    g = _graph(args.graph)
    if args.le is not None:
        dec = solver.tww_le(g, args.le, _budget(args), **_solver_options(args))
        out = {"d": args.le, "answer": dec.answer, "nodes": dec.nodes,
               "witness": [list(p) for p in dec.witness] if dec.witness is not None else None}
        witness = dec.witness
    else:
        res = solver.tww_exact(g, _budget(args), **_solver_options(args))
        out = res.to_dict(timestamps=not args.no_timestamps)
        witness = res.witness
    if args.witness and witness is not None:
        _write(args.witness, io.write_sequence(witness))
    _write(None, _json(out))
    return 0


def cmd_verify(args) -> int:
    g = _graph(args.graph)
    seq = _sequence(args.sequence)
    width = sequence_width(g, seq, full=not args.partial)
    _write(None, _json({"sequence_width": width, "steps": len(seq)}))
    return 0


def cmd_reproduce(args) -> int:
    report = fixtures.reproduce(args.tier, jobs=args.jobs, timestamps=not args.no_timestamps)
    _write(args.output, _json(report))
    return 0 if report["pass"] else 1


# -- parser ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="tww", description="Twin-width toolkit.")
    sub = p.add_subparsers(dest="command", required=True)

    f = sub.add_parser("family", help="write a standard graph as an edge list")
    f.add_argument("name", choices=families.FAMILY_NAMES)
    for name in ("n", "m", "d", "k", "q"):
        f.add_argument(f"--{name}", type=int)
    f.add_argument("--seed", type=int, help="random_regular seed (default: $TWW_SEED or 0)")
    f.add_argument("-o", "--output", default="-")
    f.set_defaults(func=cmd_family)

    kinds = list(products.PRODUCTS) + ["l_corona", "rooted", "replacement", "zigzag"]
    pr = sub.add_parser("product", help="build a product graph")
    pr.add_argument("--kind", required=True, choices=kinds)
    pr.add_argument("g")
    pr.add_argument("h")
    pr.add_argument("--root", type=int, default=0)
    pr.add_argument("--ell", type=int, default=1)
    pr.add_argument("--rot-g", help="rotation map file for the outer graph")
    pr.add_argument("--rot-h", help="rotation map file for the inner graph")
    pr.add_argument("--rotation-out", help="write the product's rotation map here")
    pr.add_argument("-o", "--output", default="-")
    pr.set_defaults(func=cmd_product)

    s = sub.add_parser("sequence", help="generate a product contraction sequence")
    s.add_argument("--product", required=True,
                   choices=["cartesian", "tensor", "strong", "lexicographic", "corona",
                            "l_corona", "rooted", "replacement", "zigzag", "tensor_star"])
    s.add_argument("g")
    s.add_argument("h", nargs="?")
    s.add_argument("--seq-g", help="sequence for g (default: greedy)")
    s.add_argument("--seq-h", help="sequence for h, or for h minus the root (default: greedy)")
    s.add_argument("--root", type=int, default=0)
    s.add_argument("--ell", type=int, default=1)
    s.add_argument("--star-n", type=int, default=1)
    s.add_argument("--rot-g")
    s.add_argument("--rot-h")
    s.add_argument("-o", "--output", help="write the sequence file here")
    s.add_argument("--graph-out", help="write the product graph here")
    s.add_argument("--json", default="-", help="where to write the JSON record")
    s.set_defaults(func=cmd_sequence)

    b = sub.add_parser("bounds", help="bound report for a graph")
    b.add_argument("graph")
    b.add_argument("--sequence", help="include the width of this sequence")
    b.add_argument("--exact", action="store_true", help="also run the exact solver")
    b.add_argument("--time", type=parse_duration)
    b.add_argument("--nodes", type=int, default=10_000_000)
    b.add_argument("--id")
    b.add_argument("--report")
    b.set_defaults(func=cmd_bounds)

    e = sub.add_parser("exact", help="exact twin-width or a decision query")
    e.add_argument("graph")
    e.add_argument("--le", type=int, help="decide tww <= d instead")
    e.add_argument("--time", type=parse_duration)
    e.add_argument("--nodes", type=int, default=10_000_000)
    e.add_argument("--no-memo", action="store_true")
    e.add_argument("--no-twins", action="store_true")
    e.add_argument("--no-symmetry", action="store_true")
    e.add_argument("--transitive", action="store_true",
                   help="treat the input as vertex-transitive without checking")
    e.add_argument("--witness", help="write the witness sequence here")
    e.add_argument("--no-timestamps", action="store_true")
    e.set_defaults(func=cmd_exact)

    v = sub.add_parser("verify", help="width of a contraction sequence")
    v.add_argument("graph")
    v.add_argument("sequence")
    v.add_argument("--partial", action="store_true", help="accept a prefix")
    v.set_defaults(func=cmd_verify)

    r = sub.add_parser("reproduce", help="run the reference fixtures")
    r.add_argument("--tier", choices=fixtures.TIERS, default="quick")
    r.add_argument("--jobs", type=int, default=1)
    r.add_argument("--no-timestamps", action="store_true")
    r.add_argument("-o", "--output", default="-")
    r.set_defaults(func=cmd_reproduce)
    return p


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except _IOFailure as exc:
        print(f"tww: {exc}", file=sys.stderr)
        return 3
    except TwinWidthError as exc:
        print(f"tww: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
