"""Command line: ``monocol <command> ...``.

Exit codes: 0 affirmative, 1 negative (not colorable, invalid, not certified,
disagreement), 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from . import graph as g
from .decider import decide_col
from .formula import DimacsError, Formula, brute_force_nae, eval_nae, pad_to_width, \
    parse_dimacs, serialize_dimacs
from .gadgets import Gadget, k4_loop, tree_gadget, verify_super_edge
from .reduction import predicted_sizes, reduce, reduce_necklace
from .search import search_min_gadget


class InputError(Exception):
    pass


def _read_json(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"{path}: {exc}") from None


def _read_graph(path) -> g.Graph:
    try:
        return g.Graph.from_json_obj(_read_json(path))
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"{path}: not a graph: {exc}") from None


def _read_formula(path, k) -> Formula:
    try:
        with open(path) as fh:
            formula = parse_dimacs(fh.read())
    except OSError as exc:
        raise InputError(str(exc)) from None
    except DimacsError as exc:
        raise InputError(f"{path}: {exc}") from None
    try:
        return pad_to_width(formula, k)
    except ValueError as exc:
        raise InputError(f"{path}: {exc}") from None


def _write(text, out):
    if out in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(out, "w") as fh:
            fh.write(text)


def _reduce(formula, k, necklace):
    if necklace:
        if k != 3:
            raise InputError("--necklace requires --k 3")
        return reduce_necklace(formula)
    return reduce(formula, k)


def cmd_reduce(args):
    formula = _read_formula(args.cnf, args.k)
    try:
        out = _reduce(formula, args.k, args.necklace)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    pred = predicted_sizes(args.k, formula.num_vars, formula.num_clauses,
                           "necklace" if args.necklace else "basic")
    print(pred.report(), file=sys.stderr if args.out in (None, "-") else sys.stdout)
    _write(g.dumps(out.to_json_obj()), args.out)
    return 0


def cmd_solve(args):
    graph = _read_graph(args.graph)
    if args.method == "brute":
        try:
            col = g.brute_force_coloring(graph, args.k)
        except ValueError as exc:
            raise InputError(str(exc)) from None
    else:
        col = decide_col(graph, args.k)
    if col is None:
        print(f"not (2,{args.k})-colorable", file=sys.stderr)
        return 1
    _write(g.dumps(g.coloring_to_json_obj(col)), args.out)
    return 0


def cmd_check(args):
    graph = _read_graph(args.graph)
    try:
        col = g.coloring_from_json_obj(_read_json(args.coloring))
        bad = g.monochromatic_cycles(graph, args.k, col)
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"{args.coloring}: {exc}") from None
    if bad:
        print(f"invalid: {len(bad)} monochromatic {args.k}-cycles, e.g. {list(bad[0])}")
        return 1
    print("valid")
    return 0


def cmd_gadget_gen(args):
    if args.family == "loop":
        try:
            gadget = k4_loop(args.param)
        except ValueError as exc:
            raise InputError(str(exc)) from None
    else:
        try:
            gadget = tree_gadget(args.param, args.height)
        except ValueError as exc:
            raise InputError(str(exc)) from None
    _write(g.dumps(gadget.to_json_obj()), args.out)
    return 0


def cmd_gadget_verify(args):
    try:
        gadget = Gadget.from_json_obj(_read_json(args.gadget))
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"{args.gadget}: not a gadget: {exc}") from None
    method = "exhaustive" if args.method == "brute" else "sat"
    try:
        report = verify_super_edge(gadget, method)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    print(json.dumps(report.to_json_obj()))
    return 0 if report.certified else 1


def cmd_gadget_search(args):
    progress = (lambda msg: print(msg, file=sys.stderr)) if not args.quiet else None
    resume = _read_json(args.resume) if args.resume else None
    report = search_min_gadget(args.k, args.max_vertices, args.objective, not args.no_prune,
                               args.workers, args.max_seconds, resume, progress)
    _write(json.dumps(report.to_json_obj(), indent=2) + "\n", args.out)
    if not report.complete:
        return 1
    return 0 if report.winner is not None else 1


def cmd_roundtrip(args):
    formula = _read_formula(args.cnf, args.k)
    model = brute_force_nae(formula)
    try:
        out = _reduce(formula, args.k, args.necklace)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    col = decide_col(out.graph, args.k)
    agree = (model is None) == (col is None)
    extracted_ok = col is None or eval_nae(formula, out.extract_assignment(col))
    print(json.dumps({
        "nae_satisfiable": model is not None,
        "graph_colorable": col is not None,
        "agree": agree,
        "extracted_assignment_ok": extracted_ok,
        "vertices": out.graph.num_vertices,
        "edges": out.graph.num_edges,
    }))
    return 0 if agree and extracted_ok else 1


def cmd_export_dot(args):
    obj = _read_json(args.graph)
    graph = _read_graph(args.graph)
    col = None
    if args.coloring:
        col = g.coloring_from_json_obj(_read_json(args.coloring))
    labels = {int(v): name for v, name in obj.get("labels", {}).items()}
    try:
        text = g.to_dot(graph, col, obj.get("designated_edge", ()), labels)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    _write(text, args.out)
    return 0


def cmd_random_cnf(args):
    rng = random.Random(args.seed)
    clauses = [[rng.choice((1, -1)) * rng.randint(1, args.n) for _ in range(args.width)]
               for _ in range(args.m)]
    _write(serialize_dimacs(Formula.from_ints(args.n, clauses), [f"seed {args.seed}"]), args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="monocol", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("reduce", help="build the reduction graph for a DIMACS formula")
    s.add_argument("cnf")
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--necklace", action="store_true")
    s.add_argument("--out")
    s.set_defaults(func=cmd_reduce)

    s = sub.add_parser("solve", help="decide (2,k)-colorability of a graph")
    s.add_argument("graph")
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--method", choices=("sat", "brute"), default="sat")
    s.add_argument("--out")
    s.set_defaults(func=cmd_solve)

    s = sub.add_parser("check", help="check a coloring for monochromatic k-cycles")
    s.add_argument("graph")
    s.add_argument("coloring")
    s.add_argument("--k", type=int, required=True)
    s.set_defaults(func=cmd_check)

    gp = sub.add_parser("gadget", help="gadget construction, verification and search")
    gsub = gp.add_subparsers(dest="gadget_command", required=True)
    s = gsub.add_parser("gen")
    s.add_argument("--family", choices=("loop", "tree"), required=True)
    s.add_argument("--param", type=int, required=True, help="loop length or k")
    s.add_argument("--height", type=int, help="tree height override")
    s.add_argument("--out")
    s.set_defaults(func=cmd_gadget_gen)
    s = gsub.add_parser("verify")
    s.add_argument("gadget")
    s.add_argument("--method", choices=("sat", "brute"), default="sat")
    s.set_defaults(func=cmd_gadget_verify)
    s = gsub.add_parser("search")
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--max-vertices", type=int, required=True)
    s.add_argument("--objective", choices=("vertices", "edges"), default="vertices")
    s.add_argument("--workers", type=int, default=1)
    s.add_argument("--max-seconds", type=float)
    s.add_argument("--resume", help="JSON file holding a resume token")
    s.add_argument("--no-prune", action="store_true")
    s.add_argument("--quiet", action="store_true")
    s.add_argument("--out")
    s.set_defaults(func=cmd_gadget_search)

    s = sub.add_parser("roundtrip", help="compare NAE-SAT brute force with the reduction")
    s.add_argument("cnf")
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--necklace", action="store_true")
    s.set_defaults(func=cmd_roundtrip)

    s = sub.add_parser("export-dot", help="Graphviz export")
    s.add_argument("graph")
    s.add_argument("--coloring")
    s.add_argument("--out")
    s.set_defaults(func=cmd_export_dot)

    s = sub.add_parser("random-cnf", help="reproducible random formula")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--m", type=int, required=True)
    s.add_argument("--width", type=int, default=3)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--out")
    s.set_defaults(func=cmd_random_cnf)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
