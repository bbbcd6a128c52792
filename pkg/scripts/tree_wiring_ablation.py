"""Compare wirings of the cycle-inducing bands in K6 tree gadgets.

For each wiring the SAT decider reports whether a valid coloring exists and
whether the root pair is forced apart.

    python3 scripts/tree_wiring_ablation.py [--k 4 5 6] [--all]
"""

import argparse
import time

from monocol.decider import Solver, encode_nae_cycles
from monocol.gadgets import LEAF_APEX, ROOT_APEX, SQUARE, Band, build_tree_gadget, tree_bands


def chain(k, h, last_mode):
    depths = sorted(set(range(0, h, 4)) | {h})
    bands = [Band(a, b, SQUARE) for a, b in zip(depths, depths[1:])]
    bands[-1] = Band(bands[-1].upper, bands[-1].lower, last_mode)
    return bands


def ring(k, h, closing_mode):
    # consecutive cycle-inducing depths plus a band from the root straight to the leaves
    depths = sorted(set(range(0, h, 4)) | {h})
    bands = [Band(a, b, SQUARE) for a, b in zip(depths, depths[1:])]
    if len(bands) > 1 or closing_mode != SQUARE:
        bands.append(Band(0, h, closing_mode))
    return bands


WIRINGS = {
    "default": lambda k, h: tree_bands(k, h),
    "chain/square": lambda k, h: chain(k, h, SQUARE),
    "chain/leaf_apex": lambda k, h: chain(k, h, LEAF_APEX),
    "chain/root_apex": lambda k, h: chain(k, h, ROOT_APEX),
    "ring/square": lambda k, h: ring(k, h, SQUARE),
    "ring/root_apex": lambda k, h: ring(k, h, ROOT_APEX),
}


def run(k, h, name):
    gad = build_tree_gadget(h, WIRINGS[name](k, h), k)
    t = time.perf_counter()
    enc = encode_nae_cycles(gad.graph, k)
    solver = Solver(enc.num_vars, enc.clauses)
    same = solver.solve_result([1, 2])
    exists = solver.solve_result([1])
    return {
        "k": k, "h": h, "wiring": name,
        "vertices": gad.graph.num_vertices, "edges": gad.graph.num_edges,
        "cycles": len(enc.cycles),
        "exists": exists.satisfiable, "forcing": not same.satisfiable,
        "seconds": round(time.perf_counter() - t, 1),
    }


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--k", type=int, nargs="+", default=[4, 5, 6])
    ap.add_argument("--all", action="store_true",
                    help="include ring/square for k >= 6 (about 8 minutes at k=6)")
    ap.add_argument("--heights", type=int, nargs="+", default=[1, 2, 3, 4],
                    help="tree heights tried for k=4")
    args = ap.parse_args()

    header = f"{'k':>2} {'h':>2} {'wiring':16} {'V':>5} {'E':>6} {'cycles':>7} {'exists':>6} {'forcing':>7} {'s':>5}"
    print(header)
    rows = []
    for k in args.k:
        if k == 4:
            rows += [run(4, h, "default") for h in args.heights]
            continue
        h = 4 * ((k - 1) // 2)
        names = [w for w in WIRINGS if args.all or k < 6 or w != "ring/square"]
        rows += [run(k, h, name) for name in names]
    for r in rows:
        print(f"{r['k']:>2} {r['h']:>2} {r['wiring']:16} {r['vertices']:>5} {r['edges']:>6} "
              f"{r['cycles']:>7} {str(r['exists']):>6} {str(r['forcing']):>7} {r['seconds']:>5}")


if __name__ == "__main__":
    main()
