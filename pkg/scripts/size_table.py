"""Published closed forms vs recounted forms vs constructed graphs.

    python3 scripts/size_table.py [--k 3 4 5] [--pairs 1,1 3,2 5,4]
"""

import argparse
import random

from monocol.formula import Formula
from monocol.reduction import predicted_sizes, reduce, reduce_necklace


def random_formula(rng, n, m, k):
    return Formula.from_ints(n, [[rng.choice((1, -1)) * rng.randint(1, n) for _ in range(k)]
                                 for _ in range(m)])


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--k", type=int, nargs="+", default=[3, 4, 5])
    ap.add_argument("--pairs", nargs="+", default=["2,1", "3,3", "5,4"], help="n,m pairs")
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    rng = random.Random(args.seed)

    print(f"{'k':>2} {'variant':9} {'n':>3} {'m':>3} {'E pub':>8} {'E der':>8} {'E built':>8} "
          f"{'V pub':>8} {'V der':>8} {'V built':>8}")
    for k in args.k:
        for pair in args.pairs:
            n, m = map(int, pair.split(","))
            f = random_formula(rng, n, m, k)
            variants = ["basic"] + (["necklace"] if k == 3 and n >= 2 else [])
            for variant in variants:
                out = reduce(f, k) if variant == "basic" else reduce_necklace(f)
                p = predicted_sizes(k, n, m, variant)
                flag = "" if not p.mismatch else "  *"
                print(f"{k:>2} {variant:9} {n:>3} {m:>3} {p.edges_published:>8} {p.edges_derived:>8} "
                      f"{out.graph.num_edges:>8} {p.vertices_published:>8} {p.vertices_derived:>8} "
                      f"{out.graph.num_vertices:>8}{flag}")
    print("* published and recounted forms disagree")


if __name__ == "__main__":
    main()
