"""Run the k=3 reduction with the 7-vertex gadget found by the search.

Checks on random formulas that NAE-satisfiability and colorability still
agree, and compares graph sizes with the loop(5) gadget.

    python3 scripts/small_gadget_reduction.py [--formulas 200] [--seed 1]
"""

import argparse
import random

from monocol.decider import decide_col
from monocol.formula import Formula, brute_force_nae, eval_nae
from monocol.gadgets import k4_loop, verify_super_edge
from monocol.reduction import reduce
from monocol.search import search_min_gadget


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--formulas", type=int, default=200)
    ap.add_argument("--seed", type=int, default=1)
    args = ap.parse_args()
    rng = random.Random(args.seed)

    small = search_min_gadget(3, 7).winner
    assert small is not None and verify_super_edge(small).certified
    loop = k4_loop(5)
    print(f"search gadget: {small.graph.num_vertices} vertices, {small.graph.num_edges} edges; "
          f"loop(5): {loop.graph.num_vertices} vertices, {loop.graph.num_edges} edges")

    agree = sat = 0
    for _ in range(args.formulas):
        n, m = rng.randint(1, 5), rng.randint(1, 6)
        f = Formula.from_ints(n, [[rng.choice((1, -1)) * rng.randint(1, n) for _ in range(3)]
                                  for _ in range(m)])
        out = reduce(f, 3, small)
        col = decide_col(out.graph, 3)
        model = brute_force_nae(f)
        sat += model is not None
        ok = (col is None) == (model is None)
        if col is not None:
            ok &= eval_nae(f, out.extract_assignment(col))
        agree += ok
    print(f"{agree}/{args.formulas} formulas agree ({sat} NAE-satisfiable)")

    for n, m in ((3, 3), (10, 20)):
        f = Formula.from_ints(n, [[rng.randint(1, n) for _ in range(3)] for _ in range(m)])
        a, b = reduce(f, 3, loop).graph, reduce(f, 3, small).graph
        print(f"n={n}, m={m}: loop(5) {a.num_edges} edges/{a.num_vertices} vertices, "
              f"search gadget {b.num_edges} edges/{b.num_vertices} vertices")

if __name__ == "__main__":
    main()
