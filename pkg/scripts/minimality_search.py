"""Exhaustive census of k=3 super-edge gadgets on few vertices.

Prints, for every vertex count, how many isomorphism classes were generated,
how many passed the filters, and how many gadget graphs exist at each edge
count. Ends with the smallest gadget and an independent check of it.

    python3 scripts/minimality_search.py [--max-vertices 9] [--no-prune] [--json out.json]
"""

import argparse
import collections
import itertools
import json
import time

from monocol import graph as g
from monocol.gadgets import verify_super_edge
from monocol.search import KNOWN_GRAPH_COUNTS, gadget_edges, graph_levels, search_min_gadget


def census(k, max_vertices, prune):
    rows = {}
    for n, level in graph_levels(max_vertices):
        t = time.perf_counter()
        passed = 0
        by_edges = collections.Counter()
        for adj in level:
            ok, edges = gadget_edges(adj, k, prune)
            passed += ok
            if edges:
                by_edges[sum(bin(a).count("1") for a in adj) // 2] += 1
        rows[n] = {
            "graphs": len(level),
            "known": KNOWN_GRAPH_COUNTS.get(n),
            "candidates": passed,
            "gadgets_by_edges": dict(sorted(by_edges.items())),
            "seconds": round(time.perf_counter() - t, 1),
        }
        print(f"n={n}: {len(level)} graphs (known {KNOWN_GRAPH_COUNTS.get(n)}), {passed} candidates, "
              f"gadgets by edge count {dict(sorted(by_edges.items()))}  [{rows[n]['seconds']}s]",
              flush=True)
    return rows


def brute_check(gadget):
    """2^n enumeration without the package's cycle enumerator."""
    n = gadget.graph.num_vertices
    adj = gadget.graph.adjacency
    triangles = [t for t in itertools.combinations(range(n), 3)
                 if all(b in adj[a] for a, b in itertools.combinations(t, 2))]
    valid = [c for c in itertools.product((True, False), repeat=n)
             if all(len({c[v] for v in t}) == 2 for t in triangles)]
    return len(valid), all(c[gadget.x] != c[gadget.y] for c in valid)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--k", type=int, default=3)
    ap.add_argument("--max-vertices", type=int, default=9)
    ap.add_argument("--no-prune", action="store_true")
    ap.add_argument("--json")
    args = ap.parse_args()

    rows = census(args.k, args.max_vertices, not args.no_prune)
    rep = search_min_gadget(args.k, args.max_vertices)
    w = rep.winner
    out = {"k": args.k, "census": rows, "winner": w.to_json_obj() if w else None}
    if w is not None:
        print(f"\nsmallest gadget: {w.graph.num_vertices} vertices, {w.graph.num_edges} edges, "
              f"designated edge ({w.x}, {w.y})")
        print("edges:", " ".join(f"{u}-{v}" for u, v in w.graph.edges))
        report = verify_super_edge(w, "exhaustive")
        print(f"verify_super_edge: certified={report.certified}, {report.valid_colorings} valid colorings")
        if args.k == 3:
            count, forcing = brute_check(w)
            print(f"independent triangle check: {count} valid colorings, forcing={forcing}")
        print(g.to_dot(w.graph, report.witness, (w.x, w.y), name="smallest"))
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(out, fh, indent=2)


if __name__ == "__main__":
    main()
