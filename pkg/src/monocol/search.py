"""Exhaustive search for the smallest super-edge gadgets.

Graphs are generated one isomorphism class at a time. Canonical forms come
from individualization-refinement: the certificate of a graph is the largest
upper-triangle adjacency bit string over all leaf orderings of the search
tree. Twins (vertices with equal neighbourhoods apart from each other) are
interchangeable, so only one twin per cell is individualized.

Level n is built from level n-1 by adding a vertex whose degree does not
exceed the minimum degree of the new graph; every graph arises this way by
deleting a vertex of minimum degree.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

import numpy as np

from .gadgets import Gadget
from .graph import Graph, enumerate_k_cycles

KNOWN_GRAPH_COUNTS = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044, 8: 12346, 9: 274668}

SEARCH_ASSUMPTIONS = (
    "designated pair must be an edge of the candidate graph",
    "candidates are connected: a disconnected gadget contains a smaller one",
    "candidates contain a k-cycle: otherwise every coloring is valid and nothing is forced",
)
PRUNE_ASSUMPTION = (
    "every vertex lies on a k-cycle: a vertex on none can be deleted without "
    "losing existence or forcing"
)


def _popcount(x: int) -> int:
    return bin(x).count("1")


def _refine(adj: list[int], cells: list[list[int]]) -> list[list[int]]:
    while True:
        masks = []
        for c in cells:
            m = 0
            for v in c:
                m |= 1 << v
            masks.append(m)
        out = []
        for c in cells:
            if len(c) == 1:
                out.append(c)
                continue
            groups: dict[tuple, list[int]] = {}
            for v in c:
                a = adj[v]
                sig = tuple(_popcount(a & m) for m in masks)
                groups.setdefault(sig, []).append(v)
            if len(groups) == 1:
                out.append(c)
            else:
                out.extend(groups[s] for s in sorted(groups))
        if len(out) == len(cells):
            return out
        cells = out


def _cert_of_order(adj: list[int], order: list[int]) -> int:
    cert = 0
    n = len(order)
    for i in range(n):
        a = adj[order[i]]
        for j in range(i + 1, n):
            cert = (cert << 1) | ((a >> order[j]) & 1)
    return cert


def canonical_form(adj: list[int]) -> tuple[int, list[int]]:
    """Certificate and a canonical vertex order (new position -> old vertex)."""
    n = len(adj)
    if n == 0:
        return 0, []
    best = [-1, None]

    def search(cells):
        t = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if t is None:
            order = [c[0] for c in cells]
            cert = _cert_of_order(adj, order)
            if cert > best[0]:
                best[0], best[1] = cert, order
            return
        cell = cells[t]
        tried: list[int] = []
        for v in cell:
            av = adj[v]
            if any((adj[u] & ~(1 << v)) == (av & ~(1 << u)) for u in tried):
                continue
            tried.append(v)
            rest = [w for w in cell if w != v]
            search(_refine(adj, cells[:t] + [[v], rest] + cells[t + 1:]))

    search(_refine(adj, [list(range(n))]))
    return best[0], best[1]


def relabel(adj: list[int], order: list[int]) -> tuple[int, ...]:
    pos = {v: i for i, v in enumerate(order)}
    out = []
    for v in order:
        m = 0
        a = adj[v]
        for w in range(len(adj)):
            if a >> w & 1:
                m |= 1 << pos[w]
        out.append(m)
    return tuple(out)


def adj_to_graph(adj) -> Graph:
    n = len(adj)
    return Graph.from_edges(n, ((u, v) for u in range(n) for v in range(u + 1, n) if adj[u] >> v & 1))


def next_level(level: list[tuple[int, ...]], deadline: float | None = None) -> list[tuple[int, ...]]:
    """All isomorphism classes on one more vertex, sorted by certificate."""
    found: dict[int, tuple[int, ...]] = {}
    for parent in level:
        m = len(parent)
        degs = [_popcount(a) for a in parent]
        for s in range(1 << m):
            d = _popcount(s)
            if d > 0 and any(degs[u] + (s >> u & 1) < d for u in range(m)):
                continue
            adj = [a | ((s >> u & 1) << m) for u, a in enumerate(parent)] + [s]
            cert, order = canonical_form(adj)
            if cert not in found:
                found[cert] = relabel(adj, order)
        if deadline is not None and time.monotonic() > deadline:
            raise TimeoutError
    return [found[c] for c in sorted(found)]


def graph_levels(max_n: int, deadline: float | None = None):
    """Yield (n, canonical graphs on n vertices) for n = 1..max_n."""
    level = [(0,)]
    for n in range(1, max_n + 1):
        if n > 1:
            level = next_level(level, deadline)
        yield n, level


def count_graphs(max_n: int) -> dict[int, int]:
    return {n: len(level) for n, level in graph_levels(max_n)}


# -- per-graph gadget test ----------------------------------------------------


def gadget_edges(adj, k: int, prune: bool = True) -> tuple[bool, list[tuple[int, int]]]:
    """(passes filters, edges usable as a designated pair) for one graph."""
    graph = adj_to_graph(adj)
    n = graph.num_vertices
    if not graph.is_connected():
        return False, []
    cycles = enumerate_k_cycles(graph, k)
    if not cycles:
        return False, []
    masks = [sum(1 << v for v in c) for c in cycles]
    if prune:
        covered = 0
        for m in masks:
            covered |= m
        if covered != (1 << n) - 1:
            return False, []
    cols = np.arange(1 << n, dtype=np.int64)
    valid = np.ones(1 << n, dtype=bool)
    for m in masks:
        hit = cols & m
        valid &= (hit != 0) & (hit != m)
    if not valid.any():
        return True, []
    good = cols[valid]
    out = []
    for u, v in graph.edges:
        if not (((good >> u) ^ (good >> v)) & 1 == 0).any():
            out.append((u, v))
    return True, out


def _evaluate_chunk(args):
    graphs, k, prune = args
    return [gadget_edges(adj, k, prune) for adj in graphs]


# -- the search -----------------------------------------------------------------


@dataclass
class SearchReport:
    k: int
    max_vertices: int
    objective: str
    prune: bool
    canonical_counts: dict[int, int] = field(default_factory=dict)
    candidates: dict[int, int] = field(default_factory=dict)
    gadget_graphs: dict[int, int] = field(default_factory=dict)
    min_edges: dict[int, int] = field(default_factory=dict)
    complete: bool = True
    resume: dict | None = None
    elapsed: float = 0.0
    winner: Gadget | None = None
    assumptions: tuple[str, ...] = SEARCH_ASSUMPTIONS

    @property
    def graphs_examined(self) -> int:
        return sum(self.canonical_counts.values())

    def to_json_obj(self) -> dict:
        return {
            "k": self.k,
            "budget": {"max_vertices": self.max_vertices},
            "objective": self.objective,
            "prune": self.prune,
            "graphs_examined": self.graphs_examined,
            "canonical_counts": {str(n): c for n, c in self.canonical_counts.items()},
            "candidates": {str(n): c for n, c in self.candidates.items()},
            "gadget_graphs": {str(n): c for n, c in self.gadget_graphs.items()},
            "min_edges": {str(n): c for n, c in self.min_edges.items()},
            "complete": self.complete,
            "resume": self.resume,
            "elapsed": round(self.elapsed, 3),
            "assumptions": list(self.assumptions),
            "winner": self.winner.to_json_obj() if self.winner else None,
        }


def search_min_gadget(k: int, max_vertices: int, objective: str = "vertices", prune: bool = True,
                      workers: int = 1, max_seconds: float | None = None, resume: dict | None = None,
                      progress=None) -> SearchReport:
    """Smallest certified gadget on at most ``max_vertices`` vertices, or none.

    Ties break by edge count, then vertex count, then the lexicographically
    smallest canonical adjacency string. A budget overrun returns a partial
    report whose ``resume`` token restarts the search where it stopped.
    """
    if objective not in ("vertices", "edges"):
        raise ValueError(f"unknown objective {objective!r}")
    if k < 3:
        raise ValueError("k must be >= 3")
    start = time.monotonic()
    deadline = start + max_seconds if max_seconds is not None else None
    report = SearchReport(k, max_vertices, objective, prune)
    if prune:
        report.assumptions = SEARCH_ASSUMPTIONS + (PRUNE_ASSUMPTION,)
    best = None  # (edges, n, cert, adj, (x, y))
    start_n, start_idx = 1, 0
    if resume:
        start_n, start_idx = resume["n"], resume["index"]
        report.canonical_counts = {int(a): b for a, b in resume["canonical_counts"].items()}
        report.candidates = {int(a): b for a, b in resume["candidates"].items()}
        report.gadget_graphs = {int(a): b for a, b in resume["gadget_graphs"].items()}
        report.min_edges = {int(a): b for a, b in resume.get("min_edges", {}).items()}
        if resume.get("best"):
            e, n0, adj0, xy = resume["best"]
            best = (e, n0, None, tuple(adj0), tuple(xy))

    pool = None
    if workers > 1:
        from concurrent.futures import ProcessPoolExecutor
        pool = ProcessPoolExecutor(workers)

    def stop(n, idx):
        report.complete = False
        report.resume = {
            "n": n,
            "index": idx,
            "canonical_counts": {str(a): b for a, b in report.canonical_counts.items()},
            "candidates": {str(a): b for a, b in report.candidates.items() if a < n},
            "gadget_graphs": {str(a): b for a, b in report.gadget_graphs.items() if a < n},
            "min_edges": {str(a): b for a, b in report.min_edges.items()},
            "best": [best[0], best[1], list(best[3]), list(best[4])] if best else None,
        }

    try:
        levels = graph_levels(max_vertices, deadline)
        while True:
            try:
                n, level = next(levels)
            except StopIteration:
                break
            except TimeoutError:
                stop(n + 1, 0)
                break
            report.canonical_counts[n] = len(level)
            if n < start_n:
                continue
            idx0 = start_idx if n == start_n else 0
            if idx0 == 0:
                report.candidates[n] = report.gadget_graphs[n] = 0
            chunk = 256 * max(workers, 1)
            timed_out = False
            for lo in range(idx0, len(level), chunk):
                if deadline is not None and time.monotonic() > deadline:
                    stop(n, lo)
                    timed_out = True
                    break
                part = level[lo:lo + chunk]
                if pool is not None:
                    step = max(1, len(part) // workers)
                    jobs = [(part[i:i + step], k, prune) for i in range(0, len(part), step)]
                    results = [r for res in pool.map(_evaluate_chunk, jobs) for r in res]
                else:
                    results = _evaluate_chunk((part, k, prune))
                for adj, (passed, edges) in zip(part, results):
                    report.candidates[n] += passed
                    if not edges:
                        continue
                    report.gadget_graphs[n] += 1
                    e = sum(_popcount(a) for a in adj) // 2
                    report.min_edges[n] = min(e, report.min_edges.get(n, e))
                    cand = (e, n, _cert_of_order(list(adj), list(range(n))), adj, edges[0])
                    if best is None or _rank(cand) < _rank(best):
                        best = cand
                if progress:
                    progress(f"n={n}: {min(lo + chunk, len(level))}/{len(level)} graphs, "
                             f"{report.gadget_graphs[n]} with a gadget edge")
            if timed_out:
                break
            if objective == "vertices" and best is not None:
                break
    finally:
        if pool is not None:
            pool.shutdown()

    if best is not None:
        e, n, _, adj, (x, y) = best
        report.winner = Gadget(adj_to_graph(adj), x, y, k, f"search{n}")
    report.elapsed = time.monotonic() - start
    return report


def _rank(cand):
    e, n, cert, adj, _ = cand
    if cert is None:
        cert = _cert_of_order(list(adj), list(range(n)))
    return (e, n, cert)
