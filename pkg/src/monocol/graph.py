"""Simple undirected graphs, exact-length cycles and the 2-coloring predicate.

Colorings are tuples of booleans indexed by vertex, ``True`` meaning red.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Sequence

RED = True
BLUE = False

Coloring = tuple[bool, ...]
Cycle = tuple[int, ...]


@dataclass(frozen=True)
class Graph:
    num_vertices: int
    edges: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        if self.num_vertices < 0:
            raise ValueError("num_vertices must be >= 0")
        edges = tuple(tuple(e) for e in self.edges)
        object.__setattr__(self, "edges", edges)
        seen = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if not (0 <= u < v < self.num_vertices):
                raise ValueError(f"edge ({u}, {v}) is not normalized or out of range")
            if (u, v) in seen:
                raise ValueError(f"duplicate edge ({u}, {v})")
            seen.add((u, v))

    @classmethod
    def from_edges(cls, num_vertices: int, edges: Iterable[Sequence[int]]) -> Graph:
        """Normalize endpoints, drop repeated edges and sort."""
        norm = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            norm.add((u, v) if u < v else (v, u))
        return cls(num_vertices, tuple(sorted(norm)))

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        adj: list[set[int]] = [set() for _ in range(self.num_vertices)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return tuple(frozenset(a) for a in adj)

    @cached_property
    def sorted_neighbors(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(sorted(a)) for a in self.adjacency)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def is_connected(self) -> bool:
        if self.num_vertices <= 1:
            return True
        seen = {0}
        stack = [0]
        while stack:
            for w in self.adjacency[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.num_vertices

    def to_json_obj(self) -> dict:
        return {"num_vertices": self.num_vertices, "edges": [list(e) for e in self.edges]}

    @classmethod
    def from_json_obj(cls, obj: dict) -> Graph:
        return cls.from_edges(int(obj["num_vertices"]), (tuple(e) for e in obj["edges"]))


def complete_graph(n: int) -> Graph:
    return Graph(n, tuple((u, v) for u in range(n) for v in range(u + 1, n)))


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def canonical_cycle(vertices: Sequence[int]) -> Cycle:
    """Rotate to the smallest vertex, then pick the direction with the smaller second vertex."""
    i = min(range(len(vertices)), key=vertices.__getitem__)
    rot = tuple(vertices[i:]) + tuple(vertices[:i])
    if rot[1] > rot[-1]:
        rot = (rot[0],) + tuple(reversed(rot[1:]))
    return rot


def enumerate_k_cycles(graph: Graph, k: int) -> list[Cycle]:
    """All simple cycles with exactly ``k`` vertices, canonical and in lexicographic order.

    Each cycle is grown from its smallest vertex through larger vertices only.
    Both traversal directions reach it; the one whose second vertex is smaller
    than its last is kept.
    """
    if k < 3:
        raise ValueError(f"cycle length must be >= 3, got {k}")
    n = graph.num_vertices
    nbrs = graph.sorted_neighbors
    adj = graph.adjacency
    out: list[Cycle] = []
    on_path = [False] * n
    path: list[int] = []

    def extend(v: int, start: int, closing: frozenset[int]):
        if len(path) == k - 1:
            # w > second is the direction tiebreak (and implies w > start)
            second = path[1]
            for w in nbrs[v]:
                if w > second and not on_path[w] and w in closing:
                    out.append(tuple(path) + (w,))
            return
        for w in nbrs[v]:
            if w > start and not on_path[w]:
                on_path[w] = True
                path.append(w)
                extend(w, start, closing)
                path.pop()
                on_path[w] = False

    for s in range(n):
        if len(nbrs[s]) < 2:
            continue
        on_path[s] = True
        path.append(s)
        extend(s, s, adj[s])
        path.pop()
        on_path[s] = False
    return out


def _check_total(graph: Graph, coloring: Sequence[bool]):
    if len(coloring) != graph.num_vertices:
        raise ValueError(
            f"coloring has {len(coloring)} entries for {graph.num_vertices} vertices"
        )


def is_monochromatic(cycle: Sequence[int], coloring: Sequence[bool]) -> bool:
    first = coloring[cycle[0]]
    return all(coloring[v] == first for v in cycle)


def is_valid_coloring(graph: Graph, k: int, coloring: Sequence[bool], cycles=None) -> bool:
    _check_total(graph, coloring)
    if cycles is None:
        cycles = enumerate_k_cycles(graph, k)
    return not any(is_monochromatic(c, coloring) for c in cycles)


def monochromatic_cycles(graph: Graph, k: int, coloring: Sequence[bool]) -> list[Cycle]:
    _check_total(graph, coloring)
    return [c for c in enumerate_k_cycles(graph, k) if is_monochromatic(c, coloring)]


def flip(coloring: Sequence[bool]) -> Coloring:
    return tuple(not c for c in coloring)


def iter_valid_colorings(graph: Graph, k: int, fixed: dict[int, bool] | None = None,
                         cycles=None) -> Iterator[Coloring]:
    """Every valid coloring extending ``fixed``, in lexicographic order with red first.

    Backtracking over vertices in index order; a cycle is checked once its
    largest vertex is colored.
    """
    n = graph.num_vertices
    fixed = fixed or {}
    if cycles is None:
        cycles = enumerate_k_cycles(graph, k)
    closing: list[list[int]] = [[] for _ in range(n)]
    for c in cycles:
        mask = 0
        for v in c:
            mask |= 1 << v
        closing[max(c)].append(mask)
    choices = [(fixed[v],) if v in fixed else (RED, BLUE) for v in range(n)]

    def rec(v: int, red: int) -> Iterator[int]:
        if v == n:
            yield red
            return
        for color in choices[v]:
            r = red | (1 << v) if color else red
            if all((r & m) not in (0, m) for m in closing[v]):
                yield from rec(v + 1, r)

    for red in rec(0, 0):
        yield tuple(bool(red >> v & 1) for v in range(n))


def brute_force_coloring(graph: Graph, k: int, cap: int = 22) -> Coloring | None:
    """Lexicographically smallest valid coloring (red before blue) with vertex 0 red."""
    if graph.num_vertices > cap:
        raise ValueError(f"{graph.num_vertices} vertices exceeds brute-force cap {cap}")
    fixed = {0: RED} if graph.num_vertices else None
    return next(iter_valid_colorings(graph, k, fixed), None)


# -- serialization ------------------------------------------------------------


def coloring_to_json_obj(coloring: Sequence[bool]) -> dict:
    return {"colors": ["red" if c else "blue" for c in coloring]}


def coloring_from_json_obj(obj) -> Coloring:
    colors = obj["colors"] if isinstance(obj, dict) else obj
    out = []
    for c in colors:
        if c not in ("red", "blue"):
            raise ValueError(f"unknown color {c!r}")
        out.append(c == "red")
    return tuple(out)


def dumps(obj: dict) -> str:
    return json.dumps(obj, indent=None, separators=(", ", ": ")) + "\n"


def to_dot(graph: Graph, coloring: Sequence[bool] | None = None,
           highlight: Sequence[int] = (), labels: dict[int, str] | None = None,
           name: str = "G") -> str:
    if coloring is not None:
        _check_total(graph, coloring)
    hl = set(highlight)
    lines = [f"graph {name} {{", "  node [shape=circle];"]
    for v in range(graph.num_vertices):
        attrs = []
        if labels and v in labels:
            attrs.append(f'label="{labels[v]}"')
        if coloring is not None:
            attrs.append(f'style=filled, fillcolor={"red" if coloring[v] else "blue"}')
        if v in hl:
            attrs.append("penwidth=3, shape=doublecircle")
        lines.append(f"  {v}" + (f" [{', '.join(attrs)}]" if attrs else "") + ";")
    for u, v in graph.edges:
        bold = " [penwidth=3]" if u in hl and v in hl else ""
        lines.append(f"  {u} -- {v}{bold};")
    lines.append("}")
    return "\n".join(lines) + "\n"
