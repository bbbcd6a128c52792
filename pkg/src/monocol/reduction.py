"""NAE-SAT to (2,k)-COL: build the graph for a formula and predict its size.

Layout of the basic reduction: each variable gets a literal pair joined by a
super-edge gadget, each clause becomes a k-cycle of slot vertices, and each
slot is joined by a super-edge gadget to the literal vertex of the same sign.
Vertices are numbered variable gadgets first, then clause cycles, then
occurrence gadgets, all in input order.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .formula import Assignment, Formula, WidthError
from .gadgets import Gadget, gadget_for, loop_junctures, k4_loop, tree_gadget_size
from .graph import Coloring, Graph


@dataclass(frozen=True)
class ReductionStats:
    variable_gadgets: int
    clause_gadgets: int
    super_edge_gadgets: int
    num_vertices: int
    num_edges: int


@dataclass
class ReductionOutput:
    graph: Graph
    k: int
    literal_vertex: dict[tuple[int, bool], int]  # (variable, negated) -> vertex
    occurrence_vertices: dict[tuple[int, int], int]  # (clause, slot) -> vertex
    super_edges: list[tuple[int, int]]
    stats: ReductionStats
    variant: str = "basic"
    labels: dict[int, str] = field(default_factory=dict)

    def to_json_obj(self) -> dict:
        obj = self.graph.to_json_obj()
        obj["k"] = self.k
        obj["variant"] = self.variant
        obj["labels"] = {str(v): name for v, name in sorted(self.labels.items())}
        return obj

    def extract_assignment(self, coloring: Coloring) -> Assignment:
        """Variable x is true iff its positive literal vertex is red."""
        return {
            var: bool(coloring[v])
            for (var, negated), v in sorted(self.literal_vertex.items())
            if not negated
        }


class _Builder:
    def __init__(self):
        self.n = 0
        self.edges: list[tuple[int, int]] = []
        self.super_edges: list[tuple[int, int]] = []

    def fresh(self, count: int = 1) -> list[int]:
        out = list(range(self.n, self.n + count))
        self.n += count
        return out

    def embed(self, gadget: Gadget, u: int, v: int):
        """Copy ``gadget`` with x -> u, y -> v and fresh interior vertices."""
        interior = [w for w in range(gadget.graph.num_vertices) if w not in (gadget.x, gadget.y)]
        mapping = dict(zip(interior, self.fresh(len(interior))))
        mapping[gadget.x] = u
        mapping[gadget.y] = v
        self.edges.extend((mapping[a], mapping[b]) for a, b in gadget.graph.edges)
        self.super_edges.append((u, v))

    def graph(self) -> Graph:
        return Graph.from_edges(self.n, self.edges)


def _check_width(formula: Formula, k: int):
    if k < 3:
        raise ValueError(f"k must be >= 3, got {k}")
    for i, clause in enumerate(formula.clauses):
        if len(clause) == 1:
            raise WidthError(f"clause {i} has a single literal")
        if len(clause) != k:
            raise WidthError(f"clause {i} has width {len(clause)}, expected exactly {k}")


def _clauses_and_occurrences(b: _Builder, formula: Formula, k: int, literal_vertex, gadget, labels):
    slots = {}
    for ci, clause in enumerate(formula.clauses):
        vs = b.fresh(k)
        for s, v in enumerate(vs):
            slots[(ci, s)] = v
            labels[v] = f"C{ci + 1}.{s}:{clause[s]}"
        b.edges.extend((vs[s], vs[(s + 1) % k]) for s in range(k))
    for ci, clause in enumerate(formula.clauses):
        for s, lit in enumerate(clause):
            b.embed(gadget, slots[(ci, s)], literal_vertex[(lit.variable, lit.negated)])
    return slots


def _finish(b: _Builder, formula, k, literal_vertex, slots, variable_gadgets, variant, labels):
    graph = b.graph()
    stats = ReductionStats(
        variable_gadgets=variable_gadgets,
        clause_gadgets=formula.num_clauses,
        super_edge_gadgets=len(b.super_edges),
        num_vertices=graph.num_vertices,
        num_edges=graph.num_edges,
    )
    return ReductionOutput(graph, k, literal_vertex, slots, b.super_edges, stats, variant, labels)


def reduce(formula: Formula, k: int, gadget: Gadget | None = None) -> ReductionOutput:
    _check_width(formula, k)
    gadget = gadget or gadget_for(k)
    b = _Builder()
    literal_vertex = {}
    labels = {}
    for var in range(1, formula.num_vars + 1):
        pos, neg = b.fresh(2)
        literal_vertex[(var, False)] = pos
        literal_vertex[(var, True)] = neg
        labels[pos], labels[neg] = f"x{var}", f"~x{var}"
        b.embed(gadget, pos, neg)
    slots = _clauses_and_occurrences(b, formula, k, literal_vertex, gadget, labels)
    return _finish(b, formula, k, literal_vertex, slots, formula.num_vars, "basic", labels)


def reduce_necklace(formula: Formula) -> ReductionOutput:
    """k=3 reduction with every variable pair on one K4 loop of length 2n+1.

    Variable i sits on the juncture between blocks 2i and 2i+1.
    """
    n = formula.num_vars
    if n <= 1:
        raise ValueError("necklace needs at least 2 variables (a loop of length 3 is K6)")
    _check_width(formula, 3)
    b = _Builder()
    necklace = k4_loop(2 * n + 1)
    b.fresh(necklace.graph.num_vertices)
    b.edges.extend(necklace.graph.edges)
    junctures = loop_junctures(2 * n + 1)
    literal_vertex = {}
    labels = {}
    for var in range(1, n + 1):
        pos, neg = junctures[2 * var]
        literal_vertex[(var, False)] = pos
        literal_vertex[(var, True)] = neg
        labels[pos], labels[neg] = f"x{var}", f"~x{var}"
        b.super_edges.append((pos, neg))
    slots = _clauses_and_occurrences(b, formula, 3, literal_vertex, k4_loop(5), labels)
    return _finish(b, formula, 3, literal_vertex, slots, 1, "necklace", labels)


# -- size predictions -----------------------------------------------------------


@dataclass(frozen=True)
class SizePrediction:
    k: int
    n: int
    m: int
    variant: str
    edges_published: int
    vertices_published: int
    edges_derived: int
    vertices_derived: int

    @property
    def edges_match(self) -> bool:
        return self.edges_published == self.edges_derived

    @property
    def vertices_match(self) -> bool:
        return self.vertices_published == self.vertices_derived

    @property
    def mismatch(self) -> bool:
        return not (self.edges_match and self.vertices_match)

    def report(self) -> str:
        rows = [
            f"sizes for k={self.k}, n={self.n}, m={self.m} ({self.variant})",
            f"  {'':9}{'published':>12}{'derived':>12}",
            f"  {'edges':9}{self.edges_published:>12}{self.edges_derived:>12}"
            + ("" if self.edges_match else "   MISMATCH"),
            f"  {'vertices':9}{self.vertices_published:>12}{self.vertices_derived:>12}"
            + ("" if self.vertices_match else "   MISMATCH"),
        ]
        return "\n".join(rows)


def published_sizes(k: int, n: int, m: int, variant: str = "basic") -> tuple[int, int]:
    """(edges, vertices) as printed in the source closed forms."""
    if variant == "necklace":
        return 78 * m + 10 * n + 5, 27 * m + 4 * n + 2
    if k == 3:
        return 78 * m + 25 * n, 24 * m + 10 * n
    if k == 4:
        return 976 * m + 243 * n, 244 * m + 62 * n
    gv, ge = published_general_gadget(k)
    # the general vertex formula multiplies by the full gadget size, not size - 2
    return k * m + ge * (k * m + n), k * m + 2 * n + gv * (k * m + n)


def published_general_gadget(k: int) -> tuple[int, int]:
    """(vertices, edges) factors of the printed general-k formulas."""
    q = (k - 1) // 2
    h = 4 * q
    edges = 15 * 2**h - 2 ** (h + 1) + 2 * 2**h + 32 * sum(2 ** (4 * i) for i in range(q + 1))
    return 2 * 2 ** (h + 1) - 2, edges


def derived_sizes(k: int, n: int, m: int, variant: str = "basic") -> tuple[int, int]:
    """(edges, vertices) recounted from gadget sizes and the wiring rules."""
    if variant == "necklace":
        loop_len = 2 * n + 1
        return 5 * loop_len + 3 * m + 25 * 3 * m, 2 * loop_len + 3 * m + 8 * 3 * m
    gv, ge = (10, 25) if k == 3 else tree_gadget_size(k)
    copies = k * m + n
    return k * m + ge * copies, k * m + 2 * n + (gv - 2) * copies


def predicted_sizes(k: int, n: int, m: int, variant: str = "basic") -> SizePrediction:
    if variant not in ("basic", "necklace"):
        raise ValueError(f"unknown variant {variant!r}")
    if variant == "necklace" and k != 3:
        raise ValueError("the necklace variant exists only for k=3")
    ep, vp = published_sizes(k, n, m, variant)
    ed, vd = derived_sizes(k, n, m, variant)
    return SizePrediction(k, n, m, variant, ep, vp, ed, vd)
