"""Super-edge gadgets: K4 strings and loops for triangles, K6 trees for k >= 4.

A super-edge gadget is a graph with a designated edge (x, y) such that some
valid coloring exists and every valid coloring gives x and y different colors.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from . import graph as g
from .decider import Solver, encode_nae_cycles
from .graph import Graph

SQUARE = "square"
LEAF_APEX = "leaf_apex"  # descendant's first vertex joined to both ancestor vertices
ROOT_APEX = "root_apex"  # ancestor's first vertex joined to both descendant vertices
BAND_MODES = (SQUARE, LEAF_APEX, ROOT_APEX)


@dataclass(frozen=True)
class StringGraph:
    graph: Graph
    input_edge: tuple[int, int]
    output_edge: tuple[int, int]


@dataclass(frozen=True)
class Band:
    upper: int
    lower: int
    mode: str = SQUARE


@dataclass(frozen=True)
class TreeGadgetLayout:
    """Full binary tree of vertex pairs, numbered breadth-first: node i owns (2i, 2i+1)."""

    height: int
    ci_depths: tuple[int, ...]
    bands: tuple[Band, ...]

    @property
    def num_nodes(self) -> int:
        return 2 ** (self.height + 1) - 1

    def pair(self, node: int) -> tuple[int, int]:
        return 2 * node, 2 * node + 1

    @staticmethod
    def depth(node: int) -> int:
        return (node + 1).bit_length() - 1

    def children(self, node: int) -> tuple[int, ...]:
        if self.depth(node) >= self.height:
            return ()
        return 2 * node + 1, 2 * node + 2

    def nodes_at_depth(self, d: int) -> range:
        return range(2**d - 1, 2 ** (d + 1) - 1)

    def descendants_at(self, node: int, d: int) -> list[int]:
        out = [node]
        for _ in range(d - self.depth(node)):
            out = [c for u in out for c in (2 * u + 1, 2 * u + 2)]
        return out

    def path_to(self, leaf: int) -> list[int]:
        path = [leaf]
        while path[-1]:
            path.append((path[-1] - 1) // 2)
        return path[::-1]

    def donut_cycle(self, leaf: int) -> list[int]:
        """The cycle through both vertices of every cycle-inducing node on the root-to-leaf path.

        Square bands keep the two sides apart; a final leaf-apex band closes the
        cycle through the leaf's first vertex instead of a full rung.
        """
        ci = [u for u in self.path_to(leaf) if self.depth(u) in self.ci_depths]
        last = self.bands[-1].mode if self.bands else SQUARE
        if last == SQUARE:
            side0 = [self.pair(u)[0] for u in ci]
            side1 = [self.pair(u)[1] for u in ci]
            return side0 + side1[::-1]
        if last == LEAF_APEX:
            side0 = [self.pair(u)[0] for u in ci[:-1]]
            side1 = [self.pair(u)[1] for u in ci[:-1]]
            return side0 + [self.pair(ci[-1])[0]] + side1[::-1]
        raise ValueError(f"no donut cycle for a final {last!r} band")


@dataclass(frozen=True)
class Gadget:
    graph: Graph
    x: int
    y: int
    k: int
    family: str = "custom"
    layout: TreeGadgetLayout | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.x == self.y:
            raise ValueError("designated vertices must differ")
        if not self.graph.has_edge(self.x, self.y):
            raise ValueError(f"designated pair ({self.x}, {self.y}) is not an edge")

    def to_json_obj(self) -> dict:
        obj = self.graph.to_json_obj()
        obj["designated_edge"] = [self.x, self.y]
        obj["k"] = self.k
        obj["family"] = self.family
        return obj

    @classmethod
    def from_json_obj(cls, obj: dict) -> Gadget:
        x, y = obj["designated_edge"]
        return cls(Graph.from_json_obj(obj), int(x), int(y), int(obj["k"]), obj.get("family", "custom"))

    def to_dot(self) -> str:
        return g.to_dot(self.graph, highlight=(self.x, self.y), name="gadget")


def _clique(edges: set, vertices):
    for u, v in itertools.combinations(vertices, 2):
        edges.add((min(u, v), max(u, v)))


def k4_string(length: int) -> StringGraph:
    if length < 1:
        raise ValueError(f"string length must be >= 1, got {length}")
    edges: set = set()
    for b in range(length):
        _clique(edges, (2 * b, 2 * b + 1, 2 * b + 2, 2 * b + 3))
    return StringGraph(Graph.from_edges(2 * length + 2, edges), (0, 1), (2 * length, 2 * length + 1))


def loop_junctures(length: int) -> list[tuple[int, int]]:
    """Juncture j is shared by blocks j and j+1 (1-based); juncture 0 joins block ``length`` to block 1."""
    return [(2 * j, 2 * j + 1) for j in range(length)]


def k4_loop(length: int) -> Gadget:
    if length < 3:
        raise ValueError(f"loop length must be >= 3, got {length}")
    edges: set = set()
    for b in range(length):
        nxt = (b + 1) % length
        _clique(edges, (2 * b, 2 * b + 1, 2 * nxt, 2 * nxt + 1))
    return Gadget(Graph.from_edges(2 * length, edges), 0, 1, 3, f"loop{length}")


def build_tree_gadget(height: int, bands, k: int) -> Gadget:
    """Tree of K6 blocks with explicit cycle-inducing bands."""
    if height < 1:
        raise ValueError("tree height must be >= 1")
    bands = tuple(b if isinstance(b, Band) else Band(*b) for b in bands)
    for b in bands:
        if b.mode not in BAND_MODES or not 0 <= b.upper < b.lower <= height:
            raise ValueError(f"bad band {b}")
    ci = sorted({d for b in bands for d in (b.upper, b.lower)})
    layout = TreeGadgetLayout(height, tuple(ci), bands)
    edges: set = set()
    for node in range(layout.num_nodes):
        kids = layout.children(node)
        if kids:
            _clique(edges, layout.pair(node) + layout.pair(kids[0]) + layout.pair(kids[1]))
    for b in bands:
        for anc in layout.nodes_at_depth(b.upper):
            a0, a1 = layout.pair(anc)
            for desc in layout.descendants_at(anc, b.lower):
                d0, d1 = layout.pair(desc)
                if b.mode == SQUARE:
                    new = ((a0, d0), (a1, d1))
                elif b.mode == LEAF_APEX:
                    new = ((a0, d0), (a1, d0))
                else:
                    new = ((a0, d0), (a0, d1))
                edges.update(new)
    graph = Graph.from_edges(2 * layout.num_nodes, edges)
    return Gadget(graph, 0, 1, k, f"tree{k}", layout)


def tree_bands(k: int, height: int | None = None) -> list[Band]:
    """Cycle-inducing wiring used by :func:`tree_gadget`.

    Cycle-inducing depths are the multiples of 4 up to the height (and the
    height itself). Consecutive cycle-inducing depths are joined rung to rung;
    for odd k the deepest band joins the descendant's first vertex to both
    ancestor vertices, shortening the donut cycle by one.
    """
    q = (k - 1) // 2
    h = 4 * q if height is None else height
    depths = sorted(set(range(0, h, 4)) | {h})
    bands = [Band(a, b, SQUARE) for a, b in zip(depths, depths[1:])]
    if k % 2 and bands:
        bands[-1] = Band(bands[-1].upper, bands[-1].lower, LEAF_APEX)
    return bands


def tree_gadget(k: int, height: int | None = None) -> Gadget:
    """Binary-tree super-edge gadget for k >= 4; height defaults to 4 * floor((k-1)/2)."""
    if k < 4:
        raise ValueError(f"tree gadget needs k >= 4, got {k}")
    h = 4 * ((k - 1) // 2) if height is None else height
    return build_tree_gadget(h, tree_bands(k, h), k)


def gadget_for(k: int) -> Gadget:
    return k4_loop(5) if k == 3 else tree_gadget(k)


def tree_gadget_size(k: int) -> tuple[int, int]:
    """(vertices, edges) of ``tree_gadget(k)`` counted from its parts."""
    q = (k - 1) // 2
    h = 4 * q
    internal = 2**h - 1
    k6_edges = 15 * internal - (internal - 1)  # child pair edges shared with the parent K6
    ci_edges = sum(2 * 16**i for i in range(1, q + 1))
    return 2 * (2 ** (h + 1) - 1), k6_edges + ci_edges


# -- verification -------------------------------------------------------------


@dataclass
class VerificationReport:
    method: str
    exists: bool
    forcing: bool
    valid_colorings: int | None = None
    monochromatic_pair_colorings: int | None = None
    witness: tuple | None = None

    @property
    def certified(self) -> bool:
        return self.exists and self.forcing

    def to_json_obj(self) -> dict:
        return {
            "method": self.method,
            "exists": self.exists,
            "forcing": self.forcing,
            "certified": self.certified,
            "valid_colorings": self.valid_colorings,
            "monochromatic_pair_colorings": self.monochromatic_pair_colorings,
        }


def verify_super_edge(gadget: Gadget, method: str = "exhaustive", cap: int = 22) -> VerificationReport:
    """Check existence of a valid coloring and that x, y always differ.

    Forcing is reported vacuously true for uncolorable graphs; ``certified``
    needs both.
    """
    graph, k, x, y = gadget.graph, gadget.k, gadget.x, gadget.y
    if method == "exhaustive":
        if graph.num_vertices > cap:
            raise ValueError(f"{graph.num_vertices} vertices exceeds exhaustive cap {cap}")
        total = same = 0
        witness = None
        for col in g.iter_valid_colorings(graph, k):
            total += 1
            if col[x] == col[y]:
                same += 1
            elif witness is None:
                witness = col
        return VerificationReport(method, total > 0, same == 0, total, same, witness)
    if method == "sat":
        enc = encode_nae_cycles(graph, k)
        solver = Solver(enc.num_vars, enc.clauses)
        same = solver.solve_result([x + 1, y + 1])
        found = solver.solve_result([1] if graph.num_vertices else [])
        return VerificationReport(method, found.satisfiable, not same.satisfiable, witness=found.model)
    raise ValueError(f"unknown method {method!r}")
