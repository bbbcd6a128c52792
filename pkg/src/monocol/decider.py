"""Deciding 2-colorability without monochromatic k-cycles via SAT.

One boolean per vertex (true = red). Every k-cycle contributes an all-positive
clause (not all blue) and an all-negative clause (not all red), so models are
exactly the valid colorings.

The engine branches on the lowest-index unassigned vertex, red first. By
default it learns first-UIP clauses and backjumps; ``learning=False`` gives
plain chronological DPLL. Both are deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .graph import Coloring, Cycle, Graph, enumerate_k_cycles, is_valid_coloring

SATISFIABLE = "satisfiable"
UNSATISFIABLE = "unsatisfiable"


@dataclass(frozen=True)
class CnfEncoding:
    num_vars: int
    clauses: tuple[tuple[int, ...], ...]
    cycles: tuple[Cycle, ...] = ()
    k: int | None = None

    def to_dimacs(self) -> str:
        lines = [f"p cnf {self.num_vars} {len(self.clauses)}"]
        lines.extend(" ".join(map(str, c)) + " 0" for c in self.clauses)
        return "\n".join(lines) + "\n"


@dataclass
class SolveResult:
    status: str
    model: Coloring | None = None
    stats: dict = field(default_factory=dict)

    @property
    def satisfiable(self) -> bool:
        return self.status == SATISFIABLE


def encode_nae_cycles(graph: Graph, k: int, cycles=None) -> CnfEncoding:
    if cycles is None:
        cycles = enumerate_k_cycles(graph, k)
    clauses = []
    for cyc in cycles:
        clauses.append(tuple(v + 1 for v in cyc))
        clauses.append(tuple(-(v + 1) for v in cyc))
    return CnfEncoding(graph.num_vertices, tuple(clauses), tuple(cycles), k)


class Solver:
    """Reusable solver over a fixed clause set; ``solve`` takes assumptions."""

    def __init__(self, num_vars: int, clauses: Iterable[Iterable[int]], learning: bool = True):
        self.n = num_vars
        self.learning = learning
        self.vals = [0] * (2 * num_vars)  # per literal: 1 true, -1 false, 0 unset
        self.level = [0] * num_vars
        self.reason: list[list[int] | None] = [None] * num_vars
        self.trail: list[int] = []
        self.lim: list[int] = []
        self.qhead = 0
        self.watches: list[list[list[int]]] = [[] for _ in range(2 * num_vars)]
        self.ok = True
        self.num_learnt = 0
        self._next = 0
        self.stats = {"decisions": 0, "propagations": 0, "conflicts": 0}

        for raw in clauses:
            lits = []
            seen = set()
            taut = False
            for x in raw:
                if x == 0 or abs(x) > num_vars:
                    raise ValueError(f"literal {x} out of range")
                lit = 2 * (x - 1) if x > 0 else 2 * (-x - 1) + 1
                if lit ^ 1 in seen:
                    taut = True
                    break
                if lit not in seen:
                    seen.add(lit)
                    lits.append(lit)
            if taut:
                continue
            if not lits:
                self.ok = False
            elif len(lits) == 1:
                self._add_fact(lits[0])
            else:
                self.watches[lits[0]].append(lits)
                self.watches[lits[1]].append(lits)
        if self.ok and self._propagate() is not None:
            self.ok = False

    def _add_fact(self, lit: int):
        if self.vals[lit] == -1:
            self.ok = False
        elif self.vals[lit] == 0:
            self._enqueue(lit, None)

    def _enqueue(self, lit: int, reason):
        self.vals[lit] = 1
        self.vals[lit ^ 1] = -1
        v = lit >> 1
        self.level[v] = len(self.lim)
        self.reason[v] = reason
        self.trail.append(lit)

    def _propagate(self):
        vals = self.vals
        watches = self.watches
        trail = self.trail
        props = 0
        while self.qhead < len(trail):
            p = trail[self.qhead]
            self.qhead += 1
            props += 1
            false_lit = p ^ 1
            ws = watches[false_lit]
            keep = []
            for i, c in enumerate(ws):
                if c[0] == false_lit:
                    c[0], c[1] = c[1], c[0]
                first = c[0]
                if vals[first] == 1:
                    keep.append(c)
                    continue
                for t in range(2, len(c)):
                    if vals[c[t]] != -1:
                        c[1], c[t] = c[t], c[1]
                        watches[c[1]].append(c)
                        break
                else:
                    keep.append(c)
                    if vals[first] == -1:
                        keep.extend(ws[i + 1:])
                        watches[false_lit] = keep
                        self.qhead = len(trail)
                        self.stats["propagations"] += props
                        return c
                    self._enqueue(first, c)
            watches[false_lit] = keep
        self.stats["propagations"] += props
        return None

    def _cancel_until(self, lvl: int):
        if len(self.lim) <= lvl:
            return
        vals = self.vals
        nxt = self._next
        for lit in self.trail[self.lim[lvl]:]:
            vals[lit] = 0
            vals[lit ^ 1] = 0
            v = lit >> 1
            self.reason[v] = None
            if v < nxt:
                nxt = v
        self._next = nxt
        del self.trail[self.lim[lvl]:]
        del self.lim[lvl:]
        self.qhead = len(self.trail)

    def _analyze(self, confl):
        level = self.level
        reason = self.reason
        trail = self.trail
        cur = len(self.lim)
        seen = set()
        learnt = [0]
        counter = 0
        p = -1
        idx = len(trail) - 1
        while True:
            for q in confl:
                if q == p:
                    continue
                v = q >> 1
                if v not in seen and level[v] > 0:
                    seen.add(v)
                    if level[v] == cur:
                        counter += 1
                    else:
                        learnt.append(q)
            while (trail[idx] >> 1) not in seen:
                idx -= 1
            p = trail[idx]
            idx -= 1
            seen.discard(p >> 1)
            counter -= 1
            if counter == 0:
                break
            confl = reason[p >> 1]
        learnt[0] = p ^ 1
        if len(learnt) == 1:
            return learnt, 0
        best = max(range(1, len(learnt)), key=lambda i: level[learnt[i] >> 1])
        learnt[1], learnt[best] = learnt[best], learnt[1]
        return learnt, level[learnt[1] >> 1]

    def _pick_branch(self):
        vals = self.vals
        v = self._next
        while v < self.n and vals[2 * v] != 0:
            v += 1
        self._next = v
        return v

    def solve(self, assumptions: Iterable[int] = ()) -> bool | None:
        """Solve under assumption literals (DIMACS-signed). Returns True/False."""
        assumptions = [2 * (x - 1) if x > 0 else 2 * (-x - 1) + 1 for x in assumptions]
        self._cancel_until(0)
        if not self.ok:
            return False
        flipped: list[bool] = []
        n_assume = len(assumptions)
        while True:
            confl = self._propagate()
            if confl is not None:
                self.stats["conflicts"] += 1
                if not self.lim:
                    self.ok = False
                    return False
                if self.learning:
                    learnt, bt = self._analyze(confl)
                    self._cancel_until(bt)
                    if len(learnt) == 1:
                        self._enqueue(learnt[0], None)
                    else:
                        self.watches[learnt[0]].append(learnt)
                        self.watches[learnt[1]].append(learnt)
                        self.num_learnt += 1
                        self._enqueue(learnt[0], learnt)
                else:
                    d = len(self.lim)
                    while d > n_assume and flipped[d - 1]:
                        d -= 1
                    if d <= n_assume:
                        self._cancel_until(0)
                        return False
                    lit = self.trail[self.lim[d - 1]]
                    self._cancel_until(d - 1)
                    del flipped[d - 1:]
                    self.lim.append(len(self.trail))
                    flipped.append(True)
                    self._enqueue(lit ^ 1, None)
                continue

            if len(self.lim) < n_assume:
                a = assumptions[len(self.lim)]
                if self.vals[a] == -1:
                    self._cancel_until(0)
                    return False
                self.lim.append(len(self.trail))
                del flipped[len(self.lim) - 1:]
                flipped.append(True)
                if self.vals[a] == 0:
                    self._enqueue(a, None)
                continue

            v = self._pick_branch()
            if v == self.n:
                return True
            self.stats["decisions"] += 1
            self.lim.append(len(self.trail))
            del flipped[len(self.lim) - 1:]
            flipped.append(False)
            self._enqueue(2 * v, None)

    def model(self) -> Coloring:
        return tuple(self.vals[2 * v] == 1 for v in range(self.n))

    def solve_result(self, assumptions=()) -> SolveResult:
        before = dict(self.stats)
        sat = self.solve(assumptions)
        stats = {key: self.stats[key] - before[key] for key in before}
        if sat:
            result = SolveResult(SATISFIABLE, self.model(), stats)
        else:
            result = SolveResult(UNSATISFIABLE, None, stats)
        self._cancel_until(0)
        return result


def _assumption_literals(assumptions) -> list[int]:
    colors: dict[int, bool] = {}
    for vertex, color in assumptions:
        if colors.get(vertex, color) != color:
            raise ValueError(f"vertex {vertex} assumed both red and blue")
        colors[vertex] = color
    return [v + 1 if c else -(v + 1) for v, c in colors.items()]


def dpll_solve(encoding: CnfEncoding, assumptions=(), learning: bool = True) -> SolveResult:
    """Solve ``encoding`` with vertex colors fixed by ``assumptions``: pairs (vertex, is_red)."""
    lits = _assumption_literals(assumptions)
    return Solver(encoding.num_vars, encoding.clauses, learning).solve_result(lits)


def _checked_model(result: SolveResult, graph: Graph, encoding: CnfEncoding):
    if result.model is not None and not is_valid_coloring(
        graph, encoding.k or 3, result.model, encoding.cycles
    ):
        raise RuntimeError("solver returned a coloring with a monochromatic cycle")
    return result.model


def decide_col(graph: Graph, k: int, encoding: CnfEncoding | None = None,
               learning: bool = True) -> Coloring | None:
    """A valid coloring with vertex 0 red, or None if the graph is not (2,k)-colorable."""
    if encoding is None:
        encoding = encode_nae_cycles(graph, k)
    assumptions = [(0, True)] if graph.num_vertices else []
    result = dpll_solve(encoding, assumptions, learning)
    return _checked_model(result, graph, encoding)


def check_forcing(graph: Graph, k: int, x: int, y: int,
                  encoding: CnfEncoding | None = None, learning: bool = True) -> bool:
    """True iff the graph is colorable and no valid coloring gives x and y one color.

    Only the red/red case is solved; a blue/blue coloring flips to a red/red one.
    """
    if encoding is None:
        encoding = encode_nae_cycles(graph, k)
    solver = Solver(encoding.num_vars, encoding.clauses, learning)
    same = solver.solve_result(_assumption_literals([(x, True), (y, True)]))
    if same.satisfiable:
        return False
    colorable = solver.solve_result(_assumption_literals([(0, True)] if graph.num_vertices else []))
    return colorable.satisfiable
