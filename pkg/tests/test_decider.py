import random

import pytest
from hypothesis import given, settings, strategies as st

from monocol import graph as g
from monocol.decider import Solver, check_forcing, decide_col, dpll_solve, encode_nae_cycles
from monocol.formula import parse_dimacs
from monocol.gadgets import k4_loop
from monocol.graph import complete_graph

from _oracles import naive_valid_colorings
from conftest import random_graph


def test_encoding_two_clauses_per_cycle():
    enc = encode_nae_cycles(complete_graph(4), 3)
    assert enc.num_vars == 4
    assert len(enc.clauses) == 2 * len(enc.cycles) == 8
    assert enc.clauses[:2] == ((1, 2, 3), (-1, -2, -3))
    f = parse_dimacs(enc.to_dimacs())
    assert f.num_vars == 4 and f.to_ints() == [list(c) for c in enc.clauses]


def test_assumptions():
    enc = encode_nae_cycles(complete_graph(4), 3)
    res = dpll_solve(enc, [(0, True), (1, True)])
    assert res.satisfiable and res.model == (True, True, False, False)
    assert not dpll_solve(enc, [(0, True), (1, True), (2, True)]).satisfiable
    with pytest.raises(ValueError):
        dpll_solve(enc, [(0, True), (0, False)])


def test_solver_reuse_and_level_zero_conflict():
    s = Solver(2, [(1, 2), (-1, -2)])
    assert s.solve([1]) and s.model() == (True, False)
    s._cancel_until(0)
    assert not s.solve([1, 2])
    s._cancel_until(0)
    assert s.solve([-1])
    assert not Solver(1, [(1,), (-1,)]).solve()


@pytest.mark.parametrize("learning", [True, False])
def test_decide_col_small_cases(learning):
    assert decide_col(complete_graph(5), 3, learning=learning) is None
    assert decide_col(complete_graph(7), 4, learning=learning) is None
    col = decide_col(complete_graph(6), 4, learning=learning)
    assert col[0] and sorted(col) == [False] * 3 + [True] * 3
    assert decide_col(g.Graph(0), 3, learning=learning) == ()


@settings(max_examples=120, deadline=None)
@given(st.integers(0, 2**32), st.integers(3, 5), st.booleans())
def test_decide_col_matches_exhaustive(seed, k, learning):
    rng = random.Random(seed)
    graph = random_graph(rng, rng.randint(1, 9), rng.choice((0.3, 0.6, 0.9)))
    expected = naive_valid_colorings(graph.num_vertices, graph.edges, k)
    col = decide_col(graph, k, learning=learning)
    assert (col is None) == (not expected)
    if col is not None:
        assert col in expected and col[0]


def test_learning_and_plain_agree_with_brute(rng):
    for _ in range(40):
        graph = random_graph(rng, rng.randint(6, 13), rng.choice((0.4, 0.6, 0.8)))
        k = rng.choice((3, 4))
        brute = g.brute_force_coloring(graph, k)
        for learning in (True, False):
            col = decide_col(graph, k, learning=learning)
            assert (col is None) == (brute is None)
            if col is not None:
                assert g.is_valid_coloring(graph, k, col)


def test_check_forcing_on_loops():
    loop5, loop4 = k4_loop(5), k4_loop(4)
    assert check_forcing(loop5.graph, 3, loop5.x, loop5.y)
    assert not check_forcing(loop4.graph, 3, loop4.x, loop4.y)
    # uncolorable graphs force nothing
    assert not check_forcing(complete_graph(6), 3, 0, 1)


def test_stats_reported():
    loop = k4_loop(5)
    res = dpll_solve(encode_nae_cycles(loop.graph, 3), [(0, True), (1, True)])
    assert not res.satisfiable
    assert res.stats["conflicts"] >= 1
