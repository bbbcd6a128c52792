import itertools

import pytest
from hypothesis import given, settings, strategies as st

from monocol.formula import (
    ClauseCountError, DimacsError, Formula, HeaderError, Literal, LiteralRangeError,
    UnterminatedClauseError, WidthError, brute_force_nae, eval_nae, pad_to_width,
    parse_dimacs, serialize_dimacs,
)

from _oracles import naive_nae_models

SAMPLE = """c three variables
c two clauses
p cnf 3 2
1 -2 3 0
-1 2
 -3 0
"""


def formulas(max_vars=5, max_clauses=5, max_width=4):
    @st.composite
    def build(draw):
        n = draw(st.integers(1, max_vars))
        lit = st.integers(1, n).flatmap(lambda v: st.sampled_from((v, -v)))
        clauses = draw(st.lists(st.lists(lit, min_size=1, max_size=max_width), max_size=max_clauses))
        return Formula.from_ints(n, clauses)
    return build()


def test_parse_sample():
    f = parse_dimacs(SAMPLE)
    assert f.num_vars == 3
    assert f.to_ints() == [[1, -2, 3], [-1, 2, -3]]
    assert f.clauses[0][1] == Literal(2, True)
    assert str(f.clauses[0][1]) == "~x2"


def test_percent_terminator_and_blank_lines():
    f = parse_dimacs("p cnf 2 1\n\n1 2 0\n%\n0\n")
    assert f.to_ints() == [[1, 2]]


@pytest.mark.parametrize("text, err", [
    ("1 2 0\n", HeaderError),
    ("p cnf 2\n1 2 0\n", HeaderError),
    ("p cnf 2 1\np cnf 2 1\n1 2 0\n", HeaderError),
    ("p dnf 2 1\n1 2 0\n", HeaderError),
    ("p cnf 2 1\n1 3 0\n", LiteralRangeError),
    ("p cnf 2 2\n1 2 0\n", ClauseCountError),
    ("p cnf 2 1\n1 2\n", UnterminatedClauseError),
    ("p cnf 2 1\n1 x 0\n", DimacsError),
    ("p cnf 2 1\n0\n", DimacsError),
    ("", HeaderError),
])
def test_parse_errors(text, err):
    with pytest.raises(err):
        parse_dimacs(text)


def test_error_reports_line():
    with pytest.raises(LiteralRangeError) as info:
        parse_dimacs("c\np cnf 2 1\n1 -5 0\n")
    assert info.value.line == 3


@given(formulas())
def test_dimacs_round_trip(f):
    assert parse_dimacs(serialize_dimacs(f, ["generated"])) == f


def test_literal_ints():
    for v in (1, -1, 7, -12):
        assert Literal.from_int(v).to_int() == v
    assert -Literal(3) == Literal(3, True)
    with pytest.raises(ValueError):
        Literal.from_int(0)


def test_eval_nae_clause_semantics():
    f = Formula.from_ints(2, [[1, 2]])
    assert eval_nae(f, {1: True, 2: False})
    assert not eval_nae(f, {1: True, 2: True})
    assert not eval_nae(f, {1: False, 2: False})
    g = Formula.from_ints(2, [[1, -2]])
    assert eval_nae(g, {1: True, 2: True})


def test_eval_nae_missing_variable():
    with pytest.raises(ValueError):
        eval_nae(Formula.from_ints(2, [[1, 2]]), {1: True})


def test_brute_force_examples():
    # x1 and x2 must differ, x2 and x3 must differ: first model is F,T,F
    f = Formula.from_ints(3, [[1, 2, 2], [2, 3, 3]])
    assert brute_force_nae(f) == {1: False, 2: True, 3: False}
    # a clause whose literals are all the same never has both values
    assert brute_force_nae(Formula.from_ints(2, [[1, 1, 1]])) is None
    # three pairwise-different variables over two colors is impossible
    assert brute_force_nae(Formula.from_ints(3, [[1, 2], [2, 3], [1, 3]])) is None
    assert brute_force_nae(Formula(0)) == {}


@settings(max_examples=200)
@given(formulas())
def test_brute_force_matches_oracle(f):
    models = naive_nae_models(f.num_vars, f.to_ints())
    got = brute_force_nae(f)
    if not models:
        assert got is None
    else:
        assert got == {i + 1: b for i, b in enumerate(models[0])}
        assert eval_nae(f, got)


@settings(max_examples=200)
@given(formulas())
def test_nae_model_complement(f):
    for bits in naive_nae_models(f.num_vars, f.to_ints()):
        assert eval_nae(f, {i + 1: not b for i, b in enumerate(bits)})


def test_pad_preserves_models_exhaustively():
    # every clause of width 2..3 over up to 3 variables, padded to widths 3..5
    lits = [1, -1, 2, -2, 3, -3]
    for width in (2, 3):
        for clause in itertools.product(lits, repeat=width):
            f = Formula.from_ints(3, [list(clause)])
            for k in range(max(3, width), 6):
                p = pad_to_width(f, k)
                assert p.width == k
                assert len(p.clauses[0]) == k
                assert naive_nae_models(3, p.to_ints()) == naive_nae_models(3, f.to_ints())


@settings(max_examples=200)
@given(formulas(max_vars=10, max_clauses=4, max_width=3), st.integers(3, 6))
def test_pad_preserves_models(f, k):
    if any(len(c) == 1 for c in f.clauses):
        with pytest.raises(WidthError):
            pad_to_width(f, k)
        return
    p = pad_to_width(f, k)
    assert all(len(c) == k for c in p.clauses)
    assert brute_force_nae(p) == brute_force_nae(f)


def test_pad_rules():
    f = Formula.from_ints(2, [[1, -2]])
    assert pad_to_width(f, 4).to_ints() == [[1, 1, 1, -2]]
    with pytest.raises(WidthError):
        pad_to_width(Formula.from_ints(3, [[1, 2, 3, 1]]), 3)
    with pytest.raises(ValueError):
        pad_to_width(f, 2)


def test_formula_validation():
    with pytest.raises(ValueError):
        Formula.from_ints(1, [[2]])
    with pytest.raises(ValueError):
        Formula(1, ((),))
