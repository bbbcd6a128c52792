"""CNF formulas with not-all-equal semantics.

A formula is read from DIMACS, optionally padded to a fixed clause width, and
evaluated under NAE semantics: a clause is satisfied when at least one of its
literals is true and at least one is false.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

Assignment = dict[int, bool]


@dataclass(frozen=True, order=True)
class Literal:
    variable: int
    negated: bool = False

    def __post_init__(self):
        if self.variable < 1:
            raise ValueError(f"variable index must be >= 1, got {self.variable}")

    @classmethod
    def from_int(cls, value: int) -> Literal:
        if value == 0:
            raise ValueError("0 is not a literal")
        return cls(abs(value), value < 0)

    def to_int(self) -> int:
        return -self.variable if self.negated else self.variable

    def value(self, assignment: Assignment) -> bool:
        try:
            return assignment[self.variable] != self.negated
        except KeyError:
            raise ValueError(f"assignment has no value for x{self.variable}") from None

    def __neg__(self) -> Literal:
        return Literal(self.variable, not self.negated)

    def __str__(self):
        return ("~" if self.negated else "") + f"x{self.variable}"


Clause = tuple[Literal, ...]


@dataclass(frozen=True)
class Formula:
    num_vars: int
    clauses: tuple[Clause, ...] = ()

    def __post_init__(self):
        if self.num_vars < 0:
            raise ValueError("num_vars must be >= 0")
        clauses = tuple(tuple(c) for c in self.clauses)
        object.__setattr__(self, "clauses", clauses)
        for i, clause in enumerate(clauses):
            if not clause:
                raise ValueError(f"clause {i} is empty")
            for lit in clause:
                if lit.variable > self.num_vars:
                    raise ValueError(
                        f"clause {i} uses x{lit.variable} but num_vars={self.num_vars}"
                    )

    @classmethod
    def from_ints(cls, num_vars: int, clauses) -> Formula:
        return cls(num_vars, tuple(tuple(Literal.from_int(v) for v in c) for c in clauses))

    def to_ints(self) -> list[list[int]]:
        return [[lit.to_int() for lit in c] for c in self.clauses]

    @property
    def num_clauses(self) -> int:
        return len(self.clauses)

    @property
    def width(self) -> int:
        return max((len(c) for c in self.clauses), default=0)

    def __str__(self):
        if not self.clauses:
            return "<empty>"
        return " & ".join("(" + " | ".join(map(str, c)) + ")" for c in self.clauses)


# -- DIMACS -----------------------------------------------------------------


class DimacsError(ValueError):
    """Malformed DIMACS input; ``line`` is 1-based (0 when not tied to a line)."""

    def __init__(self, message: str, line: int = 0):
        self.line = line
        super().__init__(f"line {line}: {message}" if line else message)


class HeaderError(DimacsError):
    pass


class LiteralRangeError(DimacsError):
    pass


class ClauseCountError(DimacsError):
    pass


class UnterminatedClauseError(DimacsError):
    pass


def parse_dimacs(text: str) -> Formula:
    num_vars = num_clauses = None
    clauses: list[list[int]] = []
    current: list[int] = []
    current_start = 0
    last_line = 0

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("%"):  # SATLIB end marker
            break
        if line.startswith("p"):
            if num_vars is not None:
                raise HeaderError("duplicate header", lineno)
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise HeaderError(f"expected 'p cnf <vars> <clauses>', got {line!r}", lineno)
            try:
                num_vars, num_clauses = int(parts[2]), int(parts[3])
            except ValueError:
                raise HeaderError(f"non-integer counts in header {line!r}", lineno) from None
            if num_vars < 0 or num_clauses < 0:
                raise HeaderError("negative counts in header", lineno)
            continue
        if num_vars is None:
            raise HeaderError("clause data before 'p cnf' header", lineno)
        last_line = lineno
        for token in line.split():
            try:
                value = int(token)
            except ValueError:
                raise DimacsError(f"invalid token {token!r}", lineno) from None
            if value == 0:
                if not current:
                    raise DimacsError("empty clause", lineno)
                clauses.append(current)
                current = []
                continue
            if abs(value) > num_vars:
                raise LiteralRangeError(
                    f"literal {value} out of range for {num_vars} variables", lineno
                )
            if not current:
                current_start = lineno
            current.append(value)

    if num_vars is None:
        raise HeaderError("missing 'p cnf' header")
    if current:
        raise UnterminatedClauseError("clause not terminated by 0", current_start)
    if len(clauses) != num_clauses:
        raise ClauseCountError(
            f"header declares {num_clauses} clauses, found {len(clauses)}", last_line
        )
    return Formula.from_ints(num_vars, clauses)


def serialize_dimacs(formula: Formula, comments=()) -> str:
    lines = [f"c {c}" for c in comments]
    lines.append(f"p cnf {formula.num_vars} {formula.num_clauses}")
    lines.extend(" ".join(map(str, c + [0])) for c in formula.to_ints())
    return "\n".join(lines) + "\n"


# -- NAE semantics ------------------------------------------------------------


def clause_nae(clause: Clause, assignment: Assignment) -> bool:
    values = {lit.value(assignment) for lit in clause}
    return len(values) == 2


def eval_nae(formula: Formula, assignment: Assignment) -> bool:
    missing = [v for v in range(1, formula.num_vars + 1) if v not in assignment]
    if missing:
        raise ValueError(f"assignment is missing variables {missing}")
    return all(clause_nae(c, assignment) for c in formula.clauses)


def brute_force_nae(formula: Formula, cap: int = 24) -> Assignment | None:
    """Lexicographically first NAE model, with False < True and x1 most significant."""
    n = formula.num_vars
    if n > cap:
        raise ValueError(f"{n} variables exceeds brute-force cap {cap}")
    clauses = formula.to_ints()
    for bits in itertools.product((False, True), repeat=n):
        ok = True
        for clause in clauses:
            seen_true = seen_false = False
            for v in clause:
                if bits[abs(v) - 1] != (v < 0):
                    seen_true = True
                else:
                    seen_false = True
            if not (seen_true and seen_false):
                ok = False
                break
        if ok:
            return {i + 1: b for i, b in enumerate(bits)}
    return None


class WidthError(ValueError):
    pass


def pad_to_width(formula: Formula, k: int) -> Formula:
    """Pad every clause to exactly ``k`` literals by repeating its first literal.

    Repeating a literal never changes whether a clause is not-all-equal, so the
    set of NAE models is unchanged. Unit clauses are rejected: they have no NAE
    model, and padding would hide that from the caller.
    """
    if k < 3:
        raise ValueError(f"k must be >= 3, got {k}")
    padded = []
    for i, clause in enumerate(formula.clauses):
        if len(clause) == 1:
            raise WidthError(
                f"clause {i} ({clause[0]}) has a single literal and can never be NAE-satisfied"
            )
        if len(clause) > k:
            raise WidthError(f"clause {i} has {len(clause)} literals, more than k={k}")
        padded.append((clause[0],) * (k - len(clause)) + clause)
    return Formula(formula.num_vars, tuple(padded))
