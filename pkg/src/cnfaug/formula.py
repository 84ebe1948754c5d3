"""CNF formulas in canonical form, with DIMACS parsing and serialization.

Literals use the signed-integer convention: ``v`` is the positive literal of
variable ``v`` (1-based), ``-v`` its negation.  A clause is a tuple of
literals sorted by (variable index, positive-before-negative) with exact
duplicates removed; the empty clause represents falsum.  A formula is an
ordered sequence of clauses over a declared variable count; duplicate
clauses are permitted and clause order is preserved by every operation.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Mapping

Literal = int
Clause = tuple[int, ...]


class Label(Enum):
    """Satisfiability verdict."""

    SAT = "sat"
    UNSAT = "unsat"


class DimacsError(ValueError):
    """Malformed DIMACS CNF input."""


class DimacsWarning(UserWarning):
    """Tolerated DIMACS irregularity, e.g. a header clause-count mismatch."""


def literal_key(lit: int) -> tuple[int, bool]:
    """Canonical sort key: variable ascending, positive before negative."""
    return (abs(lit), lit < 0)


def make_clause(literals: Iterable[int]) -> Clause:
    """Build a canonical clause: deduplicated, sorted by :func:`literal_key`.

    Tautological clauses (both ``v`` and ``-v``) are allowed and queryable
    via :func:`is_tautology`.
    """
    lits = set()
    for lit in literals:
        lit = int(lit)
        if lit == 0:
            raise ValueError("literal 0 is reserved as the DIMACS terminator")
        lits.add(lit)
    return tuple(sorted(lits, key=literal_key))


def is_canonical(clause: Clause) -> bool:
    return tuple(clause) == make_clause(clause)


def is_tautology(clause: Clause) -> bool:
    """True if the clause contains some variable in both polarities."""
    seen = set(clause)
    return any(-lit in seen for lit in clause)


@dataclass(frozen=True)
class Formula:
    """An immutable CNF formula: a declared variable count plus clauses.

    Clause tuples are stored as given (use :func:`canonicalize` to normalize
    every clause); literals must reference variables in ``1..num_vars``.
    """

    num_vars: int
    clauses: tuple[Clause, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "clauses", tuple(tuple(c) for c in self.clauses))
        if self.num_vars < 0:
            raise ValueError("num_vars must be non-negative")
        for clause in self.clauses:
            for lit in clause:
                if lit == 0 or abs(lit) > self.num_vars:
                    raise ValueError(
                        f"literal {lit} out of range for {self.num_vars} variables"
                    )

    @property
    def num_clauses(self) -> int:
        return len(self.clauses)

    def canonical(self) -> "Formula":
        return canonicalize(self)


def canonicalize(formula: Formula) -> Formula:
    """Normalize every clause (sort + dedupe literals); clause order is kept.

    Idempotent, and the satisfying-assignment set is unchanged.
    """
    return Formula(formula.num_vars, tuple(make_clause(c) for c in formula.clauses))


def satisfies(formula: Formula, assignment: Mapping[int, bool]) -> bool:
    """True if the (possibly partial) assignment satisfies every clause."""
    for clause in formula.clauses:
        for lit in clause:
            value = assignment.get(abs(lit))
            if value is not None and value == (lit > 0):
                break
        else:
            return False
    return True


def parse_dimacs(text: str) -> Formula:
    """Parse a DIMACS CNF document into a canonical :class:`Formula`.

    Accepts ``c`` comment lines anywhere and clauses spanning multiple
    lines.  A clause count that disagrees with the header is tolerated with
    a :class:`DimacsWarning`; a bad header, an out-of-range literal, or a
    final clause missing its 0 terminator raise :class:`DimacsError`.
    """
    num_vars: int | None = None
    declared_clauses = 0
    clauses: list[Clause] = []
    current: list[int] = []

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("p"):
            if num_vars is not None:
                raise DimacsError(f"line {lineno}: duplicate problem header")
            fields = line.split()
            if len(fields) != 4 or fields[0] != "p" or fields[1] != "cnf":
                raise DimacsError(f"line {lineno}: malformed header {line!r}")
            try:
                num_vars = int(fields[2])
                declared_clauses = int(fields[3])
            except ValueError as exc:
                raise DimacsError(f"line {lineno}: malformed header {line!r}") from exc
            if num_vars < 0 or declared_clauses < 0:
                raise DimacsError(f"line {lineno}: negative counts in header")
            continue
        if num_vars is None:
            raise DimacsError(f"line {lineno}: clause data before 'p cnf' header")
        for token in line.split():
            try:
                lit = int(token)
            except ValueError as exc:
                raise DimacsError(f"line {lineno}: non-integer token {token!r}") from exc
            if lit == 0:
                clauses.append(make_clause(current))
                current = []
            else:
                if abs(lit) > num_vars:
                    raise DimacsError(
                        f"line {lineno}: literal {lit} exceeds declared {num_vars} variables"
                    )
                current.append(lit)

    if num_vars is None:
        raise DimacsError("missing 'p cnf' header")
    if current:
        raise DimacsError("last clause is missing its terminating 0")
    if len(clauses) != declared_clauses:
        warnings.warn(
            f"header declares {declared_clauses} clauses but {len(clauses)} were read",
            DimacsWarning,
            stacklevel=2,
        )
    return Formula(num_vars, tuple(clauses))


def serialize_dimacs(formula: Formula) -> str:
    """Render a formula as DIMACS CNF text.

    ``parse_dimacs(serialize_dimacs(f))`` equals ``f`` for canonical ``f``.
    """
    lines = [f"p cnf {formula.num_vars} {formula.num_clauses}"]
    for clause in formula.clauses:
        body = " ".join(str(lit) for lit in clause)
        lines.append(f"{body} 0" if body else "0")
    return "\n".join(lines) + "\n"
