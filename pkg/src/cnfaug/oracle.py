"""Satisfiability oracles: a deterministic DPLL solver and exhaustive checks.

The DPLL solver realizes the labelling function used throughout the toolkit
and reports how many branching decisions it made, which the stats tooling
uses as a proxy difficulty measure.  The brute-force routines enumerate all
assignments (vectorized over bit patterns) and serve as the independent
oracle for property tests; they are intentionally a separate code path from
the DPLL search.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .formula import Formula, Label

BRUTE_MAX_VARS = 24
_CHUNK_BITS = 18  # assignments are enumerated in blocks of 2**_CHUNK_BITS


class OracleBudgetError(RuntimeError):
    """The decision budget ran out before a label was established."""


@dataclass(frozen=True)
class SolverConfig:
    max_vars: int = 200
    max_decisions: int = 1_000_000


DEFAULT_CONFIG = SolverConfig()


@dataclass(frozen=True)
class SolveResult:
    """Outcome of a DPLL solve.

    ``assignment`` is a total map over ``1..num_vars`` when SAT and ``None``
    when UNSAT.  ``decisions`` counts branching value-trials only; unit and
    pure-literal steps are counted in ``propagations``.
    """

    label: Label
    assignment: dict[int, bool] | None
    decisions: int
    propagations: int


def _simplify(clauses: list[tuple[int, ...]], lit: int) -> list[tuple[int, ...]] | None:
    """Assign ``lit`` true: drop satisfied clauses, shrink the rest.

    Returns ``None`` as soon as an empty clause appears.
    """
    out = []
    for clause in clauses:
        if lit in clause:
            continue
        if -lit in clause:
            reduced = tuple(x for x in clause if x != -lit)
            if not reduced:
                return None
            out.append(reduced)
        else:
            out.append(clause)
    return out


class _Search:
    def __init__(self, config: SolverConfig):
        self.config = config
        self.decisions = 0
        self.propagations = 0

    def run(self, clauses: list[tuple[int, ...]], assignment: dict[int, bool]) -> dict[int, bool] | None:
        while True:
            if any(len(c) == 0 for c in clauses):
                return None
            if not clauses:
                return assignment

            unit = next((c[0] for c in clauses if len(c) == 1), None)
            if unit is not None:
                self.propagations += 1
                assignment[abs(unit)] = unit > 0
                reduced = _simplify(clauses, unit)
                if reduced is None:
                    return None
                clauses = reduced
                continue

            polarity: dict[int, int] = {}  # var -> bitmask of seen polarities
            for clause in clauses:
                for lit in clause:
                    polarity[abs(lit)] = polarity.get(abs(lit), 0) | (1 if lit > 0 else 2)
            pure = min((v for v, mask in polarity.items() if mask != 3), default=None)
            if pure is not None:
                self.propagations += 1
                lit = pure if polarity[pure] == 1 else -pure
                assignment[abs(lit)] = lit > 0
                # A pure literal never shrinks a clause, so this cannot fail.
                clauses = [c for c in clauses if lit not in c]
                continue

            # Branch on the lowest-indexed variable still active, true first.
            var = min(polarity)
            for lit in (var, -var):
                self.decisions += 1
                if self.decisions > self.config.max_decisions:
                    raise OracleBudgetError(
                        f"decision budget of {self.config.max_decisions} exhausted"
                    )
                reduced = _simplify(clauses, lit)
                if reduced is None:
                    continue
                branch = dict(assignment)
                branch[var] = lit > 0
                result = self.run(reduced, branch)
                if result is not None:
                    return result
            return None


def solve_dpll(formula: Formula, config: SolverConfig = DEFAULT_CONFIG) -> SolveResult:
    """Decide satisfiability with DPLL (unit propagation + pure literals).

    Deterministic: branching always picks the lowest-indexed variable among
    those still occurring in the simplified formula, trying true first.
    Raises :class:`OracleBudgetError` when the decision budget runs out;
    never returns a wrong label.
    """
    if formula.num_vars > config.max_vars:
        raise ValueError(
            f"{formula.num_vars} variables exceeds the configured limit {config.max_vars}"
        )
    search = _Search(config)
    found = search.run([tuple(c) for c in formula.clauses], {})
    if found is None:
        return SolveResult(Label.UNSAT, None, search.decisions, search.propagations)
    assignment = {v: found.get(v, True) for v in range(1, formula.num_vars + 1)}
    return SolveResult(Label.SAT, assignment, search.decisions, search.propagations)


@lru_cache(maxsize=8)
def _bit_table(num_vars: int) -> np.ndarray:
    """Row v-1 holds variable v's value in each of the 2**num_vars assignments."""
    idx = np.arange(1 << num_vars, dtype=np.uint32)
    return np.stack([(idx >> v) & 1 for v in range(num_vars)]).astype(bool)


def _sat_mask_small(formula: Formula) -> np.ndarray:
    bits = _bit_table(formula.num_vars)
    ok = np.ones(1 << formula.num_vars, dtype=bool)
    for clause in formula.clauses:
        acc = np.zeros(ok.shape, dtype=bool)
        for lit in clause:
            acc |= bits[abs(lit) - 1] if lit > 0 else ~bits[abs(lit) - 1]
        ok &= acc
        if not ok.any():
            break
    return ok


def _count_chunked(formula: Formula, stop_at_first: bool) -> int:
    total = 0
    block = 1 << _CHUNK_BITS
    for start in range(0, 1 << formula.num_vars, block):
        idx = np.arange(start, start + block, dtype=np.uint64)
        ok = np.ones(block, dtype=bool)
        for clause in formula.clauses:
            acc = np.zeros(block, dtype=bool)
            for lit in clause:
                bit = (idx >> np.uint64(abs(lit) - 1)) & np.uint64(1)
                acc |= (bit != 0) if lit > 0 else (bit == 0)
            ok &= acc
            if not ok.any():
                break
        total += int(ok.sum())
        if stop_at_first and total:
            return total
    return total


def _check_brute_limit(formula: Formula) -> None:
    if formula.num_vars > BRUTE_MAX_VARS:
        raise ValueError(
            f"exhaustive enumeration is limited to {BRUTE_MAX_VARS} variables"
        )


def solve_brute(formula: Formula) -> Label:
    """Exact label by enumerating all ``2**num_vars`` assignments."""
    _check_brute_limit(formula)
    if formula.num_vars <= _CHUNK_BITS:
        return Label.SAT if _sat_mask_small(formula).any() else Label.UNSAT
    return Label.SAT if _count_chunked(formula, stop_at_first=True) else Label.UNSAT


def count_models(formula: Formula) -> int:
    """Exact number of satisfying assignments over the declared variables."""
    _check_brute_limit(formula)
    if formula.num_vars <= _CHUNK_BITS:
        return int(_sat_mask_small(formula).sum())
    return _count_chunked(formula, stop_at_first=False)
