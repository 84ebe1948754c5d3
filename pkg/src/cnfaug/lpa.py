"""Satisfiability-preserving CNF transformations.

Each transformation maps a formula to a new formula with the same SAT/UNSAT
label, parameterized by an intensity ``rate`` in [0, 1] and a seed.  The
rate is mapped to a step count with ``ceil(rate * base)`` where the base is
operation-specific (unit clauses for unit propagation, clause count for
clause additions, variable count for elimination).  All randomness flows
through a ``numpy`` PCG64 generator seeded per call, so outputs are a pure
function of (formula, rate, seed).
"""

from __future__ import annotations

import logging
import math

import numpy as np

from .formula import Clause, Formula, make_clause

logger = logging.getLogger(__name__)

DEFAULT_MAX_RESOLVE_ATTEMPTS = 50
DEFAULT_RESOLVENT_BOUND_FACTOR = 2.0


def _rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed))


def _ceil_count(rate: float, base: int) -> int:
    """``ceil(rate * base)`` guarded against float fuzz (0.1 * 10 -> 1)."""
    if not 0.0 <= rate <= 1.0:
        raise ValueError(f"rate must lie in [0, 1], got {rate}")
    return max(0, math.ceil(rate * base - 1e-9))


def _delete_literal(clauses: list[Clause], lit: int) -> list[Clause]:
    """One unit-propagation step for ``lit``: satisfied clauses are dropped,
    ``-lit`` is deleted elsewhere.  Clauses may become empty (falsum)."""
    out = []
    for clause in clauses:
        if lit in clause:
            continue
        if -lit in clause:
            out.append(tuple(x for x in clause if x != -lit))
        else:
            out.append(clause)
    return out


def unit_propagate(
    formula: Formula, rate: float, seed: int, *, to_fixpoint: bool = False
) -> Formula:
    """Propagate a seeded selection of unit clauses.

    Performs ``ceil(rate * u)`` single propagation steps, where ``u`` counts
    the unit clauses of the input; after each step the formula is re-scanned
    (propagation may create new units).  With ``to_fixpoint=True`` the rate
    is ignored and propagation runs until no unit clause remains.  If
    complementary units are derived the output contains the empty clause.
    """
    clauses = list(formula.clauses)
    units_at_start = sum(1 for c in clauses if len(c) == 1)
    steps = units_at_start if to_fixpoint else _ceil_count(rate, units_at_start)
    if steps == 0:
        return formula
    rng = _rng(seed)
    done = 0
    while to_fixpoint or done < steps:
        unit_positions = [i for i, c in enumerate(clauses) if len(c) == 1]
        if not unit_positions:
            break
        pick = unit_positions[int(rng.integers(len(unit_positions)))]
        clauses = _delete_literal(clauses, clauses[pick][0])
        done += 1
    return Formula(formula.num_vars, tuple(clauses))


def add_unit_literal(formula: Formula, rate: float, seed: int) -> Formula:
    """Introduce one fresh variable as a unit clause and weave it in.

    The fresh literal's negation is inserted into ``ceil(rate * m)`` existing
    clauses and ``ceil(rate * m)`` new clauses containing the fresh literal
    plus 1-3 random other literals are appended (``m`` = clause count).  The
    unit clause goes first, new clauses last.  Inverse of one propagation
    step, so the label is preserved.
    """
    rng = _rng(seed)
    fresh = formula.num_vars + 1
    lit = -fresh if rng.integers(2) else fresh
    m = formula.num_clauses
    count = _ceil_count(rate, m)

    targets = set(rng.choice(m, size=count, replace=False).tolist()) if count else set()
    body = [
        make_clause(clause + (-lit,)) if i in targets else clause
        for i, clause in enumerate(formula.clauses)
    ]

    extras: list[Clause] = []
    for _ in range(count):
        width = min(int(rng.integers(1, 4)), formula.num_vars)
        lits = [lit]
        if width:
            chosen = rng.choice(formula.num_vars, size=width, replace=False) + 1
            flips = rng.integers(2, size=width)
            lits += [int(-v if neg else v) for v, neg in zip(chosen, flips)]
        extras.append(make_clause(lits))

    return Formula(fresh, (make_clause([lit]),) + tuple(body) + tuple(extras))


def _pure_variables(formula: Formula) -> list[int]:
    polarity: dict[int, int] = {}
    for clause in formula.clauses:
        for lit in clause:
            polarity[abs(lit)] = polarity.get(abs(lit), 0) | (1 if lit > 0 else 2)
    return sorted(v for v, mask in polarity.items() if mask != 3)


def pure_literal_eliminate(formula: Formula, rate: float, seed: int) -> Formula:
    """Delete every clause containing each of ``ceil(rate * p)`` seeded pure
    variables (``p`` = number of variables occurring in a single polarity)."""
    pure = _pure_variables(formula)
    count = _ceil_count(rate, len(pure))
    if count == 0:
        return formula
    rng = _rng(seed)
    chosen = set(rng.choice(np.asarray(pure), size=count, replace=False).tolist())
    kept = tuple(
        c for c in formula.clauses if not any(abs(lit) in chosen for lit in c)
    )
    return Formula(formula.num_vars, kept)


def subsumed_clause_eliminate(formula: Formula) -> Formula:
    """Remove every clause that is a strict superset of another clause.

    Exact duplicates count as mutual subsumption; the first occurrence is
    kept.  Pairwise subset checks, O(m^2) in the clause count.
    """
    sets = [frozenset(c) for c in formula.clauses]
    kept = []
    for j, outer in enumerate(sets):
        redundant = False
        for i, inner in enumerate(sets):
            if i == j:
                continue
            if len(inner) < len(outer) and inner < outer:
                redundant = True
                break
            if i < j and inner == outer:
                redundant = True
                break
        if not redundant:
            kept.append(formula.clauses[j])
    return Formula(formula.num_vars, tuple(kept))


def resolve(c1: Clause, c2: Clause, pivot: int) -> Clause | None:
    """Resolvent of two clauses on ``pivot``: the union of both clauses minus
    the complementary pivot pair.  Returns ``None`` when the resolvent is
    tautological.  The pivot must occur positively in one clause and
    negatively in the other (either order)."""
    if pivot < 1:
        raise ValueError("pivot must be a variable index")
    if pivot in c1 and -pivot in c2:
        left, right = c1, c2
    elif -pivot in c1 and pivot in c2:
        left, right = c2, c1
    else:
        raise ValueError(f"variable {pivot} is not complementary between the clauses")
    merged = (set(left) - {pivot}) | (set(right) - {-pivot})
    if any(-lit in merged for lit in merged):
        return None
    return make_clause(merged)


def _occurrences(clauses: tuple[Clause, ...]) -> tuple[dict[int, list[int]], dict[int, list[int]]]:
    pos: dict[int, list[int]] = {}
    neg: dict[int, list[int]] = {}
    for i, clause in enumerate(clauses):
        for lit in clause:
            (pos if lit > 0 else neg).setdefault(abs(lit), []).append(i)
    return pos, neg


def clause_resolution(
    formula: Formula,
    rate: float,
    seed: int,
    *,
    max_attempts_per_resolvent: int = DEFAULT_MAX_RESOLVE_ATTEMPTS,
) -> Formula:
    """Append ``ceil(rate * m)`` resolvents of seeded-random clause pairs.

    Pairs are drawn uniformly over complementary literal occurrences of the
    input (with replacement); tautological resolvents and duplicates of
    current clauses are skipped and redrawn within a bounded attempt budget.
    Identity when no complementary pair exists.
    """
    target = _ceil_count(rate, formula.num_clauses)
    if target == 0:
        return formula
    pos, neg = _occurrences(formula.clauses)
    pivots = sorted(v for v in pos if v in neg)
    if not pivots:
        return formula
    weights = np.array([len(pos[v]) * len(neg[v]) for v in pivots], dtype=float)
    weights /= weights.sum()

    rng = _rng(seed)
    existing = {make_clause(c) for c in formula.clauses}
    added: list[Clause] = []
    budget = max_attempts_per_resolvent * target
    attempts = 0
    while len(added) < target and attempts < budget:
        attempts += 1
        v = pivots[int(rng.choice(len(pivots), p=weights))]
        ci = pos[v][int(rng.integers(len(pos[v])))]
        cj = neg[v][int(rng.integers(len(neg[v])))]
        resolvent = resolve(formula.clauses[ci], formula.clauses[cj], v)
        if resolvent is None or resolvent in existing:
            continue
        existing.add(resolvent)
        added.append(resolvent)
    return Formula(formula.num_vars, formula.clauses + tuple(added))


def _elimination_plan(
    clauses: list[Clause], var: int, bound_factor: float
) -> tuple[list[int], list[Clause]] | None:
    """Clause indices touching ``var`` and their pairwise resolvents, or
    ``None`` when the resolvent count exceeds the bound.

    Clauses containing both polarities of ``var`` are tautologies; they are
    removed without resolving so the output never mentions ``var``.
    """
    pos_idx, neg_idx, touched = [], [], []
    for i, clause in enumerate(clauses):
        has_pos, has_neg = var in clause, -var in clause
        if has_pos or has_neg:
            touched.append(i)
        if has_pos and has_neg:
            continue
        elif has_pos:
            pos_idx.append(i)
        elif has_neg:
            neg_idx.append(i)
    resolvents: list[Clause] = []
    seen: set[Clause] = set()
    for i in pos_idx:
        for j in neg_idx:
            r = resolve(clauses[i], clauses[j], var)
            if r is None or r in seen:
                continue
            seen.add(r)
            resolvents.append(r)
            if len(resolvents) > bound_factor * len(touched):
                return None
    return touched, resolvents


def variable_eliminate(
    formula: Formula,
    rate: float,
    seed: int,
    *,
    resolvent_bound_factor: float = DEFAULT_RESOLVENT_BOUND_FACTOR,
) -> Formula:
    """Eliminate ``max(1, ceil(rate * num_vars))`` variables by resolution.

    For each step a seeded-random variable is chosen among those whose
    elimination yields at most ``resolvent_bound_factor`` times as many
    resolvents as clauses removed; the touching clauses are replaced by all
    non-tautological pairwise resolvents (deduplicated, appended in
    generation order).  Eliminated variables occur nowhere in the output;
    ``num_vars`` is left unchanged (indices may gap).  When no variable fits
    under the bound the actual elimination count is logged and the formula
    so far is returned.
    """
    requested = max(1, _ceil_count(rate, formula.num_vars))
    clauses = list(formula.clauses)
    remaining = set(range(1, formula.num_vars + 1))
    rng = _rng(seed)
    eliminated = 0
    for _ in range(requested):
        plans = {
            v: plan
            for v in sorted(remaining)
            if (plan := _elimination_plan(clauses, v, resolvent_bound_factor)) is not None
        }
        if not plans:
            break
        candidates = sorted(plans)
        var = candidates[int(rng.integers(len(candidates)))]
        touched, resolvents = plans[var]
        dropped = set(touched)
        clauses = [c for i, c in enumerate(clauses) if i not in dropped] + resolvents
        remaining.remove(var)
        eliminated += 1
    if eliminated < requested:
        logger.info(
            "variable elimination stopped at %d of %d requested variables "
            "(no candidate under the resolvent bound)",
            eliminated,
            requested,
        )
    return Formula(formula.num_vars, tuple(clauses))
