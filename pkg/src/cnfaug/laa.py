"""Structural graph-style augmentations with no label guarantee.

These mirror the generic graph-augmentation repertoire (node dropping, edge
perturbation, random-walk subgraphs) adapted so that every output is still a
well-formed CNF formula, i.e. a valid incidence graph.  They serve as
baselines: unlike the transformations in :mod:`cnfaug.lpa`, they can and do
flip satisfiability labels.
"""

from __future__ import annotations

import math

import numpy as np

from .formula import Clause, Formula, literal_key, make_clause
from .graph import adjacency, build_lig


def _rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed))


def _floor_count(rate: float, base: int) -> int:
    if not 0.0 <= rate <= 1.0:
        raise ValueError(f"rate must lie in [0, 1], got {rate}")
    return max(0, math.floor(rate * base + 1e-9))


def drop_clauses(formula: Formula, rate: float, seed: int) -> Formula:
    """Remove ``floor(rate * m)`` seeded-random clauses.

    Can flip UNSAT to SAT but never SAT to UNSAT (constraints only shrink).
    """
    count = _floor_count(rate, formula.num_clauses)
    if count == 0:
        return formula
    rng = _rng(seed)
    dropped = set(rng.choice(formula.num_clauses, size=count, replace=False).tolist())
    kept = tuple(c for i, c in enumerate(formula.clauses) if i not in dropped)
    return Formula(formula.num_vars, kept)


def drop_variables(formula: Formula, rate: float, seed: int) -> Formula:
    """Delete every occurrence of ``floor(rate * num_vars)`` seeded-random
    variables.  Clauses emptied by the deletion are removed; ``num_vars`` is
    unchanged (indices may gap)."""
    count = _floor_count(rate, formula.num_vars)
    if count == 0:
        return formula
    rng = _rng(seed)
    dropped = set((rng.choice(formula.num_vars, size=count, replace=False) + 1).tolist())
    kept: list[Clause] = []
    for clause in formula.clauses:
        reduced = tuple(lit for lit in clause if abs(lit) not in dropped)
        if reduced or not clause:
            kept.append(reduced)
    return Formula(formula.num_vars, tuple(kept))


def perturb_links(formula: Formula, rate: float, seed: int) -> Formula:
    """Randomly add/remove literal-clause incidences.

    Performs ``floor(rate * occurrences)`` edits; each edit is a fair coin
    between deleting a uniform literal occurrence (clauses emptied this way
    are removed) and inserting a uniform literal into a uniform clause
    (skipped when the exact literal is already present).
    """
    occurrences = sum(len(c) for c in formula.clauses)
    edits = _floor_count(rate, occurrences)
    if edits == 0:
        return formula
    rng = _rng(seed)
    clauses: list[list[int]] = [list(c) for c in formula.clauses]
    for _ in range(edits):
        remove = bool(rng.integers(2))
        if remove:
            total = sum(len(c) for c in clauses)
            if total == 0:
                continue
            flat = int(rng.integers(total))
            for ci, clause in enumerate(clauses):
                if flat < len(clause):
                    clause.pop(flat)
                    if not clause:
                        clauses.pop(ci)
                    break
                flat -= len(clause)
        else:
            if not clauses or formula.num_vars == 0:
                continue
            ci = int(rng.integers(len(clauses)))
            var = int(rng.integers(1, formula.num_vars + 1))
            lit = -var if rng.integers(2) else var
            if lit in clauses[ci]:
                continue
            clauses[ci] = sorted(clauses[ci] + [lit], key=literal_key)
    return Formula(formula.num_vars, tuple(tuple(c) for c in clauses))


def subgraph(formula: Formula, rate: float, seed: int) -> Formula:
    """Keep the subformula induced by a random walk on the incidence graph.

    The walk starts at a uniform node of the plus-variant graph and takes
    ``ceil(rate * nodes)`` uniform-neighbor steps (no restarts).  Clauses
    whose node was visited are kept, restricted to visited literal nodes;
    clauses restricted to nothing are dropped.  ``num_vars`` is unchanged.
    """
    graph = build_lig(formula, plus=True)
    if graph.num_nodes == 0:
        raise ValueError("cannot take a subgraph of an empty formula")
    steps = max(0, math.ceil(rate * graph.num_nodes - 1e-9))
    rng = _rng(seed)
    nbrs = adjacency(graph)
    current = int(rng.integers(graph.num_nodes))
    visited = {current}
    for _ in range(steps):
        options = nbrs[current]
        if not options:
            break
        current = options[int(rng.integers(len(options)))]
        visited.add(current)

    offset = graph.num_literal_nodes
    kept: list[Clause] = []
    for ci, clause in enumerate(formula.clauses):
        if offset + ci not in visited:
            continue
        reduced = make_clause(
            lit for lit in clause if 2 * (abs(lit) - 1) + (lit < 0) in visited
        )
        if reduced:
            kept.append(reduced)
    return Formula(formula.num_vars, tuple(kept))
