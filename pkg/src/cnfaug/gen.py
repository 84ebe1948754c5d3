"""Seeded random instance generators with oracle-assigned labels.

Three families:

* ``SR`` - solver-in-the-loop paired generation: random clauses are appended
  until the formula first turns unsatisfiable, then the satisfiable twin is
  obtained by negating a single literal of the final clause.  Every pair is
  perfectly label-balanced and differs in exactly one literal occurrence.
* ``UR`` - uniform random k-SAT: each clause draws distinct variables
  uniformly with fair-coin polarity.
* ``PR`` - power-law random k-SAT: variable ``i`` is drawn with probability
  proportional to ``i**-gamma`` (distinct within a clause, by redraw).

All instances are labeled eagerly with the DPLL oracle.  Corpora are
reproducible: instance ``i`` of a corpus uses a seed derived from the corpus
seed and the counter ``i``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import Sequence

import numpy as np

from .formula import Formula, Label, make_clause, parse_dimacs, serialize_dimacs
from .oracle import DEFAULT_CONFIG, SolverConfig, solve_dpll

MANIFEST_NAME = "manifest.jsonl"

# Stock parameter sets for the power-law family at two scales.
PR10 = dict(num_vars=10, num_clauses=41, clause_len=3, power_exponent=1.7)
PR40 = dict(num_vars=40, num_clauses=147, clause_len=3, power_exponent=2.5)


class GenFamily(Enum):
    SR = "SR"
    UR = "UR"
    PR = "PR"


@dataclass(frozen=True)
class SrParams:
    """Clause-length law for SR: ``1 + Bernoulli(b) + Geometric(g)``.

    The geometric draw counts trials (support starting at 1), so clauses
    have at least two literals and instances contain no unit clauses.
    """

    bernoulli_p: float = 0.3
    geometric_p: float = 0.4


@dataclass(frozen=True)
class GenSpec:
    """Parameters of one generator family; ``num_vars`` may be an inclusive
    ``(lo, hi)`` range for SR."""

    family: GenFamily
    num_vars: int | tuple[int, int]
    num_clauses: int | None = None
    clause_len: int | None = None
    power_exponent: float | None = None
    seed: int = 0

    def __post_init__(self) -> None:
        lo = self.num_vars[0] if isinstance(self.num_vars, tuple) else self.num_vars
        if lo < 1:
            raise ValueError("num_vars must be positive")
        if self.family is GenFamily.SR:
            if lo < 2:
                raise ValueError("SR needs at least 2 variables")
            if isinstance(self.num_vars, tuple) and self.num_vars[1] < lo:
                raise ValueError("variable range must satisfy lo <= hi")
            return
        if isinstance(self.num_vars, tuple):
            raise ValueError(f"{self.family.value} takes a fixed variable count")
        if self.num_clauses is None or self.num_clauses < 0:
            raise ValueError("num_clauses is required")
        if self.clause_len is None or not 1 <= self.clause_len <= self.num_vars:
            raise ValueError("clause_len must lie in [1, num_vars]")
        if self.family is GenFamily.PR:
            if self.power_exponent is None or self.power_exponent <= 1:
                raise ValueError("power_exponent must exceed 1")


@dataclass(frozen=True)
class LabeledInstance:
    formula: Formula
    label: Label
    meta: dict = field(default_factory=dict)


def derive_seed(seed: int, index: int) -> int:
    """Stable per-instance seed from a corpus seed and a counter."""
    return int(np.random.SeedSequence([seed, index]).generate_state(1, np.uint64)[0])


def _rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed))


def gen_sr(
    num_vars: int | tuple[int, int],
    seed: int,
    *,
    params: SrParams = SrParams(),
    config: SolverConfig = DEFAULT_CONFIG,
) -> tuple[LabeledInstance, LabeledInstance]:
    """One balanced pair ``(sat, unsat)`` differing in one literal.

    Clauses are sampled and appended, re-solving after each, until the
    formula first becomes unsatisfiable; negating one seeded-random literal
    of the final clause gives the satisfiable twin (any model of the prefix
    falsifies the final clause, hence satisfies the negated literal).  Both
    labels are re-verified with the oracle.
    """
    rng = _rng(seed)
    if isinstance(num_vars, tuple):
        n = int(rng.integers(num_vars[0], num_vars[1] + 1))
    else:
        n = num_vars
    if n < 2:
        raise ValueError("SR needs at least 2 variables")

    clauses: list[tuple[int, ...]] = []
    while True:
        width = 1 + int(rng.binomial(1, params.bernoulli_p)) + int(rng.geometric(params.geometric_p))
        width = min(width, n)
        variables = rng.choice(n, size=width, replace=False) + 1
        flips = rng.integers(2, size=width)
        clause = make_clause(int(-v if neg else v) for v, neg in zip(variables, flips))
        clauses.append(clause)
        if solve_dpll(Formula(n, tuple(clauses)), config).label is Label.UNSAT:
            break

    unsat_formula = Formula(n, tuple(clauses))
    final = clauses[-1]
    flip_at = int(rng.integers(len(final)))
    flipped = make_clause(
        -lit if i == flip_at else lit for i, lit in enumerate(final)
    )
    sat_formula = Formula(n, tuple(clauses[:-1]) + (flipped,))

    if solve_dpll(sat_formula, config).label is not Label.SAT:
        raise RuntimeError("SR invariant violated: flipped twin is not satisfiable")
    meta = {"family": GenFamily.SR.value, "seed": seed, "num_vars": n}
    return (
        LabeledInstance(sat_formula, Label.SAT, {**meta, "role": "sat"}),
        LabeledInstance(unsat_formula, Label.UNSAT, {**meta, "role": "unsat"}),
    )


def gen_ur(
    num_vars: int,
    num_clauses: int,
    clause_len: int,
    seed: int,
    *,
    config: SolverConfig = DEFAULT_CONFIG,
) -> LabeledInstance:
    """Uniform random k-SAT instance with an oracle-assigned label."""
    if not 1 <= clause_len <= num_vars:
        raise ValueError("clause_len must lie in [1, num_vars]")
    rng = _rng(seed)
    clauses = []
    for _ in range(num_clauses):
        variables = rng.choice(num_vars, size=clause_len, replace=False) + 1
        flips = rng.integers(2, size=clause_len)
        clauses.append(make_clause(int(-v if neg else v) for v, neg in zip(variables, flips)))
    formula = Formula(num_vars, tuple(clauses))
    label = solve_dpll(formula, config).label
    meta = {
        "family": GenFamily.UR.value,
        "seed": seed,
        "num_vars": num_vars,
        "num_clauses": num_clauses,
        "clause_len": clause_len,
    }
    return LabeledInstance(formula, label, meta)


def _power_weights(num_vars: int, exponent: float) -> np.ndarray:
    weights = np.arange(1, num_vars + 1, dtype=float) ** -exponent
    return weights / weights.sum()


def gen_pr(
    num_vars: int,
    num_clauses: int,
    clause_len: int,
    power_exponent: float,
    seed: int,
    *,
    config: SolverConfig = DEFAULT_CONFIG,
) -> LabeledInstance:
    """Power-law random k-SAT: variable frequency follows ``i**-exponent``.

    Distinct variables per clause are enforced by redrawing duplicates.
    """
    if not 1 <= clause_len <= num_vars:
        raise ValueError("clause_len must lie in [1, num_vars]")
    if power_exponent <= 1:
        raise ValueError("power_exponent must exceed 1")
    rng = _rng(seed)
    weights = _power_weights(num_vars, power_exponent)
    clauses = []
    for _ in range(num_clauses):
        chosen: list[int] = []
        while len(chosen) < clause_len:
            v = int(rng.choice(num_vars, p=weights)) + 1
            if v not in chosen:
                chosen.append(v)
        flips = rng.integers(2, size=clause_len)
        clauses.append(make_clause(int(-v if neg else v) for v, neg in zip(chosen, flips)))
    formula = Formula(num_vars, tuple(clauses))
    label = solve_dpll(formula, config).label
    meta = {
        "family": GenFamily.PR.value,
        "seed": seed,
        "num_vars": num_vars,
        "num_clauses": num_clauses,
        "clause_len": clause_len,
        "power_exponent": power_exponent,
    }
    return LabeledInstance(formula, label, meta)


def gen_corpus(
    spec: GenSpec,
    count: int,
    seed: int | None = None,
    *,
    config: SolverConfig = DEFAULT_CONFIG,
) -> list[LabeledInstance]:
    """Deterministic stream of ``count`` draws from a generator spec.

    Instance ``i`` uses ``derive_seed(seed, i)``.  For SR each draw yields a
    (sat, unsat) pair, so the corpus holds ``2 * count`` instances and is
    exactly label-balanced.
    """
    if count < 1:
        raise ValueError("count must be at least 1")
    base_seed = spec.seed if seed is None else seed
    out: list[LabeledInstance] = []
    for i in range(count):
        inst_seed = derive_seed(base_seed, i)
        if spec.family is GenFamily.SR:
            sat_inst, unsat_inst = gen_sr(spec.num_vars, inst_seed, config=config)
            out.extend((sat_inst, unsat_inst))
        elif spec.family is GenFamily.UR:
            out.append(
                gen_ur(spec.num_vars, spec.num_clauses, spec.clause_len, inst_seed, config=config)
            )
        else:
            out.append(
                gen_pr(
                    spec.num_vars,
                    spec.num_clauses,
                    spec.clause_len,
                    spec.power_exponent,
                    inst_seed,
                    config=config,
                )
            )
    for i, inst in enumerate(out):
        inst.meta["index"] = i
    return out


def write_corpus(
    instances: Sequence[LabeledInstance],
    out_dir: str | Path,
    *,
    run_header: dict | None = None,
) -> Path:
    """Write one DIMACS file per instance plus a JSON-lines manifest.

    Manifest records carry path (relative to the directory), label, family,
    seed, and the remaining generator parameters.  Appends if a manifest is
    already present.  Returns the manifest path.
    """
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    manifest = out / MANIFEST_NAME
    with open(manifest, "a", encoding="utf-8") as mh:
        if run_header is not None:
            mh.write(json.dumps({"type": "run", **run_header}, sort_keys=True) + "\n")
        for i, inst in enumerate(instances):
            name = f"{i:05d}_{inst.label.value}.cnf"
            (out / name).write_text(serialize_dimacs(inst.formula), encoding="utf-8")
            record = {
                "type": "instance",
                "path": name,
                "label": inst.label.value,
                **{k: v for k, v in inst.meta.items()},
            }
            mh.write(json.dumps(record, sort_keys=True) + "\n")
    return manifest


def read_manifest(corpus_dir: str | Path) -> list[dict]:
    """All manifest records of a corpus directory, in file order."""
    manifest = Path(corpus_dir) / MANIFEST_NAME
    records = []
    with open(manifest, encoding="utf-8") as mh:
        for line in mh:
            line = line.strip()
            if line:
                records.append(json.loads(line))
    return records


def load_corpus(corpus_dir: str | Path) -> list[LabeledInstance]:
    """Load instances listed in a corpus manifest.

    Externally produced corpora work as long as each instance record has a
    ``path`` and a ``label`` of ``sat``/``unsat``.
    """
    base = Path(corpus_dir)
    out = []
    for record in read_manifest(base):
        if record.get("type") not in (None, "instance"):
            continue
        formula = parse_dimacs((base / record["path"]).read_text(encoding="utf-8"))
        label = Label(record["label"])
        meta = {k: v for k, v in record.items() if k not in ("type", "path", "label")}
        out.append(LabeledInstance(formula, label, meta))
    return out
