#!/usr/bin/env python3
"""The three instance generators, their shapes, and their label balance.

SR builds paired instances around the satisfiability boundary: clauses are
appended until the formula tips to UNSAT, then one literal flip of the last
clause tips it back.  UR is plain uniform k-SAT; PR skews variable choice
with a power law so low-index variables dominate.
"""

import numpy as np

from cnfaug import GenFamily, GenSpec, Label, gen_corpus, gen_sr

# --- SR: one pair, anatomically -------------------------------------------
sat_inst, unsat_inst = gen_sr(10, seed=5)
print("SR pair at 10 variables")
print(f"  clauses: {unsat_inst.formula.num_clauses} in both members")
difference = [
    (a, b)
    for a, b in zip(sat_inst.formula.clauses, unsat_inst.formula.clauses)
    if a != b
]
(sat_clause, unsat_clause) = difference[0]
print(f"  only differing clause: {sat_clause} (sat) vs {unsat_clause} (unsat)")
print(f"  labels: {sat_inst.label.value} / {unsat_inst.label.value}")
print()

# --- UR: satisfiable fraction as density grows ----------------------------
print("UR at 12 variables, 200 instances per clause count:")
for num_clauses in (30, 45, 51, 60, 75):
    spec = GenSpec(GenFamily.UR, 12, num_clauses=num_clauses, clause_len=3)
    corpus = gen_corpus(spec, 200, seed=7)
    fraction = sum(1 for i in corpus if i.label is Label.SAT) / len(corpus)
    bar = "#" * int(40 * fraction)
    print(f"  m={num_clauses:3d} (m/n={num_clauses/12:.2f})  sat={fraction:5.1%}  {bar}")
print()

# --- PR: the power-law footprint -------------------------------------------
spec = GenSpec(GenFamily.PR, 10, num_clauses=41, clause_len=3, power_exponent=1.7)
corpus = gen_corpus(spec, 200, seed=11)
counts = np.zeros(10, dtype=int)
for inst in corpus:
    for clause in inst.formula.clauses:
        for lit in clause:
            counts[abs(lit) - 1] += 1
print("PR variable occurrence counts (power-law exponent 1.7):")
for v, c in enumerate(counts, start=1):
    print(f"  x{v:<3d} {'#' * (c // 80)} {c}")
fraction = sum(1 for i in corpus if i.label is Label.SAT) / len(corpus)
print(f"  sat fraction: {fraction:.1%}")
