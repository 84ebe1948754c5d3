import pytest

from cnfaug import (
    Formula,
    Label,
    build_lig,
    drop_clauses,
    drop_variables,
    perturb_links,
    solve_brute,
    subgraph,
    to_formula,
)
from conftest import formula_of


def find_flip(fn, corpus, rate=0.3, seeds=10):
    for idx, inst in enumerate(corpus):
        for s in range(seeds):
            out = fn(inst.formula, rate, idx * 1000 + s)
            if solve_brute(out) is not inst.label:
                return idx, s
    return None


class TestDropClauses:
    def test_rate_zero_identity(self, sr_corpus):
        f = sr_corpus[0].formula
        assert drop_clauses(f, 0.0, 1) == f

    def test_rate_one_drops_everything(self):
        f = formula_of(3, [1, 2], [-3])
        out = drop_clauses(f, 1.0, 4)
        assert out.clauses == ()
        assert solve_brute(out) is Label.SAT

    def test_flips_some_unsat_instance(self, sr_corpus):
        assert find_flip(drop_clauses, sr_corpus[:200]) is not None

    def test_never_flips_sat_to_unsat(self, sr_corpus):
        sat_instances = [i for i in sr_corpus[:200] if i.label is Label.SAT]
        for idx, inst in enumerate(sat_instances):
            for s in range(3):
                out = drop_clauses(inst.formula, 0.3, idx * 31 + s)
                assert solve_brute(out) is Label.SAT


class TestDropVariables:
    def test_rate_zero_identity(self, sr_corpus):
        f = sr_corpus[0].formula
        assert drop_variables(f, 0.0, 1) == f

    def test_emptied_clauses_are_deleted(self):
        f = formula_of(2, [1, 2], [-2])
        # drop both variables in turn until the seeded pick hits x2
        for s in range(20):
            out = drop_variables(f, 0.5, s)  # floor(0.5 * 2) = 1 variable
            survivors = {abs(l) for c in out.clauses for l in c}
            if 2 not in survivors and out.num_clauses == 1:
                assert out.clauses == ((1,),)
                break
        else:
            pytest.fail("seeded picks never selected x2")

    def test_num_vars_unchanged(self, sr_corpus):
        out = drop_variables(sr_corpus[1].formula, 0.5, 9)
        assert out.num_vars == sr_corpus[1].formula.num_vars

    def test_flips_some_instance(self, sr_corpus):
        assert find_flip(drop_variables, sr_corpus[:200]) is not None


class TestPerturbLinks:
    def test_rate_zero_identity(self, sr_corpus):
        f = sr_corpus[0].formula
        assert perturb_links(f, 0.0, 1) == f

    def test_single_literal_flip_turns_sat_into_unsat(self, sr_corpus):
        # the paired construction: sat twin differs from the unsat one by a
        # single literal, i.e. one remove + one targeted insert
        sat, unsat = sr_corpus[0], sr_corpus[1]
        assert sat.label is Label.SAT and unsat.label is Label.UNSAT
        differing = [
            (a, b)
            for a, b in zip(sat.formula.clauses, unsat.formula.clauses)
            if a != b
        ]
        assert len(differing) == 1
        edited, original = differing[0]
        removed = set(edited) - set(original)
        inserted = set(original) - set(edited)
        assert len(removed) == len(inserted) == 1
        assert removed.pop() == -inserted.pop()

    def test_flips_some_instance(self, sr_corpus):
        assert find_flip(perturb_links, sr_corpus[:200]) is not None

    def test_outputs_are_well_formed(self, sr_corpus):
        for idx, inst in enumerate(sr_corpus[:50]):
            out = perturb_links(inst.formula, 0.3, idx)
            build_lig(out)  # validates indices via Formula + graph construction


class TestSubgraph:
    def test_empty_formula_rejected(self):
        with pytest.raises(ValueError):
            subgraph(Formula(0, ()), 0.3, 1)

    def test_long_walk_returns_whole_formula(self):
        f = formula_of(1, [1])
        # 3-node connected graph; a long walk visits everything
        out = subgraph(f, 1.0, 3)
        assert out == f

    def test_clause_restricted_to_visited_literals(self):
        f = formula_of(2, [1, 2])
        seen = set()
        for s in range(40):
            out = subgraph(f, 0.34, s)  # ceil(0.34 * 5) = 2 steps
            if out.num_clauses == 1 and len(out.clauses[0]) == 1:
                seen.add(out.clauses[0])
        assert seen  # some walk covered the clause plus exactly one literal

    def test_flips_some_instance(self, sr_corpus):
        assert find_flip(subgraph, sr_corpus[:200]) is not None

    def test_outputs_are_well_formed(self, sr_corpus):
        for idx, inst in enumerate(sr_corpus[:50]):
            out = subgraph(inst.formula, 0.3, idx)
            graph = build_lig(out)
            assert to_formula(graph) == out
