"""cnfaug: random SAT instances, satisfiability-preserving augmentation,
incidence-graph export, and contrastive-loss utilities."""

from .chains import (
    AugKind,
    AugmentationSpec,
    Chain,
    ChainParseError,
    LaaKind,
    LpaKind,
    apply_chain,
    format_chain,
    is_label_preserving,
    parse_chain,
)
from .contrastive import (
    ContrastiveConfig,
    EmbeddingBatch,
    cosine_sim,
    make_pair,
    nt_xent,
)
from .formula import (
    Clause,
    DimacsError,
    DimacsWarning,
    Formula,
    Label,
    Literal,
    canonicalize,
    is_tautology,
    make_clause,
    parse_dimacs,
    satisfies,
    serialize_dimacs,
)
from .gen import (
    GenFamily,
    GenSpec,
    LabeledInstance,
    SrParams,
    derive_seed,
    gen_corpus,
    gen_pr,
    gen_sr,
    gen_ur,
    load_corpus,
    read_manifest,
    write_corpus,
)
from .graph import (
    LigGraph,
    build_lig,
    export_graph,
    flip_node,
    graph_from_json,
    graph_to_json,
    literal_node,
    node_literal,
    to_formula,
)
from .laa import drop_clauses, drop_variables, perturb_links, subgraph
from .lpa import (
    add_unit_literal,
    clause_resolution,
    pure_literal_eliminate,
    resolve,
    subsumed_clause_eliminate,
    unit_propagate,
    variable_eliminate,
)
from .oracle import (
    OracleBudgetError,
    SolveResult,
    SolverConfig,
    count_models,
    solve_brute,
    solve_dpll,
)

__version__ = "0.1.0"

__all__ = [
    "AugKind",
    "AugmentationSpec",
    "Chain",
    "ChainParseError",
    "Clause",
    "ContrastiveConfig",
    "DimacsError",
    "DimacsWarning",
    "EmbeddingBatch",
    "Formula",
    "GenFamily",
    "GenSpec",
    "Label",
    "LabeledInstance",
    "LaaKind",
    "LigGraph",
    "Literal",
    "LpaKind",
    "OracleBudgetError",
    "SolveResult",
    "SolverConfig",
    "SrParams",
    "add_unit_literal",
    "apply_chain",
    "build_lig",
    "canonicalize",
    "clause_resolution",
    "cosine_sim",
    "count_models",
    "derive_seed",
    "drop_clauses",
    "drop_variables",
    "export_graph",
    "flip_node",
    "format_chain",
    "gen_corpus",
    "gen_pr",
    "gen_sr",
    "gen_ur",
    "graph_from_json",
    "graph_to_json",
    "is_label_preserving",
    "is_tautology",
    "literal_node",
    "load_corpus",
    "make_clause",
    "make_pair",
    "node_literal",
    "nt_xent",
    "parse_chain",
    "parse_dimacs",
    "perturb_links",
    "pure_literal_eliminate",
    "read_manifest",
    "resolve",
    "satisfies",
    "serialize_dimacs",
    "solve_brute",
    "solve_dpll",
    "subgraph",
    "subsumed_clause_eliminate",
    "to_formula",
    "unit_propagate",
    "variable_eliminate",
    "write_corpus",
]
