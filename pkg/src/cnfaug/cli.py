"""Command-line interface.

Subcommands: ``gen`` (seeded corpora), ``augment`` (apply a chain to DIMACS
files), ``verify`` (compare labels before/after), ``stats`` (corpus
statistics and decision-step comparison), ``export`` (incidence-graph JSON),
``pair`` (two augmented views of one instance).

Every run is deterministic given its flags: all randomness flows from the
seeds in the flags and chain strings, manifests record no wall-clock data
unless ``--timing`` is passed, and per-file work is ordered by input path
regardless of ``--threads``.

Exit codes: 0 success, 1 usage, 2 I/O failure, 3 data failure (unparsable
inputs, oracle budget exhaustion, or label flips under ``verify --strict``).
"""

from __future__ import annotations

import argparse
import glob
import json
import os
import statistics
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

from . import __version__
from .chains import ChainParseError, apply_chain, parse_chain
from .contrastive import make_pair
from .formula import DimacsError, Formula, parse_dimacs, serialize_dimacs
from .gen import GenFamily, GenSpec, gen_corpus, write_corpus
from .graph import build_lig, export_graph
from .oracle import OracleBudgetError, solve_dpll

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_IO = 2
EXIT_DATA = 3

THREADS_ENV = "CNFAUG_THREADS"
MANIFEST_NAME = "manifest.jsonl"


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # exit code 1 for usage problems, not argparse's 2
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise _UsageError(message)


def _default_threads() -> int:
    try:
        return max(1, int(os.environ.get(THREADS_ENV, "1")))
    except ValueError:
        return 1


def _expand_inputs(patterns: list[str]) -> list[Path]:
    paths: set[Path] = set()
    for pattern in patterns:
        paths.update(Path(p) for p in glob.glob(pattern))
    return sorted(paths)


def _ordered_map(worker, items, threads: int) -> list:
    if threads <= 1 or len(items) <= 1:
        return [worker(item) for item in items]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(worker, items))


class _Manifest:
    """Append-only JSON-lines run manifest inside an output directory."""

    def __init__(self, out_dir: Path, command: str, argv: list[str], seed: int | None):
        self.path = out_dir / MANIFEST_NAME
        self.header = {
            "type": "run",
            "command": command,
            "argv": argv,
            "seed": seed,
            "version": __version__,
        }

    def write(self, records: list[dict]) -> None:
        with open(self.path, "a", encoding="utf-8") as fh:
            fh.write(json.dumps(self.header, sort_keys=True) + "\n")
            for record in records:
                fh.write(json.dumps({"type": "instance", **record}, sort_keys=True) + "\n")


def _elapsed(started: float | None) -> float | None:
    return round((time.perf_counter() - started) * 1000, 3) if started is not None else None


def cmd_gen(args) -> int:
    family = GenFamily(args.family.upper())
    try:
        if family is GenFamily.SR and ":" in args.vars:
            lo, hi = args.vars.split(":", 1)
            num_vars: int | tuple[int, int] = (int(lo), int(hi))
        else:
            num_vars = int(args.vars)
        if args.count < 1:
            raise ValueError("count must be at least 1")
        spec = GenSpec(
            family=family,
            num_vars=num_vars,
            num_clauses=args.clauses,
            clause_len=args.k,
            power_exponent=args.exp,
            seed=args.seed,
        )
    except ValueError as exc:
        raise _UsageError(str(exc)) from exc

    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    corpus = gen_corpus(spec, args.count, args.seed)
    header = {"command": "gen", "argv": args._argv, "seed": args.seed, "version": __version__}
    write_corpus(corpus, out, run_header=header)
    print(f"wrote {len(corpus)} instances to {out}")
    return EXIT_OK


def cmd_augment(args) -> int:
    try:
        chain = parse_chain(args.chain)
    except ChainParseError as exc:
        raise _UsageError(str(exc)) from exc
    inputs = _expand_inputs(args.input)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)

    def work(path: Path) -> dict:
        started = time.perf_counter() if args.timing else None
        record: dict = {"input": str(path), "chain": args.chain, "output": None,
                        "label_before": None, "label_after": None,
                        "decisions_before": None, "decisions_after": None}
        try:
            formula = parse_dimacs(path.read_text(encoding="utf-8"))
            augmented = apply_chain(formula, chain)
        except (DimacsError, ValueError) as exc:
            record.update(status="error", error=str(exc), elapsed_ms=_elapsed(started))
            return record
        if args.verify:
            try:
                before = solve_dpll(formula)
                after = solve_dpll(augmented)
            except OracleBudgetError as exc:
                record.update(status="error", error=str(exc), elapsed_ms=_elapsed(started))
                return record
            record.update(
                label_before=before.label.value,
                label_after=after.label.value,
                decisions_before=before.decisions,
                decisions_after=after.decisions,
            )
        name = path.name
        (out / name).write_text(serialize_dimacs(augmented), encoding="utf-8")
        record.update(status="ok", output=name, elapsed_ms=_elapsed(started))
        return record

    records = _ordered_map(work, inputs, args.threads)
    _Manifest(out, "augment", args._argv, None).write(records)
    failures = sum(1 for r in records if r["status"] == "error")
    print(f"augmented {len(records) - failures}/{len(records)} files into {out}")
    return EXIT_DATA if failures else EXIT_OK


def cmd_verify(args) -> int:
    before_dir, after_dir = Path(args.before), Path(args.after)
    before_files = sorted(before_dir.glob("*.cnf"))

    def work(path: Path) -> dict:
        twin = after_dir / path.name
        record = {"input": str(path), "after": str(twin)}
        if not twin.exists():
            record.update(status="error", error="missing counterpart")
            return record
        try:
            before = solve_dpll(parse_dimacs(path.read_text(encoding="utf-8")))
            after = solve_dpll(parse_dimacs(twin.read_text(encoding="utf-8")))
        except (DimacsError, ValueError, OracleBudgetError) as exc:
            record.update(status="error", error=str(exc))
            return record
        record.update(
            status="ok",
            label_before=before.label.value,
            label_after=after.label.value,
            decisions_before=before.decisions,
            decisions_after=after.decisions,
            preserved=before.label is after.label,
        )
        return record

    records = _ordered_map(work, before_files, args.threads)
    flipped = [Path(r["input"]).name for r in records if r.get("preserved") is False]
    errors = sum(1 for r in records if r["status"] == "error")
    report = {
        "pairs": len(records),
        "preserved": sum(1 for r in records if r.get("preserved") is True),
        "flipped": len(flipped),
        "errors": errors,
        "flipped_files": flipped,
    }
    print(json.dumps(report, indent=2, sort_keys=True))
    if errors:
        return EXIT_DATA
    if args.strict and flipped:
        return EXIT_DATA
    return EXIT_OK


def _subsumed_clause_count(formula: Formula) -> int:
    """Clauses that are a strict superset of another clause (duplicates are
    not counted: equal clauses cannot strictly subsume each other)."""
    sets = [frozenset(c) for c in formula.clauses]
    count = 0
    for j, outer in enumerate(sets):
        for i, inner in enumerate(sets):
            if i != j and len(inner) < len(outer) and inner < outer:
                count += 1
                break
    return count


def cmd_stats(args) -> int:
    corpus_dir = Path(args.corpus)
    files = sorted(corpus_dir.glob("*.cnf"))
    if not files:
        print(json.dumps({"instances": 0}, indent=2, sort_keys=True))
        return EXIT_OK
    chain = parse_chain(args.chain) if args.chain else None

    def work(path: Path) -> dict:
        formula = parse_dimacs(path.read_text(encoding="utf-8"))
        row = {
            "clauses": formula.num_clauses,
            "vars": formula.num_vars,
            "subsumed": _subsumed_clause_count(formula),
        }
        if chain is not None:
            before = solve_dpll(formula)
            after = solve_dpll(apply_chain(formula, chain))
            row.update(
                decisions_before=before.decisions,
                decisions_after=after.decisions,
            )
        return row

    rows = _ordered_map(work, files, args.threads)
    total_clauses = sum(r["clauses"] for r in rows)
    report = {
        "instances": len(rows),
        "mean_clauses": round(total_clauses / len(rows), 3),
        "mean_vars": round(sum(r["vars"] for r in rows) / len(rows), 3),
        "subsumed_clause_fraction": round(
            sum(r["subsumed"] for r in rows) / total_clauses, 4
        )
        if total_clauses
        else 0.0,
        "instances_with_subsumed_fraction": round(
            sum(1 for r in rows if r["subsumed"]) / len(rows), 4
        ),
    }
    if chain is not None:
        before = [r["decisions_before"] for r in rows]
        after = [r["decisions_after"] for r in rows]
        median_before = statistics.median(before)
        median_after = statistics.median(after)
        report.update(
            chain=args.chain,
            decisions_before_median=median_before,
            decisions_after_median=median_after,
            decisions_median_ratio=round(median_after / median_before, 4)
            if median_before
            else None,
            propagation_only_before_fraction=round(
                sum(1 for d in before if d == 0) / len(before), 4
            ),
            propagation_only_after_fraction=round(
                sum(1 for d in after if d == 0) / len(after), 4
            ),
        )
    print(json.dumps(report, indent=2, sort_keys=True))
    return EXIT_OK


def cmd_export(args) -> int:
    inputs = _expand_inputs(args.input)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)

    def work(path: Path) -> dict:
        record: dict = {"input": str(path), "output": None, "plus": not args.no_plus}
        try:
            formula = parse_dimacs(path.read_text(encoding="utf-8"))
        except DimacsError as exc:
            record.update(status="error", error=str(exc))
            return record
        name = path.stem + ".json"
        export_graph(
            build_lig(formula, plus=not args.no_plus),
            out / name,
            source=path.name,
            chain=None,
        )
        record.update(status="ok", output=name)
        return record

    records = _ordered_map(work, inputs, args.threads)
    _Manifest(out, "export", args._argv, None).write(records)
    failures = sum(1 for r in records if r["status"] == "error")
    print(f"exported {len(records) - failures}/{len(records)} graphs into {out}")
    return EXIT_DATA if failures else EXIT_OK


def cmd_pair(args) -> int:
    try:
        chain1 = parse_chain(args.chain1)
        chain2 = parse_chain(args.chain2)
    except ChainParseError as exc:
        raise _UsageError(str(exc)) from exc
    path = Path(args.input)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    try:
        formula = parse_dimacs(path.read_text(encoding="utf-8"))
    except DimacsError as exc:
        print(f"cannot parse {path}: {exc}", file=sys.stderr)
        return EXIT_DATA
    view1, view2 = make_pair(formula, chain1, chain2)
    names = (f"{path.stem}.view1.cnf", f"{path.stem}.view2.cnf")
    (out / names[0]).write_text(serialize_dimacs(view1), encoding="utf-8")
    (out / names[1]).write_text(serialize_dimacs(view2), encoding="utf-8")
    records = [
        {"input": str(path), "chain": args.chain1, "output": names[0], "status": "ok"},
        {"input": str(path), "chain": args.chain2, "output": names[1], "status": "ok"},
    ]
    _Manifest(out, "pair", args._argv, None).write(records)
    print(f"wrote {names[0]} and {names[1]} to {out}")
    return EXIT_OK


def build_parser() -> _Parser:
    parser = _Parser(prog="cnfaug", description=__doc__.split("\n\n")[0])
    parser.add_argument("--version", action="version", version=f"cnfaug {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a labeled corpus")
    p.add_argument("--family", required=True, choices=["sr", "ur", "pr"])
    p.add_argument("--vars", required=True, help="variable count, or LO:HI for sr")
    p.add_argument("--clauses", type=int, help="clause count (ur, pr)")
    p.add_argument("--k", type=int, help="literals per clause (ur, pr)")
    p.add_argument("--exp", type=float, help="power-law exponent (pr)")
    p.add_argument("--count", type=int, default=1, help="instances (sr: pairs)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("augment", help="apply an augmentation chain to DIMACS files")
    p.add_argument("--input", required=True, nargs="+", help="input glob(s)")
    p.add_argument("--chain", required=True, help='e.g. "CR:0.2:42,SC"')
    p.add_argument("--out", required=True)
    p.add_argument("--verify", action="store_true", help="record labels/decisions")
    p.add_argument("--timing", action="store_true", help="record wall-clock per file")
    p.set_defaults(func=cmd_augment)

    p = sub.add_parser("verify", help="compare labels between two corpora")
    p.add_argument("--before", required=True)
    p.add_argument("--after", required=True)
    p.add_argument("--strict", action="store_true", help="exit 3 on any flip")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("stats", help="corpus statistics, optionally before/after a chain")
    p.add_argument("--corpus", required=True)
    p.add_argument("--chain", help="chain for decision-step comparison")
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("export", help="export incidence-graph JSON documents")
    p.add_argument("--input", required=True, nargs="+", help="input glob(s)")
    p.add_argument("--out", required=True)
    p.add_argument("--no-plus", action="store_true", help="omit variable edges")
    p.set_defaults(func=cmd_export)

    p = sub.add_parser("pair", help="write two augmented views of one instance")
    p.add_argument("--input", required=True)
    p.add_argument("--chain1", required=True)
    p.add_argument("--chain2", required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_pair)

    for sp in sub.choices.values():
        sp.add_argument("--threads", type=int, default=_default_threads())
    return parser


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError:
        return EXIT_USAGE
    except SystemExit as exc:  # --help / --version
        return int(exc.code or 0)
    args._argv = argv
    try:
        return args.func(args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return EXIT_IO


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
