"""Command-line front end: bound reports, soundness verification, benchmarks.

Subcommands: bounds (full report for one graph), verify (invariant suite over
a corpus), bench (tightness CSV over family sweeps), gen (emit an edge list).
Exit codes: 0 ok, 1 parse/input error, 2 numerical failure, 3 verification
violation. SWB_THREADS caps bench parallelism.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path
from typing import Optional, Sequence

from .graph import GraphError, generate, parse_edge_list, serialize_edge_list
from .report import (
    CSV_HEADER,
    CorpusEntry,
    build_report,
    er_corpus,
    family_corpus,
    format_table,
    report_csv_rows,
    report_to_dict,
    run_verification,
)
from .walks import DEFAULT_MAX_LENGTH

DEFAULT_TOL = 1e-7


def _write_output(text: str, path: Optional[str]) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text, encoding="ascii")


def _entry_from_args(args: argparse.Namespace) -> CorpusEntry:
    if args.file:
        text = Path(args.file).read_text(encoding="ascii")
        g = parse_edge_list(text)
        return CorpusEntry(Path(args.file).stem, "file", g)
    g = generate(args.gen, seed=args.seed)
    return CorpusEntry(args.gen.replace(":", "_"), args.gen.split(":")[0], g)


def _parse_j_sets(values: Optional[Sequence[str]]) -> tuple[tuple[int, ...], ...]:
    if not values:
        return ((1, 2), (1, 2, 3))
    out = []
    for text in values:
        try:
            indices = tuple(sorted(int(t) for t in text.split(",") if t))
        except ValueError:
            raise GraphError(f"bad index set {text!r}: expected comma-separated integers")
        if not indices or indices[0] < 1:
            raise GraphError(f"bad index set {text!r}: positions are 1-based")
        out.append(indices)
    return tuple(out)


def cmd_bounds(args: argparse.Namespace) -> int:
    entry = _entry_from_args(args)
    report = build_report(
        entry,
        max_length=args.K,
        measures=tuple(args.measures),
        s_max=args.s_max,
        k_max=args.k_max,
        j_sets=_parse_j_sets(args.J),
        tol=args.tol,
        omega=args.omega,
        vertex_mode="all" if args.per_vertex else "aggregate",
        with_timing=not args.no_timing,
    )
    if args.format == "json":
        _write_output(json.dumps(report_to_dict(report), indent=2) + "\n", args.out)
    elif args.format == "csv":
        _write_output("\n".join([CSV_HEADER, *report_csv_rows(report)]) + "\n", args.out)
    else:
        _write_output(format_table(report), args.out)
    return 0


def _verify_corpus(args: argparse.Namespace) -> list[CorpusEntry]:
    entries: list[CorpusEntry] = []
    if args.families_max > 0:
        entries.extend(family_corpus(args.families_max))
    if args.er_count > 0:
        entries.extend(er_corpus(args.er_count, args.er_n, args.er_p, args.seed))
    if not entries:
        raise GraphError("empty corpus: enable families or ER samples")
    return entries


def cmd_verify(args: argparse.Namespace) -> int:
    entries = _verify_corpus(args)
    outcome = run_verification(
        entries,
        max_length=args.K,
        tol=args.tol,
        inject_corruption=args.inject_corruption,
    )
    print(f"graphs checked: {len(entries)}")
    print(f"checks run:     {outcome.checks}")
    print(f"violations:     {len(outcome.violations)}")
    print(f"worst lower margin: {outcome.worst_lower_margin:.3e}")
    print(f"worst upper margin: {outcome.worst_upper_margin:.3e}")
    if outcome.violations:
        for line in outcome.violations:
            print(f"VIOLATION: {line}")
        for entry in outcome.offenders:
            path = Path(args.dump_dir) / f"violation_{entry.name}.edges"
            path.write_text(serialize_edge_list(entry.graph), encoding="ascii")
            print(f"offending graph written to {path}")
        return 3
    return 0


def _bench_entries(args: argparse.Namespace) -> list[CorpusEntry]:
    builders = {
        "path": ("path", lambda n: f"path:{n}", 1),
        "cycle": ("cycle", lambda n: f"cycle:{n}", 3),
        "complete": ("complete", lambda n: f"complete:{n}", 2),
        "star": ("star", lambda n: f"star:{n}", 1),
    }
    entries: list[CorpusEntry] = []
    for family in args.families.split(","):
        family = family.strip()
        if not family:
            continue
        if family not in builders:
            raise GraphError(f"unknown bench family {family!r}")
        name, spec_of, min_size = builders[family]
        for n in range(max(args.min, min_size), args.max + 1):
            spec = spec_of(n)
            entries.append(CorpusEntry(spec.replace(":", "_"), name, generate(spec)))
    if args.er_count > 0:
        entries.extend(er_corpus(args.er_count, args.er_n, args.er_p, args.seed))
    if not entries:
        raise GraphError("empty bench sweep")
    return entries


def cmd_bench(args: argparse.Namespace) -> int:
    entries = _bench_entries(args)
    workers = int(os.environ.get("SWB_THREADS", "1") or "1")

    def work(entry: CorpusEntry):
        report = build_report(
            entry,
            max_length=args.K,
            s_max=args.s_max,
            k_max=args.k_max,
            tol=args.tol,
            with_timing=not args.no_timing,
        )
        return report_csv_rows(report)

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            blocks = list(pool.map(work, entries))
    else:
        blocks = [work(entry) for entry in entries]
    lines = [CSV_HEADER]
    for block in blocks:
        lines.extend(block)
    _write_output("\n".join(lines) + "\n", args.out)
    return 0


def cmd_gen(args: argparse.Namespace) -> int:
    g = generate(args.spec, seed=args.seed)
    _write_output(serialize_edge_list(g), args.out)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="swb",
        description="Walk-count moment sequences and spectral-radius bounds",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    bounds = sub.add_parser("bounds", help="full bound report for one graph")
    source = bounds.add_mutually_exclusive_group(required=True)
    source.add_argument("--file", help="edge-list file")
    source.add_argument("--gen", help="generator spec, e.g. star:4 or erdos_renyi:10:0.5")
    bounds.add_argument("--K", type=int, default=DEFAULT_MAX_LENGTH,
                        help="moment horizon (default 12)")
    bounds.add_argument("--measures", nargs="+", default=["walks", "closed", "vertex"],
                        choices=["walks", "closed", "vertex"])
    bounds.add_argument("--J", action="append",
                        help="index set like 1,2,3 (repeatable; default 1,2 and 1,2,3)")
    bounds.add_argument("--s-max", type=int, default=3)
    bounds.add_argument("--k-max", type=int, default=4)
    bounds.add_argument("--format", choices=["table", "json", "csv"], default="table")
    bounds.add_argument("--seed", type=int, default=0, help="seed for random generators")
    bounds.add_argument("--tol", type=float, default=DEFAULT_TOL,
                        help="verification margin (never added to bound values)")
    bounds.add_argument("--omega", type=int, default=None,
                        help="externally supplied clique number for large graphs")
    bounds.add_argument("--per-vertex", action="store_true",
                        help="report every vertex measure instead of the best vertex")
    bounds.add_argument("--no-timing", action="store_true",
                        help="zero out timing fields for byte-stable output")
    bounds.add_argument("--out", default=None)
    bounds.set_defaults(func=cmd_bounds)

    verify = sub.add_parser("verify", help="invariant suite over a corpus")
    verify.add_argument("--families-max", type=int, default=12,
                        help="largest family size (0 disables families)")
    verify.add_argument("--er-count", type=int, default=100)
    verify.add_argument("--er-n", type=int, default=15)
    verify.add_argument("--er-p", type=float, default=0.3)
    verify.add_argument("--seed", type=int, default=1729)
    verify.add_argument("--K", type=int, default=DEFAULT_MAX_LENGTH)
    verify.add_argument("--tol", type=float, default=DEFAULT_TOL)
    verify.add_argument("--dump-dir", default=".",
                        help="where to write offending graphs on violation")
    verify.add_argument("--inject-corruption", action="store_true",
                        help=argparse.SUPPRESS)
    verify.set_defaults(func=cmd_verify)

    bench = sub.add_parser("bench", help="tightness CSV over family sweeps")
    bench.add_argument("--families", default="path,cycle,complete,star")
    bench.add_argument("--min", type=int, default=3)
    bench.add_argument("--max", type=int, default=10)
    bench.add_argument("--er-count", type=int, default=0)
    bench.add_argument("--er-n", type=int, default=15)
    bench.add_argument("--er-p", type=float, default=0.3)
    bench.add_argument("--seed", type=int, default=1729)
    bench.add_argument("--K", type=int, default=DEFAULT_MAX_LENGTH)
    bench.add_argument("--s-max", type=int, default=3)
    bench.add_argument("--k-max", type=int, default=4)
    bench.add_argument("--tol", type=float, default=DEFAULT_TOL)
    bench.add_argument("--no-timing", action="store_true")
    bench.add_argument("--out", default=None)
    bench.set_defaults(func=cmd_bench)

    gen = sub.add_parser("gen", help="emit an edge list for a generator spec")
    gen.add_argument("spec")
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--out", default=None)
    gen.set_defaults(func=cmd_gen)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (GraphError, FileNotFoundError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ArithmeticError as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
