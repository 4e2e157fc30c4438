"""Command-line front end.

Exit codes: 0 ok, 1 verification mismatch, 2 bad arguments, 3 enumeration cap
exceeded, 4 methods disagree under ``count --check``, 5 output file error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import burnside, formulas
from .errors import CapExceeded, HamorbitError, InexactDivision
from .groups import ALL_KINDS, EquivKind, GraphKind, Mode
from .render import render_gallery

EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_CAP = 3
EXIT_DISAGREE = 4
EXIT_IO = 5

METHODS = ("formula", "burnside", "enumerate")
TABLE_KEYS = ("path_similar", "path_equivalent", "cycle_similar", "cycle_equivalent")

OEIS = {
    "A000940": (GraphKind.CYCLE, EquivKind.SIMILAR),
    "A000939": (GraphKind.CYCLE, EquivKind.EQUIVALENT),
    "A099030": (GraphKind.PATH, EquivKind.SIMILAR),
}


class UsageError(Exception):
    pass


def count_by(mode: Mode, method: str, jobs: int | None) -> int:
    if method == "formula":
        return formulas.class_count(mode)
    if method == "burnside":
        return burnside.burnside_count(mode, jobs).class_count
    return len(burnside.enumerate_classes(mode, jobs))


def _mode(args) -> Mode:
    if args.n < 3:
        raise UsageError(f"--n must be at least 3, got {args.n}")
    return Mode(GraphKind(args.graph), EquivKind(args.equiv), args.n)


def cmd_count(args) -> int:
    mode = _mode(args)
    value = count_by(mode, args.method, args.jobs)
    if args.check:
        for other in METHODS:
            if other == args.method:
                continue
            got = count_by(mode, other, args.jobs)
            if got != value:
                print(f"disagreement for {mode}: {args.method}={value} {other}={got}", file=sys.stderr)
                return EXIT_DISAGREE
    print(value)
    return 0


def table_rows(n_min: int, n_max: int, method: str = "formula", jobs: int | None = 1) -> list[dict[str, int]]:
    rows = []
    for n in range(n_min, n_max + 1):
        row = {"n": n}
        for key, (graph, equiv) in zip(TABLE_KEYS, ALL_KINDS):
            row[key] = count_by(Mode(graph, equiv, n), method, jobs)
        rows.append(row)
    return rows


def cmd_table(args) -> int:
    if not 3 <= args.n_min <= args.n_max:
        raise UsageError(f"need 3 <= n-min <= n-max, got {args.n_min}..{args.n_max}")
    rows = table_rows(args.n_min, args.n_max, args.method, args.jobs)
    if args.format == "json":
        print(json.dumps(rows))
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\r\n")
        writer.writerow(["n", "P_S", "P_E", "C_S", "C_E"])
        for row in rows:
            writer.writerow([row["n"], *(row[k] for k in TABLE_KEYS)])
        sys.stdout.write(buf.getvalue())
    else:
        widths = [4] + [max(len("C_E"), *(len(str(r[k])) for r in rows)) for k in TABLE_KEYS]
        header = ["n", "P_S", "P_E", "C_S", "C_E"]
        print("  ".join(h.rjust(w) for h, w in zip(header, widths)))
        for row in rows:
            cells = [row["n"], *(row[k] for k in TABLE_KEYS)]
            print("  ".join(str(c).rjust(w) for c, w in zip(cells, widths)))
    return 0


def verify_mode(mode: Mode, jobs: int | None) -> list[str]:
    """Compare every route for one mode; returns a list of failure messages."""
    failures = []
    report = burnside.burnside_count(mode, jobs)
    try:
        expected = formulas.class_count(mode)
    except InexactDivision as exc:
        return [f"formula: {exc}"]
    if report.class_count != expected:
        failures.append(f"burnside {report.class_count} != formula {expected}")
    scanned = report.family_sums()
    for label, value in formulas.component_sums(mode).items():
        if scanned.get(label, 0) != value:
            first = next((g for g in report.fixed_counts if burnside_label(mode, g) == label), None)
            failures.append(f"{label}: scanned {scanned.get(label, 0)} != predicted {value} (family of {first})")
    try:
        via_components = formulas.class_count_from_components(mode)
    except InexactDivision as exc:
        failures.append(f"component sums: {exc}")
    else:
        if via_components != expected:
            failures.append(f"component-sum quotient {via_components} != formula {expected}")
    enumerated = len(burnside.enumerate_classes(mode, jobs))
    if enumerated != expected:
        failures.append(f"enumeration {enumerated} != formula {expected}")
    return failures


def burnside_label(mode: Mode, g) -> str:
    labels = formulas.PATH_LABELS if mode.graph is GraphKind.PATH else formulas.CYCLE_LABELS
    return labels[g.family]


def cmd_verify(args) -> int:
    if args.n_max < 3:
        raise UsageError(f"--n-max must be at least 3, got {args.n_max}")
    for n in range(3, args.n_max + 1):
        for graph, equiv in ALL_KINDS:
            mode = Mode(graph, equiv, n)
            failures = verify_mode(mode, args.jobs)
            if failures:
                print(f"FAIL {mode}: {failures[0]}")
                print(f"first failing mode: {mode}: {failures[0]}", file=sys.stderr)
                return EXIT_MISMATCH
            print(f"PASS {mode}: {formulas.class_count(mode)}")
    return 0


def cmd_reps(args) -> int:
    mode = _mode(args)
    for rep, _ in burnside.enumerate_classes(mode, args.jobs):
        print(rep)
    return 0


def cmd_render(args) -> int:
    mode = _mode(args)
    svg = render_gallery(mode, args.columns, jobs=args.jobs)
    if args.out in (None, "-"):
        sys.stdout.write(svg)
        return 0
    try:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(svg)
    except OSError as exc:
        print(f"cannot write {args.out}: {exc}", file=sys.stderr)
        return EXIT_IO
    return 0


def oeis_terms(sequence: str, terms: int) -> list[int]:
    graph, equiv = OEIS[sequence]
    return [formulas.class_count(Mode(graph, equiv, n)) for n in range(3, 3 + terms)]


def cmd_oeis(args) -> int:
    if args.sequence not in OEIS:
        raise UsageError(f"unknown sequence {args.sequence}; known: {', '.join(OEIS)}")
    if args.terms < 1:
        raise UsageError("--terms must be at least 1")
    print(", ".join(str(v) for v in oeis_terms(args.sequence, args.terms)))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hamorbit",
        description="Count and draw Hamiltonian path/cycle shapes up to rotation and reflection.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def jobs(p):
        p.add_argument("--jobs", type=int, default=burnside.default_jobs(), help="worker processes for scans")

    def mode_args(p):
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--graph", choices=[g.value for g in GraphKind], required=True)
        p.add_argument("--equiv", choices=[e.value for e in EquivKind], required=True)

    p = sub.add_parser("count", help="number of classes for one mode")
    mode_args(p)
    p.add_argument("--method", choices=METHODS, default="formula")
    p.add_argument("--check", action="store_true", help="also run the other methods and compare")
    jobs(p)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("table", help="all four counts for a range of n")
    p.add_argument("--n-min", type=int, default=3)
    p.add_argument("--n-max", type=int, default=10)
    p.add_argument("--method", choices=METHODS, default="formula")
    p.add_argument("--format", choices=("text", "csv", "json"), default="text")
    jobs(p)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", help="cross-check formulas against exhaustive scans")
    p.add_argument("--n-max", type=int, default=7)
    jobs(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("reps", help="print one canonical string per class")
    mode_args(p)
    jobs(p)
    p.set_defaults(func=cmd_reps)

    p = sub.add_parser("render", help="write an SVG gallery of class representatives")
    mode_args(p)
    p.add_argument("--out", help="output path (default stdout)")
    p.add_argument("--columns", type=int, default=6)
    jobs(p)
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("oeis", help="print a sequence prefix starting at n=3")
    p.add_argument("sequence")
    p.add_argument("--terms", type=int, default=8)
    p.set_defaults(func=cmd_oeis)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "jobs", 1) is not None and getattr(args, "jobs", 1) < 1:
        print("--jobs must be at least 1", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"hamorbit: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CapExceeded as exc:
        print(f"hamorbit: {exc}", file=sys.stderr)
        return EXIT_CAP
    except HamorbitError as exc:
        print(f"hamorbit: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
