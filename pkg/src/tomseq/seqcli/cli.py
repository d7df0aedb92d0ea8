"""``tomseq`` command line.

Exit codes: 0 success, 1 mismatch against published values, 2 bad input,
3 refused because a group exceeds the enumeration budget.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path
from typing import Optional, Sequence

from .. import tomtext
from ..connectivity import connected_partition_count, connected_partitions, partitions, splits_in_alternating, Partition
from ..enumeration import DEFAULT_BUDGET, BudgetExceeded
from ..marks import (
    MarksInvariantError, diagonal_sum, lattice_edges, lattice_incidences, marks_table, matrix_sum,
    poset_edges, poset_incidences, total_subgroups,
)
from ..transforms import IntSeq, NotAnEulerTransform, euler_transform, inverse_euler_transform
from .cache import ClassTableCache
from .report import TABLES, FamilyError, build_report, golden_value, group_order

EXIT_OK, EXIT_MISMATCH, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3

log = logging.getLogger("tomseq")


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _family_and_n(mt) -> tuple[str, int]:
    """Guess (family, n) from a table's group order; the name wins when it says."""
    name = mt.name
    if len(name) >= 2 and name[0] in "SA" and name[1:].isdigit():
        return name[0], int(name[1:])
    for n in range(1, 21):
        for fam in ("S", "A"):
            if group_order(fam, n) == mt.group_order:
                return fam, n
    raise ValueError(f"cannot tell which S_n or A_n has order {mt.group_order}")


# -- report --------------------------------------------------------------------

def cmd_report(args) -> int:
    family = args.family.upper()
    tables = args.tables or [t for t, spec in TABLES.items() if family in spec.families]
    imported = {}
    for path in args.import_tom or []:
        mt = tomtext.load(path)
        fam, n = _family_and_n(mt)
        if fam != family or group_order(fam, n) != mt.group_order:
            raise ValueError(f"{path}: table {mt.name} of order {mt.group_order} is not {family}{n}")
        imported[n] = mt
    cache = ClassTableCache(args.cache_dir, enabled=not args.no_cache)
    report = build_report(family, args.max_n, tables, cache, imported, n_min=args.min_n,
                          budget=args.budget, allow_large=args.allow_large)
    _emit(report.render(args.format), args.output)
    for d in report.deltas:
        print(f"mismatch: {d.table}.{d.column} {family}{d.n}: computed {d.computed}, published {d.published}",
              file=sys.stderr)
    if report.deltas:
        return EXIT_MISMATCH
    if report.requires_import:
        print("some cells exceed the enumeration budget and require an imported table of marks", file=sys.stderr)
        return EXIT_BUDGET
    return EXIT_OK


# -- transform -----------------------------------------------------------------

def cmd_transform(args) -> int:
    text = Path(args.input).read_text(encoding="utf-8")
    seq = IntSeq.parse(text)
    if not seq.values:
        raise ValueError(f"{args.input}: no terms found")
    is_bfile = all(len(l.split()) == 2 and "," not in l for l in text.splitlines()
                   if l.strip() and not l.lstrip().startswith("#"))
    fn = euler_transform if args.direction == "euler" else inverse_euler_transform
    result = fn(seq)
    _emit(result.to_bfile() if is_bfile else result.to_csv(), args.output)
    return EXIT_OK


# -- tom -----------------------------------------------------------------------

def _summary(mt) -> list[tuple[str, int]]:
    return [
        ("classes", len(mt)),
        ("total_subgroups", total_subgroups(mt)),
        ("sum", matrix_sum(mt)),
        ("diagonal", diagonal_sum(mt)),
        ("poset_incidences", poset_incidences(mt)),
        ("lattice_incidences", lattice_incidences(mt)),
        ("poset_edges", poset_edges(mt)),
        ("lattice_edges", lattice_edges(mt)),
    ]


_SUMMARY_GOLDEN = {
    "classes": ("classes_{f}", "classes"),
    "total_subgroups": ("totals_{f}", "subgroups"),
    "sum": ("marks_sums_{f}", "sum"),
    "diagonal": ("marks_sums_{f}", "diagonal"),
    "poset_incidences": ("incidences_{f}", "poset"),
    "lattice_incidences": ("incidences_{f}", "lattice"),
    "poset_edges": ("edges_{f}", "poset"),
    "lattice_edges": ("edges_{f}", "lattice"),
}


def cmd_tom(args) -> int:
    if args.action == "export":
        cache = ClassTableCache(args.cache_dir, enabled=not args.no_cache)
        ct = cache.get(args.family, args.n, args.budget, args.allow_large)
        mt = marks_table(ct, f"{args.family.upper()}{args.n}")
        _emit(tomtext.dumps(mt), args.output)
        return EXIT_OK
    mt = tomtext.load(args.path)
    status = EXIT_OK
    fam_n = None
    if args.action == "verify":
        try:
            fam_n = _family_and_n(mt)
        except ValueError:
            fam_n = None
    lines = [f"table {mt.name}: {len(mt)} classes, group order {mt.group_order}, invariants ok"]
    for key, value in _summary(mt):
        note = ""
        if fam_n is not None:
            tid, col = _SUMMARY_GOLDEN[key]
            expected = golden_value((tid.format(f=fam_n[0]), col), fam_n[1])
            if expected is not None:
                note = "  ok" if expected == value else f"  MISMATCH (published {expected})"
                if expected != value:
                    status = EXIT_MISMATCH
        lines.append(f"{key} {value}{note}")
    _emit("\n".join(lines) + "\n", args.output)
    return status


# -- partitions ------------------------------------------------------------------

def cmd_partitions(args) -> int:
    n = args.n
    if n < 1:
        raise ValueError("n must be positive")
    if args.bfile:
        if args.connected:
            vals = [connected_partition_count(k, args.even) for k in range(1, n + 1)]
        else:
            vals = [sum(1 for p in partitions(k) if not args.even or Partition(p).is_even()) for k in range(1, n + 1)]
        _emit(IntSeq(vals).to_bfile(), args.output)
        return EXIT_OK
    if args.connected:
        lams = connected_partitions(n, args.even)
        count = connected_partition_count(n, args.even)
    else:
        lams = [Partition(p) for p in partitions(n) if not args.even or Partition(p).is_even()]
        count = len(lams)
    lines = [str(count)]
    if args.list:
        for lam in lams:
            mark = "  (two A_n-classes)" if args.even and args.connected and splits_in_alternating(lam) else ""
            lines.append(f"{lam}{mark}")
    _emit("\n".join(lines) + "\n", args.output)
    return EXIT_OK


# -- entry point -----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tomseq", description=__doc__.split("\n")[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_cache_flags(p):
        p.add_argument("--cache-dir", default=None, help="class-table cache directory (else $TOMSEQ_CACHE, else ~/.cache/tomseq)")
        p.add_argument("--no-cache", action="store_true")
        p.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="largest group order to enumerate")
        p.add_argument("--allow-large", action="store_true", help="raise the budget to 40320")

    p = sub.add_parser("report", help="compute tables for S_n or A_n and check them against published values")
    p.add_argument("--family", required=True, choices=["S", "A", "s", "a"])
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--min-n", type=int, default=1)
    p.add_argument("--tables", nargs="+", choices=list(TABLES), default=None)
    p.add_argument("--format", choices=["csv", "json", "bfile"], default="csv")
    p.add_argument("--import-tom", action="append", metavar="FILE", help="tom-text file supplying one group's marks")
    p.add_argument("-o", "--output")
    add_cache_flags(p)
    p.set_defaults(func=cmd_report)

    p = sub.add_parser("transform", help="Euler transform or its inverse of a b-file or CSV sequence")
    p.add_argument("direction", choices=["euler", "inverse"])
    p.add_argument("input")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("tom", help="export, import or verify a tom-text table of marks")
    tom = p.add_subparsers(dest="action", required=True)
    q = tom.add_parser("export", help="enumerate S_n or A_n and write its table of marks")
    q.add_argument("--family", required=True, choices=["S", "A", "s", "a"])
    q.add_argument("--n", type=int, required=True)
    q.add_argument("-o", "--output")
    add_cache_flags(q)
    for action, text in (("import", "check a file's invariants and print derived counts"),
                         ("verify", "like import, and compare the counts with published values")):
        q = tom.add_parser(action, help=text)
        q.add_argument("path")
        q.add_argument("-o", "--output")
    p.set_defaults(func=cmd_tom)

    p = sub.add_parser("partitions", help="count or list (connected, even) partitions of n")
    p.add_argument("n", type=int)
    p.add_argument("--connected", action="store_true")
    p.add_argument("--even", action="store_true")
    p.add_argument("--list", action="store_true")
    p.add_argument("--bfile", action="store_true", help="emit terms 1..n as a b-file")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_partitions)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except NotAnEulerTransform as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except MarksInvariantError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except tomtext.TomFormatError as exc:
        print(f"error: TomFormatError: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (FamilyError, KeyError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
