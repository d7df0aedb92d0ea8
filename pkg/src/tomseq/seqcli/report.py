"""Computing report tables for S_n / A_n and comparing them with published values."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Callable, Optional

from ..connectivity import connected_class_count, connected_partition_count
from ..enumeration import DEFAULT_BUDGET, ClassTable, is_even_group
from ..marks import (
    MarksTable, diagonal_sum, lattice_edges, lattice_incidences, marks_table, matrix_sum,
    poset_edges, poset_incidences, total_maximal_property_p, total_subgroups, maximal_property_p,
)
from ..properties import PROPERTY_NAMES, count_by_property, order_stats
from . import golden
from .cache import ClassTableCache

REQUIRES_IMPORT = "requires import"


class RequiresImport(Exception):
    """The cell needs data that neither enumeration nor the imported table provides."""


class FamilyError(ValueError):
    pass


@dataclass
class GroupData:
    """Everything known about one group: an enumerated class table, or an imported marks table."""

    family: str
    n: int
    ct: Optional[ClassTable] = None
    mt: Optional[MarksTable] = None
    cache: Optional[ClassTableCache] = field(default=None, repr=False)

    def marks(self) -> MarksTable:
        if self.mt is None:
            self.mt = marks_table(self.class_table(), f"{self.family}{self.n}")
        return self.mt

    def class_table(self) -> ClassTable:
        if self.ct is None:
            raise RequiresImport(f"{self.family}{self.n}: class representatives are not available")
        return self.ct

    def other(self, family: str) -> ClassTable:
        if self.cache is None:
            raise RequiresImport(f"{family}{self.n}: no enumeration available")
        return self.cache.get(family, self.n)

    def flags(self):
        try:
            return self.marks().property_flags()
        except ValueError:
            raise RequiresImport(f"{self.family}{self.n}: imported table carries no PROPS block") from None


def group_order(family: str, n: int) -> int:
    f = math.factorial(n)
    return f if family == "S" or n < 2 else f // 2


# -- table computations -------------------------------------------------------

def _classcounts(d: GroupData):
    mt = d.marks()
    return (len(mt), *count_by_property(d.flags(), mt.lengths, weighted=False))


def _weighted(d: GroupData):
    mt = d.marks()
    if d.ct is not None and d.ct.total_subgroups() != total_subgroups(mt):
        raise AssertionError("enumerated and marks-derived subgroup totals disagree")
    return (total_subgroups(mt), *count_by_property(d.flags(), mt.lengths, weighted=True))


def _orders(d: GroupData):
    mt = d.marks()
    return order_stats(mt.orders, mt.group_order)


def _totals(d: GroupData):
    mt = d.marks()
    total = total_subgroups(mt)
    if d.ct is not None and d.ct.total_subgroups() != total:
        raise AssertionError("enumerated and marks-derived subgroup totals disagree")
    return (total,)


def _sums(d: GroupData):
    mt = d.marks()
    return matrix_sum(mt), diagonal_sum(mt)


def _incidences(d: GroupData):
    mt = d.marks()
    return poset_incidences(mt), lattice_incidences(mt)


def _edges(d: GroupData):
    mt = d.marks()
    return poset_edges(mt), lattice_edges(mt)


def _maxp(d: GroupData):
    mt = d.marks()
    d.flags()
    return tuple(len(maximal_property_p(mt, p)) for p in PROPERTY_NAMES)


def _maxp_totals(d: GroupData):
    mt = d.marks()
    d.flags()
    return tuple(total_maximal_property_p(mt, p) for p in PROPERTY_NAMES)


def _connected(d: GroupData):
    ct = d.class_table()
    return (connected_class_count(ct), *(connected_class_count(ct, p) for p in PROPERTY_NAMES))


def _redblue(d: GroupData):
    ct = d.class_table()
    even = [is_even_group(c.representative) for c in ct.classes]
    blue = sum(even)
    blue_conn = connected_class_count(ct, even_only=True)
    return (len(ct), len(d.other("A")), blue, len(ct) - blue, blue_conn, connected_class_count(ct) - blue_conn)


def _partitions(d: GroupData):
    return connected_partition_count(d.n), connected_partition_count(d.n, even_only=True)


@dataclass(frozen=True)
class TableSpec:
    name: str
    columns: tuple[str, ...]
    compute: Callable[[GroupData], tuple]
    # golden source per column: (table id or sequence id, column name or None)
    golden: Callable[[str], dict]
    families: tuple[str, ...] = ("S", "A")
    enumerates: bool = True


_PROPS = PROPERTY_NAMES


def _same(table: str, cols) -> Callable[[str], dict]:
    return lambda fam: {c: (f"{table}_{fam}", c) for c in cols}


def _connected_golden(fam: str) -> dict:
    out = {p: (f"connected_{fam}", p) for p in _PROPS if p != "cyclic"}
    if fam == "S":
        out["connected"] = (("A218968", "A218969"), None)
        out["cyclic"] = ("A218970", None)
    else:
        out["connected"] = ("A218967", None)
        out["cyclic"] = ("A218975", None)
    return out


TABLES: dict[str, TableSpec] = {
    t.name: t for t in (
        TableSpec("classcounts", ("classes", *_PROPS), _classcounts, _same("classes", ("classes", *_PROPS))),
        TableSpec("orders", ("orders", "missing"), _orders, _same("orders", ("orders", "missing"))),
        TableSpec("totals", ("subgroups",), _totals, _same("totals", ("subgroups",))),
        TableSpec("weighted", ("subgroups", *_PROPS), _weighted, _same("weighted", ("subgroups", *_PROPS))),
        TableSpec("sums", ("sum", "diagonal"), _sums, _same("marks_sums", ("sum", "diagonal"))),
        TableSpec("incidences", ("poset", "lattice"), _incidences, _same("incidences", ("poset", "lattice"))),
        TableSpec("edges", ("poset", "lattice"), _edges, _same("edges", ("poset", "lattice"))),
        TableSpec("maxp", _PROPS, _maxp, _same("maxp", _PROPS)),
        TableSpec("maxp-totals", _PROPS, _maxp_totals, _same("maxp_totals", _PROPS)),
        TableSpec("connected", ("connected", *_PROPS), _connected, _connected_golden),
        TableSpec("redblue", ("classes_S", "classes_A", "blue", "red", "blue_connected", "red_connected"), _redblue,
                  lambda fam: {
                      **{c: ("redblue", c) for c in ("classes_S", "classes_A", "blue", "red")},
                      "blue_connected": ("A218968", None), "red_connected": ("A218969", None)},
                  families=("S",)),
        TableSpec("partitions", ("connected", "connected_even"), _partitions,
                  lambda fam: {"connected": ("A218970", None), "connected_even": ("A218975", None)},
                  enumerates=False),
    )
}


def golden_value(source, n: int) -> Optional[int]:
    ident, col = source
    if isinstance(ident, tuple):
        vals = [golden_value((i, col), n) for i in ident]
        return None if None in vals else sum(vals)
    if col is None:
        seq = golden.SEQUENCES[ident]
        return seq[n - 1] if n <= len(seq) else None
    table = golden.TABLES[ident]
    return table.value(n, col) if n in table.rows else None


# -- reports -------------------------------------------------------------------

@dataclass(frozen=True)
class Delta:
    table: str
    column: str
    n: int
    computed: int
    published: int


@dataclass
class Report:
    family: str
    n_range: tuple[int, int]
    columns: dict[str, tuple[str, ...]]
    cells: dict[str, dict[int, tuple]]
    deltas: list[Delta]

    @property
    def requires_import(self) -> bool:
        return any(v == REQUIRES_IMPORT for rows in self.cells.values() for row in rows.values() for v in row)

    def to_json(self) -> str:
        doc = {
            "family": self.family,
            "n_min": self.n_range[0],
            "n_max": self.n_range[1],
            "tables": {
                name: {"columns": list(self.columns[name]),
                       "rows": {str(n): list(row) for n, row in sorted(rows.items())}}
                for name, rows in self.cells.items()
            },
            "deltas": [vars(d) for d in self.deltas],
        }
        return json.dumps(doc, indent=2, sort_keys=True) + "\n"

    def to_csv(self) -> str:
        out = []
        for name, rows in self.cells.items():
            out.append(f"# {name} {self.family}")
            out.append(",".join(("n",) + self.columns[name]))
            for n, row in sorted(rows.items()):
                out.append(",".join([str(n)] + [str(v) for v in row]))
        return "\n".join(out) + "\n"

    def to_bfile(self) -> str:
        out = []
        for name, rows in self.cells.items():
            for k, col in enumerate(self.columns[name]):
                out.append(f"# {name}.{col} {self.family}")
                for n, row in sorted(rows.items()):
                    v = row[k]
                    out.append(f"# {n} {v}" if v == REQUIRES_IMPORT else f"{n} {v}")
        return "\n".join(out) + "\n"

    def render(self, fmt: str) -> str:
        return {"csv": self.to_csv, "json": self.to_json, "bfile": self.to_bfile}[fmt]()


def build_report(
    family: str,
    n_max: int,
    tables: list[str],
    cache: Optional[ClassTableCache] = None,
    imported: Optional[dict[int, MarksTable]] = None,
    n_min: int = 1,
    budget: int = DEFAULT_BUDGET,
    allow_large: bool = False,
) -> Report:
    family = family.upper()
    if family not in ("S", "A"):
        raise FamilyError(f"unknown family {family!r}; expected S or A")
    for t in tables:
        if t not in TABLES:
            raise KeyError(f"unknown table {t!r}; known: {', '.join(TABLES)}")
        if family not in TABLES[t].families:
            raise FamilyError(f"table {t!r} is only defined for family {'/'.join(TABLES[t].families)}")
    cache = cache or ClassTableCache(enabled=False)
    imported = imported or {}
    limit = budget if not allow_large else max(budget, 40320)

    data: dict[int, GroupData] = {}
    for n in range(n_min, n_max + 1):
        if n in imported:
            data[n] = GroupData(family, n, mt=imported[n], cache=None)
        elif group_order(family, n) <= limit:
            data[n] = GroupData(family, n, ct=None, cache=cache)
        else:
            data[n] = GroupData(family, n, cache=None)

    def ensure_ct(d: GroupData) -> None:
        if d.ct is None and d.mt is None and d.cache is not None:
            d.ct = d.cache.get(d.family, d.n, limit, allow_large)

    cells: dict[str, dict[int, tuple]] = {}
    deltas: list[Delta] = []
    for name in tables:
        spec = TABLES[name]
        sources = spec.golden(family)
        rows = {}
        for n, d in data.items():
            try:
                if spec.enumerates:
                    ensure_ct(d)
                    if d.ct is None and d.mt is None:
                        raise RequiresImport(f"{family}{n} exceeds the enumeration budget")
                row = tuple(int(v) for v in spec.compute(d))
            except RequiresImport:
                row = (REQUIRES_IMPORT,) * len(spec.columns)
            rows[n] = row
            for col, v in zip(spec.columns, row):
                if v == REQUIRES_IMPORT or col not in sources:
                    continue
                expected = golden_value(sources[col], n)
                if expected is not None and expected != v:
                    deltas.append(Delta(name, col, n, v, expected))
        cells[name] = rows
    return Report(family, (n_min, n_max), {t: TABLES[t].columns for t in tables}, cells, deltas)
