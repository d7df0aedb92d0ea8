"""Acceptance criteria 1-14, one test each.

Every test prints a single ``PASS``/``FAIL`` line naming the criterion, with
the failing cells listed underneath.  Run directly (``python3
tests/test_acceptance.py``) to get just those lines.
"""

from __future__ import annotations

import random
import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from conftest import marks, table  # noqa: E402
from oracles import conjugacy_classes, subgroups_by_backtracking  # noqa: E402
from tomseq import tomtext  # noqa: E402
from tomseq.connectivity import connected_class_count, connected_partition_count  # noqa: E402
from tomseq.enumeration import all_subgroups, class_table, sn_classes_of_an_subgroups  # noqa: E402
from tomseq.marks import (  # noqa: E402
    DiagonalError, FirstColumnError, MarksInvariantError, TriangularityError, diagonal_sum,
    edges_up, lattice_edges, lattice_incidences, mark_by_conjugates, mark_by_fixed_cosets,
    matrix_sum, maximal_property_p, poset_edges, poset_incidences,
    total_maximal_property_p, total_subgroups,
)
from tomseq.properties import (  # noqa: E402
    PROPERTY_NAMES, is_nilpotent, is_nilpotent_by_coprime_commuting, is_solvable, is_supersolvable,
    property_class_counts, subgroup_order_stats,
)
from tomseq.seqcli import golden  # noqa: E402
from tomseq.transforms import euler_by_multisets, euler_transform, inverse_euler_transform  # noqa: E402

N = range(1, 8)


class Criterion:
    def __init__(self, number: int, title: str):
        self.number = number
        self.title = title
        self.failures: list[str] = []
        self.checks = 0

    def expect(self, what: str, computed, expected) -> None:
        self.checks += 1
        if computed != expected:
            self.failures.append(f"{what}: computed {computed}, expected {expected}")

    def require(self, what: str, ok: bool) -> None:
        self.checks += 1
        if not ok:
            self.failures.append(what)

    def report(self) -> str:
        status = "PASS" if not self.failures else "FAIL"
        line = f"[{status}] criterion {self.number:2d}: {self.title} ({self.checks} checks)"
        return "\n".join([line] + [f"        {f}" for f in self.failures])

    def finish(self) -> None:
        print(self.report(), flush=True)
        assert not self.failures, "\n".join(self.failures)


def _row(table_id: str, n: int) -> tuple[int, ...]:
    return golden.TABLES[table_id].rows[n]


# -- criteria --------------------------------------------------------------------

def criterion_1() -> Criterion:
    c = Criterion(1, "S_n class counts and property columns, n <= 7")
    c.expect("class counts", [len(table("S", n)) for n in N], [1, 2, 4, 11, 19, 56, 96])
    for n in N:
        c.expect(f"S{n} row", (len(table("S", n)), *property_class_counts(table("S", n))), _row("classes_S", n))
    c.expect("S7 abelian/cyclic/nilpotent/solvable/supersolvable",
             property_class_counts(table("S", 7)).values, [26, 15, 32, 84, 65])
    return c


def criterion_2() -> Criterion:
    c = Criterion(2, "A_n class counts and property columns, n <= 7")
    for n in N:
        c.expect(f"A{n} row", (len(table("A", n)), *property_class_counts(table("A", n))), _row("classes_A", n))
    c.expect("A7 row", (len(table("A", 7)), *property_class_counts(table("A", 7))), (40, 12, 8, 13, 33, 22))
    return c


def criterion_3() -> Criterion:
    c = Criterion(3, "M(S_4) equals the published table; M(S_5) shape and first column")
    m4 = marks("S", 4)
    expected = np.zeros((11, 11), dtype=np.int64)
    for i, row in enumerate(golden.MARKS_S4):
        expected[i, : len(row)] = row
    c.require("M(S4) entry-for-entry", m4.beta.shape == expected.shape and bool((m4.beta == expected).all()))
    c.expect("S4 labels", tuple(m4.labels), golden.MARKS_S4_LABELS)
    m5 = marks("S", 5)
    c.expect("M(S5) rows", len(m5), 19)
    c.expect("M(S5) first column", [int(v) for v in m5.beta[:, 0]], [120 // o for o in m5.orders])
    return c


def criterion_4() -> Criterion:
    c = Criterion(4, "total subgroups by enumeration and from marks, S and A, n <= 7")
    exp = {"S": [1, 2, 6, 30, 156, 1455, 11300], "A": [1, 1, 2, 10, 59, 501, 3786]}
    for fam in "SA":
        c.expect(f"{fam} by enumeration", [len(all_subgroups(table(fam, n).group)) if n < 6 else table(fam, n).total_subgroups()
                                           for n in N], exp[fam])
        c.expect(f"{fam} from marks", [total_subgroups(marks(fam, n)) for n in N], exp[fam])
        c.expect(f"{fam} published", [_row(f"totals_{fam}", n)[0] for n in N], exp[fam])
    return c


def criterion_5() -> Criterion:
    c = Criterion(5, "sum of marks and diagonal sums, S and A, n <= 7")
    c.expect("S sums", [matrix_sum(marks("S", n)) for n in N], [1, 4, 18, 146, 681, 7518, 58633])
    c.expect("S diagonal", [diagonal_sum(marks("S", n)) for n in N], [1, 3, 10, 47, 165, 950, 5632])
    for n in N:
        c.expect(f"A{n} sum/diagonal", (matrix_sum(marks("A", n)), diagonal_sum(marks("A", n))), _row("marks_sums_A", n))
    c.expect("A6, A7 sums", [matrix_sum(marks("A", n)) for n in (6, 7)], [1717, 13946])
    c.expect("A6, A7 diagonal", [diagonal_sum(marks("A", n)) for n in (6, 7)], [412, 2660])
    return c


def criterion_6() -> Criterion:
    c = Criterion(6, "poset and lattice incidences, S and A, n <= 7")
    c.expect("S poset", [poset_incidences(marks("S", n)) for n in N], [1, 3, 9, 44, 101, 523, 1195])
    c.expect("S lattice", [lattice_incidences(marks("S", n)) for n in N], [1, 3, 11, 68, 262, 2261, 14032])
    for n in N:
        p, l = _row("incidences_A", n)
        c.expect(f"A{n} poset", poset_incidences(marks("A", n)), p)
        c.expect(f"A{n} lattice", lattice_incidences(marks("A", n)), l)
    return c


def criterion_7() -> Criterion:
    c = Criterion(7, "poset and lattice edges, S and A, n <= 7; every E-up integral")
    c.expect("S poset", [poset_edges(marks("S", n)) for n in N], [0, 1, 4, 17, 37, 149, 290])
    c.expect("S lattice", [lattice_edges(marks("S", n)) for n in N], [0, 1, 8, 66, 501, 6469, 60428])
    for n in N:
        p, l = _row("edges_A", n)
        c.expect(f"A{n} poset", poset_edges(marks("A", n)), p)
        c.expect(f"A{n} lattice", lattice_edges(marks("A", n)), l)
    c.expect("A6, A7 poset", [poset_edges(marks("A", n)) for n in (6, 7)], [44, 98])
    c.expect("A6, A7 lattice", [lattice_edges(marks("A", n)) for n in (6, 7)], [2051, 19305])
    bad = 0
    for fam in "SA":
        for n in N:
            mt = marks(fam, n)
            for i in range(len(mt)):
                for j in range(i):
                    if mt.beta[i, j]:
                        num = int(mt.beta[i, j]) * int(mt.beta[j, 0])
                        den = int(mt.beta[j, j]) * int(mt.beta[i, 0])
                        bad += num % den != 0
                        edges_up(mt, j, i)
    c.expect("non-integral E-up values", bad, 0)
    return c


def criterion_8() -> Criterion:
    c = Criterion(8, "number of subgroup orders and missing divisors, S and A, n <= 7")
    c.expect("O(S_n)", [subgroup_order_stats(table("S", n))[0] for n in N], [1, 2, 4, 8, 13, 21, 31])
    c.expect("d(S_n)", [subgroup_order_stats(table("S", n))[1] for n in N], [0, 0, 0, 0, 3, 9, 29])
    c.expect("O(A_n), d(A_n)", [subgroup_order_stats(table("A", n)) for n in N],
             [_row("orders_A", n) for n in N])
    c.expect("d(A_4)", subgroup_order_stats(table("A", 4))[1], 1)
    return c


def criterion_9() -> Criterion:
    c = Criterion(9, "maximal property-P classes (n <= 7) and their subgroup totals (n <= 6)")
    for fam in "SA":
        for n in N:
            mt = marks(fam, n)
            c.expect(f"{fam}{n} classes", tuple(len(maximal_property_p(mt, p)) for p in PROPERTY_NAMES),
                     _row(f"maxp_{fam}", n))
        for n in range(1, 7):
            mt = marks(fam, n)
            c.expect(f"{fam}{n} totals", tuple(total_maximal_property_p(mt, p) for p in PROPERTY_NAMES),
                     _row(f"maxp_totals_{fam}", n))
    s6 = marks("S", 6)
    c.expect("S6 solvable/supersolvable/abelian/cyclic/nilpotent",
             [len(maximal_property_p(s6, p)) for p in ("solvable", "supersolvable", "abelian", "cyclic", "nilpotent")],
             [4, 4, 7, 5, 5])
    s4 = marks("S", 4)
    c.expect("S4 totals solvable/supersolvable/abelian/cyclic/nilpotent",
             [total_maximal_property_p(s4, p) for p in ("solvable", "supersolvable", "abelian", "cyclic", "nilpotent")],
             [1, 7, 11, 13, 7])
    return c


def criterion_10() -> Criterion:
    c = Criterion(10, "Euler transform roundtrip, multiset form, and link to connected classes")
    rng = random.Random(10)
    bad = 0
    for _ in range(1000):
        seq = [rng.randint(-5, 60) for _ in range(rng.randint(1, 16))]
        bad += inverse_euler_transform(euler_transform(seq)).values != seq
    c.expect("roundtrip failures out of 1000", bad, 0)
    for n in range(1, 11):
        seq = [rng.randint(0, 12) for _ in range(n)]
        c.expect(f"multiset form n={n}", euler_by_multisets(seq, n), euler_transform(seq)[n])
    counts = [len(table("S", n)) for n in range(1, 7)]
    c.expect("inverse Euler of class counts vs direct connected counts",
             inverse_euler_transform(counts).values, [connected_class_count(table("S", n)) for n in range(1, 7)])
    return c


def criterion_11() -> Criterion:
    c = Criterion(11, "connected-class sequences, red/blue classes, connected classes with properties")
    c.expect("A_n-classes of connected subgroups", [connected_class_count(table("A", n)) for n in N],
             list(golden.SEQUENCES["A218967"][:7]))
    c.expect("S_n-classes of connected subgroups of A_n",
             [connected_class_count(table("S", n), even_only=True) for n in N], list(golden.SEQUENCES["A218968"][:7]))
    for n in N:
        blue, red = sn_classes_of_an_subgroups(n, table("S", n))
        c.expect(f"n={n} red/blue row", (len(table("S", n)), len(table("A", n)), blue, red), _row("redblue", n))
    c.expect("n=7 blue, red", sn_classes_of_an_subgroups(7, table("S", 7)), (37, 59))
    props = ("abelian", "nilpotent", "solvable", "supersolvable")
    for n in range(1, 7):
        direct = tuple(connected_class_count(table("S", n), p) for p in props)
        c.expect(f"S{n} connected by direct count", (len(table("S", n)), *direct), _row("connected_S", n))
    columns = {p: [property_class_counts(table("S", n))[PROPERTY_NAMES.index(p) + 1] for n in range(1, 7)]
               for p in props}
    for p in props:
        c.expect(f"{p}: inverse Euler of class column", inverse_euler_transform(columns[p]).values,
                 [golden.TABLES["connected_S"].value(n, p) for n in range(1, 7)])
    return c


def criterion_12() -> Criterion:
    c = Criterion(12, "connected partitions and connected even partitions")
    c.expect("connected partitions n <= 13", [connected_partition_count(n) for n in range(1, 14)],
             [1, 1, 1, 2, 1, 4, 1, 5, 3, 8, 2, 14, 3])
    c.expect("connected cyclic S_n-classes n <= 7", [connected_class_count(table("S", n), "cyclic") for n in N],
             [connected_partition_count(n) for n in N])
    c.expect("connected even partitions n <= 13", [connected_partition_count(n, even_only=True) for n in range(1, 14)],
             [1, 0, 1, 1, 1, 2, 1, 3, 3, 4, 2, 8, 2])
    return c


def criterion_13() -> Criterion:
    c = Criterion(13, "tom-text export/import roundtrip and corrupted files")
    for n in (4, 5, 6):
        text = tomtext.dumps(marks("S", n))
        c.require(f"S{n} roundtrip bit-exact", tomtext.dumps(tomtext.loads(text)) == text)
    text = tomtext.dumps(marks("S", 4))
    cases = [
        ("corrupted diagonal", "ROW 9: 3 3 1 0 3 1 1 0 1", "ROW 9: 3 3 1 0 3 1 1 0 2", DiagonalError),
        ("corrupted first column", "ROW 4: 8 0 0 2", "ROW 4: 9 0 0 2", FirstColumnError),
        ("classes out of order", "CLASS 4 order=3", "CLASS 4 order=1", TriangularityError),
    ]
    for what, old, new, err in cases:
        try:
            tomtext.loads(text.replace(old, new, 1))
            c.require(f"{what} raises {err.__name__}", False)
        except MarksInvariantError as exc:
            c.require(f"{what} raises {err.__name__} (got {type(exc).__name__})", isinstance(exc, err))
    return c


def criterion_14() -> Criterion:
    c = Criterion(14, "oracle suite: marks two ways, subset oracle, property oracles")
    for n in range(1, 6):
        ct, mt = table("S", n), marks("S", n)
        reps = [x.representative for x in ct.classes]
        bad = sum(1 for i, h in enumerate(reps) for j, k in enumerate(reps)
                  if not (mark_by_fixed_cosets(ct.group, h, k) == mark_by_conjugates(ct.group, h, k) == mt.beta[i, j]))
        c.expect(f"S{n} mark disagreements", bad, 0)
    from test_enumeration import SMALL
    groups = list(SMALL.values())
    bad = 0
    for g in groups:
        expected = subgroups_by_backtracking(g.elements)
        found = {frozenset(tuple(p) for p in h.elements) for h in all_subgroups(g)}
        classes = conjugacy_classes(expected, [tuple(p) for p in g.elements])
        bad += found != expected or len(class_table(g)) != len(classes)
    c.expect(f"subset-oracle disagreements over {len(groups)} groups of order <= 24", bad, 0)
    from test_properties import solvable_by_commutator_sets, supersolvable_by_normal_chains
    bad = 0
    for x in table("S", 5).classes:
        h = x.representative
        bad += is_nilpotent(h) != is_nilpotent_by_coprime_commuting(h)
        bad += is_solvable(h) != solvable_by_commutator_sets(h.elements)
        bad += is_supersolvable(h) != supersolvable_by_normal_chains(h.elements)
    c.expect("S5 property-oracle disagreements", bad, 0)
    return c


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6, criterion_7,
            criterion_8, criterion_9, criterion_10, criterion_11, criterion_12, criterion_13, criterion_14]


@pytest.mark.parametrize("criterion", CRITERIA, ids=[f"criterion_{i}" for i in range(1, 15)])
def test_criterion(criterion, capsys):
    result = criterion()
    with capsys.disabled():
        print()
        result.finish()


if __name__ == "__main__":
    failed = 0
    for fn in CRITERIA:
        result = fn()
        print(result.report(), flush=True)
        failed += bool(result.failures)
    sys.exit(1 if failed else 0)
