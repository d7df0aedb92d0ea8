"""Tables of marks and the lattice counts read off them.

``beta[i][j]`` is the number of cosets of ``H_i`` fixed by ``H_j``.  With
classes sorted by order the matrix is lower triangular.

Derived matrices use row = container, column = contained:
``containment[i][j]`` is the number of conjugates of ``H_i`` containing
``H_j``, i.e. row ``i`` of ``beta`` divided by ``beta[i][i]``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

import numpy as np

from .enumeration import ClassTable
from .permcore import Group, coset_action, is_subgroup, normalizer, right_transversal
from .properties import PROPERTY_NAMES, PropertyFlags, class_flags


class MarksInvariantError(ValueError):
    """A table of marks violates a structural invariant."""


class TriangularityError(MarksInvariantError):
    pass


class FirstColumnError(MarksInvariantError):
    """First entry of a row is not the index of the subgroup."""


class DiagonalError(MarksInvariantError):
    """Diagonal entry does not divide its row, or disagrees with the class length."""


class OrderDivisibilityError(MarksInvariantError):
    """Nonzero mark between classes whose orders do not divide."""


@dataclass
class MarksTable:
    beta: np.ndarray
    orders: list[int]
    lengths: list[int]
    labels: list[str]
    flags: Optional[list[PropertyFlags]] = None
    name: str = "G"
    class_table: Optional[ClassTable] = field(default=None, repr=False)

    def __post_init__(self):
        self.beta = np.asarray(self.beta, dtype=np.int64)

    def __len__(self) -> int:
        return len(self.orders)

    @property
    def group_order(self) -> int:
        return int(self.beta[0, 0])

    def row(self, i: int) -> list[int]:
        return [int(v) for v in self.beta[i, : i + 1]]

    def diagonal(self) -> list[int]:
        return [int(v) for v in np.diag(self.beta)]

    def property_flags(self) -> list[PropertyFlags]:
        if self.flags is None:
            if self.class_table is None:
                raise ValueError(f"table {self.name!r} carries no property flags")
            self.flags = class_flags(self.class_table)
        return self.flags

    def validate(self) -> None:
        """Raise a :class:`MarksInvariantError` subclass on the first violation."""
        r = len(self)
        b = self.beta
        if b.shape != (r, r):
            raise TriangularityError(f"matrix shape {b.shape} does not match {r} classes")
        for i in range(1, r):
            if self.orders[i] < self.orders[i - 1]:
                raise TriangularityError(f"class {i + 1} has smaller order than class {i}")
        if np.any(np.triu(b, 1)):
            i, j = map(int, np.argwhere(np.triu(b, 1))[0])
            raise TriangularityError(f"nonzero entry above the diagonal at row {i + 1}, column {j + 1}")
        if np.any(b < 0):
            raise MarksInvariantError("negative mark")
        g = self.orders[-1]
        if self.orders[0] != 1 or g != self.group_order:
            raise FirstColumnError("first class must be trivial and last class the whole group")
        for i in range(r):
            if g % self.orders[i] or b[i, 0] != g // self.orders[i]:
                raise FirstColumnError(
                    f"row {i + 1}: first entry {b[i, 0]} is not the index {g}/{self.orders[i]}")
            d = int(b[i, i])
            if d <= 0:
                raise DiagonalError(f"row {i + 1}: diagonal entry {d} must be positive")
            for j in range(i + 1):
                v = int(b[i, j])
                if v and v % d:
                    raise DiagonalError(
                        f"row {i + 1}: diagonal entry {d} does not divide entry {v} in column {j + 1}")
                if v and self.orders[i] % self.orders[j]:
                    raise OrderDivisibilityError(
                        f"row {i + 1}, column {j + 1}: order {self.orders[j]} does not divide {self.orders[i]}")
            if int(b[i, 0]) // d != self.lengths[i] or int(b[i, 0]) % d:
                raise DiagonalError(
                    f"row {i + 1}: index/diagonal {b[i, 0]}/{d} disagrees with class length {self.lengths[i]}")
            if self.lengths[i] * self.orders[i] * d != g:
                raise DiagonalError(f"row {i + 1}: normalizer index {d} inconsistent with class length")


# -- single marks, two independent ways ---------------------------------------

def mark_by_fixed_cosets(g: Group, h: Group, k: Group) -> int:
    """Cosets of ``h`` fixed by every element of ``k`` in the coset action."""
    if not is_subgroup(k, g):
        raise ValueError("k is not a subgroup of g")
    image, hom = coset_action(g, h)
    fixed = set(range(image.degree))
    for x in k.generators:
        px = hom[x]
        fixed = {c for c in fixed if px[c] == c}
    return len(fixed)


def mark_by_conjugates(g: Group, h: Group, k: Group) -> int:
    """``|N_g(h):h|`` times the number of conjugates of ``h`` containing ``k``."""
    if not (is_subgroup(h, g) and is_subgroup(k, g)):
        raise ValueError("h and k must be subgroups of g")
    n = normalizer(g, h)
    count = sum(1 for x in right_transversal(g, n) if all(x * s * x.inverse() in h for s in k.generators))
    return (n.order // h.order) * count


def mark(g: Group, h: Group, k: Group) -> int:
    a = mark_by_conjugates(g, h, k)
    b = mark_by_fixed_cosets(g, h, k)
    if a != b:
        raise AssertionError(f"mark mismatch: {a} by conjugates, {b} by fixed cosets")
    return a


# -- whole tables --------------------------------------------------------------

def marks_table(ct: ClassTable, name: Optional[str] = None) -> MarksTable:
    eng = ct.engine
    r = len(ct)
    g = ct.group.order
    orders = ct.orders()
    gens = [np.array(ct.rep_generators(j), dtype=np.int64) for j in range(r)]
    beta = np.zeros((r, r), dtype=np.int64)
    for i in range(r):
        members = ct.members(i)
        contains = np.zeros((len(members), eng.size), dtype=bool)
        for row, m in zip(contains, members):
            row[m] = True
        norm_index = g // (orders[i] * len(members))
        for j in range(i + 1):
            if orders[i] % orders[j]:
                continue
            count = int(np.count_nonzero(contains[:, gens[j]].all(axis=1)))
            beta[i, j] = norm_index * count
    mt = MarksTable(
        beta, orders, [c.class_length for c in ct.classes], [c.label for c in ct.classes],
        name=name or f"G{g}", class_table=ct,
    )
    return mt


def total_subgroups(mt: MarksTable) -> int:
    return sum(int(mt.beta[i, 0]) // int(mt.beta[i, i]) for i in range(len(mt)))


def matrix_sum(mt: MarksTable) -> int:
    return sum(int(v) for v in mt.beta.ravel())


def diagonal_sum(mt: MarksTable) -> int:
    return sum(mt.diagonal())


@dataclass
class DerivedMatrices:
    containment: np.ndarray
    incidence: np.ndarray


def derived_matrices(mt: MarksTable) -> DerivedMatrices:
    diag = np.diag(mt.beta)[:, None]
    if np.any(mt.beta % diag):
        raise AssertionError("diagonal does not divide its row")
    containment = mt.beta // diag
    return DerivedMatrices(containment, (containment > 0).astype(np.int64))


def poset_incidences(mt: MarksTable) -> int:
    return int(derived_matrices(mt).incidence.sum())


def lattice_incidences(mt: MarksTable) -> int:
    return sum(int(v) for v in derived_matrices(mt).containment.ravel())


def below(mt: MarksTable, i: int) -> set[int]:
    """Classes properly subconjugate to class ``i``."""
    return {j for j in range(i) if mt.beta[i, j]}


def maximal_subgroups(mt: MarksTable, i: int) -> set[int]:
    """Classes of maximal subgroups of ``H_i``, up to conjugacy."""
    if not 0 <= i < len(mt):
        raise IndexError(f"class index {i} out of range")
    rho = below(mt, i)
    covered = set()
    for j in rho:
        covered |= below(mt, j)
    return rho - covered


def poset_edges(mt: MarksTable) -> int:
    return sum(len(maximal_subgroups(mt, i)) for i in range(len(mt)))


def edges_up(mt: MarksTable, i: int, j: int) -> int:
    """Number of conjugates of ``H_i`` contained in ``H_j``."""
    b = mt.beta
    num = int(b[j, i]) * int(b[i, 0])
    den = int(b[i, i]) * int(b[j, 0])
    if num % den:
        raise AssertionError(f"non-integral count of conjugates of class {i} inside class {j}: {Fraction(num, den)}")
    return num // den


def lattice_edges(mt: MarksTable) -> int:
    """Edges of the Hasse diagram of the full subgroup lattice.

    Each of the ``length[i]`` conjugates of ``H_i`` contributes its maximal
    subgroups from every class in ``maximal_subgroups(i)``.
    """
    total = 0
    for i in range(len(mt)):
        total += mt.lengths[i] * sum(edges_up(mt, j, i) for j in maximal_subgroups(mt, i))
    return total


def property_positions(mt: MarksTable, prop: str) -> set[int]:
    if prop not in PROPERTY_NAMES:
        raise ValueError(f"unknown property {prop!r}")
    return {i for i, f in enumerate(mt.property_flags()) if f.has(prop)}


def maximal_property_p(mt: MarksTable, prop: str) -> set[int]:
    """Classes of maximal subgroups with a subgroup-closed property ``prop``."""
    rho = property_positions(mt, prop)
    covered = set()
    for j in rho:
        covered |= maximal_subgroups(mt, j)
    return rho - covered


def total_maximal_property_p(mt: MarksTable, prop: str) -> int:
    return sum(mt.lengths[i] for i in maximal_property_p(mt, prop))
