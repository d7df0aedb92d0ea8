"""Subgroup lattices of small permutation groups, up to conjugacy.

Subgroups are found by layered extension: every nontrivial subgroup is
``<M, x>`` for a maximal subgroup ``M`` and any ``x`` outside it, so extending
one representative per known class by every element (modulo the obvious
symmetries) reaches every class.  Whenever a class is found, all of its
conjugates are registered, which makes later rediscoveries plain set lookups.
"""

from __future__ import annotations

import heapq
import math
import warnings
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from ._engine import IndexedGroup
from .permcore import Group, Permutation, alternating_group, symmetric_group

DEFAULT_BUDGET = 5040
LARGE_BUDGET = 40320


class BudgetExceeded(RuntimeError):
    """Raised when a group is too large to enumerate under the active budget."""

    def __init__(self, order: int, budget: int):
        super().__init__(
            f"group of order {order} exceeds the enumeration budget of {budget} elements"
            + ("" if budget >= LARGE_BUDGET else f" (large mode raises it to {LARGE_BUDGET})")
        )
        self.order = order
        self.budget = budget


@dataclass(frozen=True)
class SubgroupClass:
    representative: Group
    class_length: int
    order: int
    label: str
    index: int


@dataclass
class ClassTable:
    """Conjugacy classes of subgroups, sorted by (order, class length, representative).

    The classes index the rows and columns of every matrix built on top.
    """

    group: Group
    classes: list[SubgroupClass]
    _engine: Optional[IndexedGroup] = field(default=None, repr=False, compare=False)
    _members: dict = field(default_factory=dict, repr=False, compare=False)

    def __len__(self) -> int:
        return len(self.classes)

    def __iter__(self):
        return iter(self.classes)

    def __getitem__(self, i: int) -> SubgroupClass:
        return self.classes[i]

    @property
    def engine(self) -> IndexedGroup:
        if self._engine is None:
            self._engine = IndexedGroup(self.group)
        return self._engine

    def rep_indices(self, i: int) -> np.ndarray:
        return self.engine.from_group(self.classes[i].representative)

    def rep_generators(self, i: int) -> list[int]:
        eng = self.engine
        return [eng.index(g) for g in self.classes[i].representative.generators] or [0]

    def members(self, i: int) -> list[np.ndarray]:
        """Every conjugate of class ``i`` as a sorted index array."""
        if i not in self._members:
            eng = self.engine
            elems = self.rep_indices(i)
            norm = eng.normalizer(elems, self.rep_generators(i))
            self._members[i] = eng.conjugates(elems, norm)
        return self._members[i]

    def total_subgroups(self) -> int:
        return sum(c.class_length for c in self.classes)

    def orders(self) -> list[int]:
        return [c.order for c in self.classes]


def check_budget(g: Group, budget: Optional[int] = None, allow_large: bool = False) -> int:
    if budget is None:
        budget = LARGE_BUDGET if allow_large else DEFAULT_BUDGET
    if g.order > budget:
        raise BudgetExceeded(g.order, budget)
    if g.order > DEFAULT_BUDGET:
        warnings.warn(f"enumerating a group of order {g.order}; expect a long run", RuntimeWarning)
    return budget


def _orbit_mark(eng: IndexedGroup, x: int, hgens: np.ndarray, ngens: np.ndarray, done: np.ndarray) -> None:
    # every y reached here satisfies <H, y> = <H, x>^n for some n in N_G(H)
    done[x] = True
    frontier = np.array([x], dtype=np.int32)
    while frontier.size:
        nb = [eng.inv[frontier]]
        if hgens.size:
            nb.append(eng.mul(hgens[:, None], frontier[None, :]).ravel())
        if ngens.size:
            nb.append(eng.conj(ngens[:, None], frontier[None, :]).ravel())
        nb = np.unique(np.concatenate(nb))
        nb = nb[~done[nb]]
        done[nb] = True
        frontier = nb


def _lattice(eng: IndexedGroup) -> list[tuple[np.ndarray, list[np.ndarray]]]:
    """Return ``(some member, all members)`` for every class."""
    seen: dict[bytes, int] = {}
    found: list[tuple[np.ndarray, list[np.ndarray]]] = []

    def register(elems: np.ndarray, gens: list[int]) -> None:
        members = eng.conjugates(elems, eng.normalizer(elems, gens))
        cid = len(found)
        for m in members:
            seen[m.tobytes()] = cid
        found.append((elems, members))

    trivial = np.zeros(1, dtype=np.int32)
    register(trivial, [])
    heap = [(1, 0, trivial, [])]
    while heap:
        _, cid, elems, gens = heapq.heappop(heap)
        norm = eng.normalizer(elems, gens)
        ngens = np.array(eng.generators_of(norm), dtype=np.int32)
        hgens = np.array(gens, dtype=np.int32)
        done = eng.mask(elems)
        for x in range(eng.size):
            if done[x]:
                continue
            _orbit_mark(eng, x, hgens, ngens, done)
            k = eng.closure(gens + [x], base=elems)
            if k.tobytes() in seen:
                continue
            kgens = eng.generators_of(k)
            register(k, kgens)
            heapq.heappush(heap, (int(k.size), len(found) - 1, k, kgens))
    return found


def _label(eng: IndexedGroup, elems: np.ndarray, gens: list[int]) -> str:
    order = int(elems.size)
    if order == 1:
        return "1"
    orders = eng.elem_order[elems]
    if int(orders.max()) == order:
        return str(order)
    expo = math.lcm(*(int(o) for o in np.unique(orders)))
    abelian = all(
        eng.mul(a, b) == eng.mul(b, a) for i, a in enumerate(gens) for b in gens[i + 1:]
    )
    if abelian:
        k = round(math.log(order, expo))
        if expo ** k == order:
            return f"{expo}^{k}"
        return f"{expo}x{order // expo}"
    involutions = int(np.count_nonzero(orders == 2))
    named = {
        (6, 6, 3): "S3", (8, 4, 5): "D8", (8, 4, 1): "Q8", (10, 10, 5): "D10",
        (12, 6, 3): "A4", (12, 6, 7): "D12", (18, 6, 9): "3^2:2", (20, 20, 5): "5:4",
        (24, 12, 9): "S4", (60, 30, 15): "A5", (120, 60, 25): "S5", (360, 60, 45): "A6",
        (720, 60, 75): "S6", (2520, 420, 105): "A7", (5040, 420, 231): "S7",
    }
    return named.get((order, expo, involutions), f"G{order}")


def _build(g: Group, eng: IndexedGroup, found) -> ClassTable:
    rows = []
    for _, members in found:
        rep = min(members, key=lambda a: a.tolist())
        rows.append((int(rep.size), len(members), rep.tolist(), rep, members))
    rows.sort(key=lambda r: (r[0], r[1], r[2]))
    classes = []
    member_map = {}
    for i, (order, length, _, rep, members) in enumerate(rows):
        gens = eng.generators_of(rep)
        group = Group(g.degree, tuple(eng.perm(x) for x in gens), tuple(eng.perm(x) for x in rep))
        classes.append(SubgroupClass(group, length, order, _label(eng, rep, gens), i))
        member_map[i] = sorted(members, key=lambda a: a.tolist())
    return ClassTable(g, classes, eng, member_map)


def class_table(g: Group, budget: Optional[int] = None, allow_large: bool = False) -> ClassTable:
    """Conjugacy classes of subgroups of ``g`` under conjugation by ``g``."""
    check_budget(g, budget, allow_large)
    eng = IndexedGroup(g)
    return _build(g, eng, _lattice(eng))


def all_subgroups(g: Group, budget: Optional[int] = None, allow_large: bool = False) -> list[Group]:
    """Every subgroup of ``g`` exactly once, grouped by class."""
    ct = class_table(g, budget, allow_large)
    eng = ct.engine
    out = []
    for i, c in enumerate(ct.classes):
        for m in ct.members(i):
            gens = tuple(eng.perm(x) for x in eng.generators_of(m))
            out.append(Group(g.degree, gens, tuple(eng.perm(x) for x in m)))
    return out


def subgroup_sets(ct: ClassTable) -> list[frozenset]:
    """Every enumerated subgroup as a frozenset of ambient element indices."""
    return [frozenset(m.tolist()) for i in range(len(ct)) for m in ct.members(i)]


def class_of(ct: ClassTable, h: Group) -> int:
    """Index of the class of ``ct`` containing the subgroup ``h``."""
    eng = ct.engine
    elems = eng.from_group(h)
    for i, c in enumerate(ct.classes):
        if c.order == h.order and any(np.array_equal(m, elems) for m in ct.members(i)):
            return i
    raise ValueError("h is not a subgroup of the tabulated group")


def is_even_group(h: Group) -> bool:
    return all(p.is_even() for p in h.generators)


def family_group(family: str, n: int) -> Group:
    if family.upper() == "S":
        return symmetric_group(n)
    if family.upper() == "A":
        return alternating_group(n)
    raise ValueError(f"unknown family {family!r}; expected 'S' or 'A'")


def sn_classes_of_an_subgroups(n: int, ct: Optional[ClassTable] = None) -> tuple[int, int]:
    """Split the S_n classes into (inside A_n, not inside A_n)."""
    if ct is None:
        ct = class_table(symmetric_group(n))
    blue = sum(1 for c in ct.classes if is_even_group(c.representative))
    return blue, len(ct) - blue
