"""Connected subgroups of symmetric groups and connected partitions.

A subgroup ``H`` of ``Sym(X)`` splits along ``X = Y ⊔ Z`` when it is the
direct product of its actions on ``Y`` and on ``Z``; it is connected when
no such split exists.  Stable sets are unions of orbits, so only those are
tried.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Optional, Sequence

from .enumeration import ClassTable, class_of, is_even_group
from .permcore import Group, Permutation, closure, orbits, restrict
from .properties import classify


@dataclass(frozen=True)
class Decomposition:
    blocks: tuple[tuple[int, ...], ...]
    factors: tuple[Group, ...]

    @property
    def is_connected(self) -> bool:
        return len(self.blocks) == 1

    def product(self) -> Group:
        """The direct product of the factors, as a group on all points."""
        degree = self.factors[0].degree
        return closure([g for f in self.factors for g in f.generators], degree)


def _supported_on(p: Permutation, block: Sequence[int]) -> Permutation:
    """``p`` on ``block``, identity elsewhere."""
    img = list(range(len(p)))
    for a in block:
        img[a] = p[a]
    return Permutation._raw(img)


def _restricted(gens: Sequence[Permutation], block: Sequence[int]) -> list[Permutation]:
    out = []
    for g in gens:
        r = _supported_on(g, block)
        if not r.is_identity():
            out.append(r)
    return out


def decompose(h: Group) -> Decomposition:
    """Finest splitting of ``h`` into a direct product over blocks of points."""
    n = h.degree
    orbs = orbits(h)
    done: list[tuple[tuple[int, ...], Group]] = []
    pending = [(tuple(range(n)), h)]
    while pending:
        block, sub = pending.pop()
        inner = [o for o in orbs if o[0] in block]
        split = None
        # every split separates the first orbit from something; try small sides first
        rest = inner[1:]
        for size in range(0, len(rest)):
            for extra in combinations(rest, size):
                y = tuple(sorted(inner[0] + sum(extra, ())))
                z = tuple(sorted(set(block) - set(y)))
                gy = closure(_restricted(sub.generators, y), n)
                gz = closure(_restricted(sub.generators, z), n)
                if gy.order * gz.order == sub.order:
                    split = (y, gy), (z, gz)
                    break
            if split:
                break
        if split:
            pending.extend(split)
        else:
            done.append((block, sub))
    done.sort(key=lambda bf: bf[0])
    return Decomposition(tuple(b for b, _ in done), tuple(f for _, f in done))


def is_connected(h: Group) -> bool:
    return decompose(h).is_connected


def connected_class_count(ct: ClassTable, prop: Optional[str] = None, even_only: bool = False) -> int:
    """Classes of ``ct`` whose representative is connected.

    ``prop`` restricts to classes with that property; ``even_only`` to
    classes inside the alternating group (useful on an S_n table).
    """
    count = 0
    for c in ct.classes:
        h = c.representative
        if even_only and not is_even_group(h):
            continue
        if prop is not None and not classify(h).has(prop):
            continue
        if is_connected(h):
            count += 1
    return count


@dataclass(frozen=True)
class Partition:
    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(sorted(self.parts, reverse=True))
        if any(p < 1 for p in parts):
            raise ValueError("partition parts must be positive")
        object.__setattr__(self, "parts", parts)

    @property
    def n(self) -> int:
        return sum(self.parts)

    def is_even(self) -> bool:
        """Cycle type of an even permutation."""
        return (self.n - len(self.parts)) % 2 == 0

    def __str__(self) -> str:
        return "[" + ",".join(map(str, self.parts)) + "]"


def pair_encoding(h: Group, sn_tables: dict[int, ClassTable]) -> tuple[Partition, tuple[tuple[int, ...], ...]]:
    """Block sizes and, for each size ``i``, the sorted S_i class indices of the factors."""
    dec = decompose(h)
    by_size: dict[int, list[int]] = {}
    for block, factor in zip(dec.blocks, dec.factors):
        local = closure([restrict(g, block) for g in factor.generators], len(block))
        by_size.setdefault(len(block), []).append(class_of(sn_tables[len(block)], local))
    lam = Partition(tuple(len(b) for b in dec.blocks))
    return lam, tuple(tuple(sorted(by_size.get(i, []))) for i in range(1, h.degree + 1))


def partitions(n: int, max_part: Optional[int] = None) -> Iterator[tuple[int, ...]]:
    """Partitions of ``n`` as non-increasing tuples, in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def is_connected_partition(lam) -> bool:
    """Parts joined when not coprime form a connected graph."""
    parts = lam.parts if isinstance(lam, Partition) else tuple(lam)
    k = len(parts)
    if k == 0:
        return False
    reached = {0}
    frontier = [0]
    while frontier:
        a = frontier.pop()
        for b in range(k):
            if b not in reached and math.gcd(parts[a], parts[b]) > 1:
                reached.add(b)
                frontier.append(b)
    return len(reached) == k


def _multiplication_parity(u: int, k: int) -> int:
    """Parity of ``i -> u*i`` on ``Z/k``."""
    seen = [False] * k
    cycles = 0
    for i in range(k):
        if not seen[i]:
            cycles += 1
            j = i
            while not seen[j]:
                seen[j] = True
                j = u * j % k
    return (k - cycles) % 2


def splits_in_alternating(lam) -> bool:
    """Whether the S_n-class of ``<g>``, g of cycle type ``lam``, splits into two A_n-classes.

    That happens iff the normalizer of ``<g>`` lies in A_n: the centralizer
    must be even (distinct odd parts) and so must every permutation
    realizing a power map ``g -> g^u``.
    """
    parts = lam.parts if isinstance(lam, Partition) else tuple(sorted(lam, reverse=True))
    if sum(parts) < 2 or len(set(parts)) != len(parts) or any(k % 2 == 0 for k in parts):
        return False
    m = math.lcm(*parts)
    return all(
        sum(_multiplication_parity(u, k) for k in parts) % 2 == 0
        for u in range(1, m) if math.gcd(u, m) == 1
    )


def connected_partitions(n: int, even_only: bool = False) -> list[Partition]:
    out = []
    for parts in partitions(n):
        lam = Partition(parts)
        if even_only and not lam.is_even():
            continue
        if is_connected_partition(lam):
            out.append(lam)
    return out


def connected_partition_count(n: int, even_only: bool = False) -> int:
    """Connected partitions of ``n``; these index the S_n-classes of connected cyclic subgroups.

    With ``even_only`` the count is of A_n-classes instead: only even cycle
    types, each counted twice when its class splits in A_n.
    """
    if n < 1:
        raise ValueError("n must be positive")
    lams = connected_partitions(n, even_only)
    if not even_only:
        return len(lams)
    return sum(2 if splits_in_alternating(lam) else 1 for lam in lams)
