"""Permutations and finite permutation groups with materialized element sets.

Points are ``0..n-1``.  Composition is right-to-left, like functions::

    (p * q)(x) == p(q(x))

Conjugation is ``h ** g == g^-1 * h * g`` and ``H ** g`` is the subgroup
``{g^-1 h g : h in H}``.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence


class Permutation(tuple):
    """A bijection of ``{0..n-1}`` stored as its image tuple.

    Being a tuple, permutations hash, compare and sort lexicographically
    on their images, which is the canonical order used everywhere.
    """

    __slots__ = ()

    def __new__(cls, images: Iterable[int]):
        p = tuple.__new__(cls, images)
        if sorted(p) != list(range(len(p))):
            raise ValueError(f"not a permutation of 0..{len(p) - 1}: {tuple(p)}")
        return p

    @classmethod
    def _raw(cls, images) -> "Permutation":
        return tuple.__new__(cls, images)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls._raw(range(n))

    @classmethod
    def from_cycles(cls, n: int, *cycles: Sequence[int]) -> "Permutation":
        """Build from disjoint cycles, e.g. ``from_cycles(4, (0, 1), (2, 3))``."""
        img = list(range(n))
        seen = set()
        for cyc in cycles:
            for a in cyc:
                if a in seen or not 0 <= a < n:
                    raise ValueError(f"bad cycle {cyc} on {n} points")
                seen.add(a)
            for a, b in zip(cyc, tuple(cyc[1:]) + tuple(cyc[:1])):
                img[a] = b
        return cls(img)

    @property
    def degree(self) -> int:
        return len(self)

    def __call__(self, x: int) -> int:
        return self[x]

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def __pow__(self, g):
        if isinstance(g, Permutation):
            return g.inverse() * self * g
        if g < 0:
            return self.inverse() ** (-g)
        result = Permutation.identity(len(self))
        base = self
        while g:
            if g & 1:
                result = result * base
            base = base * base
            g >>= 1
        return result

    def inverse(self) -> "Permutation":
        inv = [0] * len(self)
        for i, j in enumerate(self):
            inv[j] = i
        return Permutation._raw(inv)

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self))

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each starting at its smallest point."""
        seen = [False] * len(self)
        out = []
        for start in range(len(self)):
            if seen[start]:
                continue
            cyc = [start]
            seen[start] = True
            x = self[start]
            while x != start:
                cyc.append(x)
                seen[x] = True
                x = self[x]
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def cycle_type(self) -> tuple[int, ...]:
        """Cycle lengths including fixed points, non-increasing."""
        lengths = [len(c) for c in self.cycles()]
        lengths += [1] * (len(self) - sum(lengths))
        return tuple(sorted(lengths, reverse=True))

    def order(self) -> int:
        return math.lcm(*self.cycle_type()) if len(self) else 1

    def is_even(self) -> bool:
        return (len(self) - len(self.cycle_type())) % 2 == 0

    def code(self) -> int:
        """Pack images into 4-bit nibbles, first image most significant.

        Integer order of codes equals lexicographic order of images.
        Only defined for degree <= 16.
        """
        if len(self) > 16:
            raise ValueError("nibble packing needs degree <= 16")
        c = 0
        for x in self:
            c = (c << 4) | x
        return c

    def __repr__(self) -> str:
        cyc = "".join("(" + " ".join(map(str, c)) + ")" for c in self.cycles())
        return f"Permutation({cyc or '()'}, n={len(self)})"


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Return ``p∘q``, the permutation ``x -> p(q(x))``."""
    if len(p) != len(q):
        raise ValueError(f"degree mismatch: {len(p)} vs {len(q)}")
    return Permutation._raw([p[j] for j in q])


@dataclass(frozen=True, eq=False)
class Group:
    """A permutation group with its full, sorted element list.

    Two groups are equal iff they have the same degree and element list.
    Build instances with :func:`closure`, not directly.
    """

    degree: int
    generators: tuple[Permutation, ...]
    elements: tuple[Permutation, ...] = field(repr=False)

    @property
    def order(self) -> int:
        return len(self.elements)

    @functools.cached_property
    def element_set(self) -> frozenset:
        return frozenset(self.elements)

    @property
    def identity(self) -> Permutation:
        return self.elements[0]

    def __contains__(self, p) -> bool:
        return p in self.element_set

    def __eq__(self, other) -> bool:
        if not isinstance(other, Group):
            return NotImplemented
        return self.degree == other.degree and self.elements == other.elements

    def __hash__(self) -> int:
        return hash((self.degree, self.elements))

    def __iter__(self):
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __pow__(self, g: Permutation) -> "Group":
        return conjugate_subgroup(self, g)

    def __repr__(self) -> str:
        return f"Group(degree={self.degree}, order={self.order}, generators={list(self.generators)})"

    def is_abelian(self) -> bool:
        gens = self.generators
        return all(a * b == b * a for i, a in enumerate(gens) for b in gens[i + 1:])


def _closure_set(gens: Sequence[Permutation], n: int, start: Optional[set] = None) -> set:
    ident = tuple(range(n))
    elems = set(start) if start else {ident}
    elems.add(ident)
    frontier = list(elems)
    raw_gens = [tuple(g) for g in gens]
    while frontier:
        nxt = []
        for e in frontier:
            for g in raw_gens:
                p = tuple([e[j] for j in g])
                if p not in elems:
                    elems.add(p)
                    nxt.append(p)
        frontier = nxt
    return elems


def closure(generators: Iterable[Permutation], degree: int) -> Group:
    """The smallest group on ``degree`` points containing ``generators``."""
    if degree <= 0:
        raise ValueError("degree must be positive")
    gens = tuple(Permutation(g) if not isinstance(g, Permutation) else g for g in generators)
    for g in gens:
        if len(g) != degree:
            raise ValueError(f"generator {g!r} does not have degree {degree}")
    elems = _closure_set(gens, degree)
    return Group(degree, gens, tuple(Permutation._raw(e) for e in sorted(elems)))


def group_from_elements(elements: Iterable[Sequence[int]], degree: int) -> Group:
    """Wrap an element set already known to be a group.

    Generators are picked greedily from the sorted elements, so the result
    does not depend on how the set was produced.
    """
    elems = sorted(tuple(e) for e in elements)
    gens: list[Permutation] = []
    current = {tuple(range(degree))}
    for e in elems:
        if e not in current:
            gens.append(Permutation._raw(e))
            current = _closure_set(gens, degree, current)
    if len(current) != len(elems):
        raise ValueError("element set is not closed under composition")
    return Group(degree, tuple(gens), tuple(Permutation._raw(e) for e in elems))


def symmetric_group(n: int) -> Group:
    gens = []
    if n >= 2:
        gens.append(Permutation.from_cycles(n, (0, 1)))
    if n >= 3:
        gens.append(Permutation.from_cycles(n, tuple(range(n))))
    return closure(gens, n)


def alternating_group(n: int) -> Group:
    gens = [Permutation.from_cycles(n, (0, 1, i)) for i in range(2, n)]
    return closure(gens, n)


def trivial_group(n: int) -> Group:
    return closure([], n)


def _check_degree(a: Group, b) -> None:
    d = b.degree if isinstance(b, Group) else len(b)
    if a.degree != d:
        raise ValueError(f"degree mismatch: {a.degree} vs {d}")


def is_subgroup(h: Group, g: Group) -> bool:
    _check_degree(h, g)
    if g.order % h.order:
        return False
    return all(x in g for x in h.elements)


def conjugate_subgroup(h: Group, g: Permutation) -> Group:
    """``H^g = {g^-1 x g : x in H}``."""
    _check_degree(h, g)
    gi = g.inverse()
    elems = sorted(gi * x * g for x in h.elements)
    gens = tuple(gi * x * g for x in h.generators)
    return Group(h.degree, gens, tuple(elems))


def _conjugates_into(gens: Sequence[Permutation], x: Permutation, target: frozenset) -> bool:
    xi = x.inverse()
    return all(xi * s * x in target for s in gens)


def normalizer(g: Group, h: Group) -> Group:
    """``N_g(h)``; raises ``ValueError`` unless ``h <= g``."""
    if not is_subgroup(h, g):
        raise ValueError("h is not a subgroup of g")
    hs = h.element_set
    gens = h.generators
    elems = [x for x in g.elements if _conjugates_into(gens, x, hs)]
    return group_from_elements(elems, g.degree)


def right_transversal(g: Group, n: Group) -> list[Permutation]:
    """Smallest element of each right coset ``n*x`` of ``n`` in ``g``, ascending."""
    seen: set = set()
    reps = []
    for x in g.elements:
        if x in seen:
            continue
        reps.append(x)
        seen.update(y * x for y in n.elements)
    return reps


def are_conjugate(g: Group, h: Group, k: Group) -> Optional[Permutation]:
    """Smallest ``x`` in ``g`` with ``h ** x == k``, or ``None``.

    Large groups scan one element per coset of ``N_g(h)``; the witnesses
    form a single coset, and the scanned element is its minimum, so both
    paths return the same witness.
    """
    if h.order != k.order or h.degree != k.degree:
        return None
    if g.order > 1000:
        candidates = right_transversal(g, normalizer(g, h))
    else:
        candidates = g.elements
    ks = k.element_set
    for x in candidates:
        if _conjugates_into(h.generators, x, ks):
            return x
    return None


def orbits(h: Group) -> tuple[tuple[int, ...], ...]:
    """Orbit partition of the points, blocks sorted by smallest point."""
    n = h.degree
    parent = list(range(n))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for g in h.generators:
        for a in range(n):
            ra, rb = find(a), find(g[a])
            if ra != rb:
                parent[max(ra, rb)] = min(ra, rb)
    blocks: dict[int, list[int]] = {}
    for a in range(n):
        blocks.setdefault(find(a), []).append(a)
    return tuple(tuple(b) for _, b in sorted(blocks.items()))


def coset_action(g: Group, h: Group) -> tuple[Group, dict[Permutation, Permutation]]:
    """Action of ``g`` on the left cosets ``xH`` by left multiplication.

    Cosets are numbered by their smallest element.  Returns the image group
    and the map ``element -> image``; ``y`` fixes ``xH`` iff ``x^-1 y x`` lies
    in ``h``.  When ``h`` is normal the image is ``g/h``.
    """
    if not is_subgroup(h, g):
        raise ValueError("h is not a subgroup of g")
    where: dict[Permutation, int] = {}
    reps: list[Permutation] = []
    for x in g.elements:
        if x in where:
            continue
        idx = len(reps)
        reps.append(x)
        for s in h.elements:
            where[x * s] = idx
    m = len(reps)
    hom = {y: Permutation._raw([where[y * r] for r in reps]) for y in g.elements}
    image = closure([hom[s] for s in g.generators], m)
    return image, hom


def element_order_counts(h: Group) -> dict[int, int]:
    out: dict[int, int] = {}
    for x in h.elements:
        o = x.order()
        out[o] = out.get(o, 0) + 1
    return out


def exponent(h: Group) -> int:
    return math.lcm(*(x.order() for x in h.elements))


def restrict(p: Permutation, block: Sequence[int]) -> Permutation:
    """Restriction of ``p`` to a ``p``-stable block, relabeled to ``0..len-1``."""
    pos = {a: i for i, a in enumerate(block)}
    return Permutation([pos[p[a]] for a in block])
