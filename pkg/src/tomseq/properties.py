"""Abelian, cyclic, nilpotent, solvable and supersolvable tests, plus subgroup-order statistics."""

from __future__ import annotations

import functools
import math
from dataclasses import astuple, dataclass
from typing import Iterable, Sequence

from .permcore import Group, Permutation, closure, coset_action
from .transforms import IntSeq

PROPERTY_NAMES = ("abelian", "cyclic", "nilpotent", "solvable", "supersolvable")


@dataclass(frozen=True)
class PropertyFlags:
    abelian: bool
    cyclic: bool
    nilpotent: bool
    solvable: bool
    supersolvable: bool

    def __post_init__(self):
        chain = (self.cyclic, self.abelian, self.nilpotent, self.supersolvable, self.solvable)
        for stronger, weaker in zip(chain, chain[1:]):
            if stronger and not weaker:
                raise ValueError(f"inconsistent property flags: {self}")

    def as_tuple(self) -> tuple[bool, ...]:
        return astuple(self)

    def has(self, name: str) -> bool:
        return getattr(self, name)


def _is_prime_power_of(m: int, p: int) -> bool:
    while m % p == 0:
        m //= p
    return m == 1


def factorize(m: int) -> dict[int, int]:
    """Prime factorization by trial division."""
    if m < 1:
        raise ValueError("factorize needs a positive integer")
    out: dict[int, int] = {}
    d = 2
    while d * d <= m:
        while m % d == 0:
            out[d] = out.get(d, 0) + 1
            m //= d
        d += 1
    if m > 1:
        out[m] = out.get(m, 0) + 1
    return out


def factorial_factorization(n: int) -> dict[int, int]:
    """Factor n! by accumulating the factorizations of 2..n."""
    out: dict[int, int] = {}
    for k in range(2, n + 1):
        for p, e in factorize(k).items():
            out[p] = out.get(p, 0) + e
    return out


def divisors(m: int) -> list[int]:
    divs = [1]
    for p, e in factorize(m).items():
        divs = [d * p ** i for d in divs for i in range(e + 1)]
    return sorted(divs)


def is_cyclic(h: Group) -> bool:
    return any(x.order() == h.order for x in h.elements)


def is_abelian(h: Group) -> bool:
    return h.is_abelian()


def _normal_closure(h: Group, gens: Sequence[Permutation]) -> Group:
    sub = closure(gens, h.degree)
    while True:
        extra = []
        for g in h.generators:
            for s in sub.generators:
                c = s ** g
                if c not in sub:
                    extra.append(c)
        if not extra:
            return sub
        sub = closure(list(sub.generators) + extra, h.degree)


def derived_subgroup(h: Group) -> Group:
    gens = h.generators
    comms = [a.inverse() * b.inverse() * a * b for i, a in enumerate(gens) for b in gens[i + 1:]]
    return _normal_closure(h, [c for c in comms if not c.is_identity()])


@functools.lru_cache(maxsize=None)
def is_solvable(h: Group) -> bool:
    while h.order > 1:
        d = derived_subgroup(h)
        if d.order == h.order:
            return False
        h = d
    return True


def is_normal(n: Group, h: Group) -> bool:
    return all(s ** g in n for g in h.generators for s in n.generators)


def sylow_subgroup(h: Group, p: int) -> Group:
    """Grow a p-subgroup by p-elements normalizing it until it is Sylow."""
    target = p ** factorize(h.order).get(p, 0)
    pelems = [x for x in h.elements if _is_prime_power_of(x.order(), p) and not x.is_identity()]
    sub = closure([], h.degree)
    while sub.order < target:
        for x in pelems:
            if x not in sub and all(s ** x in sub for s in sub.generators):
                sub = closure(list(sub.generators) + [x], h.degree)
                break
        else:
            raise AssertionError("p-subgroup could not be extended")
    return sub


@functools.lru_cache(maxsize=None)
def is_nilpotent(h: Group) -> bool:
    """Every Sylow subgroup is normal."""
    if h.is_abelian():
        return True
    if not is_solvable(h):
        return False
    return all(is_normal(sylow_subgroup(h, p), h) for p in factorize(h.order))


def is_nilpotent_by_coprime_commuting(h: Group) -> bool:
    """A finite group is nilpotent iff elements of coprime order commute."""
    elems = [(x, x.order()) for x in h.elements]
    for i, (a, oa) in enumerate(elems):
        for b, ob in elems[i + 1:]:
            if math.gcd(oa, ob) == 1 and a * b != b * a:
                return False
    return True


@functools.lru_cache(maxsize=None)
def is_supersolvable(h: Group) -> bool:
    """Trivial, or has a normal subgroup of prime order with supersolvable quotient.

    Quotients of supersolvable groups are supersolvable, so any such normal
    subgroup will do.
    """
    if h.order == 1:
        return True
    if h.is_abelian():
        return True
    if not is_solvable(h):
        return False
    primes = set(factorize(h.order))
    for x in h.elements:
        if x.order() not in primes:
            continue
        n = closure([x], h.degree)
        if all(x ** g in n for g in h.generators):
            quotient, _ = coset_action(h, n)
            return is_supersolvable(quotient)
    return False


@functools.lru_cache(maxsize=None)
def classify(h: Group) -> PropertyFlags:
    abelian = h.is_abelian()
    return PropertyFlags(
        abelian=abelian,
        cyclic=abelian and is_cyclic(h),
        nilpotent=is_nilpotent(h),
        solvable=is_solvable(h),
        supersolvable=is_supersolvable(h),
    )


def class_flags(ct) -> list[PropertyFlags]:
    return [classify(c.representative) for c in ct.classes]


def count_by_property(flags: Sequence[PropertyFlags], lengths: Sequence[int], weighted: bool) -> list[int]:
    out = []
    for name in PROPERTY_NAMES:
        out.append(sum((l if weighted else 1) for f, l in zip(flags, lengths) if f.has(name)))
    return out


def property_class_counts(ct, weighted: bool = False) -> IntSeq:
    """Number of classes (or subgroups, if ``weighted``) with each property,
    in the order abelian, cyclic, nilpotent, solvable, supersolvable."""
    lengths = [c.class_length for c in ct.classes]
    label = "subgroups" if weighted else "classes"
    return IntSeq(count_by_property(class_flags(ct), lengths, weighted), f"{label} by property")


def order_stats(orders: Iterable[int], group_order: int) -> tuple[int, int]:
    present = set(orders)
    missing = sum(1 for d in divisors(group_order) if d not in present)
    return len(present), missing


def subgroup_order_stats(ct) -> tuple[int, int]:
    """(number of distinct subgroup orders, number of divisors of |G| that are not orders)."""
    return order_stats(ct.orders(), ct.group.order)
