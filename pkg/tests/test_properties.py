from __future__ import annotations

import math

import pytest

from oracles import inv, mul, set_closure, subgroups_by_backtracking
from tomseq.permcore import Permutation, closure, symmetric_group
from tomseq.properties import (
    PropertyFlags, classify, derived_subgroup, divisors, factorial_factorization, factorize,
    is_nilpotent, is_nilpotent_by_coprime_commuting, is_solvable, is_supersolvable,
    order_stats, property_class_counts, subgroup_order_stats, sylow_subgroup,
)


def solvable_by_commutator_sets(elements) -> bool:
    current = frozenset(tuple(e) for e in elements)
    n = len(next(iter(current)))
    while len(current) > 1:
        comms = {mul(mul(inv(a), inv(b)), mul(a, b)) for a in current for b in current}
        nxt = set_closure(list(comms), n)
        if nxt == current:
            return False
        current = nxt
    return True


def supersolvable_by_normal_chains(elements) -> bool:
    """Search for a chain of subgroups normal in the whole group with prime steps."""
    g = frozenset(tuple(e) for e in elements)
    normal = [h for h in subgroups_by_backtracking(g)
              if all(frozenset(mul(mul(inv(x), y), x) for y in h) == h for x in g)]

    def is_prime(m):
        return m > 1 and all(m % d for d in range(2, int(m ** 0.5) + 1))

    reach = {min(normal, key=len)}
    frontier = list(reach)
    while frontier:
        h = frontier.pop()
        for k in normal:
            if h < k and len(k) % len(h) == 0 and is_prime(len(k) // len(h)) and k not in reach:
                reach.add(k)
                frontier.append(k)
    return g in reach


def test_number_theory():
    assert factorize(360) == {2: 3, 3: 2, 5: 1}
    assert factorial_factorization(7) == {2: 4, 3: 2, 5: 1, 7: 1}
    assert divisors(12) == [1, 2, 3, 4, 6, 12]
    with pytest.raises(ValueError):
        factorize(0)


def test_flags_must_be_consistent():
    with pytest.raises(ValueError):
        PropertyFlags(abelian=False, cyclic=True, nilpotent=True, solvable=True, supersolvable=True)
    with pytest.raises(ValueError):
        PropertyFlags(abelian=True, cyclic=False, nilpotent=True, solvable=False, supersolvable=True)


def test_known_groups():
    s4 = symmetric_group(4)
    assert classify(s4) == PropertyFlags(False, False, False, True, False)
    a4 = closure([Permutation.from_cycles(4, (0, 1, 2)), Permutation.from_cycles(4, (1, 2, 3))], 4)
    assert not is_supersolvable(a4) and is_solvable(a4)
    assert not is_solvable(symmetric_group(5))
    d8 = closure([Permutation.from_cycles(4, (0, 1, 2, 3)), Permutation.from_cycles(4, (0, 2))], 4)
    assert classify(d8).nilpotent and not classify(d8).abelian
    assert derived_subgroup(s4).order == 12
    assert sylow_subgroup(s4, 2).order == 8
    assert sylow_subgroup(s4, 3).order == 3


@pytest.mark.parametrize("index", range(19))
def test_dual_oracles_on_s5(index, tables):
    h = tables("S", 5)[index].representative
    assert is_nilpotent(h) == is_nilpotent_by_coprime_commuting(h)
    assert is_solvable(h) == solvable_by_commutator_sets(h.elements)
    assert is_supersolvable(h) == supersolvable_by_normal_chains(h.elements)


def test_class_counts(tables):
    assert property_class_counts(tables("S", 4)) == [7, 5, 8, 11, 9]
    assert property_class_counts(tables("S", 4), weighted=True) == [21, 17, 24, 30, 28]


def test_order_stats(tables):
    assert subgroup_order_stats(tables("S", 5)) == (13, 3)
    assert subgroup_order_stats(tables("A", 4)) == (5, 1)
    assert order_stats([1, 2, 4], 8) == (3, 1)
