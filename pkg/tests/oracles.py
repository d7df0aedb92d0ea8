"""Slow, independent reference computations used only by the tests.

Nothing here touches the numpy engine: groups are plain sets of tuples.
"""

from __future__ import annotations

from itertools import combinations


def mul(p, q):
    return tuple(p[i] for i in q)


def inv(p):
    out = [0] * len(p)
    for i, v in enumerate(p):
        out[v] = i
    return tuple(out)


def set_closure(gens, n):
    ident = tuple(range(n))
    out = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                b = mul(a, g)
                if b not in out:
                    out.add(b)
                    nxt.append(b)
        frontier = nxt
    return frozenset(out)


def subgroups_by_backtracking(elements):
    """Every subgroup, by deciding each element in turn: excluded, or included with its closure."""
    elems = sorted(tuple(e) for e in elements)
    n = len(elems[0])
    found = set()

    def rec(i, current, excluded):
        if i == len(elems):
            found.add(current)
            return
        x = elems[i]
        if x in current:
            rec(i + 1, current, excluded)
            return
        rec(i + 1, current, excluded | {x})
        bigger = set_closure(list(current) + [x], n)
        if bigger.isdisjoint(excluded):
            rec(i + 1, bigger, excluded)

    rec(0, set_closure([], n), frozenset())
    return found


def subgroups_by_all_subsets(elements):
    """Literally every subset closed under composition; only for tiny groups."""
    elems = sorted(tuple(e) for e in elements)
    out = set()
    for k in range(1, len(elems) + 1):
        for sub in combinations(elems, k):
            s = set(sub)
            if all(mul(a, b) in s for a in sub for b in sub):
                out.add(frozenset(sub))
    return out


def conjugacy_classes(subgroups, group_elements):
    remaining = set(subgroups)
    classes = []
    while remaining:
        h = min(remaining, key=lambda s: (len(s), sorted(s)))
        orbit = {frozenset(mul(mul(inv(g), x), g) for x in h) for g in group_elements}
        classes.append(orbit)
        remaining -= orbit
    return classes


def lattice_counts(classes):
    """(containments of class representatives in subgroups, covering pairs of subgroups).

    ``classes`` is a list of classes, each a list of subgroup sets with the
    representative first.
    """
    subs = sorted((s for cls in classes for s in cls), key=len)
    incidences = sum(1 for cls in classes for h in subs if cls[0] <= h)
    covers = 0
    for i, k in enumerate(subs):
        below = [h for h in subs[:i] if h < k]
        covers += sum(1 for h in below if not any(h < m for m in below))
    return incidences, covers
