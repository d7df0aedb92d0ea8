from __future__ import annotations

import warnings

import pytest

from oracles import conjugacy_classes, subgroups_by_all_subsets, subgroups_by_backtracking
from tomseq.enumeration import (
    BudgetExceeded, all_subgroups, check_budget, class_of, class_table, family_group,
    sn_classes_of_an_subgroups, subgroup_sets,
)
from tomseq.permcore import Permutation, closure, symmetric_group


def _extra_groups():
    """Small groups that are not subgroups of S_6."""
    q8 = closure([Permutation.from_cycles(8, (0, 1, 2, 3), (4, 5, 6, 7)),
                  Permutation.from_cycles(8, (0, 4, 2, 6), (1, 7, 3, 5))], 8)
    dic12 = closure([Permutation.from_cycles(7, (0, 1, 2)),
                     Permutation.from_cycles(7, (1, 2), (3, 4, 5, 6))], 7)
    c2_4 = closure([Permutation.from_cycles(8, (2 * i, 2 * i + 1)) for i in range(4)], 8)
    # SL(2,3) on the eight nonzero vectors of F_3^2
    vecs = [(a, b) for a in range(3) for b in range(3) if (a, b) != (0, 0)]

    def act(m):
        return Permutation([vecs.index(((m[0] * a + m[1] * b) % 3, (m[2] * a + m[3] * b) % 3)) for a, b in vecs])

    sl23 = closure([act((1, 1, 0, 1)), act((1, 0, 1, 1))], 8)
    return {"Q8": q8, "Dic12": dic12, "C2^4": c2_4, "SL(2,3)": sl23}


def _small_groups():
    out = {}
    for n in range(1, 7):
        for c in class_table(symmetric_group(n)).classes:
            if c.order <= 24:
                out[f"S{n}#{c.index + 1}"] = c.representative
    out.update(_extra_groups())
    return out


SMALL = _small_groups()


def test_extra_groups_have_expected_shape():
    g = _extra_groups()
    assert g["Q8"].order == 8 and sum(1 for p in g["Q8"] if p.order() == 2) == 1
    assert g["Dic12"].order == 12
    assert g["C2^4"].order == 16
    assert g["SL(2,3)"].order == 24


@pytest.mark.parametrize("name", sorted(SMALL))
def test_subset_oracle(name):
    g = SMALL[name]
    expected = subgroups_by_backtracking(g.elements)
    found = {frozenset(tuple(p) for p in h.elements) for h in all_subgroups(g)}
    assert found == expected
    ct = class_table(g)
    assert len(ct) == len(conjugacy_classes(expected, [tuple(p) for p in g.elements]))
    assert ct.total_subgroups() == len(expected)


def test_literal_subsets_of_s3():
    g = symmetric_group(3)
    expected = subgroups_by_all_subsets(g.elements)
    assert len(expected) == 6
    assert {frozenset(tuple(p) for p in h.elements) for h in all_subgroups(g)} == expected


def test_class_table_shape(tables):
    ct = tables("S", 4)
    assert [c.order for c in ct] == [1, 2, 2, 3, 4, 4, 4, 6, 8, 12, 24]
    assert [c.class_length for c in ct] == [1, 3, 6, 4, 1, 3, 3, 4, 3, 1, 1]
    assert [c.label for c in ct] == ["1", "2", "2", "3", "2^2", "2^2", "4", "S3", "D8", "A4", "S4"]
    assert [c.index for c in ct] == list(range(11))


def test_members_are_conjugates(tables):
    ct = tables("S", 5)
    for i, c in enumerate(ct.classes):
        members = ct.members(i)
        assert len(members) == c.class_length
        assert len({m.tobytes() for m in members}) == c.class_length
    assert len(set(subgroup_sets(ct))) == 156


def test_ordering_ignores_generator_order():
    a = closure([Permutation.from_cycles(4, (0, 1, 2, 3)), Permutation.from_cycles(4, (0, 1))], 4)
    b = closure([Permutation.from_cycles(4, (0, 1)), Permutation.from_cycles(4, (0, 1, 2, 3))], 4)
    ta, tb = class_table(a), class_table(b)
    assert [c.representative for c in ta] == [c.representative for c in tb]


def test_class_of(tables):
    ct = tables("S", 4)
    h = closure([Permutation.from_cycles(4, (1, 3))], 4)
    assert class_of(ct, h) == 2
    assert class_of(ct, symmetric_group(4)) == 10


def test_budget():
    with pytest.raises(BudgetExceeded) as err:
        class_table(symmetric_group(8))
    assert err.value.order == 40320 and "5040" in str(err.value)
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        check_budget(symmetric_group(8), allow_large=True)
    assert caught and issubclass(caught[0].category, RuntimeWarning)


def test_red_blue(tables):
    assert sn_classes_of_an_subgroups(4, tables("S", 4)) == (5, 6)


def test_family_group():
    assert family_group("a", 5).order == 60
    with pytest.raises(ValueError):
        family_group("D", 4)
