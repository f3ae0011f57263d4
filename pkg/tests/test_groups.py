from __future__ import annotations

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from doubleplanes.groups import (
    GroupError,
    Perm,
    alternating,
    are_isomorphic,
    coset_action,
    cyclic,
    dihedral,
    direct_product,
    find_isomorphism,
    group_from_elements,
    index_two_subgroups,
    is_generating,
    subgroup_generated,
    surjecting_subgroups,
    symmetric,
)


def test_perm_composition_is_right_to_left():
    p = Perm.from_cycles(3, (0, 1))
    q = Perm.from_cycles(3, (1, 2))
    # (p*q)(i) = p(q(i))
    assert (p * q)[1] == p[q[1]] == 2


def test_perm_rejects_non_bijection():
    with pytest.raises(GroupError):
        Perm([0, 0, 1])


@pytest.mark.parametrize(
    "group, order, classes",
    [
        (cyclic(6), 6, 6),
        (dihedral(4), 8, 5),
        (dihedral(5), 10, 4),
        (dihedral(2), 4, 4),
        (alternating(4), 12, 4),
        (symmetric(4), 24, 5),
        (alternating(5), 60, 5),
    ],
)
def test_orders_and_class_counts(group, order, classes):
    assert group.order == order
    assert len(group.conjugacy_classes) == classes
    assert sum(len(c) for c in group.conjugacy_classes) == order


def test_identity_first():
    for G in (cyclic(5), symmetric(4), alternating(5)):
        assert G.identity.is_identity()


def test_generation():
    S4 = symmetric(4)
    transpositions = [g for g in S4.elements if len(g.cycles()) == 1 and len(g.cycles()[0]) == 2]
    assert is_generating(S4, transpositions)
    doubles = [g for g in S4.elements if sorted(map(len, g.cycles())) == [2, 2]]
    assert subgroup_generated(S4, doubles).order == 4


def test_index_two_subgroups_counts():
    # Z2^3 has 7 index-2 subgroups, S4 one, A5 none, D4 three
    z2 = cyclic(2)
    assert len(index_two_subgroups(direct_product(direct_product(z2, z2), z2))) == 7
    assert len(index_two_subgroups(symmetric(4))) == 1
    assert len(index_two_subgroups(alternating(5))) == 0
    assert len(index_two_subgroups(dihedral(4))) == 3


def test_surjecting_subgroups_of_product():
    G0 = direct_product(cyclic(2), symmetric(4))
    subs = surjecting_subgroups(G0, lambda g: Perm(tuple(x - 2 for x in g[2:])))
    # G0 plus the two complements: {0} x S4 and the sign graph
    assert [H.order for H in subs] == [48, 24, 24]


def test_isomorphism_search():
    z2 = cyclic(2)
    assert are_isomorphic(direct_product(z2, z2), dihedral(2))
    assert not are_isomorphic(cyclic(4), dihedral(2))
    assert not are_isomorphic(symmetric(4), direct_product(z2, alternating(4)))
    hom = find_isomorphism(alternating(5), alternating(5))
    assert hom is not None and len(set(hom.values())) == 60


def test_coset_action_is_transitive_action():
    S4 = symmetric(4)
    K = subgroup_generated(S4, [Perm.from_cycles(4, (0, 1, 2))])
    cosets, act = coset_action(S4, K)
    assert len(cosets) == 8
    for a, b in itertools.product(S4.generators, repeat=2):
        assert act(a * b) == act(a) * act(b)


def test_group_from_elements_checks_closure():
    S3 = symmetric(3)
    with pytest.raises(GroupError):
        group_from_elements(S3.elements[:4])


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 59), st.integers(0, 59), st.integers(0, 59))
def test_a5_associativity_and_inverses(i, j, k):
    A5 = alternating(5)
    a, b, c = A5.elements[i], A5.elements[j], A5.elements[k]
    assert (a * b) * c == a * (b * c)
    assert (a * a.inverse()).is_identity()
    assert a * b in A5
    assert (a * b).order() == (b * a).order()
