from __future__ import annotations

from fractions import Fraction

import pytest

from doubleplanes.sphere import (
    FREE,
    catalog,
    delta_candidates,
    full_catalog,
    parse_kind,
    riemann_hurwitz_defect,
)


@pytest.mark.parametrize(
    "kind, n, sizes",
    [
        ("cyclic", 5, [1, 1]),
        ("dihedral", 2, [2, 2, 2]),
        ("dihedral", 4, [2, 4, 4]),
        ("dihedral", 5, [2, 5, 5]),
        ("tetrahedral", 0, [4, 4, 6]),
        ("octahedral", 0, [6, 8, 12]),
        ("icosahedral", 0, [12, 20, 30]),
    ],
)
def test_special_orbit_sizes(kind, n, sizes):
    sg = catalog(kind, n)
    assert [o.size for o in sg.orbits] == sizes
    for o in sg.orbits:
        assert o.size * o.stabilizer_order == sg.order


def test_riemann_hurwitz_for_whole_catalog():
    for sg in full_catalog():
        assert riemann_hurwitz_defect(sg) == 0, sg.name


def test_each_rotation_fixes_two_points_with_inverse_eigenvalues():
    # the rotation by angle t about an axis acts on the two poles with
    # SL2 eigenvalues e(t/2) and e(-t/2)
    for sg in full_catalog():
        for h, ((p1, a1), (p2, a2)) in sg.fixed_data.items():
            assert p1 != p2
            assert (a1 + a2) % Fraction(1, 2) == 0, (sg.name, h)


def test_point_action_is_a_homomorphism():
    sg = catalog("octahedral")
    for a in sg.group.generators:
        for b in sg.group.elements[:6]:
            assert sg.point_action(a * b) == sg.point_action(a) * sg.point_action(b)


def test_octahedral_class_data():
    sg = catalog("octahedral")
    by_order = {}
    for data in sg.class_data.values():
        by_order.setdefault(data.order, []).append(data.plus_orbit)
    assert sorted(by_order[3]) == ["8"]
    assert sorted(by_order[4]) == ["6"]
    # involutions: rotations by pi about face axes (6-orbit) and edge axes (12-orbit)
    assert sorted(by_order[2]) == ["12", "6"]


def test_delta_candidates_dihedral2():
    sg = catalog("dihedral", 2)
    got = delta_candidates(sg, 8)
    assert (FREE, FREE) in got
    assert ("2a", "2b", FREE) in got
    assert all(sum(sg.orbit(o).size for o in c) == 8 for c in got)


def test_delta_candidates_octahedral():
    sg = catalog("octahedral")
    assert delta_candidates(sg, 8) == [("8",)]
    assert delta_candidates(sg, 12) == [("12",)]


def test_parse_kind():
    assert parse_kind("Dihedral(4)") == ("dihedral", 4)
    assert parse_kind("octahedral") == ("octahedral", 0)
    with pytest.raises(ValueError):
        parse_kind("cube")
