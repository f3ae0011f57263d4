from __future__ import annotations

import pytest

from doubleplanes.classify import (
    Bounds,
    ClassificationReport,
    bicanonical_flag,
    bicanonical_flags,
    emergent_properties,
    verify_uniqueness,
)


def _reasons(report, prefix):
    return [e.reason for e in report.exclusions if e.candidate.startswith(prefix)]


def test_five_record_classes(report):
    got = sorted((r.g_F, r.g_C, r.G.order, r.extras["group"], r.type_tag) for r in report.records)
    assert got == [
        (3, 5, 8, "Z2^3", "Ia"),
        (3, 9, 16, "Z2xD4", "Ib"),
        (3, 13, 24, "S4", "Ic"),
        (3, 25, 48, "Z2xS4", "Id"),
        (5, 16, 60, "A5", "II"),
    ]


def test_generating_vectors_are_checked(report):
    for rec in report.records:
        vec = rec.datum.monodromies
        prod = rec.G.identity
        for g in vec:
            prod = prod * g
            assert g.order() == 2
        assert prod.is_identity()
        assert len(vec) == (6 if rec.g_F == 3 else 5)


def test_exclusion_log(report):
    assert _reasons(report, "Dihedral(6) d=6 delta=[free] G=full") == ["B_allowed does not generate G"]
    assert _reasons(report, "Dihedral(2) d=6 delta=[free,free,free] G=full") == ["B_allowed does not generate G"]
    assert _reasons(report, "Octahedral d=6") == ["B_allowed does not generate G"]
    assert _reasons(report, "Tetrahedral")
    assert _reasons(report, "Cyclic(")
    assert _reasons(report, "Dihedral(3)")


def test_every_candidate_is_accounted_for(report):
    accepted = sum(len(v) for v in report.realizations.values())
    descs = [e.candidate for e in report.exclusions]
    assert len(set(descs)) == len(descs)
    assert accepted == 5
    assert len(descs) + accepted > 100


def test_emergent_properties(report):
    assert all(emergent_properties(report).values())


def test_uniqueness(report):
    assert verify_uniqueness(report)
    assert not verify_uniqueness([(3, 5), (5, 3)])
    assert not verify_uniqueness([(3, 5), (3, 5)])
    assert verify_uniqueness([])
    assert verify_uniqueness(ClassificationReport([], [], Bounds()))


def test_bicanonical(report):
    flags = bicanonical_flags(report)
    assert flags["Ia"] == "non-birational-degree-2"
    assert flags["II"] == "birational"
    with pytest.raises(ValueError):
        bicanonical_flag("unclassified")


def test_bounds_guard():
    with pytest.raises(ValueError):
        Bounds(max_n=1)
    with pytest.raises(ValueError):
        Bounds(r_cap=9)
