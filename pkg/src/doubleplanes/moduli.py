"""Dimensions of the families of double planes of each type.

A G-cover of P^1 branched over r points moves in an (r - 3)-dimensional
family (the positions of the branch points up to projectivities), and
the equivariant deformations of F x C split as those of F and of C.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .hyperell import quotient_signature_F

TYPES = ("Ia", "Ib", "Ic", "Id", "II")
EXPECTED_DIMS = {"Ia": 5, "Ib": 4, "Ic": 3, "Id": 3, "II": 2}


class ModuliError(ValueError):
    pass


def equivariant_dim(signature_F: Sequence[int] | int, signature_C: Sequence[int] | int) -> int:
    """Accepts branch-order lists or bare branch-point counts."""
    r_F = signature_F if isinstance(signature_F, int) else len(signature_F)
    r_C = signature_C if isinstance(signature_C, int) else len(signature_C)
    return max(r_F - 3, 0) + max(r_C - 3, 0)


@dataclass(frozen=True)
class ModuliEntry:
    type: str
    r_F: int
    r_C: int
    dimension: int
    bicanonical: str
    closed: bool = True
    open: bool = True
    normal: bool = True
    irreducible: str = "yes"


@dataclass
class ModuliSummary:
    entries: dict[str, ModuliEntry]
    nonbirational_components: int
    notes: list[str] = field(default_factory=list)

    @property
    def dimensions(self) -> tuple[int, ...]:
        return tuple(self.entries[t].dimension for t in TYPES)


def moduli_summary(report) -> ModuliSummary:
    from .classify import bicanonical_flag

    by_type = report.by_type()
    missing = [t for t in TYPES if t not in by_type]
    if missing:
        raise ModuliError(f"report lacks types {missing}")
    entries = {}
    notes = []
    for t in TYPES:
        rec = by_type[t]
        # the F-side count is taken on F/G0; a different count on F/G is noted
        sig_F = quotient_signature_F(rec.setup)
        sig_G, _ = rec.setup.curve.subgroup_signature(rec.G)
        if len(sig_G) != len(sig_F):
            notes.append(f"{t}: F/G has {len(sig_G)} branch points, F/G0 has {len(sig_F)}")
        r_C = rec.datum.r
        entries[t] = ModuliEntry(
            type=t,
            r_F=len(sig_F),
            r_C=r_C,
            dimension=equivariant_dim(sig_F, r_C),
            bicanonical=bicanonical_flag(t),
            irreducible="unknown" if t == "II" else "yes",
        )
    comps = sum(1 for e in entries.values() if e.bicanonical != "birational")
    return ModuliSummary(entries, comps, notes)
