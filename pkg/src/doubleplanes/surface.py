"""The surface S = (F x C)/G and its involution sigma induced by tau x 1."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .covers import BranchDatum
from .groups import (
    Group,
    Perm,
    alternating,
    cyclic,
    dihedral,
    direct_product,
    find_isomorphism,
    orbits_of,
    symmetric,
)
from .hyperell import HyperellipticSetup, set_A

POINTWISE = "pointwise-fixed"
SWAPPED = "swapped-pair"


class SurfaceError(ValueError):
    pass


def behaviour_label(isolated: int) -> str:
    return f"invariant-with-{isolated}-isolated-points"


@dataclass(frozen=True, order=True)
class Fibre:
    multiplicity: int
    behaviour: str
    isolated: int = 0


@dataclass(frozen=True)
class Invariants:
    chi: int
    q: int
    pg: int
    Ksq: int


@dataclass(eq=False)
class SurfaceRecord:
    setup: HyperellipticSetup
    datum: BranchDatum
    A: list[Perm]
    B: list[Perm]
    invariants: Invariants
    k: int
    fibres_p1: list[Fibre]
    type_tag: str = "unclassified"
    extras: dict = field(default_factory=dict)

    @property
    def g_F(self) -> int:
        return self.setup.genus_F

    @property
    def g_C(self) -> int:
        return self.datum.genus

    @property
    def G(self) -> Group:
        return self.setup.G


def _check_same_group(setup: HyperellipticSetup, datum: BranchDatum) -> None:
    if setup.G != datum.group:
        raise SurfaceError("the cover's group is not the group acting on F")


def set_B(datum: BranchDatum) -> list[Perm]:
    """Nontrivial elements with a fixed point on C."""
    return [g for g in datum.group.elements[1:] if datum.fixed_points(g) > 0]


def check_free_diagonal(setup: HyperellipticSetup, datum: BranchDatum) -> bool:
    _check_same_group(setup, datum)
    return not (set(set_A(setup)) & set(set_B(datum)))


def invariants(setup: HyperellipticSetup, datum: BranchDatum) -> Invariants:
    _check_same_group(setup, datum)
    num = (setup.genus_F - 1) * (datum.genus - 1)
    if num % setup.G.order:
        raise SurfaceError(f"chi = {Fraction(num, setup.G.order)} is not an integer")
    chi = num // setup.G.order
    _, q = setup.curve.subgroup_signature(setup.G)
    return Invariants(chi=chi, q=q, pg=chi - 1 + q, Ksq=8 * chi)


def count_sigma_isolated(setup: HyperellipticSetup, datum: BranchDatum) -> int:
    """Isolated fixed points of sigma: pairs (P, c) with tau P = g P, g c = c,
    counted modulo G."""
    _check_same_group(setup, datum)
    curve = setup.curve
    total = 0
    for g in setup.G.elements[1:]:
        fc = datum.fixed_points(g)
        if fc:
            total += curve.fixed_points(setup.tau * g) * fc
    if total % setup.G.order:
        raise SurfaceError(f"k = {Fraction(total, setup.G.order)} is not an integer")
    return total // setup.G.order


def fibre_census(setup: HyperellipticSetup, datum: BranchDatum | None = None) -> list[Fibre]:
    """Every G-orbit of F that is not a free, swapped orbit of generic points:
    multiplicity, sigma behaviour and, given the cover, the isolated fixed
    points of sigma on that fibre. Fibres of multiplicity one are included
    when they carry isolated points."""
    G, tau = setup.G, setup.tau
    out = []
    for orb in setup.curve.f_orbits:
        perms_G = [orb.act(g) for g in G.generators]
        t = orb.act(tau)
        for o in orbits_of(perms_G, orb.size):
            mult = G.order // len(o)
            base = o[0]
            oset = set(o)
            if t[base] == base:
                out.append(Fibre(mult, POINTWISE))
                continue
            if t[base] not in oset:
                if mult > 1:
                    out.append(Fibre(mult, SWAPPED))
                continue
            if datum is None:
                out.append(Fibre(mult, behaviour_label(-1), -1))
                continue
            image = t[base]
            n = 0
            for g in G.elements[1:]:
                if orb.act(g)[base] == image:
                    n += datum.fixed_points(g)
            if n % mult:
                raise SurfaceError("non-integral isolated point count on a fibre")
            n //= mult
            if mult > 1 or n:
                out.append(Fibre(mult, behaviour_label(n), n))
    rank = {POINTWISE: 0, SWAPPED: 2}
    return sorted(out, key=lambda f: (rank.get(f.behaviour, 1), -f.multiplicity, -f.isolated))


def multiple_fibres_p1(setup: HyperellipticSetup, datum: BranchDatum | None = None) -> list[Fibre]:
    """Multiple fibres of S -> F/G with the behaviour of sigma on each."""
    return [f for f in fibre_census(setup, datum) if f.multiplicity > 1]


# --- type tags -------------------------------------------------------------


@lru_cache(maxsize=None)
def reference_groups() -> dict[str, Group]:
    z2 = cyclic(2)
    return {
        "Z2^3": direct_product(direct_product(z2, z2), z2, "Z2^3"),
        "Z2xD4": direct_product(z2, dihedral(4), "Z2xD4"),
        "S4": symmetric(4),
        "Z2xS4": direct_product(z2, symmetric(4), "Z2xS4"),
        "A5": alternating(5),
    }


TYPE_TABLE = {
    ("Ia", 3, 5, "Z2^3"),
    ("Ib", 3, 9, "Z2xD4"),
    ("Ic", 3, 13, "S4"),
    ("Id", 3, 25, "Z2xS4"),
    ("II", 5, 16, "A5"),
}

K_EXPECTED = {3: 12, 5: 10}


def group_name(G: Group) -> str:
    for name, H in reference_groups().items():
        if H.order == G.order and find_isomorphism(G, H) is not None:
            return name
    return f"order-{G.order}"


def type_tag(g_F: int, g_C: int, group: str) -> str:
    for tag, gf, gc, name in TYPE_TABLE:
        if (gf, gc, name) == (g_F, g_C, group):
            return tag
    return "unclassified"


def build_record(setup: HyperellipticSetup, datum: BranchDatum) -> SurfaceRecord:
    if not check_free_diagonal(setup, datum):
        raise SurfaceError("the diagonal action is not free")
    inv = invariants(setup, datum)
    k = count_sigma_isolated(setup, datum)
    fibres = multiple_fibres_p1(setup, datum)
    name = group_name(setup.G)
    rec = SurfaceRecord(
        setup=setup,
        datum=datum,
        A=set_A(setup),
        B=set_B(datum),
        invariants=inv,
        k=k,
        fibres_p1=fibres,
        type_tag=type_tag(setup.genus_F, datum.genus, name),
    )
    rec.extras["group"] = name
    return rec
