"""Finite rotation groups acting on the projective line.

No matrices: each group is presented by a spherical generating vector
``(x_1, ..., x_r)`` with product one (r = 3, or 2 for cyclic groups).
The special points over the i-th branch point are the cosets ``g<x_i>``;
the point ``g<x_i>`` is fixed by ``g x_i g^-1``, which acts there as the
positive rotation by ``2*pi/ord(x_i)``. That is all the geometry the rest
of the package needs: which points an element fixes, and its rotation
angle at each of them.

Angles are kept exact as fractions of a turn. For a rotation ``h`` fixing
``P`` with ``h = rho_P**j`` (``s = ord(rho_P)``) we store the SL2 eigenvalue
exponent ``j / (2 s)``, which is well defined modulo 1/2.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from .groups import (
    Group,
    Perm,
    alternating,
    cyclic,
    dihedral,
    is_generating,
    symmetric,
)

KINDS = ("cyclic", "dihedral", "tetrahedral", "octahedral", "icosahedral")
FREE = "free"


@dataclass(frozen=True)
class OrbitDesc:
    id: str
    size: int
    stabilizer_order: int
    special: bool = True


@dataclass(frozen=True)
class ClassData:
    order: int
    rotation: int
    plus_orbit: str
    minus_orbit: str


@dataclass(frozen=True)
class SpecialPoint:
    orbit: int
    rep: Perm
    rho: Perm


@dataclass(frozen=True, eq=False)
class SphericalGroup:
    kind: str
    n: int
    group: Group
    branch_vector: tuple[Perm, ...]
    orbits: tuple[OrbitDesc, ...]
    points: tuple[SpecialPoint, ...]

    @property
    def name(self) -> str:
        if self.kind in ("cyclic", "dihedral"):
            return f"{self.kind.capitalize()}({self.n})"
        return self.kind.capitalize()

    @property
    def order(self) -> int:
        return self.group.order

    @property
    def perm_model(self) -> Group:
        return self.group

    def orbit(self, orbit_id: str) -> OrbitDesc:
        if orbit_id == FREE:
            return OrbitDesc(FREE, self.order, 1, special=False)
        for o in self.orbits:
            if o.id == orbit_id:
                return o
        raise KeyError(f"{self.name} has no orbit {orbit_id!r}")

    @cached_property
    def _point_index(self) -> dict:
        # (orbit, coset) -> point index; cosets keyed by their sorted tuple
        out = {}
        for i, pt in enumerate(self.points):
            x = self.branch_vector[pt.orbit]
            coset = frozenset(pt.rep * x**k for k in range(x.order()))
            out[(pt.orbit, coset)] = i
        return out

    def point_action(self, h: Perm) -> Perm:
        """Permutation induced by ``h`` on the special points."""
        images = []
        for pt in self.points:
            x = self.branch_vector[pt.orbit]
            coset = frozenset(h * pt.rep * x**k for k in range(x.order()))
            images.append(self._point_index[(pt.orbit, coset)])
        return Perm(images)

    @cached_property
    def fixed_data(self) -> dict:
        """``h -> ((point, exponent), (point, exponent))`` for ``h != 1``."""
        table = {}
        for h in self.group.elements[1:]:
            entries = []
            for i, pt in enumerate(self.points):
                s = pt.rho.order()
                power = pt.rho
                for j in range(1, s):
                    if power == h:
                        entries.append((i, Fraction(j, 2 * s)))
                        break
                    power = power * pt.rho
            if len(entries) != 2:
                raise AssertionError(
                    f"{self.name}: {h!r} fixes {len(entries)} special points"
                )
            table[h] = tuple(entries)
        return table

    def point_orbit_id(self, point: int) -> str:
        return self.orbits[self.points[point].orbit].id

    @cached_property
    def class_data(self) -> dict:
        """Per conjugacy class (by index): order, normalized rotation
        number and the orbits of the two fixed points."""
        out = {}
        for ci, cls in enumerate(self.group.conjugacy_classes):
            h = cls[0]
            if h.is_identity():
                continue
            m = h.order()
            (p1, a1), (p2, a2) = self.fixed_data[h]
            k1 = int((2 * a1 * m) % m)
            if 2 * k1 <= m:
                k, plus, minus = k1, p1, p2
            else:
                k, plus, minus = m - k1, p2, p1
            out[ci] = ClassData(m, k, self.point_orbit_id(plus), self.point_orbit_id(minus))
        return out


def _find_branch_vector(G: Group, orders: tuple[int, ...]) -> tuple[Perm, ...]:
    """First generating triple (canonical order) with the given orders and
    product one."""
    a, b, c = orders
    first = [g for g in G.elements if g.order() == a]
    second = [g for g in G.elements if g.order() == b]
    for x1 in first:
        for x2 in second:
            x3 = (x1 * x2).inverse()
            if x3.order() == c and is_generating(G, (x1, x2)):
                return (x1, x2, x3)
    raise AssertionError(f"no spherical vector of type {orders} in {G!r}")


def _build(kind: str, n: int, G: Group, vector: tuple[Perm, ...], ids: tuple[str, ...]):
    orbits = []
    points = []
    for oi, (x, oid) in enumerate(zip(vector, ids)):
        s = x.order()
        powers = [x**k for k in range(s)]
        seen = set()
        count = 0
        for g in G.elements:
            if g in seen:
                continue
            coset = [g * p for p in powers]
            seen.update(coset)
            points.append(SpecialPoint(oi, g, g * x * g.inverse()))
            count += 1
        orbits.append(OrbitDesc(oid, count, s))
    return SphericalGroup(kind, n, G, tuple(vector), tuple(orbits), tuple(points))


_CACHE: dict = {}


def catalog(kind: str, n: int = 0) -> SphericalGroup:
    """The rotation group of the given kind (``n`` for cyclic/dihedral)."""
    key = (kind, n)
    if key in _CACHE:
        return _CACHE[key]
    if kind == "cyclic":
        if n < 1:
            raise ValueError("cyclic groups need n >= 1")
        G = cyclic(n)
        if n == 1:
            sg = SphericalGroup(kind, n, G, (), (), ())
        else:
            x = G.generators[0]
            sg = _build(kind, n, G, (x, x.inverse()), ("1a", "1b"))
    elif kind == "dihedral":
        if n < 2:
            raise ValueError("dihedral groups need n >= 2")
        G = dihedral(n)
        vec = _find_branch_vector(G, (n, 2, 2))
        ids = ("2a", "2b", "2c") if n == 2 else ("2", f"{n}a", f"{n}b")
        sg = _build(kind, n, G, vec, ids)
    elif kind == "tetrahedral":
        G = alternating(4)
        sg = _build(kind, 0, G, _find_branch_vector(G, (3, 3, 2)), ("4a", "4b", "6"))
    elif kind == "octahedral":
        G = symmetric(4)
        sg = _build(kind, 0, G, _find_branch_vector(G, (4, 3, 2)), ("6", "8", "12"))
    elif kind == "icosahedral":
        G = alternating(5)
        sg = _build(kind, 0, G, _find_branch_vector(G, (5, 3, 2)), ("12", "20", "30"))
    else:
        raise ValueError(f"unknown kind {kind!r}")
    _CACHE[key] = sg
    return sg


def full_catalog(max_n: int = 12) -> list[SphericalGroup]:
    out = [catalog("cyclic", n) for n in range(1, max_n + 1)]
    out += [catalog("dihedral", n) for n in range(2, max_n + 1)]
    out += [catalog(k) for k in ("tetrahedral", "octahedral", "icosahedral")]
    return out


def parse_kind(text: str) -> tuple[str, int]:
    """``"Dihedral(4)"`` -> ``("dihedral", 4)``; ``"octahedral"`` -> ``("octahedral", 0)``."""
    t = text.strip().lower()
    if "(" in t:
        kind, rest = t.split("(", 1)
        return kind.strip(), int(rest.rstrip(")"))
    if t in ("tetrahedral", "octahedral", "icosahedral"):
        return t, 0
    raise ValueError(f"cannot parse group kind {text!r}")


def riemann_hurwitz_defect(sg: SphericalGroup) -> Fraction:
    """``|G| (-2 + sum(1 - 1/s)) + 2``; zero for a genuine action on P^1."""
    total = sum((1 - Fraction(1, o.stabilizer_order) for o in sg.orbits), Fraction(0))
    return sg.order * (-2 + total) + 2


def delta_candidates(sg: SphericalGroup, degree: int) -> list[tuple[str, ...]]:
    """Invariant reduced divisors of the given degree, as orbit multisets:
    each special orbit at most once, free orbits any number of times."""
    out = []
    specials = sg.orbits
    for k in range(len(specials) + 1):
        for combo in itertools.combinations(specials, k):
            rest = degree - sum(o.size for o in combo)
            if rest < 0 or rest % sg.order:
                continue
            out.append(tuple(o.id for o in combo) + (FREE,) * (rest // sg.order))
    return out
