"""The hyperelliptic curve F: y^2 = p(x0, x1) and the group G0 it carries.

F is given combinatorially by a rotation group ``Gbar`` and an invariant
branch divisor ``Delta`` (a multiset of orbits, total size ``2d``). Roots of
unity are fractions of a turn (elements of Q/Z), so ``1/2`` is ``-1`` and
``1/4`` is ``i``.

``G0`` is realized as pairs ``(h, nu)`` with ``2 nu = chi(h)``, where
``chi(h)`` is the scalar by which a SL2 lift of ``h`` rescales ``p``. The
pair acts by ``(x, y) -> (h0 x, e(nu) y)``; ``tau = (1, 1/2)``. As a
permutation, ``(h, nu)`` is ``h`` on the first ``n`` letters and the
rotation by ``nu * N`` on a trailing N-cycle.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from math import lcm

from .groups import Group, Perm, coset_action, orbits_of, surjecting_subgroups
from .sphere import FREE, SphericalGroup


class SetupError(ValueError):
    pass


def _turn(x: Fraction) -> Fraction:
    return x % 1


@dataclass(frozen=True)
class FOrbit:
    """A G0-orbit of points of F with (possibly) nontrivial stabilizer."""

    label: str
    weierstrass: bool
    stabilizer: Group
    cosets: tuple
    act: object = field(repr=False, compare=False)

    @property
    def size(self) -> int:
        return len(self.cosets)


@dataclass(frozen=True, eq=False)
class Hyperelliptic:
    sphere: SphericalGroup
    d: int
    delta: tuple[str, ...]

    def __post_init__(self):
        if self.d % 2:
            raise SetupError(f"d must be even, got {self.d}")
        total = sum(self.sphere.orbit(o).size for o in self.delta)
        if total != 2 * self.d:
            raise SetupError(f"Delta has degree {total}, expected {2 * self.d}")
        specials = [o for o in self.delta if o != FREE]
        if len(specials) != len(set(specials)):
            raise SetupError("a special orbit appears twice in Delta")

    @property
    def genus(self) -> int:
        return self.d - 1

    @cached_property
    def _delta_points(self) -> frozenset:
        ids = set(self.delta) - {FREE}
        return frozenset(
            i for i, pt in enumerate(self.sphere.points) if self.sphere.orbits[pt.orbit].id in ids
        )

    def in_delta(self, point: int) -> bool:
        return point in self._delta_points

    @cached_property
    def chi(self) -> dict:
        """``h -> chi(h)`` in turns."""
        out = {}
        for h in self.sphere.group.elements:
            if h.is_identity():
                out[h] = Fraction(0)
                continue
            m = h.order()
            (p1, a1), (p2, _) = self.sphere.fixed_data[h]
            k = int(2 * a1 * m)
            e_plus, e_minus = int(self.in_delta(p1)), int(self.in_delta(p2))
            rest = 2 * self.d - e_plus - e_minus
            if rest % m:
                raise SetupError(f"Delta is not a union of <h>-orbits for {h!r}")
            f = rest // m
            out[h] = _turn(Fraction(k * f, 2) + (e_minus - e_plus) * a1)
        return out

    @cached_property
    def N(self) -> int:
        return lcm(2, *((v / 2).denominator for v in self.chi.values()))

    def element(self, h: Perm, nu) -> Perm:
        nu = _turn(Fraction(nu))
        if _turn(2 * nu) != self.chi[h]:
            raise SetupError(f"({h!r}, {nu}) is not in G0")
        n, N = self.sphere.group.degree, self.N
        shift = int(nu * N)
        return Perm._raw(tuple(h) + tuple(n + (i + shift) % N for i in range(N)))

    def split(self, g: Perm) -> tuple[Perm, Fraction]:
        n = self.sphere.group.degree
        h = Perm._raw(tuple(g[:n]))
        return h, Fraction(g[n] - n, self.N)

    def project(self, g: Perm) -> Perm:
        return Perm._raw(tuple(g[: self.sphere.group.degree]))

    @cached_property
    def G0(self) -> Group:
        elems = []
        for h in self.sphere.group.elements:
            nu = self.chi[h] / 2
            elems += [self.element(h, nu), self.element(h, nu + Fraction(1, 2))]
        gens = [self.element(x, self.chi[x] / 2) for x in self.sphere.group.generators]
        gens.append(self.tau)
        return Group(len(elems[0]), tuple(sorted(elems)), tuple(gens), "G0")

    @cached_property
    def tau(self) -> Perm:
        return self.element(self.sphere.group.identity, Fraction(1, 2))

    def compute_lambda(self, h: Perm) -> int:
        v = self.chi[h]
        if v == 0:
            return 1
        if v == Fraction(1, 2):
            return -1
        raise SetupError(f"character value e({v}) at {h!r} is not real")

    @property
    def lambda_is_real(self) -> bool:
        return all(v in (0, Fraction(1, 2)) for v in self.chi.values())

    def canonical_splitting(self, h: Perm) -> Perm:
        if not all(v == 0 for v in self.chi.values()):
            raise SetupError("the character is not trivial; no canonical splitting")
        return self.element(h, 0)

    # --- fixed points ---------------------------------------------------

    def fixed_points(self, g: Perm) -> int:
        """Number of fixed points of ``g`` in G0 on F, by the eigenvalue rule."""
        h, nu = self.split(g)
        if h.is_identity():
            if nu == 0:
                raise SetupError("the identity fixes every point")
            return 2 * self.d
        count = 0
        for point, a in self.sphere.fixed_data[h]:
            if self.in_delta(point):
                count += 1
                continue
            eps = _turn(nu - self.d * a)
            if eps == 0:
                count += 2
            elif eps != Fraction(1, 2):
                raise SetupError(f"inconsistent lift ({h!r}, {nu}) over point {point}")
        return count

    @cached_property
    def fixed_table(self) -> dict:
        return {g: self.fixed_points(g) for g in self.G0.elements[1:]}

    @cached_property
    def f_orbits(self) -> tuple[FOrbit, ...]:
        """G0-orbits of F lying over special points, plus the Weierstrass
        points over free orbits of Delta."""
        G0 = self.G0
        out = []
        sphere = self.sphere
        for oi, orbit in enumerate(sphere.orbits):
            base = next(i for i, pt in enumerate(sphere.points) if pt.orbit == oi and pt.rep.is_identity())
            x = sphere.branch_vector[oi]
            powers = [x**j for j in range(x.order())]
            stab = []
            for h in powers:
                for nu in (self.chi[h] / 2, self.chi[h] / 2 + Fraction(1, 2)):
                    g = self.element(h, nu)
                    if self.in_delta(base):
                        stab.append(g)
                    elif h.is_identity():
                        if _turn(nu) == 0:
                            stab.append(g)
                    else:
                        a = dict(sphere.fixed_data[h])[base]
                        if _turn(nu - self.d * a) == 0:
                            stab.append(g)
            K = Group(G0.degree, tuple(sorted(stab)), tuple(stab))
            cosets, act = coset_action(G0, K)
            out.append(FOrbit(orbit.id, self.in_delta(base), K, tuple(cosets), act))
        n_free = sum(1 for o in self.delta if o == FREE)
        ident = G0.identity
        for i in range(n_free):
            K = Group(G0.degree, tuple(sorted((ident, self.tau))), (self.tau,))
            cosets, act = coset_action(G0, K)
            out.append(FOrbit(f"{FREE}{i}", True, K, tuple(cosets), act))
        return tuple(out)

    def fixed_points_model(self, g: Perm) -> int:
        """Fixed points of ``g`` counted on the coset model of F."""
        return sum(len(orb.act(g).fixed_points()) for orb in self.f_orbits)

    def subgroup_signature(self, H: Group) -> tuple[list[int], int]:
        """Branch orders of ``F -> F/H`` and the genus of ``F/H``."""
        orders = []
        for orb in self.f_orbits:
            perms = [orb.act(g) for g in H.generators]
            for o in orbits_of(perms, orb.size):
                m = H.order // len(o)
                if m > 1:
                    orders.append(m)
        orders.sort()
        # 2g(F) - 2 = |H| (2q - 2 + sum(1 - 1/m))
        total = sum((1 - Fraction(1, m) for m in orders), Fraction(0))
        two_q = Fraction(2 * self.genus - 2, H.order) - total + 2
        if two_q.denominator != 1 or two_q < 0 or two_q % 2:
            raise SetupError(f"Riemann-Hurwitz mismatch for F/H: signature {orders}")
        return orders, int(two_q) // 2

    @cached_property
    def subgroups(self) -> list[Group]:
        return surjecting_subgroups(self.G0, self.project)

    def setups(self) -> list["HyperellipticSetup"]:
        return [HyperellipticSetup(self, G, i) for i, G in enumerate(self.subgroups)]

    def describe(self, g: Perm) -> str:
        h, nu = self.split(g)
        return f"{h.cycle_string()}|{nu}"


@dataclass(frozen=True, eq=False)
class HyperellipticSetup:
    """F together with the chosen group G inside G0."""

    curve: Hyperelliptic
    G: Group
    selector: int = 0

    @property
    def genus_F(self) -> int:
        return self.curve.genus

    @property
    def d(self) -> int:
        return self.curve.d

    @property
    def sphere(self) -> SphericalGroup:
        return self.curve.sphere

    @property
    def delta(self) -> tuple[str, ...]:
        return self.curve.delta

    @property
    def G0(self) -> Group:
        return self.curve.G0

    @property
    def tau(self) -> Perm:
        return self.curve.tau

    @property
    def selector_text(self) -> str:
        return "full" if self.selector == 0 else f"section {self.selector}"


def make_setup(sphere: SphericalGroup, d: int, delta, selector: int = 0) -> HyperellipticSetup:
    curve = Hyperelliptic(sphere, d, tuple(delta))
    subs = curve.subgroups
    if not 0 <= selector < len(subs):
        raise SetupError(f"group selector {selector} out of range (have {len(subs)})")
    return HyperellipticSetup(curve, subs[selector], selector)


def fixed_points_on_F(setup, g: Perm) -> int:
    curve = setup.curve if isinstance(setup, HyperellipticSetup) else setup
    return curve.fixed_points(g)


def compute_lambda(curve: Hyperelliptic, h: Perm) -> int:
    return curve.compute_lambda(h)


def set_A(setup: HyperellipticSetup) -> list[Perm]:
    """Nontrivial elements of G with a fixed point on F."""
    A = [g for g in setup.G.elements[1:] if setup.curve.fixed_table[g] > 0]
    Aset = set(A)
    for g in A:
        for x in setup.G.generators:
            if g.conjugate(x) not in Aset:
                raise AssertionError("A is not stable under conjugation")
    return A


def free_involutions(setup: HyperellipticSetup) -> list[Perm]:
    """Elements of G of order 2 acting freely on F."""
    return [g for g in setup.G.elements[1:] if g.order() == 2 and setup.curve.fixed_table[g] == 0]


def quotient_signature_F(setup, subgroup: Group | None = None) -> list[int]:
    """Branch orders of ``F -> F/G0`` (default) or ``F -> F/subgroup``."""
    curve = setup.curve if isinstance(setup, HyperellipticSetup) else setup
    H = curve.G0 if subgroup is None else subgroup
    orders, q = curve.subgroup_signature(H)
    if subgroup is None and q != 0:
        raise SetupError("F/G0 should be rational")
    return orders


def is_free_dihedral_orbit(n: int, c) -> bool:
    """Whether ``x0^2n + c x0^n x1^n + x1^2n = 0`` is a free D_n-orbit."""
    if n < 2:
        raise ValueError("n must be >= 2")
    c = Fraction(c)
    return c not in (2, -2)
