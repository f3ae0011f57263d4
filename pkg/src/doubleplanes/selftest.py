"""Property checks runnable from the command line (``doubleplanes selftest``)."""

from __future__ import annotations

import random
from fractions import Fraction

from .covers import BranchDatum, CoverError, hurwitz_genus
from .groups import Group, alternating, cyclic, dihedral, direct_product, is_generating, symmetric
from .hyperell import Hyperelliptic, SetupError, quotient_signature_F
from .planemodel import canonical_resolution_invariants, certify_pg, duval_spec
from .sphere import delta_candidates, full_catalog, riemann_hurwitz_defect


def toy_groups() -> list[Group]:
    """Assorted groups of order at most 60."""
    z2 = cyclic(2)
    out = [cyclic(n) for n in (2, 3, 4, 5, 6, 8, 12)]
    out += [dihedral(n) for n in (2, 3, 4, 5, 6, 10)]
    out += [alternating(4), symmetric(4), alternating(5)]
    out += [direct_product(direct_product(z2, z2), z2), direct_product(z2, dihedral(4)), direct_product(z2, symmetric(4))]
    return out


def random_datum(G: Group, rng: random.Random, r_max: int = 6) -> BranchDatum | None:
    """A random generating vector of length 2..r_max (None if the draw fails)."""
    r = rng.randint(2, r_max)
    nontrivial = G.elements[1:]
    vec = [rng.choice(nontrivial) for _ in range(r - 1)]
    prod = G.identity
    for g in vec:
        prod = prod * g
    last = prod.inverse()
    if last.is_identity():
        return None
    vec.append(last)
    if not is_generating(G, vec):
        return None
    return BranchDatum(G, tuple(vec))


def cover_sum_rule(datum: BranchDatum) -> bool:
    G = datum.group
    lhs = sum(datum.fixed_points(h) for h in G.elements[1:])
    rhs = sum(G.order - G.order // m for m in datum.orders)
    return lhs == rhs


def curve_sum_rule(curve: Hyperelliptic) -> bool:
    G0 = curve.G0
    lhs = sum(curve.fixed_table.values())
    rhs = sum(G0.order - G0.order // m for m in quotient_signature_F(curve))
    return lhs == rhs


def catalog_setups(max_n: int = 12):
    for sg in full_catalog(max_n):
        for d in (4, 6):
            for delta in delta_candidates(sg, 2 * d):
                yield Hyperelliptic(sg, d, delta)


def check_catalog() -> bool:
    return all(riemann_hurwitz_defect(sg) == 0 for sg in full_catalog())


def check_characters() -> bool:
    for curve in catalog_setups():
        chi = curve.chi
        els = curve.sphere.group.elements
        for a in els:
            for b in els:
                if (chi[a] + chi[b] - chi[a * b]) % 1:
                    return False
    return True


def check_curve_rules() -> bool:
    for curve in catalog_setups():
        if not curve_sum_rule(curve):
            return False
        if any(curve.fixed_points(g) != curve.fixed_points_model(g) for g in curve.G0.elements[1:]):
            return False
    return True


def check_toy_covers(seed: int, count: int = 200) -> bool:
    rng = random.Random(seed)
    groups = toy_groups()
    done = 0
    while done < count:
        datum = random_datum(rng.choice(groups), rng)
        if datum is None:
            continue
        if not cover_sum_rule(datum):
            return False
        # genus from the sum rule agrees with Hurwitz
        G = datum.group
        fix_total = sum(datum.fixed_points(h) for h in G.elements[1:])
        # 2g - 2 = |G|(-2) + sum over h != 1 of Fix(h)
        g = Fraction(-2 * G.order + fix_total, 2) + 1
        try:
            if g != hurwitz_genus(G.order, datum.orders):
                return False
        except CoverError:
            return False
        done += 1
    return True


def check_plane_models(seed: int) -> bool:
    I = canonical_resolution_invariants(duval_spec("I"))
    II = canonical_resolution_invariants(duval_spec("II"))
    return (
        (I.chi, I.Ksq, II.chi, II.Ksq) == (1, -4, 1, -2)
        and certify_pg("I", seed).pg_zero
        and certify_pg("II", seed).pg_zero
        and not certify_pg("I", seed, on_conic=True).pg_zero
    )


def run_all(seed: int = 0) -> list[tuple[str, bool]]:
    out = []
    for name, fn in (
        ("rotation group catalog satisfies Riemann-Hurwitz", check_catalog),
        ("chi is a character on every catalog setup", check_characters),
        ("fixed points on F: sum rule and coset model", check_curve_rules),
        ("fixed points on C: sum rule on 200 random covers", lambda: check_toy_covers(seed)),
        ("plane models: invariants and p_g certification", lambda: check_plane_models(seed)),
    ):
        try:
            out.append((name, bool(fn())))
        except (SetupError, CoverError, ValueError):
            out.append((name, False))
    return out
