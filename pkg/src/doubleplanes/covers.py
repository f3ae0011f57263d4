"""G-covers of the projective line, encoded by generating vectors."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

from .groups import Group, Perm, is_generating

R_CAP = 8


class CoverError(ValueError):
    pass


def hurwitz_genus(order: int, orders: Sequence[int]) -> int:
    """Genus of a connected ``G``-cover of P^1 branched with the given orders."""
    if isinstance(order, Group):
        order = order.order
    if any(m < 2 for m in orders):
        raise CoverError(f"branch orders must be >= 2: {list(orders)}")
    two_g_minus_2 = order * (-2 + sum((1 - Fraction(1, m) for m in orders), Fraction(0)))
    g = two_g_minus_2 / 2 + 1
    if g.denominator != 1 or g < 0:
        raise CoverError(f"no cover: genus would be {g}")
    return int(g)


def _product(G: Group, elems: Iterable[Perm]) -> Perm:
    out = G.identity
    for g in elems:
        out = out * g
    return out


@dataclass(frozen=True, eq=False)
class BranchDatum:
    group: Group
    monodromies: tuple[Perm, ...]

    base_genus = 0

    def __post_init__(self):
        if any(g.is_identity() for g in self.monodromies):
            raise CoverError("monodromies must be nontrivial")
        if any(g not in self.group for g in self.monodromies):
            raise CoverError("monodromy outside the group")
        if not _product(self.group, self.monodromies).is_identity():
            raise CoverError("monodromies do not multiply to the identity")
        if self.monodromies and not is_generating(self.group, self.monodromies):
            raise CoverError("monodromies do not generate the group")

    @property
    def r(self) -> int:
        return len(self.monodromies)

    @property
    def orders(self) -> list[int]:
        return [g.order() for g in self.monodromies]

    @cached_property
    def genus(self) -> int:
        return hurwitz_genus(self.group.order, self.orders)

    def class_multiset(self) -> Counter:
        cls = self.group.class_of
        return Counter(cls[g] for g in self.monodromies)

    @cached_property
    def _fix_table(self) -> dict:
        G = self.group
        table = {g: 0 for g in G.elements[1:]}
        for gi in self.monodromies:
            m = gi.order()
            cyc = [gi**j for j in range(1, m)]
            # x^-1 h x in <g_i>  <=>  h in x <g_i> x^-1
            hits: Counter = Counter()
            for x in G.elements:
                xi = x.inverse()
                for c in cyc:
                    hits[x * c * xi] += 1
            for h, n in hits.items():
                if n % m:
                    raise AssertionError("non-integral fixed point count")
                table[h] += n // m
        return table

    def fixed_points(self, h: Perm) -> int:
        if h.is_identity():
            raise CoverError("the identity fixes every point")
        return self._fix_table[h]


def fixed_points_on_C(datum: BranchDatum, h: Perm) -> int:
    return datum.fixed_points(h)


def hurwitz_move(vector: Sequence[Perm], i: int) -> tuple[Perm, ...]:
    """``(.., g_i, g_i+1, ..) -> (.., g_i+1, g_i+1^-1 g_i g_i+1, ..)``."""
    v = list(vector)
    a, b = v[i], v[i + 1]
    v[i], v[i + 1] = b, b.inverse() * a * b
    return tuple(v)


def find_generating_vector(
    G: Group,
    allowed: Iterable[Perm],
    r: int,
    class_multiset: Counter | None = None,
) -> tuple[Perm, ...] | None:
    """First generating vector in ``allowed`` of length ``r`` (or None).

    The first entry runs over class representatives only (conjugating a
    vector gives an equivalent cover); later entries in canonical order;
    the last entry is forced by the product. With ``class_multiset`` the
    classes used must match exactly (as an unordered multiset).
    """
    if r > R_CAP:
        raise CoverError(f"r={r} exceeds the cap {R_CAP}")
    allowed_list = sorted(set(allowed))
    allowed_set = set(allowed_list)
    if r == 0:
        return () if G.order == 1 else None
    cls = G.class_of
    firsts = sorted({min(G.conjugacy_classes[cls[g]]) for g in allowed_list})
    firsts = [g for g in firsts if g in allowed_set]
    target = Counter(class_multiset) if class_multiset is not None else None

    def budget_ok(used: Counter) -> bool:
        return target is None or all(used[c] <= target[c] for c in used)

    def search(prefix: list[Perm], prod: Perm, used: Counter):
        if len(prefix) == r - 1:
            last = prod.inverse()
            if last not in allowed_set:
                return None
            used2 = used + Counter([cls[last]])
            if target is not None and used2 != target:
                return None
            vec = tuple(prefix + [last])
            return vec if is_generating(G, vec) else None
        for g in allowed_list:
            used2 = used + Counter([cls[g]])
            if not budget_ok(used2):
                continue
            prefix.append(g)
            found = search(prefix, prod * g, used2)
            prefix.pop()
            if found:
                return found
        return None

    if r == 1:
        return None
    for g in firsts:
        used = Counter([cls[g]])
        if not budget_ok(used):
            continue
        found = search([g], g, used)
        if found:
            return found
    return None
