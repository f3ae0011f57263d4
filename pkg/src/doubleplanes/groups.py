"""Small permutation-group kernel.

Groups are stored by full element enumeration; every group in this package
has order at most a few hundred, so brute force is the right tool.
Composition convention: ``(p * q)(i) == p[q[i]]`` (apply ``q`` first).
"""

from __future__ import annotations

import itertools
from collections import Counter, deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Iterable, Sequence

DEFAULT_ORDER_BOUND = 1000


class GroupError(ValueError):
    pass


class Perm(tuple):
    """A permutation of ``{0..n-1}`` stored as its image sequence."""

    def __new__(cls, images: Iterable[int]):
        images = tuple(images)
        if sorted(images) != list(range(len(images))):
            raise GroupError(f"not a permutation: {images}")
        return super().__new__(cls, images)

    @classmethod
    def _raw(cls, images: tuple) -> "Perm":
        return super().__new__(cls, images)

    @classmethod
    def identity(cls, n: int) -> "Perm":
        return cls._raw(tuple(range(n)))

    @classmethod
    def from_cycles(cls, n: int, *cycles: Sequence[int]) -> "Perm":
        images = list(range(n))
        for cyc in cycles:
            for a, b in zip(cyc, tuple(cyc[1:]) + (cyc[0],)):
                images[a] = b
        return cls(images)

    @property
    def degree(self) -> int:
        return len(self)

    def __mul__(self, other: "Perm") -> "Perm":  # type: ignore[override]
        return Perm._raw(tuple(self[i] for i in other))

    def __rmul__(self, other):  # pragma: no cover - tuple repetition guard
        return NotImplemented

    def __pow__(self, k: int) -> "Perm":
        if k < 0:
            return self.inverse() ** (-k)
        result = Perm.identity(len(self))
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def inverse(self) -> "Perm":
        inv = [0] * len(self)
        for i, j in enumerate(self):
            inv[j] = i
        return Perm._raw(tuple(inv))

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self))

    def conjugate(self, x: "Perm") -> "Perm":
        """Return ``x^-1 * self * x``."""
        return x.inverse() * self * x

    def cycles(self) -> list[tuple[int, ...]]:
        seen = set()
        out = []
        for start in range(len(self)):
            if start in seen or self[start] == start:
                continue
            cyc = [start]
            seen.add(start)
            j = self[start]
            while j != start:
                cyc.append(j)
                seen.add(j)
                j = self[j]
            out.append(tuple(cyc))
        return out

    def order(self) -> int:
        from math import lcm

        return lcm(1, *(len(c) for c in self.cycles()))

    def fixed_points(self) -> list[int]:
        return [i for i, j in enumerate(self) if i == j]

    def sign(self) -> int:
        return -1 if sum(len(c) - 1 for c in self.cycles()) % 2 else 1

    def cycle_string(self) -> str:
        cyc = self.cycles()
        if not cyc:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cyc)

    def __repr__(self) -> str:
        return f"Perm{self.cycle_string()}"


@dataclass(frozen=True, eq=False)
class Group:
    """A finite permutation group, enumerated.

    ``elements`` is sorted lexicographically by image sequence, so the
    identity always comes first.
    """

    degree: int
    elements: tuple[Perm, ...]
    generators: tuple[Perm, ...]
    name: str = ""
    _index: dict = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_index", {g: i for i, g in enumerate(self.elements)})

    def __len__(self) -> int:
        return len(self.elements)

    @property
    def order(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, g) -> bool:
        return g in self._index

    def index(self, g: Perm) -> int:
        return self._index[g]

    @property
    def identity(self) -> Perm:
        return self.elements[0]

    def __eq__(self, other) -> bool:
        return isinstance(other, Group) and self.elements == other.elements

    def __hash__(self) -> int:
        return hash(self.elements)

    def __repr__(self) -> str:
        label = self.name or "Group"
        return f"<{label} order={self.order} degree={self.degree}>"

    @cached_property
    def is_abelian(self) -> bool:
        gens = self.generators
        return all(a * b == b * a for a in gens for b in gens)

    @cached_property
    def conjugacy_classes(self) -> tuple[tuple[Perm, ...], ...]:
        return tuple(conjugacy_classes(self))

    @cached_property
    def class_of(self) -> dict:
        return {g: i for i, cls in enumerate(self.conjugacy_classes) for g in cls}

    def centralizer_order(self, g: Perm) -> int:
        return self.order // len(self.conjugacy_classes[self.class_of[g]])

    @cached_property
    def order_histogram(self) -> tuple[tuple[int, int], ...]:
        return tuple(sorted(Counter(g.order() for g in self.elements).items()))

    def involutions(self) -> list[Perm]:
        return [g for g in self.elements if g.order() == 2]


def group_from_generators(
    degree: int,
    gens: Iterable[Sequence[int]],
    name: str = "",
    order_bound: int = DEFAULT_ORDER_BOUND,
) -> Group:
    """Close ``gens`` under composition."""
    gens = tuple(Perm(g) for g in gens)
    for g in gens:
        if len(g) != degree:
            raise GroupError(f"generator {g!r} has degree {len(g)}, expected {degree}")
    ident = Perm.identity(degree)
    seen = {ident}
    queue = deque([ident])
    while queue:
        x = queue.popleft()
        for s in gens:
            y = s * x
            if y not in seen:
                seen.add(y)
                if len(seen) > order_bound:
                    raise GroupError(f"closure exceeds order bound {order_bound}")
                queue.append(y)
    return Group(degree, tuple(sorted(seen)), gens, name)


def group_from_elements(elements: Iterable[Perm], generators=(), name: str = "") -> Group:
    """Wrap an already-closed element set (closure is checked)."""
    elems = set(elements)
    if not elems:
        raise GroupError("empty element set")
    degree = len(next(iter(elems)))
    for a in elems:
        for b in elems:
            if a * b not in elems:
                raise GroupError("element set is not closed under composition")
    return Group(degree, tuple(sorted(elems)), tuple(generators) or tuple(sorted(elems)), name)


def conjugacy_classes(G: Group) -> list[tuple[Perm, ...]]:
    """Partition of ``G`` into classes, each sorted, ordered by first element."""
    remaining = dict.fromkeys(G.elements)
    inverses = [x.inverse() for x in G.elements]
    classes = []
    for g in G.elements:
        if g not in remaining:
            continue
        cls = {xi * g * x for x, xi in zip(G.elements, inverses)}
        for h in cls:
            remaining.pop(h, None)
        classes.append(tuple(sorted(cls)))
    return classes


def subgroup_generated(G: Group, elems: Iterable[Perm], name: str = "") -> Group:
    elems = tuple(elems)
    for e in elems:
        if e not in G:
            raise GroupError(f"{e!r} is not an element of {G!r}")
    return group_from_generators(G.degree, elems, name=name, order_bound=G.order)


def is_generating(G: Group, elems: Iterable[Perm]) -> bool:
    return subgroup_generated(G, elems).order == G.order


def small_generating_set(G: Group) -> tuple[Perm, ...]:
    """Greedy generating set: repeatedly add the first element outside the span."""
    gens: list[Perm] = []
    span = {G.identity}
    for g in G.elements:
        if g in span:
            continue
        gens.append(g)
        span = set(subgroup_generated(G, gens).elements)
        if len(span) == G.order:
            break
    return tuple(gens)


def extend_to_homomorphism(
    gens: Sequence[Perm],
    images: Sequence,
    mul: Callable,
    identity,
    degree: int,
) -> dict | None:
    """Extend ``gens[i] -> images[i]`` to a homomorphism on ``<gens>``.

    Returns the element map, or ``None`` when the assignment is inconsistent.
    ``mul`` is the multiplication of the target.
    """
    ident = Perm.identity(degree)
    hom = {ident: identity}
    queue = deque([ident])
    while queue:
        x = queue.popleft()
        vx = hom[x]
        for s, vs in zip(gens, images):
            y = x * s
            vy = mul(vx, vs)
            old = hom.get(y)
            if old is None:
                hom[y] = vy
                queue.append(y)
            elif old != vy:
                return None
    return hom


def index_two_subgroups(G: Group) -> list[Group]:
    """All subgroups of index 2, via homomorphisms onto Z/2."""
    gens = small_generating_set(G)
    out = []
    seen = set()
    for values in itertools.product((0, 1), repeat=len(gens)):
        if not any(values):
            continue
        hom = extend_to_homomorphism(gens, values, lambda a, b: (a + b) % 2, 0, G.degree)
        if hom is None:
            continue
        kernel = tuple(sorted(g for g, v in hom.items() if v == 0))
        if kernel not in seen:
            seen.add(kernel)
            out.append(Group(G.degree, kernel, kernel))
    return out


def surjecting_subgroups(G0: Group, projection: Callable[[Perm], Perm]) -> list[Group]:
    """Subgroups of ``G0`` mapping onto the image of ``projection``.

    The kernel of ``projection`` must have order 2. Returns ``G0`` followed by
    every complement of the kernel (index-2 subgroups avoiding it).
    """
    for a in G0.elements:
        for b in G0.generators:
            if projection(a * b) != projection(a) * projection(b):
                raise GroupError("projection is not a homomorphism")
    kernel = [g for g in G0.elements if projection(g).is_identity()]
    if len(kernel) != 2:
        raise GroupError(f"projection kernel has order {len(kernel)}, expected 2")
    tau = kernel[1]
    out = [G0]
    for H in index_two_subgroups(G0):
        if tau not in H:
            out.append(H)
    return out


def centralizer(G: Group, g: Perm) -> list[Perm]:
    return [x for x in G.elements if x * g == g * x]


def coset_action(G: Group, K: Group) -> tuple[list[frozenset], Callable[[Perm], Perm]]:
    """Left cosets ``xK`` and the permutation action of ``G`` on them."""
    cosets: list[frozenset] = []
    where: dict = {}
    for x in G.elements:
        if x in where:
            continue
        c = frozenset(x * k for k in K.elements)
        for y in c:
            where[y] = len(cosets)
        cosets.append(c)
    reps = [min(c) for c in cosets]

    def act(g: Perm) -> Perm:
        return Perm._raw(tuple(where[g * r] for r in reps))

    return cosets, act


def orbits_of(perms: Sequence[Perm], n: int) -> list[list[int]]:
    """Orbits of the group generated by ``perms`` on ``{0..n-1}``."""
    seen = [False] * n
    out = []
    for start in range(n):
        if seen[start]:
            continue
        orb = [start]
        seen[start] = True
        i = 0
        while i < len(orb):
            x = orb[i]
            for p in perms:
                y = p[x]
                if not seen[y]:
                    seen[y] = True
                    orb.append(y)
            i += 1
        out.append(sorted(orb))
    return out


# --- isomorphism ---------------------------------------------------------


def iso_signature(G: Group) -> tuple:
    """Cheap isomorphism invariant: order, element-order histogram, abelianness,
    and the sorted multiset of (class size, element order)."""
    classes = sorted((len(c), c[0].order()) for c in G.conjugacy_classes)
    return (G.order, G.order_histogram, G.is_abelian, tuple(classes))


def find_isomorphism(G: Group, H: Group) -> dict | None:
    """Explicit isomorphism ``G -> H`` by search over images of a small
    generating set, or ``None``."""
    if iso_signature(G) != iso_signature(H):
        return None
    gens = small_generating_set(G)
    by_order: dict[int, list[Perm]] = {}
    for h in H.elements:
        by_order.setdefault(h.order(), []).append(h)
    candidates = [by_order.get(g.order(), []) for g in gens]
    for images in itertools.product(*candidates):
        hom = extend_to_homomorphism(gens, images, lambda a, b: a * b, H.identity, G.degree)
        if hom is None or len(hom) != G.order:
            continue
        if len(set(hom.values())) == H.order:
            return hom
    return None


def are_isomorphic(G: Group, H: Group) -> bool:
    return find_isomorphism(G, H) is not None


# --- named groups ----------------------------------------------------------


def cyclic(n: int) -> Group:
    gen = [(i + 1) % n for i in range(n)] if n > 1 else [0]
    return group_from_generators(max(n, 1), [gen], name=f"Z{n}")


def dihedral(n: int) -> Group:
    """Symmetries of an n-gon on n points; ``D2`` is the Klein four group
    acting on 4 points."""
    if n == 2:
        return group_from_generators(
            4, [[1, 0, 3, 2], [2, 3, 0, 1]], name="D2"
        )
    r = [(i + 1) % n for i in range(n)]
    s = [(-i) % n for i in range(n)]
    return group_from_generators(n, [r, s], name=f"D{n}")


def symmetric(n: int) -> Group:
    gens = [Perm.from_cycles(n, (0, 1))]
    if n > 2:
        gens.append(Perm.from_cycles(n, tuple(range(n))))
    return group_from_generators(n, gens, name=f"S{n}")


def alternating(n: int) -> Group:
    gens = [Perm.from_cycles(n, (0, 1, i)) for i in range(2, n)]
    return group_from_generators(n, gens, name=f"A{n}")


def direct_product(G: Group, H: Group, name: str = "") -> Group:
    n, m = G.degree, H.degree

    def embed(g: Perm, h: Perm) -> Perm:
        return Perm._raw(tuple(g) + tuple(m_ + n for m_ in h))

    gens = [embed(g, H.identity) for g in G.generators] + [
        embed(G.identity, h) for h in H.generators
    ]
    return group_from_generators(n + m, gens, name=name or f"{G.name}x{H.name}")
