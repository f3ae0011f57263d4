"""Plane models: double covers of P^2 branched along a singular curve.

Two pieces:

* the invariants of the canonical resolution of a double plane, from the
  branch degree ``2m`` and the multiplicities of the branch curve at its
  (possibly infinitely near) singular points;
* dimensions of linear systems of plane curves with assigned base points,
  computed by exact rank over the rationals. The geometric genus of the
  Du Val models is zero exactly when a certain system is empty.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial
from typing import Sequence


class PlaneModelError(ValueError):
    pass


class DegenerateSample(PlaneModelError):
    pass


@dataclass(frozen=True)
class SingularPoint:
    name: str
    multiplicity: int
    parent: str | None = None

    def __post_init__(self):
        if self.multiplicity < 2:
            raise PlaneModelError(f"{self.name}: multiplicity must be >= 2")


@dataclass(frozen=True)
class BranchCurveSpec:
    """Branch curve of degree ``2 * half_degree``. Multiplicities are those of
    the total transform, so a point infinitely near an odd point counts
    the exceptional curve too."""

    half_degree: int
    nodes: tuple[SingularPoint, ...]
    label: str = ""

    def __post_init__(self):
        names = [n.name for n in self.nodes]
        if len(set(names)) != len(names):
            raise PlaneModelError("duplicate point names")
        known = set(names)
        for n in self.nodes:
            if n.parent is not None and n.parent not in known:
                raise PlaneModelError(f"{n.name}: unknown parent {n.parent}")

    @property
    def degree(self) -> int:
        return 2 * self.half_degree

    def node(self, name: str) -> SingularPoint:
        for n in self.nodes:
            if n.name == name:
                return n
        raise KeyError(name)

    def children(self, name: str) -> list[SingularPoint]:
        return [n for n in self.nodes if n.parent == name]


@dataclass(frozen=True)
class ResolutionInvariants:
    chi: int
    Ksq: int
    adjoint_degree: int
    adjoint_multiplicities: dict = field(default_factory=dict)


def total_multiplicity(curve_mult: int, parent_mult: int | None) -> int:
    """Multiplicity of the total branch transform at an infinitely near point:
    the proper transform plus the exceptional curve when the parent is odd."""
    return curve_mult + (parent_mult % 2 if parent_mult is not None else 0)


def duval_spec(kind: str) -> BranchCurveSpec:
    """Du Val models: type I has a curve of degree 16 plus six lines through a
    point of multiplicity 8; type II a curve of degree 21 plus five lines
    through a point of multiplicity 9. Each line L_i is tangent at a point
    R_i of type (j, j) with j = 4 (type I) or 6 (type II)."""
    kind = kind.strip().upper()
    if kind == "I":
        m, p_curve, lines, j = 11, 8, 6, 4
    elif kind == "II":
        m, p_curve, lines, j = 13, 9, 5, 6
    else:
        raise PlaneModelError(f"unknown Du Val type {kind!r}")
    nodes = [SingularPoint("P", p_curve + lines)]
    for i in range(1, lines + 1):
        r = j + 1  # the curve plus the line L_i
        # at S_i: the curve, the line (tangent) and the exceptional curve over R_i
        s = total_multiplicity(j + 1, r)
        nodes += [SingularPoint(f"R{i}", r), SingularPoint(f"S{i}", s, f"R{i}")]
    return BranchCurveSpec(m, tuple(nodes), kind)


def check_parity(spec: BranchCurveSpec) -> None:
    for parent in spec.nodes:
        kids = spec.children(parent.name)
        if not kids:
            continue
        odd = parent.multiplicity % 2
        proper = [k.multiplicity - odd for k in kids]
        if any(p < 0 or p > parent.multiplicity for p in proper):
            raise PlaneModelError(f"children of {parent.name} have impossible multiplicities")
        if sum(proper) > parent.multiplicity:
            raise PlaneModelError(f"children of {parent.name} exceed its multiplicity")


def canonical_resolution_invariants(spec: BranchCurveSpec) -> ResolutionInvariants:
    check_parity(spec)
    m = spec.half_degree
    halves = [n.multiplicity // 2 for n in spec.nodes]
    chi2 = 4 + m * (m - 3) - sum(h * (h - 1) for h in halves)
    if chi2 % 2:
        raise PlaneModelError("non-integral holomorphic Euler characteristic")
    Ksq = 2 * (m - 3) ** 2 - 2 * sum((h - 1) ** 2 for h in halves)
    adj = {n.name: n.multiplicity // 2 - 1 for n in spec.nodes}
    return ResolutionInvariants(chi2 // 2, Ksq, m - 3, adj)


def parse_spec(text: str) -> BranchCurveSpec:
    """``m = 11`` plus lines ``point NAME MULT [PARENT]``; ``#`` comments."""
    m = None
    nodes = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" in line:
            key, val = (s.strip() for s in line.split("=", 1))
            if key not in ("m", "half_degree"):
                raise PlaneModelError(f"line {lineno}: unknown field {key!r}")
            try:
                m = int(val)
            except ValueError:
                raise PlaneModelError(f"line {lineno}: field {key!r} must be an integer") from None
            continue
        parts = line.split()
        if parts[0] != "point" or len(parts) not in (3, 4):
            raise PlaneModelError(f"line {lineno}: expected 'point NAME MULT [PARENT]'")
        try:
            mult = int(parts[2])
        except ValueError:
            raise PlaneModelError(f"line {lineno}: field 'multiplicity' must be an integer") from None
        nodes.append(SingularPoint(parts[1], mult, parts[3] if len(parts) == 4 else None))
    if m is None:
        raise PlaneModelError("missing field 'm'")
    return BranchCurveSpec(m, tuple(nodes))


# --- linear systems ----------------------------------------------------------


Point = tuple[Fraction, Fraction]


@dataclass(frozen=True)
class Constraint:
    """Multiplicity ``>= multiplicity`` at ``point``; with ``tangent`` set, the
    line through ``point`` in that direction is also a tangent there."""

    point: Point
    multiplicity: int
    tangent: Point | None = None


def _monomials(degree: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(degree + 1) for j in range(degree + 1 - i)]


def _falling(n: int, k: int) -> int:
    return factorial(n) // factorial(n - k) if k <= n else 0


def _derivative_row(monos, a: int, b: int, p: Point) -> list[Fraction]:
    x, y = p
    return [
        Fraction(_falling(i, a) * _falling(j, b)) * x ** (i - a) * y ** (j - b) if i >= a and j >= b else Fraction(0)
        for i, j in monos
    ]


def condition_rows(degree: int, constraints: Sequence[Constraint]) -> list[list[Fraction]]:
    monos = _monomials(degree)
    rows = []
    for c in constraints:
        mu = c.multiplicity
        for a in range(mu):
            for b in range(mu - a):
                rows.append(_derivative_row(monos, a, b, c.point))
        if c.tangent is not None:
            vx, vy = c.tangent
            row = [Fraction(0)] * len(monos)
            for a in range(mu + 1):
                coeff = comb(mu, a) * Fraction(vx) ** a * Fraction(vy) ** (mu - a)
                if coeff:
                    for idx, v in enumerate(_derivative_row(monos, a, mu - a, c.point)):
                        row[idx] += coeff * v
            rows.append(row)
    return rows


def rank(rows: list[list[Fraction]]) -> int:
    """Exact rank by Gaussian elimination over the rationals."""
    m = [list(r) for r in rows]
    if not m:
        return 0
    ncols = len(m[0])
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, len(m)) if m[i][col] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        pv = m[r][col]
        for i in range(r + 1, len(m)):
            if m[i][col] != 0:
                f = m[i][col] / pv
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        r += 1
        if r == len(m):
            break
    return r


def linsys_dimension(degree: int, constraints: Sequence[Constraint]) -> int:
    """Projective dimension of the system (-1 when empty)."""
    n = len(_monomials(degree))
    return n - rank(condition_rows(degree, constraints)) - 1


# --- Du Val configurations ------------------------------------------------------


def _rand_q(rng: random.Random, size: int = 50) -> Fraction:
    return Fraction(rng.randint(-size, size), rng.randint(1, size))


def _collinear(a: Point, b: Point, c: Point) -> bool:
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]) == 0


def _check_general(P: Point, R: list[Point]) -> None:
    pts = [P] + R
    if len(set(pts)) != len(pts):
        raise DegenerateSample("coincident points")
    for i in range(len(R)):
        for j in range(i + 1, len(R)):
            if _collinear(P, R[i], R[j]):
                raise DegenerateSample("two points R_i on one line through P")
            for k in range(j + 1, len(R)):
                if _collinear(R[i], R[j], R[k]):
                    raise DegenerateSample("three collinear points R_i")


def sample_configuration(count: int, rng: random.Random, on_conic: bool = False) -> tuple[Point, list[Point]]:
    """A point P and ``count`` points R_i. With ``on_conic`` the R_i lie on the
    unit circle."""
    P = (_rand_q(rng), _rand_q(rng))
    if on_conic:
        R = []
        for _ in range(count):
            t = _rand_q(rng)
            R.append(((1 - t * t) / (1 + t * t), 2 * t / (1 + t * t)))
    else:
        R = [(_rand_q(rng), _rand_q(rng)) for _ in range(count)]
    _check_general(P, R)
    return P, R


def duval_constraints(kind: str, P: Point, R: list[Point]) -> tuple[int, list[Constraint]]:
    """The system whose emptiness means p_g = 0.

    Type I: octics with multiplicity 6 at P and a double point at each R_i
    tangent to the line P R_i. Type II: quintics through P with a double
    point at each R_i tangent to P R_i.
    """
    kind = kind.strip().upper()
    if kind == "I":
        degree, mult_p = 8, 6
    elif kind == "II":
        degree, mult_p = 5, 1
    else:
        raise PlaneModelError(f"unknown Du Val type {kind!r}")
    cons = [Constraint(P, mult_p)]
    for r in R:
        cons.append(Constraint(r, 2, (r[0] - P[0], r[1] - P[1])))
    return degree, cons


LINES = {"I": 6, "II": 5}


@dataclass(frozen=True)
class PgCertificate:
    kind: str
    seed: int
    on_conic: bool
    degree: int
    conditions: int
    dimension: int
    attempts: int

    @property
    def pg_zero(self) -> bool:
        return self.dimension < 0


def certify_pg(kind: str, seed: int = 0, on_conic: bool = False, retries: int = 20) -> PgCertificate:
    kind = kind.strip().upper()
    if kind not in LINES:
        raise PlaneModelError(f"unknown Du Val type {kind!r}")
    rng = random.Random(seed)
    for attempt in range(1, retries + 1):
        try:
            P, R = sample_configuration(LINES[kind], rng, on_conic)
        except DegenerateSample:
            continue
        degree, cons = duval_constraints(kind, P, R)
        n_rows = len(condition_rows(degree, cons))
        return PgCertificate(kind, seed, on_conic, degree, n_rows, linsys_dimension(degree, cons), attempts=attempt)
    raise DegenerateSample(f"no general configuration after {retries} samples")
