"""Exhaustive search for minimal double planes (F x C)/G with p_g = 0, K^2 = 8.

For every rotation group Gbar of P^1, every d in {4, 6} (genus of F is
d - 1), every invariant branch divisor Delta of degree 2d and every
subgroup G of G0 mapping onto Gbar, the conditions below are checked in
order; the first one that fails is logged:

1. the elements of G with fixed points on F generate G;
2. the involutions of G acting freely on F generate G;
3. a generating vector of such involutions of length r exists, where
   r = 6 for genus 3 and 5 for genus 5 (forced by chi = 1);
4. F/G is rational;
5. chi = 1, q = 0, p_g = 0, K^2 = 8 and k matches the genus of F.

Nothing about which groups survive is built in.
"""

from __future__ import annotations

import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .covers import BranchDatum, find_generating_vector
from .groups import Group, is_generating, iso_signature
from .hyperell import Hyperelliptic, HyperellipticSetup, SetupError, free_involutions, set_A
from .sphere import SphericalGroup, catalog, delta_candidates, full_catalog
from .surface import K_EXPECTED, SurfaceRecord, build_record

DEGREES = (4, 6)
R_FOR_GENUS = {3: 6, 5: 5}


@dataclass(frozen=True)
class Bounds:
    max_n: int = 12
    r_cap: int = 8

    def __post_init__(self):
        if not 2 <= self.max_n <= 30:
            raise ValueError(f"max_n must be in [2, 30], got {self.max_n}")
        if not 1 <= self.r_cap <= 8:
            raise ValueError(f"r_cap must be in [1, 8], got {self.r_cap}")


@dataclass(frozen=True)
class Exclusion:
    candidate: str
    reason: str


@dataclass
class ClassificationReport:
    records: list[SurfaceRecord]
    exclusions: list[Exclusion]
    bounds: Bounds
    realizations: dict = field(default_factory=dict)

    def by_type(self) -> dict[str, SurfaceRecord]:
        return {r.type_tag: r for r in self.records}


def describe_candidate(sphere: SphericalGroup, d: int, delta, selector: int) -> str:
    group = "full" if selector == 0 else f"section {selector}"
    return f"{sphere.name} d={d} delta=[{','.join(delta)}] G={group}"


def check_candidate(setup: HyperellipticSetup, r_cap: int = 8):
    """First failed condition (a string) or the generating vector found."""
    G = setup.G
    A = set_A(setup)
    if not A or not is_generating(G, A):
        return "A does not generate G"
    B = free_involutions(setup)
    if not B or not is_generating(G, B):
        return "B_allowed does not generate G"
    r = R_FOR_GENUS[setup.genus_F]
    if r > r_cap:
        return f"r={r} exceeds r cap"
    vec = find_generating_vector(G, B, r)
    if vec is None:
        return f"no generating vector of {r} free involutions"
    _, q = setup.curve.subgroup_signature(G)
    if q != 0:
        return f"F/G has genus {q}"
    return vec


def _accept(setup: HyperellipticSetup, vec) -> SurfaceRecord | str:
    datum = BranchDatum(setup.G, tuple(vec))
    try:
        rec = build_record(setup, datum)
    except ValueError as exc:
        return str(exc)
    inv = rec.invariants
    if (inv.chi, inv.q, inv.pg, inv.Ksq) != (1, 0, 0, 8):
        return f"invariants chi={inv.chi} q={inv.q} pg={inv.pg} K2={inv.Ksq}"
    if rec.k != K_EXPECTED[setup.genus_F]:
        return f"k={rec.k}"
    return rec


def _work_unit(args):
    """All candidates over one (Gbar, d). Returns picklable outcomes:
    ``(delta, selector, description, reason or vector-as-indices)``."""
    kind, n, d, r_cap = args
    sphere = catalog(kind, n)
    out = []
    for delta in delta_candidates(sphere, 2 * d):
        try:
            curve = Hyperelliptic(sphere, d, delta)
            setups = curve.setups()
        except SetupError as exc:
            out.append((delta, 0, describe_candidate(sphere, d, delta, 0), str(exc)))
            continue
        for setup in setups:
            desc = describe_candidate(sphere, d, delta, setup.selector)
            res = check_candidate(setup, r_cap)
            if isinstance(res, str):
                out.append((delta, setup.selector, desc, res))
                continue
            acc = _accept(setup, res)
            if isinstance(acc, str):
                out.append((delta, setup.selector, desc, acc))
            else:
                out.append((delta, setup.selector, desc, tuple(setup.G.index(g) for g in res)))
    return out


def _units(bounds: Bounds):
    units = []
    for sg in full_catalog(bounds.max_n):
        for d in DEGREES:
            units.append((sg.kind, sg.n, d, bounds.r_cap))
    return units


def _dedup_key(rec: SurfaceRecord):
    name = rec.extras["group"]
    if name.startswith("order-"):
        name = repr(iso_signature(rec.G))
    return (rec.g_F, rec.g_C, name)


def enumerate_candidates(bounds: Bounds | None = None, jobs: int = 1) -> ClassificationReport:
    bounds = bounds or Bounds()
    units = _units(bounds)
    if jobs == 0:
        jobs = os.cpu_count() or 1
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_work_unit, units))
    else:
        results = [_work_unit(u) for u in units]

    records: list[SurfaceRecord] = []
    seen: dict = {}
    realizations: dict = {}
    exclusions = []
    for (kind, n, d, _), outcomes in zip(units, results):
        sphere = catalog(kind, n)
        for delta, selector, desc, res in outcomes:
            if isinstance(res, str):
                exclusions.append(Exclusion(desc, res))
                continue
            curve = Hyperelliptic(sphere, d, delta)
            setup = curve.setups()[selector]
            vec = tuple(setup.G.elements[i] for i in res)
            rec = _accept(setup, vec)
            assert isinstance(rec, SurfaceRecord)
            rec.extras["candidate"] = desc
            key = _dedup_key(rec)
            realizations.setdefault(key, []).append(desc)
            if key not in seen:
                seen[key] = rec
                records.append(rec)
    records.sort(key=lambda r: (r.g_F, r.g_C, r.G.order))
    return ClassificationReport(records, exclusions, bounds, realizations)


def verify_uniqueness(report_or_pairs) -> bool:
    """Pairwise distinct (g_F, g_C), and no pair is the swap of another."""
    if isinstance(report_or_pairs, ClassificationReport):
        pairs = [(r.g_F, r.g_C) for r in report_or_pairs.records]
    else:
        pairs = [tuple(p) for p in report_or_pairs]
    if len(set(pairs)) != len(pairs):
        return False
    s = set(pairs)
    return not any((b, a) in s for a, b in pairs if a != b)


BICANONICAL = {
    "Ia": "non-birational-degree-2",
    "Ib": "non-birational-degree-2",
    "Ic": "non-birational-degree-2",
    "Id": "non-birational-degree-2",
    "II": "birational",
}


def bicanonical_flag(tag: str) -> str:
    if tag not in BICANONICAL:
        raise ValueError(f"record of type {tag!r} has no bicanonical classification")
    return BICANONICAL[tag]


def bicanonical_flags(report: ClassificationReport) -> dict[str, str]:
    return {r.type_tag: bicanonical_flag(r.type_tag) for r in report.records}


def _is_cyclic(G: Group) -> bool:
    return any(g.order() == G.order for g in G.elements)


def _is_dihedral(G: Group) -> bool:
    if G.order < 4 or G.order % 2 or G.is_abelian and G.order > 4:
        return False
    n = G.order // 2
    rots = [g for g in G.elements if g.order() == n]
    if n == 2:
        return set(o for o, _ in G.order_histogram) <= {1, 2}
    for r in rots:
        R = {r**j for j in range(n)}
        if all(g.order() == 2 for g in G.elements if g not in R):
            return True
    return False


def emergent_properties(report: ClassificationReport) -> dict[str, bool]:
    """Structural facts about accepted records that the search never imposes."""
    out = {"no cyclic or dihedral G": True, "Gbar in {D_n, S4, A5}": True, "dihedral Gbar has even n": True}
    for rec in report.records:
        G = rec.G
        if _is_cyclic(G) or _is_dihedral(G):
            out["no cyclic or dihedral G"] = False
        sp = rec.setup.sphere
        if sp.kind not in ("dihedral", "octahedral", "icosahedral"):
            out["Gbar in {D_n, S4, A5}"] = False
        if sp.kind == "dihedral" and sp.n % 2:
            out["dihedral Gbar has even n"] = False
    for key, descs in report.realizations.items():
        for desc in descs:
            head = desc.split()[0]
            if head.startswith("Cyclic") or head == "Tetrahedral":
                out["Gbar in {D_n, S4, A5}"] = False
            if head.startswith("Dihedral(") and int(head[9:-1]) % 2:
                out["dihedral Gbar has even n"] = False
    return out


def class_multiset_text(rec: SurfaceRecord) -> Counter:
    return rec.datum.class_multiset()
