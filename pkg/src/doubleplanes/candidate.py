"""Text format for a single candidate double plane.

Example::

    sphere = Octahedral
    d = 4
    delta = 8
    group = section 2
    monodromy = (0 1)|1/2 * 6

``delta`` lists orbit ids (``free`` for a generic orbit, repeatable).
``group`` is ``full`` (all of G0) or ``section k`` (the k-th complement
of tau). Each monodromy entry is ``CYCLES|NU`` with an optional
``* COUNT``; CYCLES is a permutation of the rotation group in cycle
notation and NU the exponent of the scalar acting on y, in turns. Entries
name conjugacy classes: the file fixes the class multiset, and a
generating vector realizing it is searched for.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from .covers import BranchDatum, find_generating_vector
from .groups import Perm
from .hyperell import Hyperelliptic, HyperellipticSetup, SetupError
from .sphere import catalog, parse_kind


class CandidateError(ValueError):
    """Malformed candidate file; ``field`` names the offending key."""

    def __init__(self, field: str, message: str):
        super().__init__(f"{field}: {message}")
        self.field = field


@dataclass(frozen=True)
class Candidate:
    sphere: str
    d: int
    delta: tuple[str, ...]
    selector: int
    monodromy: tuple[tuple[str, Fraction, int], ...]

    def to_text(self) -> str:
        mono = ", ".join(f"{c}|{nu}" + (f" * {n}" if n > 1 else "") for c, nu, n in self.monodromy)
        group = "full" if self.selector == 0 else f"section {self.selector}"
        return (
            f"sphere = {self.sphere}\nd = {self.d}\ndelta = {' '.join(self.delta)}\n"
            f"group = {group}\nmonodromy = {mono}\n"
        )


_REQUIRED = ("sphere", "d", "delta", "group", "monodromy")
_ENTRY = re.compile(r"^\s*(\([()0-9 ]*\))\s*\|\s*([-0-9/]+)\s*(?:\*\s*(\d+))?\s*$")


def parse_candidate(text: str) -> Candidate:
    fields: dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise CandidateError(f"line {lineno}", "expected 'key = value'")
        key, val = (s.strip() for s in line.split("=", 1))
        if key not in _REQUIRED:
            raise CandidateError(key, "unknown field")
        fields[key] = val
    for key in _REQUIRED:
        if key not in fields:
            raise CandidateError(key, "missing")
    try:
        d = int(fields["d"])
    except ValueError:
        raise CandidateError("d", "must be an integer") from None
    delta = tuple(fields["delta"].replace(",", " ").split())
    g = fields["group"].split()
    if g == ["full"]:
        selector = 0
    elif len(g) == 2 and g[0] == "section" and g[1].isdigit() and int(g[1]) > 0:
        selector = int(g[1])
    else:
        raise CandidateError("group", "expected 'full' or 'section K'")
    mono = []
    for part in fields["monodromy"].split(","):
        m = _ENTRY.match(part)
        if not m:
            raise CandidateError("monodromy", f"cannot parse entry {part.strip()!r}")
        try:
            nu = Fraction(m.group(2))
        except (ValueError, ZeroDivisionError):
            raise CandidateError("monodromy", f"bad exponent {m.group(2)!r}") from None
        mono.append((m.group(1), nu, int(m.group(3) or 1)))
    return Candidate(fields["sphere"], d, delta, selector, tuple(mono))


def parse_cycles(text: str, n: int) -> Perm:
    cycles = []
    for body in re.findall(r"\(([^()]*)\)", text):
        items = body.replace(",", " ").split()
        if items:
            cycles.append(tuple(int(x) for x in items))
    return Perm.from_cycles(n, *cycles)


def realize(cand: Candidate) -> tuple[HyperellipticSetup, Counter]:
    """The setup and the monodromy class multiset named by ``cand``."""
    try:
        kind, n = parse_kind(cand.sphere)
        sphere = catalog(kind, n)
    except (ValueError, KeyError) as exc:
        raise CandidateError("sphere", str(exc)) from None
    try:
        curve = Hyperelliptic(sphere, cand.d, cand.delta)
    except (SetupError, KeyError) as exc:
        raise CandidateError("delta", str(exc)) from None
    subs = curve.subgroups
    if cand.selector >= len(subs):
        raise CandidateError("group", f"only {len(subs) - 1} sections exist")
    setup = HyperellipticSetup(curve, subs[cand.selector], cand.selector)
    classes: Counter = Counter()
    for cyc, nu, count in cand.monodromy:
        try:
            h = parse_cycles(cyc, sphere.group.degree)
            g = curve.element(h, nu)
        except (ValueError, SetupError) as exc:
            raise CandidateError("monodromy", str(exc)) from None
        if g not in setup.G:
            raise CandidateError("monodromy", f"{cyc}|{nu} is not in G")
        classes[setup.G.class_of[g]] += count
    return setup, classes


def datum_for(setup: HyperellipticSetup, classes: Counter) -> BranchDatum | None:
    G = setup.G
    allowed = [g for ci in classes for g in G.conjugacy_classes[ci]]
    vec = find_generating_vector(G, allowed, sum(classes.values()), classes)
    return None if vec is None else BranchDatum(G, vec)


def candidate_from_record(rec) -> Candidate:
    setup = rec.setup
    curve = setup.curve
    counts: Counter = Counter()
    G = setup.G
    for g in rec.datum.monodromies:
        counts[G.class_of[g]] += 1
    mono = []
    for ci in sorted(counts):
        rep = min(G.conjugacy_classes[ci])
        h, nu = curve.split(rep)
        mono.append((h.cycle_string(), nu, counts[ci]))
    return Candidate(setup.sphere.name, setup.d, setup.delta, setup.selector, tuple(mono))
