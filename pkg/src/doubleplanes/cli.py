"""Command line front end.

Exit codes: 0 success, 1 a computed result disagrees with expectations,
2 bad input.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections import Counter
from pathlib import Path

from . import __version__
from .candidate import CandidateError, candidate_from_record, datum_for, parse_candidate, realize
from .classify import (
    Bounds,
    ClassificationReport,
    bicanonical_flag,
    emergent_properties,
    enumerate_candidates,
    verify_uniqueness,
)
from .groups import is_generating
from .hyperell import free_involutions, quotient_signature_F, set_A
from .moduli import EXPECTED_DIMS, ModuliError, ModuliSummary, moduli_summary
from .planemodel import (
    PlaneModelError,
    canonical_resolution_invariants,
    certify_pg,
    duval_spec,
    parse_spec,
)
from .surface import K_EXPECTED, SurfaceRecord, TYPE_TABLE, build_record, check_free_diagonal

EXIT_OK, EXIT_MISMATCH, EXIT_INPUT = 0, 1, 2
SCHEMA_VERSION = 1

EXPECTED_RECORDS = {(gf, gc, name): tag for tag, gf, gc, name in TYPE_TABLE}


# --- serialization ------------------------------------------------------------


def record_to_dict(rec: SurfaceRecord) -> dict:
    setup, datum = rec.setup, rec.datum
    inv = rec.invariants
    return {
        "g_F": rec.g_F,
        "g_C": rec.g_C,
        "group": rec.extras["group"],
        "order": rec.G.order,
        "chi": inv.chi,
        "q": inv.q,
        "pg": inv.pg,
        "Ksq": inv.Ksq,
        "k": rec.k,
        "type": rec.type_tag,
        "fibres": [[f.multiplicity, f.behaviour, f.isolated] for f in rec.fibres_p1],
        "bicanonical": bicanonical_flag(rec.type_tag),
        "candidate": rec.extras.get("candidate", ""),
        "candidate_text": candidate_from_record(rec).to_text(),
        "generating_vector": [setup.curve.describe(g) for g in datum.monodromies],
        "signature_F": quotient_signature_F(setup),
        "signature_C": datum.orders,
    }


def moduli_to_dict(summary: ModuliSummary) -> dict:
    return {
        "types": {
            t: {
                "dimension": e.dimension,
                "r_F": e.r_F,
                "r_C": e.r_C,
                "bicanonical": e.bicanonical,
                "closed": e.closed,
                "open": e.open,
                "normal": e.normal,
                "irreducible": e.irreducible,
            }
            for t, e in summary.entries.items()
        },
        "nonbirational_components": summary.nonbirational_components,
        "notes": summary.notes,
    }


def plane_model_dict(kind: str, seed: int) -> dict:
    spec = duval_spec(kind)
    inv = canonical_resolution_invariants(spec)
    generic = certify_pg(kind, seed)
    conic = certify_pg(kind, seed, on_conic=True)
    return {
        "branch_degree": spec.degree,
        "chi": inv.chi,
        "Ksq": inv.Ksq,
        "adjoint_degree": inv.adjoint_degree,
        "linear_system": {"degree": generic.degree, "conditions": generic.conditions},
        "dimension_generic": generic.dimension,
        "dimension_on_conic": conic.dimension,
        "pg_zero_certified": generic.pg_zero,
    }


def _moduli_or_error(report: ClassificationReport) -> dict:
    try:
        return moduli_to_dict(moduli_summary(report))
    except ModuliError as exc:
        return {"error": str(exc)}


def report_to_dict(report: ClassificationReport, seed: int) -> dict:
    return {
        "records": [record_to_dict(r) for r in report.records],
        "exclusions": [{"candidate": e.candidate, "reason": e.reason} for e in report.exclusions],
        "moduli": _moduli_or_error(report),
        "plane_models": {k: plane_model_dict(k, seed) for k in ("I", "II")},
        "search_bounds": {"max_n": report.bounds.max_n, "r_cap": report.bounds.r_cap},
        "emergent": emergent_properties(report),
        "uniqueness": verify_uniqueness(report),
        "versions": {"doubleplanes": __version__, "schema": SCHEMA_VERSION},
    }


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def report_matches(report: ClassificationReport) -> list[str]:
    """Differences from the expected five record classes (empty if none)."""
    problems = []
    found = {(r.g_F, r.g_C, r.extras["group"]): r for r in report.records}
    for key, tag in EXPECTED_RECORDS.items():
        if key not in found:
            problems.append(f"missing {tag} {key}")
    for key, rec in found.items():
        if key not in EXPECTED_RECORDS:
            problems.append(f"unexpected record {key}")
        inv = rec.invariants
        if (inv.chi, inv.q, inv.pg, inv.Ksq) != (1, 0, 0, 8) or rec.k != K_EXPECTED[rec.g_F]:
            problems.append(f"bad invariants for {key}")
    problems += [f"emergent property fails: {k}" for k, v in emergent_properties(report).items() if not v]
    if not verify_uniqueness(report):
        problems.append("uniqueness fails")
    return problems


# --- table output -------------------------------------------------------------


def _fmt_fibres(fibres) -> str:
    parts = []
    for m, beh, n in fibres:
        parts.append(f"{m}:{beh}")
    return ", ".join(parts)


def report_table(data: dict) -> str:
    lines = ["type  g(F) g(C) |G|  group   chi q pg K2 k   fibres"]
    for r in data["records"]:
        lines.append(
            f"{r['type']:<5} {r['g_F']:>4} {r['g_C']:>4} {r['order']:>3}  {r['group']:<7} "
            f"{r['chi']:>3} {r['q']} {r['pg']:>2} {r['Ksq']:>2} {r['k']:>2}  {_fmt_fibres(r['fibres'])}"
        )
    lines.append("")
    m = data["moduli"]
    lines.append(moduli_table(m) if "types" in m else f"moduli: {m['error']}")
    lines.append("")
    reasons = Counter(e["reason"] for e in data["exclusions"])
    lines.append(f"exclusions: {len(data['exclusions'])}")
    for reason, n in sorted(reasons.items()):
        lines.append(f"  {n:>4}  {reason}")
    for e in data["exclusions"]:
        lines.append(f"  - {e['candidate']}: {e['reason']}")
    return "\n".join(lines) + "\n"


def moduli_table(m: dict) -> str:
    lines = ["type  dim r_F r_C  bicanonical              irreducible"]
    for t, e in m["types"].items():
        lines.append(f"{t:<5} {e['dimension']:>3} {e['r_F']:>3} {e['r_C']:>3}  {e['bicanonical']:<24} {e['irreducible']}")
    lines.append(f"non-birational bicanonical locus: {m['nonbirational_components']} components")
    return "\n".join(lines)


def plane_table(kind: str, d: dict) -> str:
    cert = "certified" if d["pg_zero_certified"] else "NOT certified"
    return (
        f"type {kind}: branch degree {d['branch_degree']}, chi={d['chi']}, K^2={d['Ksq']}\n"
        f"  p_g=0 {cert}: degree-{d['linear_system']['degree']} system with "
        f"{d['linear_system']['conditions']} conditions has dimension {d['dimension_generic']} "
        f"(R_i on a conic: {d['dimension_on_conic']})\n"
    )


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


# --- commands -----------------------------------------------------------------


def cmd_classify(args) -> int:
    report = enumerate_candidates(Bounds(args.bounds_n, args.r_cap), jobs=args.jobs)
    data = report_to_dict(report, args.seed)
    _emit(dumps(data) if args.format == "json" else report_table(data), args.out)
    if args.emit_candidates:
        outdir = Path(args.emit_candidates)
        outdir.mkdir(parents=True, exist_ok=True)
        for rec in report.records:
            (outdir / f"{rec.type_tag}.txt").write_text(candidate_from_record(rec).to_text())
    problems = report_matches(report)
    for p in problems:
        print(f"mismatch: {p}", file=sys.stderr)
    return EXIT_MISMATCH if problems else EXIT_OK


def verify_text(text: str) -> tuple[int, str, SurfaceRecord | None]:
    """``(exit code, message, record)`` for one candidate file."""
    try:
        cand = parse_candidate(text)
        setup, classes = realize(cand)
    except CandidateError as exc:
        return EXIT_INPUT, f"input error: {exc}", None
    datum = datum_for(setup, classes)
    if datum is None:
        return EXIT_MISMATCH, "failed: no generating vector realizes the monodromy classes", None
    if not check_free_diagonal(setup, datum):
        return EXIT_MISMATCH, "failed: free diagonal action (A and B intersect)", None
    if not _generates(setup.G, set_A(setup)):
        return EXIT_MISMATCH, "failed: A does not generate G", None
    if not _generates(setup.G, free_involutions(setup)):
        return EXIT_MISMATCH, "failed: B_allowed does not generate G", None
    rec = build_record(setup, datum)
    rec.extras["candidate"] = f"{setup.sphere.name} d={setup.d} delta=[{','.join(setup.delta)}] G={setup.selector_text}"
    inv = rec.invariants
    if (inv.chi, inv.q, inv.pg, inv.Ksq) != (1, 0, 0, 8):
        return EXIT_MISMATCH, f"failed: invariants chi={inv.chi} q={inv.q} pg={inv.pg} K2={inv.Ksq}", rec
    if rec.k != K_EXPECTED.get(rec.g_F):
        return EXIT_MISMATCH, f"failed: k={rec.k}", rec
    if rec.type_tag == "unclassified":
        return EXIT_MISMATCH, "failed: record matches no known type", rec
    return EXIT_OK, f"ok: type {rec.type_tag}", rec


def _generates(G, elems) -> bool:
    return bool(elems) and is_generating(G, elems)


def cmd_verify(args) -> int:
    try:
        text = Path(args.candidate).read_text()
    except OSError as exc:
        print(f"input error: candidate: {exc}", file=sys.stderr)
        return EXIT_INPUT
    code, msg, rec = verify_text(text)
    if rec is not None and args.format == "json":
        _emit(dumps({"message": msg, "record": record_to_dict(rec)}), args.out)
    else:
        _emit(msg + "\n", args.out)
    if code == EXIT_INPUT:
        print(msg, file=sys.stderr)
    return code


def cmd_plane_model(args) -> int:
    target = args.target
    if target.upper() in ("I", "II"):
        data = plane_model_dict(target.upper(), args.seed)
        ok = data["pg_zero_certified"] and data["Ksq"] == 8 - K_EXPECTED[3 if target.upper() == "I" else 5]
        _emit(dumps(data) if args.format == "json" else plane_table(target.upper(), data), args.out)
        return EXIT_OK if ok and data["chi"] == 1 else EXIT_MISMATCH
    try:
        spec = parse_spec(Path(target).read_text())
        inv = canonical_resolution_invariants(spec)
    except (OSError, PlaneModelError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    data = {
        "branch_degree": spec.degree,
        "chi": inv.chi,
        "Ksq": inv.Ksq,
        "adjoint_degree": inv.adjoint_degree,
        "adjoint_multiplicities": inv.adjoint_multiplicities,
    }
    if args.format == "json":
        _emit(dumps(data), args.out)
    else:
        _emit(f"branch degree {spec.degree}: chi={inv.chi}, K^2={inv.Ksq}, adjoint degree {inv.adjoint_degree}\n", args.out)
    return EXIT_OK


def cmd_moduli(args) -> int:
    report = enumerate_candidates(Bounds(args.bounds_n, args.r_cap), jobs=args.jobs)
    try:
        summary = moduli_summary(report)
    except ModuliError as exc:
        print(f"mismatch: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    data = moduli_to_dict(summary)
    _emit(dumps(data) if args.format == "json" else moduli_table(data) + "\n", args.out)
    dims_ok = all(summary.entries[t].dimension == d for t, d in EXPECTED_DIMS.items())
    return EXIT_OK if dims_ok and summary.nonbirational_components == 4 else EXIT_MISMATCH


def cmd_selftest(args) -> int:
    from .selftest import run_all

    failures = run_all(seed=args.seed)
    for name, ok in failures:
        print(f"{'PASS' if ok else 'FAIL'}  {name}")
    return EXIT_OK if all(ok for _, ok in failures) else EXIT_MISMATCH


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="doubleplanes", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=__version__)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--bounds-n", type=int, default=12, help="largest n for cyclic and dihedral groups")
    common.add_argument("--r-cap", type=int, default=8, help="longest generating vector searched")
    common.add_argument("--seed", type=int, default=0, help="seed for generic plane coordinates")
    common.add_argument("--format", choices=("table", "json"), default="table")
    common.add_argument("--out", help="write output here instead of stdout")
    common.add_argument("--jobs", type=int, default=1, help="worker processes (0 = all cores)")
    sub = p.add_subparsers(dest="command", required=True)
    c = sub.add_parser("classify", parents=[common], help="run the full search")
    c.add_argument("--emit-candidates", metavar="DIR", help="write a candidate file per record")
    c.set_defaults(func=cmd_classify)
    v = sub.add_parser("verify", parents=[common], help="check one candidate file")
    v.add_argument("candidate")
    v.set_defaults(func=cmd_verify)
    pm = sub.add_parser("plane-model", parents=[common], help="plane model invariants")
    pm.add_argument("target", help="I, II or a branch curve file")
    pm.set_defaults(func=cmd_plane_model)
    m = sub.add_parser("moduli", parents=[common], help="dimensions of the families")
    m.set_defaults(func=cmd_moduli)
    s = sub.add_parser("selftest", parents=[common], help="run the built-in property checks")
    s.set_defaults(func=cmd_selftest)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if not 0 <= args.seed < 2**64:
        print("input error: seed must be a 64-bit unsigned integer", file=sys.stderr)
        return EXIT_INPUT
    try:
        Bounds(args.bounds_n, args.r_cap)
    except ValueError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    return args.func(args)


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
