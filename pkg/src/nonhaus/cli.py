"""Command-line front end.

Subcommands: audit, lift, homotopy, deck, metric, render, thick.  All
output is deterministic: identical inputs give byte-identical JSON, text,
and SVG.  Exit codes: 0 success, 2 invalid input, 3 when an embedded
certificate fails its re-check.  Diagnostics go to stderr.

The environment variable NONHAUS_SEED is accepted and currently unused:
every operation here is deterministic without it.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from pathlib import Path

from . import audit as audit_mod
from . import serialize
from .errors import NonHausError, RecheckFailure
from .figures import SvgScene, render_figure
from .embedding import EmbeddingSpec
from .lifting import (
    bounce_path,
    enumerate_lifts,
    homotopy_lift_record,
    make_merging_field,
)
from .space import (
    Origin,
    Regular,
    SpaceConfig,
    TopologyModel,
    labeled_dist,
    LabeledRep,
    pseudo_dist,
    separation_report,
)
from .symmetry import deck_group
from .thickened import thick_audit


def _cfg(args: argparse.Namespace) -> SpaceConfig:
    return SpaceConfig(args.k, TopologyModel(args.model))


def _emit(args: argparse.Namespace, text: str | bytes) -> None:
    data = text.encode() if isinstance(text, str) else text
    if args.out:
        Path(args.out).write_bytes(data)
    else:
        sys.stdout.write(data.decode())


def _cmd_audit(args: argparse.Namespace) -> int:
    if args.check:
        doc = serialize.loads(Path(args.check).read_text())
        if not isinstance(doc, audit_mod.ReportDocument):
            raise ValueError(f"{args.check} does not hold a report document")
        audit_mod.ensure_report_valid(doc)
        _emit(args, f"report ok: {len(doc.claims)} claims, "
                    f"{len(doc.certificates)} certificates re-checked\n")
        return 0
    doc = audit_mod.run_audit(_cfg(args), eps=args.eps, x0=args.x0)
    audit_mod.ensure_report_valid(doc)
    if args.json:
        _emit(args, serialize.dumps(doc))
        return 0
    width = max(len(c.claim_id) for c in doc.claims)
    lines = [f"claims audit (k={doc.k}, requested model: {doc.model})"]
    for c in doc.claims:
        v = dict(c.verdicts)
        lines.append(f"{c.claim_id:<{width}}  quotient={v['quotient']:<20} "
                     f"pseudometric={v['pseudometric']}")
    lines.append(f"{len(doc.certificates)} certificates embedded; all re-checked")
    _emit(args, "\n".join(lines) + "\n")
    return 0


def _cmd_lift(args: argparse.Namespace) -> int:
    cfg = _cfg(args)
    if args.path:
        path = serialize.read_pl_path(Path(args.path).read_text())
    else:
        path = bounce_path(args.x0)
    if args.dump_path:
        Path(args.dump_path).write_text(serialize.write_pl_path(path))
    c0 = path.breakpoints[0][1]
    start = Origin(1) if c0 == 0 else Regular(c0)
    lifts = enumerate_lifts(path, start, cfg)
    if args.json:
        _emit(args, serialize.dumps(list(lifts)))
        return 0
    lines = [f"{len(lifts)} lifts (k={cfg.k}, model={cfg.model.value})"]
    for n, lift in enumerate(lifts):
        choices = ", ".join(f"t={t}: origin {i}" for t, i in lift.origin_choices())
        lines.append(f"lift {n}: {choices if choices else 'no zero times'}")
    _emit(args, "\n".join(lines) + "\n")
    return 0


def _parse_assignment(text: str) -> dict[Fraction, int]:
    out: dict[Fraction, int] = {}
    if not text.strip():
        return out
    for part in text.split(","):
        t, origin = part.split("=")
        out[Fraction(t.strip())] = int(origin)
    return out


def _cmd_homotopy(args: argparse.Namespace) -> int:
    cfg = _cfg(args)
    if args.field:
        field = serialize.read_field(Path(args.field).read_text())
    else:
        field = make_merging_field()
    if args.dump_field:
        Path(args.dump_field).write_text(serialize.write_field(field))
    assignment = _parse_assignment(args.assign)
    record = homotopy_lift_record(field, assignment, cfg, args.paper_constancy)
    if args.json:
        _emit(args, serialize.dumps(record))
        return 0
    result = record.result
    lines = [
        f"homotopy lifting (k={cfg.k}, model={cfg.model.value}, "
        f"constancy-rule={'on' if args.paper_constancy else 'off'})",
        f"outcome: {type(result).__name__}",
        f"detail: {result!r}",
    ]
    _emit(args, "\n".join(lines) + "\n")
    return 0


def _cmd_deck(args: argparse.Namespace) -> int:
    table = deck_group(args.k)
    if args.json:
        _emit(args, serialize.dumps(table))
        return 0
    lines = [
        f"deck group for k={args.k}: order {len(table.elements)}",
        f"homomorphism check: {'pass' if table.homomorphism_ok else 'FAIL'}",
        f"faithful on origins: {'pass' if table.faithful_ok else 'FAIL'}",
    ]
    if table.noncommuting_pair:
        i, j = table.noncommuting_pair
        lines.append(
            f"non-commuting witness: {table.elements[i].images} and {table.elements[j].images}"
        )
    _emit(args, "\n".join(lines) + "\n")
    return 0


def _cmd_metric(args: argparse.Namespace) -> int:
    cfg = _cfg(args)
    verdicts = separation_report(cfg)
    samples = [
        (Origin(1), Origin(2)),
        (Origin(2), Regular(Fraction(1, 2))),
        (Regular(3), Regular(5)),
    ]
    if args.json:
        payload = {
            "kind": "metric-summary",
            "model": cfg.model.value,
            "separation": [serialize.encode(v) for v in verdicts],
            "distances": [
                [serialize.encode(p), serialize.encode(q), serialize.frac_str(pseudo_dist(p, q))]
                for p, q in samples
            ],
        }
        _emit(args, json.dumps(payload, sort_keys=True, indent=2) + "\n")
        return 0
    lines = [f"separation axioms (k={cfg.k}, model={cfg.model.value})"]
    for v in verdicts:
        lines.append(f"{v.axiom}: {'holds' if v.holds else 'fails'} ({v.note})")
    for p, q in samples:
        lines.append(f"distance({p}, {q}) = {pseudo_dist(p, q)}")
    rep = labeled_dist(LabeledRep(1, 1), LabeledRep(2, 2), cfg.k)
    lines.append(f"representative-level distance of (1 on branch 1, 2 on branch 2) = {rep}")
    _emit(args, "\n".join(lines) + "\n")
    return 0


def _cmd_render(args: argparse.Namespace) -> int:
    scene = SvgScene(k=args.k, lift_x0=args.x0 if args.lifts else None)
    data = render_figure(scene)
    _emit(args, data)
    return 0


def _cmd_thick(args: argparse.Namespace) -> int:
    report = thick_audit(args.grid_n, EmbeddingSpec(args.embedding), args.tolerance)
    if args.json:
        _emit(args, serialize.dumps(report))
        return 0
    lines = [
        f"thickened audit (embedding={report.embedding}, grid={report.grid_n}, "
        f"tolerance={report.tolerance})",
        f"coverage: {report.covered}/{report.total} = {report.coverage:.4f}",
        f"uncovered points: {report.uncovered_count}",
    ]
    if report.lower_half_witness:
        w = report.lower_half_witness
        lines.append(f"uncovered lower-half witness: ({w.u:.4f}, {w.v:.4f})")
    for p in report.probes:
        lines.append(
            f"probe origin {p.origin} at t={p.t}: limits {p.limit_pos} / {p.limit_neg}"
            f" -> {'discontinuous' if p.discontinuous else 'continuous'}"
        )
    for r in report.rows:
        lines.append(f"{r.claim}: {'holds' if r.holds else 'fails'} ({r.note})")
    _emit(args, "\n".join(lines) + "\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nonhaus",
        description="Exact model of the line with k glued origins: lift enumeration, "
        "failure certificates, deck group, and the claims audit.",
        epilog="NONHAUS_SEED is accepted in the environment and currently unused.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--k", type=int, default=2, help="number of origins (default 2)")
        p.add_argument(
            "--model",
            choices=[m.value for m in TopologyModel],
            default="quotient",
            help="topology model (default quotient)",
        )
        p.add_argument("--x0", type=Fraction, default=Fraction(1), help="basepoint coordinate")
        p.add_argument("--paper-constancy", action="store_true",
                       help="treat origin-valued maps as constant across the zero set")
        p.add_argument("--embedding", choices=[e.value for e in EmbeddingSpec],
                       default="main", help="curve embedding (default main)")
        p.add_argument("--json", action="store_true", help="emit JSON instead of text")
        p.add_argument("--out", help="write output to this file instead of stdout")

    p_audit = sub.add_parser("audit", help="emit the claims-audit report")
    common(p_audit)
    p_audit.add_argument("--eps", type=Fraction, default=Fraction(1),
                         help="window radius for the covering certificates")
    p_audit.add_argument("--check", help="re-check an existing report file and exit")
    p_audit.set_defaults(handler=_cmd_audit)

    p_lift = sub.add_parser("lift", help="enumerate lifts of a path")
    common(p_lift)
    p_lift.add_argument("--path", help="read a 'plpath v1' file instead of the bounce path")
    p_lift.add_argument("--dump-path", help="also write the path as 'plpath v1' to this file")
    p_lift.set_defaults(handler=_cmd_lift)

    p_hom = sub.add_parser("homotopy", help="attempt a homotopy lift")
    common(p_hom)
    p_hom.add_argument("--field", help="read a 'plfield v1' file instead of the merging field")
    p_hom.add_argument("--dump-field", help="also write the field as 'plfield v1' to this file")
    p_hom.add_argument("--assign", default="1/4=1,3/4=2",
                       help="boundary origin assignment, e.g. '1/4=1,3/4=2'")
    p_hom.set_defaults(handler=_cmd_homotopy)

    p_deck = sub.add_parser("deck", help="deck group table and verification")
    common(p_deck)
    p_deck.set_defaults(handler=_cmd_deck)

    p_metric = sub.add_parser("metric", help="pseudometric and separation report")
    common(p_metric)
    p_metric.set_defaults(handler=_cmd_metric)

    p_render = sub.add_parser("render", help="render the scene as deterministic SVG")
    common(p_render)
    p_render.add_argument("--lifts", action="store_true", help="annotate the bounce-path lifts")
    p_render.set_defaults(handler=_cmd_render)

    p_thick = sub.add_parser("thick", help="audit the radially thickened variant")
    common(p_thick)
    p_thick.add_argument("--grid-n", type=int, default=32, help="polar grid size (default 32)")
    p_thick.add_argument("--tolerance", type=float, default=1e-6,
                         help="coverage tolerance (default 1e-6)")
    p_thick.set_defaults(handler=_cmd_thick)

    return parser


def main(argv: list[str] | None = None) -> int:
    os.environ.get("NONHAUS_SEED")  # reserved; accepted but unused
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.handler(args)
    except RecheckFailure as exc:
        print(f"certificate re-check failed: {exc}", file=sys.stderr)
        return 3
    except (NonHausError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def run() -> int:
    return main()


if __name__ == "__main__":
    sys.exit(main())
