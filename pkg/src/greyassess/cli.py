"""Command line interface: assess, compare, validate-scale, calc.

Exit codes: 0 on success, 1 on data or validation errors, 2 on usage errors.
Text output rounds to 2 decimals (half-up); JSON output carries full
precision.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys
from decimal import ROUND_HALF_UP, Decimal
from typing import Sequence

from .assess import (
    AssessmentReport,
    ScoreSheet,
    assess,
    compare_groups,
    raw_mean,
    scores_to_distribution,
)
from .csvio import load_counts_csv, load_scores_csv
from .expr import calc as eval_text
from .scale import GradeScale, default_scale, read_scale_file
from .tfn import EQUIVALENCE_TOLERANCE, check_equivalence


def _round2(x: float) -> str:
    return str(Decimal(repr(x)).quantize(Decimal("0.01"), rounding=ROUND_HALF_UP))


def _gn2(gn) -> str:
    return f"[{_round2(gn.lower)}, {_round2(gn.upper)}]"


def _t_value(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not 0.0 <= value <= 1.0:
        raise argparse.ArgumentTypeError(f"t must be in [0, 1], got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--scale", metavar="FILE", help="grade scale file (default: built-in A-F scale)")
    common.add_argument("--t", type=_t_value, default=0.5, metavar="0..1",
                        help="whitening parameter (default 0.5)")
    common.add_argument("--format", choices=("text", "json"), default="text",
                        help="output format (default text)")

    parser = argparse.ArgumentParser(
        prog="greyassess",
        description="Grey-number arithmetic and linguistic-grade group assessment.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_assess = sub.add_parser("assess", parents=[common],
                              help="assess groups from grade counts or raw scores")
    src = p_assess.add_mutually_exclusive_group(required=True)
    src.add_argument("--counts", metavar="CSV", help="counts CSV (group,grade,count)")
    src.add_argument("--scores", metavar="CSV", help="scores CSV (subject,score)")
    p_assess.add_argument("--check-tfn", action="store_true",
                          help="also cross-check against the fuzzy-number route")

    p_compare = sub.add_parser("compare", parents=[common],
                               help="rank groups by whitened mean value")
    src = p_compare.add_mutually_exclusive_group(required=True)
    src.add_argument("--counts", metavar="CSV", help="counts CSV, one group per set of rows")
    src.add_argument("--scores", metavar="CSV", help="scores CSV, each subject ranked as a group")

    sub.add_parser("validate-scale", parents=[common], help="check a scale file's invariants")

    p_calc = sub.add_parser("calc", parents=[common],
                            help="evaluate a grey-number expression, e.g. '[1,2] + 3 * [4,5]'")
    p_calc.add_argument("expression", help="expression over intervals [a,b], numbers, + - * / ( )")

    return parser


def _load_scale(args: argparse.Namespace) -> GradeScale:
    scale = read_scale_file(args.scale) if args.scale else default_scale()
    violations = scale.validate()
    if violations:
        raise ValueError("invalid scale:\n  " + "\n  ".join(violations))
    return scale


def _distribution_text(report: AssessmentReport) -> str:
    return " ".join(f"{label}:{report.distribution.count(label)}" for label in report.scale.labels)


def _report_line(report: AssessmentReport) -> str:
    return (
        f"{report.group_id}: mean={_gn2(report.mean_gn)} whitened={_round2(report.whitened)} "
        f"grade={report.grade} n={report.n} ({_distribution_text(report)})"
    )


def _tfn_line(group_id: str, check) -> str:
    verdict = "PASS" if check.passed else "FAIL"
    return (
        f"{group_id}: tfn-equivalence {verdict} "
        f"(difference {check.difference:.1e}, tolerance {EQUIVALENCE_TOLERANCE:g})"
    )


def _cmd_assess(args: argparse.Namespace) -> int:
    scale = _load_scale(args)
    extras: dict[str, float] = {}
    if args.counts:
        groups = load_counts_csv(args.counts, scale)
        reports = [assess(dist, scale, args.t, group_id=g) for g, dist in groups.items()]
    else:
        sheet = load_scores_csv(args.scores, scale)
        dist = scores_to_distribution(sheet, scale)
        report = assess(dist, scale, args.t, group_id="all")
        extras["raw_mean"] = raw_mean(sheet)
        extras["difference"] = extras["raw_mean"] - report.whitened
        reports = [report]

    checks = {r.group_id: check_equivalence(r.distribution, scale) for r in reports} \
        if args.check_tfn else {}

    if args.format == "json":
        payload = []
        for report in reports:
            entry = report.to_dict()
            entry.update(extras)
            if checks:
                entry["tfn_check"] = dataclasses.asdict(checks[report.group_id])
            payload.append(entry)
        print(json.dumps(payload, indent=2))
    else:
        for report in reports:
            print(_report_line(report))
            if checks:
                print(_tfn_line(report.group_id, checks[report.group_id]))
        if extras:
            print(
                f"raw mean {_round2(extras['raw_mean'])}, "
                f"difference vs whitened {_round2(extras['difference'])}"
            )
    return 0


def _cmd_compare(args: argparse.Namespace) -> int:
    scale = _load_scale(args)
    if args.counts:
        groups = load_counts_csv(args.counts, scale)
        reports = [assess(dist, scale, args.t, group_id=g) for g, dist in groups.items()]
    else:
        sheet = load_scores_csv(args.scores, scale)
        reports = []
        for subject, scores in sheet.subjects:
            dist = scores_to_distribution(ScoreSheet(((subject, scores),)), scale)
            reports.append(assess(dist, scale, args.t, group_id=subject))

    tie_groups = compare_groups(reports)
    if args.format == "json":
        payload = []
        rank = 1
        for group in tie_groups:
            for report in group:
                payload.append({"rank": rank, **report.to_dict()})
            rank += len(group)
        print(json.dumps(payload, indent=2))
    else:
        rank = 1
        for group in tie_groups:
            tied = " (tie)" if len(group) > 1 else ""
            for report in group:
                print(
                    f"{rank}. {report.group_id}: whitened={_round2(report.whitened)} "
                    f"grade={report.grade}{tied}"
                )
            rank += len(group)
    return 0


def _cmd_validate_scale(args: argparse.Namespace) -> int:
    scale = read_scale_file(args.scale) if args.scale else default_scale()
    violations = scale.validate()
    if args.format == "json":
        print(json.dumps({"valid": not violations, "violations": violations}, indent=2))
    elif violations:
        for violation in violations:
            print(f"violation: {violation}")
    else:
        print(
            f"scale OK: {len(scale.entries)} grades over "
            f"[{scale.domain_min:g}, {scale.domain_max:g}]"
        )
    return 1 if violations else 0


def _cmd_calc(args: argparse.Namespace) -> int:
    result = eval_text(args.expression)
    if args.format == "json":
        print(json.dumps({"lower": result.lower, "upper": result.upper}))
    else:
        print(result)
    return 0


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "assess": _cmd_assess,
        "compare": _cmd_compare,
        "validate-scale": _cmd_validate_scale,
        "calc": _cmd_calc,
    }
    try:
        return handlers[args.command](args)
    except (ValueError, ZeroDivisionError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
