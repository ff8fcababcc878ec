"""Command-line front end.

Subcommands: frobenius, classify, numerator, bounds, survey. Exit codes are
a stable contract: 0 success, 2 input validation failure, 3 internal defect
(a violated law -- report it, that is a bug). Real-valued bounds print with
three decimals in text and CSV output; JSON carries full double precision.
"""

import argparse
import json
import sys

from . import survey as survey_mod
from .bounds import bound_ns3, bound_report
from .core import frobenius, generator_set, genus, is_symmetric
from .errors import DefectError, ValidationError
from .hilbert import ClassKind, classify, numerator


def positive_int(token: str) -> int:
    try:
        value = int(token)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {token!r}") from None
    if value <= 0:
        raise argparse.ArgumentTypeError(f"must be a positive integer: {token!r}")
    return value


def _emit_json(payload) -> None:
    print(json.dumps(payload))


def cmd_frobenius(args) -> int:
    g = generator_set(args.generators)
    fr = frobenius(g)
    if args.json:
        _emit_json(
            {
                "generators": list(g.elements),
                "frobenius": fr,
                "genus": genus(g),
                "symmetric": is_symmetric(g),
            }
        )
    else:
        print(fr)
    return 0


def cmd_classify(args) -> int:
    g = generator_set(args.generators)
    cls = classify(g)
    if args.json:
        _emit_json(
            {
                "generators": list(g.elements),
                "class": cls.kind.value,
                "c": cls.c,
                "a_list": list(cls.a_list) if cls.a_list is not None else None,
                "relation_degrees": list(cls.relation_degrees)
                if cls.relation_degrees is not None
                else None,
            }
        )
        return 0
    print(cls.kind.value)
    if cls.kind is ClassKind.SYMMETRIC_NOT_CI:
        print(f"c = {cls.c}")
        print("a =", " ".join(str(a) for a in cls.a_list))
    elif cls.kind is ClassKind.SYMMETRIC_CI:
        print("relation degrees =", " ".join(str(e) for e in cls.relation_degrees))
    return 0


def cmd_numerator(args) -> int:
    g = generator_set(args.generators)
    poly = numerator(g)
    if args.json:
        _emit_json({"terms": [[e, c] for e, c in poly.terms]})
    else:
        for e, c in poly.terms:
            print(e, c)
    return 0


def cmd_bounds(args) -> int:
    g = generator_set(args.generators)
    if len(g.elements) == 3:
        value = bound_ns3(g)
        if args.json:
            payload = {
                "generators": list(g.elements),
                "sigma": g.sigma,
                "pi": g.pi,
                "bound_ns3": value,
            }
            if args.exact:
                payload["frobenius"] = frobenius(g)
            _emit_json(payload)
        else:
            if args.exact:
                print(f"F = {frobenius(g)}")
            print(f"bound_ns3 = {value:.3f}")
        return 0

    report = bound_report(g, compute_exact=args.exact)
    if args.json:
        payload = {
            "generators": list(report.generators),
            "sigma": report.sigma,
            "pi": report.pi,
            "bound_not_ci": report.bound_not_ci,
            "bound_ci": report.bound_ci,
            "bound_ns": report.bound_ns,
        }
        if args.exact:
            payload["frobenius"] = report.exact_frobenius
            payload["class"] = report.semigroup_class.kind.value
            payload["tightness"] = report.tightness
        _emit_json(payload)
        return 0
    if args.exact:
        print(f"F = {report.exact_frobenius}")
        print(f"class = {report.semigroup_class.kind.value}")
    print(f"bound_not_ci = {report.bound_not_ci:.3f}")
    print(f"bound_ci = {report.bound_ci:.3f}")
    print(f"bound_ns = {report.bound_ns:.3f}")
    if args.exact and report.tightness is not None:
        print(f"tightness = {report.tightness:.3f}")
    return 0


def cmd_survey(args) -> int:
    cfg = survey_mod.SurveyConfig(
        d_min=args.min,
        d_max=args.max,
        require_minimal=not args.include_non_minimal,
        emit_all=args.emit_all,
        jobs=args.jobs,
        force=args.force,
    )
    records, stats = survey_mod.run_survey(cfg)
    if args.format == "csv":
        body = survey_mod.records_to_csv(records)
    else:
        body = "".join(
            json.dumps(survey_mod.record_to_json_dict(r)) + "\n" for r in records
        )

    summary = "classes: " + " ".join(
        f"{key}={stats.counts[key]}" for key in sorted(stats.counts)
    )
    if stats.tightness_min is not None:
        summary += (
            f"\ntightness: min={stats.tightness_min:.3f} "
            f"mean={stats.tightness_mean:.3f} max={stats.tightness_max:.3f} "
            f"worst={','.join(str(d) for d in stats.worst_instance)}"
        )

    if args.out:
        with open(args.out, "w") as fh:
            fh.write(body)
        print(summary)
        print(f"wrote {len(records)} records to {args.out}")
    else:
        sys.stdout.write(body)
        print(summary, file=sys.stderr)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="numsem",
        description="Exact toolkit for numerical semigroups: Frobenius numbers, "
        "Hilbert numerators, classification, and Frobenius lower bounds.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("frobenius", help="Frobenius number of a semigroup")
    p.add_argument("generators", nargs="+", type=positive_int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_frobenius)

    p = sub.add_parser("classify", help="classify a 4-generated semigroup")
    p.add_argument("generators", nargs="+", type=positive_int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("numerator", help="Hilbert-series numerator polynomial")
    p.add_argument("generators", nargs="+", type=positive_int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_numerator)

    p = sub.add_parser("bounds", help="closed-form Frobenius lower bounds")
    p.add_argument("generators", nargs="+", type=positive_int)
    p.add_argument("--exact", action="store_true", help="also compute exact F")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("survey", help="enumerate and classify a quadruple range")
    p.add_argument("--min", type=positive_int, required=True)
    p.add_argument("--max", type=positive_int, required=True)
    p.add_argument("--out", help="output file (default: stdout)")
    p.add_argument("--format", choices=("csv", "jsonl"), default="csv")
    p.add_argument("--jobs", type=positive_int, default=1)
    p.add_argument("--emit-all", action="store_true",
                   help="emit nonsymmetric records too (default: symmetric only)")
    p.add_argument("--include-non-minimal", action="store_true",
                   help="emit records for non-minimal quadruples instead of skipping")
    p.add_argument("--force", action="store_true",
                   help="lift the range-span safety cap")
    p.set_defaults(func=cmd_survey)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except DefectError as exc:
        print(f"defect: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
