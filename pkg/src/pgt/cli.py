"""Command-line front end.

Subcommands:

    info         order, centre and derived-subgroup orders of a group
    pseudocentre P(G) with flags; --elements lists it in canonical order
    series       the ascending pseudocentral series and its length
    verify       run a named check suite (--report-dir renders CSV + figures)
    fib          number-theory utilities: scan | condition | D | pisano

Any group subcommand accepts a spec expression (grammar in specdsl) or
--gens-file FILE with one 0-based image sequence per line.  --json switches
to a stable JSON schema; --cap overrides the enumeration cap (which the
PGT_ENUM_CAP environment variable also sets).

Exit codes: 0 success / all checks passed; 1 some check failed; 2 usage or
spec error; 3 capacity exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import CapacityExceeded, InvalidParameter, PgtError
from .groups import PermGroup, center, derived_subgroup
from .perms import cycle_string, parse_images_line
from .pseudo import pseudo_report
from .specdsl import SpecError, build, parse_spec
from . import harness
from . import numtheory as nt


def _load_gens_file(path):
    raws = []
    with open(path) as handle:
        for line in handle:
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            raws.append(parse_images_line(line))
    if not raws:
        raise InvalidParameter(f"no generators found in {path}")
    degree = len(raws[0])
    if any(len(r) != degree for r in raws):
        raise InvalidParameter("generators of mixed degree in file")
    return PermGroup(degree, raws)


def _resolve_group(args):
    if getattr(args, "gens_file", None):
        return _load_gens_file(args.gens_file), f"file:{args.gens_file}"
    if not args.spec:
        raise SpecError("a group spec or --gens-file is required")
    spec = parse_spec(args.spec)
    return build(spec), args.spec


def _report_json(report):
    return {
        "spec": report.spec,
        "degree": report.degree,
        "order": report.order,
        "centre_order": report.centre_order,
        "derived_order": report.derived_order,
        "pseudocentre_order": report.pseudocentre_order,
        "flags": report.flags(),
        "series": report.series_orders,
        "class": report.pseudo_class,
        "timings_ms": {k: round(v, 3) for k, v in report.timings_ms.items()},
    }


def _cmd_info(args):
    group, spec_text = _resolve_group(args)
    if args.json:
        report = pseudo_report(group, spec_text, cap=args.cap)
        print(json.dumps(_report_json(report)))
        return 0
    z = center(group, args.cap)
    derived = derived_subgroup(group)
    print(f"spec:    {spec_text}")
    print(f"degree:  {group.degree}")
    print(f"order:   {group.order()}")
    print(f"|Z(G)|:  {z.order}")
    print(f"|G'|:    {derived.order()}")
    return 0


def _cmd_pseudocentre(args):
    group, spec_text = _resolve_group(args)
    report = pseudo_report(group, spec_text, cap=args.cap)
    if args.json:
        print(json.dumps(_report_json(report)))
        return 0
    print(f"spec:            {spec_text}")
    print(f"order:           {report.order}")
    print(f"|P(G)|:          {report.pseudocentre_order}")
    print(f"pseudocentral:   {report.is_pseudocentral}")
    print(f"P = Z(G):        {report.p_equals_centre}")
    print(f"P = G':          {report.p_equals_derived}")
    if args.elements:
        from .pseudo import pseudocentre

        for p in pseudocentre(group, args.cap):
            print(cycle_string(p.raw))
    return 0


def _cmd_series(args):
    group, spec_text = _resolve_group(args)
    report = pseudo_report(group, spec_text, cap=args.cap)
    if args.json:
        print(json.dumps(_report_json(report)))
        return 0
    print(f"spec:   {spec_text}")
    print(f"terms:  {report.series_orders}")
    if report.pseudo_class is not None:
        print(f"class:  {report.pseudo_class}")
    else:
        print("class:  did not stabilize at G within the step limit")
    return 0


def _cmd_verify(args):
    try:
        result = harness.run_suite(args.suite, cap=args.cap)
    except ValueError as exc:
        print(str(exc), file=sys.stderr)
        return 2
    if args.report_dir:
        from .report import write_report

        paths = write_report(result, args.report_dir)
        print("report written:", ", ".join(str(p) for p in paths), file=sys.stderr)
    if args.json:
        payload = {
            "suite": result.name,
            "total": result.total,
            "passed": result.passed,
            "failed": result.failed,
            "skipped": result.skipped,
            "checks": [
                {
                    "id": r.check_id,
                    "suite": r.suite,
                    "claim": r.claim,
                    "status": r.status,
                    "expected": r.expected,
                    "computed": r.computed,
                    "detail": r.detail,
                    "ms": round(r.ms, 1),
                }
                for r in result.records
            ],
        }
        print(json.dumps(payload))
    else:
        for line in result.lines():
            print(line)
    return 0 if result.all_passed else 1


def _cmd_fib(args):
    if args.fib_command == "scan":
        witnesses = nt.remark_scan(args.bound)
        payload = {
            "bound": args.bound,
            "witnesses": [w.p for w in witnesses],
        }
        if args.json:
            print(json.dumps(payload))
        elif witnesses:
            print(f"witness primes up to {args.bound}: {payload['witnesses']}")
        else:
            print(f"no witness prime up to {args.bound} (the question stays open)")
        return 0
    if args.fib_command == "condition":
        r = nt.remark_condition(args.p)
        if args.json:
            print(
                json.dumps(
                    {
                        "p": r.p,
                        "holds": r.holds,
                        "fib_p2_mod": r.fib_p2_mod,
                        "fib_p2_minus1_mod": r.fib_p2_minus1_mod,
                    }
                )
            )
        else:
            print(
                f"p={r.p}: f(p^2) = {r.fib_p2_mod} and f(p^2-1) = {r.fib_p2_minus1_mod} "
                f"mod p^2 -> {'WITNESS' if r.holds else 'not a witness'}"
            )
        return 0
    if args.fib_command == "D":
        c1, d1, d2 = nt.damettere_components(args.T, args.U)
        value = d1 * d2 - c1 * c1
        if args.json:
            print(json.dumps({"T": args.T, "U": args.U, "c1": c1, "d1": d1, "d2": d2, "D": value}))
        else:
            print(f"T={args.T} U={args.U}: c1={c1} d1={d1} d2={d2} D={value}")
        return 0
    if args.fib_command == "pisano":
        period = nt.pisano_period(args.m)
        if args.json:
            print(json.dumps({"m": args.m, "period": period}))
        else:
            print(f"pisano period of {args.m}: {period}")
        return 0
    raise AssertionError(f"unhandled fib command {args.fib_command}")


def _add_group_arguments(parser):
    parser.add_argument("spec", nargs="?", help="group spec expression, e.g. 'S(4)' or 'Wr(C(2),A(5))'")
    parser.add_argument("--gens-file", help="file of raw generators, one image sequence per line")
    parser.add_argument("--json", action="store_true", help="emit the JSON report schema")
    parser.add_argument("--cap", type=int, default=None, help="override the enumeration cap")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="pgt", description="exact pseudocentre computations for finite permutation groups"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    info = sub.add_parser("info", help="order, centre order, derived order")
    _add_group_arguments(info)
    info.set_defaults(handler=_cmd_info)

    pc = sub.add_parser("pseudocentre", help="compute P(G)")
    _add_group_arguments(pc)
    pc.add_argument("--elements", action="store_true", help="list P(G) in canonical order")
    pc.set_defaults(handler=_cmd_pseudocentre)

    series = sub.add_parser("series", help="ascending pseudocentral series")
    _add_group_arguments(series)
    series.set_defaults(handler=_cmd_series)

    verify = sub.add_parser("verify", help="run a check suite")
    verify.add_argument(
        "--suite",
        default="all",
        help=f"one of {', '.join(harness.SUITE_NAMES + ('all',))}",
    )
    verify.add_argument("--json", action="store_true", help="emit a machine-readable summary")
    verify.add_argument("--cap", type=int, default=None, help="override the enumeration cap")
    verify.add_argument("--report-dir", help="write results.csv and figures to this directory")
    verify.set_defaults(handler=_cmd_verify)

    fib = sub.add_parser("fib", help="Fibonacci / Pisano / Chebyshev utilities")
    fib.add_argument("--json", action="store_true")
    fib_sub = fib.add_subparsers(dest="fib_command", required=True)
    scan = fib_sub.add_parser("scan", help="scan primes for the open residue condition")
    scan.add_argument("--bound", type=int, default=10_000)
    condition = fib_sub.add_parser("condition", help="test one prime")
    condition.add_argument("p", type=int)
    dcmd = fib_sub.add_parser("D", help="the determinant quantity D(U)")
    dcmd.add_argument("T", type=int)
    dcmd.add_argument("U", type=int)
    pisano = fib_sub.add_parser("pisano", help="Pisano period of m")
    pisano.add_argument("m", type=int)
    fib.set_defaults(handler=_cmd_fib)

    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors already; normalize others
        return int(exc.code) if exc.code else 0
    try:
        return args.handler(args)
    except CapacityExceeded as exc:
        print(f"capacity exceeded: {exc}", file=sys.stderr)
        return 3
    except (SpecError, InvalidParameter) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except PgtError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
