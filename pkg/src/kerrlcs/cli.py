"""Command-line front end: verify / eval / roundtrip / cover.

Exit codes: 0 success, 1 check failure, 2 usage or configuration error,
3 domain or singularity error.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import replace

from . import harness
from .errors import ConfigurationError, KerrlcsError
from .harness import (EVAL_QUANTITIES, SUITE_NAMES, SuiteConfig, cover_check,
                      eval_quantity, report_csv, report_json, roundtrip_sweep,
                      run_suite, suite_passed)
from .kerr import KerrParams


def _parse_floats(text):
    try:
        return tuple(float(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated floats, got {text!r}")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="kerrlcs",
        description="Numerical verification of the Kerr / U(2) locally "
                    "conformally symplectic correspondence.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", help="run a verification suite")
    verify.add_argument("--suite", default="all", choices=SUITE_NAMES)
    verify.add_argument("--a", type=_parse_floats, default=None,
                        metavar="LIST", help="comma-separated spin values")
    verify.add_argument("--samples", type=int, default=None)
    verify.add_argument("--seed", type=int, default=None)
    verify.add_argument("--tol", type=float, default=None,
                        help="override the first-order tolerance")
    verify.add_argument("--report", default=None, metavar="PATH",
                        help="write the report to PATH instead of stdout")
    verify.add_argument("--format", default="json", choices=("json", "csv"))

    ev = sub.add_parser("eval", help="evaluate a named quantity at a point")
    ev.add_argument("--quantity", required=True, choices=EVAL_QUANTITIES)
    ev.add_argument("--chart", default="ks",
                    choices=("ks", "ksu", "cartesian", "euler"))
    ev.add_argument("--point", required=True, type=_parse_floats,
                    metavar="P", help="comma-separated coordinates")
    ev.add_argument("--a", type=float, default=1.0)

    rt = sub.add_parser("roundtrip", help="large-sample chart round-trip check")
    rt.add_argument("--a", type=_parse_floats, default=None, metavar="LIST")
    rt.add_argument("--samples", type=int, default=10000)
    rt.add_argument("--seed", type=int, default=None)

    cov = sub.add_parser("cover", help="torus-cover preimage count check")
    cov.add_argument("--matrix", default="[2]",
                     choices=sorted(harness.COVER_MATRICES))
    cov.add_argument("--seed", type=int, default=None)

    return parser


def _config_from_args(args):
    config = SuiteConfig()
    updates = {}
    if getattr(args, "a", None) is not None and isinstance(args.a, tuple):
        updates["a_values"] = args.a
    if getattr(args, "samples", None) is not None and args.command == "verify":
        updates["samples"] = args.samples
    if getattr(args, "seed", None) is not None:
        updates["seed"] = args.seed
    if getattr(args, "tol", None) is not None:
        updates["tol_first_order"] = args.tol
    return replace(config, **updates) if updates else config


def _run_verify(args):
    config = _config_from_args(args)
    reports = run_suite(config, args.suite)
    text = (report_json(config, reports) if args.format == "json"
            else report_csv(config, reports))
    if args.report:
        with open(args.report, "w") as fh:
            fh.write(text)
            if not text.endswith("\n"):
                fh.write("\n")
    else:
        print(text)
    for r in reports:
        print(f"{r.status:11s} {r.name}  max_abs={r.max_abs_residual:.3e}",
              file=sys.stderr)
    return 0 if suite_passed(reports) else 1


def _run_eval(args):
    params = KerrParams(args.a)
    values = eval_quantity(args.quantity, args.chart, args.point, params)
    for key in values:
        print(f"{key} = {values[key]:.15g}")
    return 0


def _run_roundtrip(args):
    config = _config_from_args(args)
    report = roundtrip_sweep(config, total=args.samples)
    print(f"{report.status} {report.name}: {report.samples} samples, "
          f"max_abs={report.max_abs_residual:.3e}")
    return 0 if report.status != harness.FAIL else 1


def _run_cover(args):
    config = _config_from_args(args)
    report = cover_check(config, args.matrix)
    print(f"{report.status} {report.name}: {report.notes}")
    return 0 if report.status != harness.FAIL else 1


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {"verify": _run_verify, "eval": _run_eval,
                "roundtrip": _run_roundtrip, "cover": _run_cover}
    try:
        return handlers[args.command](args)
    except ConfigurationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except KerrlcsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
