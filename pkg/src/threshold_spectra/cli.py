"""Command-line front end.

Commands: analyze, verify, ferrers, complement, spectrum.  All JSON output
renders numbers at 12 significant digits with fixed key order, so identical
invocations produce byte-identical output.

Exit codes: 0 all checks pass, 1 a check failed, 2 input error (including
the sweep cap), 3 eigensolver non-convergence.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys

from .brouwer import check_brouwer
from .graphs import SequenceError, ThresholdGraph, block_degrees, complement, ferrers, parse
from .interlace import (
    check_append_one,
    check_complement_interlacing,
    check_condensed_interlacing,
    check_degree_interlacing,
)
from .solver import ConvergenceError
from .spectra import full_spectrum
from .sweep import CHECKS, DEFAULT_MAX_N_CAP, run_sweep

MAX_N_ENV = "THRESHOLD_SPECTRA_MAX_N"


def round12(obj):
    """Recursively round floats to 12 significant digits for stable output."""
    if isinstance(obj, float):
        return float(f"{obj:.12g}")
    if isinstance(obj, dict):
        return {k: round12(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [round12(v) for v in obj]
    return obj


def render_json(obj) -> str:
    return json.dumps(round12(obj), indent=2)


def analysis_bundle(g: ThresholdGraph, tol: float, with_t11: bool) -> dict:
    """Aggregate graph summary, spectrum and all default checks."""
    profile = block_degrees(g)
    spectrum = full_spectrum(g)
    t8 = check_condensed_interlacing(g, tol)
    t9 = check_degree_interlacing(g, tol)
    l5, l7 = check_complement_interlacing(g, tol)
    brouwer = check_brouwer(g, tol)
    checks = {
        "T8": t8.to_json_dict(),
        "T9": t9.to_json_dict(),
        "L5": l5.to_json_dict(),
        "L7": l7.to_json_dict(),
    }
    passed = t8.passed and t9.passed and l5.passed and l7.passed
    if with_t11:
        t11 = check_append_one(g, tol)
        checks["T11"] = t11.to_json_dict()
        passed = passed and t11.passed
    checks["brouwer"] = brouwer.to_json_dict()
    passed = passed and brouwer.passed
    return {
        "graph": {
            "sequence": g.sequence_text(),
            "blocks": [list(block) for block in g.blocks],
            "n": g.n,
            "r": g.r,
            "kbar": g.kbar,
            "block_degrees": list(profile.block_degrees),
            "degree_sequence": list(profile.degree_sequence),
            "edge_count": profile.edge_count,
        },
        "spectrum": spectrum.to_json_dict(),
        "checks": checks,
        "pass": passed,
    }


def _cmd_analyze(args) -> int:
    g = parse(args.sequence)
    bundle = analysis_bundle(g, args.tol, args.t11)
    print(render_json(bundle))
    return 0 if bundle["pass"] else 1


def _cmd_spectrum(args) -> int:
    g = parse(args.sequence)
    print(render_json(full_spectrum(g).to_json_dict()))
    return 0


def _cmd_ferrers(args) -> int:
    g = parse(args.sequence)
    print(ferrers(g))
    return 0


def _cmd_complement(args) -> int:
    g = complement(parse(args.sequence))
    if args.json:
        print(
            render_json(
                {
                    "sequence": g.sequence_text(),
                    "blocks": [list(block) for block in g.blocks],
                    "n": g.n,
                }
            )
        )
    else:
        print(g.sequence_text())
    return 0


def _cmd_verify(args) -> int:
    cap = DEFAULT_MAX_N_CAP
    env = os.environ.get(MAX_N_ENV)
    if env is not None:
        try:
            cap = int(env)
        except ValueError:
            print(f"invalid {MAX_N_ENV} value: {env!r}", file=sys.stderr)
            return 2
    if not 2 <= args.max_n <= cap:
        print(
            f"--max-n must be between 2 and {cap} "
            f"(raise the cap via {MAX_N_ENV})",
            file=sys.stderr,
        )
        return 2
    if args.checks == "all":
        checks = CHECKS
    else:
        checks = tuple(c.strip() for c in args.checks.split(",") if c.strip())
        unknown = [c for c in checks if c not in CHECKS]
        if unknown:
            print(
                f"unknown checks: {', '.join(unknown)} "
                f"(choose from {', '.join(CHECKS)})",
                file=sys.stderr,
            )
            return 2
    summary, rows = run_sweep(
        args.max_n, checks, jobs=args.jobs, tol=args.tol, collect_rows=args.csv
    )
    if args.csv:
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(["n", "sequence", "kbar", "E", "k_min_slack", "min_slack", "pass"])
        for row in rows:
            writer.writerow(
                [
                    row["n"],
                    row["sequence"],
                    row["kbar"],
                    row["E"],
                    "" if row["k_min_slack"] is None else row["k_min_slack"],
                    "" if row["min_slack"] is None else f"{row['min_slack']:.12g}",
                    "true" if row["pass"] else "false",
                ]
            )
    else:
        print(render_json(summary))
    return 0 if summary["pass"] else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="threshold-spectra",
        description=(
            "Threshold-graph signless Laplacian spectra, interlacing checks "
            "and eigenvalue-sum bounds."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_tol(p):
        p.add_argument(
            "--tol",
            type=float,
            default=1e-7,
            help="check slack tolerance (default 1e-7)",
        )

    p_analyze = sub.add_parser("analyze", help="full analysis bundle as JSON")
    p_analyze.add_argument("sequence", help="bit string (e.g. 0011) or b^q form (e.g. 0^2,1^2)")
    p_analyze.add_argument("--t11", action="store_true", help="also run the append-one check")
    add_tol(p_analyze)
    p_analyze.set_defaults(func=_cmd_analyze)

    p_verify = sub.add_parser("verify", help="exhaustive sweep over all graphs up to --max-n")
    p_verify.add_argument("--max-n", type=int, default=10, dest="max_n")
    p_verify.add_argument(
        "--checks",
        default="all",
        help=f"comma list from {{{','.join(CHECKS)}}} or 'all'",
    )
    p_verify.add_argument("--jobs", type=int, default=1, help="worker processes")
    p_verify.add_argument("--csv", action="store_true", help="per-graph CSV rows instead of the JSON summary")
    add_tol(p_verify)
    p_verify.set_defaults(func=_cmd_verify)

    p_ferrers = sub.add_parser("ferrers", help="Ferrers diagram of the degree sequence")
    p_ferrers.add_argument("sequence")
    p_ferrers.set_defaults(func=_cmd_ferrers)

    p_complement = sub.add_parser("complement", help="complement graph's creation sequence")
    p_complement.add_argument("sequence")
    p_complement.add_argument("--json", action="store_true")
    p_complement.set_defaults(func=_cmd_complement)

    p_spectrum = sub.add_parser("spectrum", help="full spectrum with provenance tags as JSON")
    p_spectrum.add_argument("sequence")
    p_spectrum.set_defaults(func=_cmd_spectrum)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SequenceError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2
    except ConvergenceError as exc:
        print(f"numerical error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
