"""Command-line interface: one subcommand per operation, JSON on stdout.

Rationals are accepted as ``p/q`` or decimal strings and printed back as
``p/q``. Output is byte-identical across runs for identical arguments and
seeds. Relative output paths honor the ``DISTRICTGAME_OUTDIR`` environment
variable. Exit codes: 0 on success, 1 on domain errors, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from pathlib import Path

from .analysis import analyze, analyze_csv, emit_diagram, load_csv, statewide_share, to_share_profile
from .election import AllocationMode, canonicalize_threshold, run_election
from .errors import DistrictGameError
from .model import Districting, ShareProfile, as_ratio
from .solver import minimax, verify_theorems
from .strategies import StackingCap, best_response, cut_optimal, exploitability

PROG = "districtgame"


def _districts(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated integer list: {text!r}")


def _shares(text: str) -> tuple[Fraction, ...]:
    return tuple(as_ratio(part) for part in text.split(","))


def _voter_map(args) -> Districting | ShareProfile:
    if args.shares is not None:
        return ShareProfile(args.shares)
    if args.districts is None:
        raise DistrictGameError("provide --districts with --n, or --shares")
    if args.n is None:
        raise DistrictGameError("--districts requires --n")
    return Districting(n=args.n, districts=args.districts)


def _out_path(raw: str) -> Path:
    path = Path(raw)
    base = os.environ.get("DISTRICTGAME_OUTDIR")
    if base and not path.is_absolute():
        path = Path(base) / path
    return path


def _emit(payload: dict) -> None:
    print(json.dumps(payload, indent=2))


def _interval_strs(intervals) -> list[list[str]]:
    return [[str(lo), str(hi)] for lo, hi in intervals]


def _cmd_elect(args) -> int:
    d = _voter_map(args)
    threshold = canonicalize_threshold(args.m, getattr(d, "n", None))
    outcome = run_election(d, threshold, mode=AllocationMode(args.mode), seed=args.seed)
    _emit({
        "n": getattr(d, "n", None),
        "D": d.D,
        "m": str(threshold.m),
        "effective_threshold": threshold.effective,
        "statuses": [s.value for s in outcome.statuses],
        "expected_chooser_seats": str(outcome.expected_chooser_seats),
        "expected_cutter_seats": str(outcome.expected_cutter_seats),
        "mode": outcome.mode.value,
        "seed": outcome.seed,
        "realized_chooser_seats": outcome.realized_chooser_seats,
        "realized_cutter_seats": outcome.realized_cutter_seats,
    })
    return 0


def _cmd_best_response(args) -> int:
    d = _voter_map(args)
    response = best_response(d, StackingCap(args.cap))
    at_half, best, delta = exploitability(d)
    _emit({
        "D": d.D,
        "cap": str(as_ratio(args.cap)),
        "value": str(response.value),
        "optimal_intervals": _interval_strs(response.optimal_intervals),
        "representative": str(response.representative),
        "contains_half": response.contains_half,
        "seats_at_half": str(at_half),
        "delta": str(delta),
    })
    return 0


def _cmd_cut(args) -> int:
    d = cut_optimal(args.D, args.n, args.b_total)
    response = best_response(d)
    _emit({
        "D": args.D,
        "n": args.n,
        "b_total": args.b_total,
        "districts": list(d.districts),
        "share": str(d.share),
        "value": str(response.value),
        "optimal_intervals": _interval_strs(response.optimal_intervals),
        "contains_half": response.contains_half,
    })
    return 0


def _cmd_solve(args) -> int:
    result = minimax(args.D, args.n, args.b_total, cap=StackingCap(args.cap), guard=args.guard)
    _emit(result.to_dict())
    return 0


def _cmd_verify(args) -> int:
    report = verify_theorems(
        range(args.D_min, args.D_max + 1),
        range(args.n_min, args.n_max + 1),
        guard=args.guard,
        strict=args.strict,
        jobs=args.jobs,
    )
    _emit(report.to_dict())
    return 0


def _cmd_analyze(args) -> int:
    report = analyze_csv(args.csv)
    if args.out:
        _out_path(args.out).write_text(report.to_json(), encoding="utf-8")
    if args.svg:
        _out_path(args.svg).write_bytes(emit_diagram(report, "svg", size=args.size))
    _emit(report.to_dict())
    return 0


def _cmd_diagram(args) -> int:
    report = analyze_csv(args.csv)
    m = None if args.m is None else as_ratio(args.m)
    payload = emit_diagram(report, "svg", m=m, size=args.size)
    if args.out:
        _out_path(args.out).write_bytes(payload)
    else:
        sys.stdout.write(payload.decode("utf-8"))
        sys.stdout.write("\n")
    return 0


def _add_voter_map_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--districts", type=_districts,
                        help="comma-separated chooser vote counts per district")
    parser.add_argument("--n", type=int, help="voters per district")
    parser.add_argument("--shares", type=_shares,
                        help="comma-separated chooser shares per district (share mode)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog=PROG,
        description="Cut-and-choose districting game with threshold elections.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    elect = sub.add_parser("elect", help="hold a threshold election")
    _add_voter_map_flags(elect)
    elect.add_argument("--m", default="1/2", help="threshold in [1/2, 1), default 1/2")
    elect.add_argument("--mode", choices=[m.value for m in AllocationMode],
                       default=AllocationMode.INDEPENDENT_COIN_FLIPS.value)
    elect.add_argument("--seed", type=int, default=0)
    elect.set_defaults(handler=_cmd_elect)

    response = sub.add_parser("best-response", help="chooser's optimal thresholds")
    _add_voter_map_flags(response)
    response.add_argument("--cap", default="1", help="threshold cap M, default 1")
    response.set_defaults(handler=_cmd_best_response)

    cut = sub.add_parser("cut", help="cutter's canonical optimal districting")
    cut.add_argument("--D", type=int, required=True)
    cut.add_argument("--n", type=int, required=True)
    cut.add_argument("--b-total", dest="b_total", type=int, required=True)
    cut.set_defaults(handler=_cmd_cut)

    solve = sub.add_parser("solve", help="exhaustive game value of one instance")
    solve.add_argument("--D", type=int, required=True)
    solve.add_argument("--n", type=int, required=True)
    solve.add_argument("--b-total", dest="b_total", type=int, required=True)
    solve.add_argument("--cap", default="1")
    solve.add_argument("--guard", type=int, default=10**6)
    solve.set_defaults(handler=_cmd_solve)

    verify = sub.add_parser("verify", help="sweep instances against the rounding law")
    verify.add_argument("--D-min", dest="D_min", type=int, default=2)
    verify.add_argument("--D-max", dest="D_max", type=int, required=True)
    verify.add_argument("--n-min", dest="n_min", type=int, default=2)
    verify.add_argument("--n-max", dest="n_max", type=int, required=True)
    verify.add_argument("--guard", type=int, default=10**6)
    verify.add_argument("--strict", action="store_true",
                        help="raise when an even-n instance breaks a law")
    verify.add_argument("--jobs", type=int, default=1)
    verify.set_defaults(handler=_cmd_verify)

    analyze_cmd = sub.add_parser("analyze", help="exploitability report for a CSV")
    analyze_cmd.add_argument("--csv", required=True)
    analyze_cmd.add_argument("--out", help="also write the JSON report here")
    analyze_cmd.add_argument("--svg", help="also write the staircase diagram here")
    analyze_cmd.add_argument("--size", type=int, default=400)
    analyze_cmd.set_defaults(handler=_cmd_analyze)

    diagram = sub.add_parser("diagram", help="staircase diagram for a CSV")
    diagram.add_argument("--csv", required=True)
    diagram.add_argument("--out", help="output SVG path (stdout when omitted)")
    diagram.add_argument("--m", help="threshold for the shaded bands")
    diagram.add_argument("--size", type=int, default=400)
    diagram.set_defaults(handler=_cmd_diagram)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except (DistrictGameError, OSError) as exc:
        print(f"{PROG}: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
