"""Command-line interface.

Exit codes: 0 success, 1 usage or parse error, 2 property violation found by
``verify``, 3 disagreement between a characterization and its oracle.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from .assignment import corollary_check, lift_profile, parse_instance
from .model import PreconditionError, ProfileError, is_consistent, parse_lottery, parse_profile
from .report import analyze, format_text, format_utilities, to_dict, verify_report
from .sw import DEFAULT_ENUMERATION_CAP, OracleDisagreement, separating_utilities, separation_margins, support_dominates
from .verify import run_verification

EXIT_OK, EXIT_USAGE, EXIT_VIOLATION, EXIT_DISAGREEMENT = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _emit_report(report, fmt: str, out) -> None:
    problems = verify_report(report)
    if problems:
        raise OracleDisagreement("report failed self-verification: " + "; ".join(problems))
    if fmt == "json":
        json.dump(to_dict(report), out, indent=2)
        out.write("\n")
    else:
        out.write(format_text(report) + "\n")


def cmd_check(args, out) -> int:
    profile = parse_profile(_read(args.profile))
    lottery = parse_lottery(args.lottery, profile)
    report = analyze(profile, lottery, args.enumeration_cap, args.strict_consistency)
    _emit_report(report, args.format, out)
    return EXIT_OK


def cmd_witness(args, out) -> int:
    profile = parse_profile(_read(args.profile))
    a = profile.index(args.alternative)
    u = separating_utilities(a, profile)
    out.write(f"utilities (rows = agents {', '.join(profile.agent_label(i) for i in range(profile.n))}; "
              f"columns = {', '.join(profile.names or ())}):\n")
    out.write(format_utilities(u) + "\n")
    sums = u.column_sums()
    out.write(f"welfare of {profile.name(a)}: {sums[a]}\n")
    for b, margin in separation_margins(a, u, profile).items():
        out.write(f"margin over {profile.name(b)}: {margin}\n")
    if args.strict_consistency:
        out.write(f"strictly consistent: {'yes' if is_consistent(u, profile, strict=True) else 'no'}\n")
    return EXIT_OK


def cmd_dominates(args, out) -> int:
    profile = parse_profile(_read(args.profile))
    q = parse_lottery(args.q, profile)
    p = parse_lottery(args.p, profile)
    verdict = support_dominates(q.support, p.support, profile)
    out.write(f"{q.format(profile)} SW-dominates {p.format(profile)}: {'yes' if verdict else 'no'}\n")
    return EXIT_OK


def cmd_verify(args, out) -> int:
    sizes = tuple(args.assignment_n) if args.assignment else ()
    ver = run_verification(
        n_max=args.n,
        m_max=args.m,
        per_support=args.lotteries_per_support,
        grid_levels=args.grid,
        seed=args.seed,
        assignment_n=sizes,
        profiles=not args.assignment_only,
    )
    out.write(ver.summary() + "\n")
    return EXIT_OK if ver.passed else EXIT_VIOLATION


def cmd_assignment_check(args, out) -> int:
    instance = parse_instance(_read(args.instance))
    lifted = lift_profile(instance)
    lottery = parse_lottery(args.lottery, lifted)
    out.write("assignments (objects of agents " + ", ".join(lifted.agent_label(i) for i in range(lifted.n)) + "): "
              + " ".join(lifted.names) + "\n")
    if instance.is_strict():
        verdict = corollary_check(instance, lottery)
        out.write(f"SW-efficient (degenerate on a Pareto-optimal assignment): {'yes' if verdict else 'no'}\n")
    report = analyze(lifted, lottery, args.enumeration_cap)
    _emit_report(report, args.format, out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sweff", description="Ex post, SD- and SW-efficiency of lotteries.")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_report_options(p):
        p.add_argument("--lottery", required=True, help='e.g. "a:1/2 b:1/2"')
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--enumeration-cap", type=int, default=DEFAULT_ENUMERATION_CAP,
                       help="largest number of alternatives for the enumeration oracle")

    p = sub.add_parser("check", help="analyze a lottery over a profile")
    p.add_argument("profile")
    add_report_options(p)
    p.add_argument("--strict-consistency", action="store_true",
                   help="also require strictly larger utility for strict preferences when checking utility witnesses")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("witness", help="utilities under which an alternative beats everything it is ranked above")
    p.add_argument("profile")
    p.add_argument("alternative")
    p.add_argument("--strict-consistency", action="store_true")
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("dominates", help="decide whether lottery q SW-dominates lottery p")
    p.add_argument("profile")
    p.add_argument("--q", required=True)
    p.add_argument("--p", required=True)
    p.set_defaults(func=cmd_dominates)

    p = sub.add_parser("verify", help="run the property suites over every small profile")
    p.add_argument("--n", type=int, default=3, help="largest number of agents")
    p.add_argument("--m", type=int, default=3, help="largest number of alternatives")
    p.add_argument("--grid", type=int, default=3, help="utility levels for the grid suites (0 disables)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--lotteries-per-support", type=int, default=2)
    p.add_argument("--assignment", action="store_true", help="also check all strict assignment instances")
    p.add_argument("--assignment-only", action="store_true", help="skip the profile corpus")
    p.add_argument("--assignment-n", type=int, nargs="+", default=[2, 3])
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("assignment", help="random assignment instances")
    asub = p.add_subparsers(dest="assignment_command", required=True)
    p = asub.add_parser("check", help="analyze a lottery over discrete assignments")
    p.add_argument("instance")
    add_report_options(p)
    p.set_defaults(func=cmd_assignment_check)
    return parser


def main(argv: list[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, stream=err,
                        format="%(levelname)s %(name)s: %(message)s")
    if args.command == "verify" and args.assignment_only:
        args.assignment = True
    try:
        return args.func(args, out)
    except OracleDisagreement as exc:
        err.write(f"internal disagreement (this is a bug): {exc}\n")
        return EXIT_DISAGREEMENT
    except (UsageError, ProfileError, PreconditionError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_USAGE


def main_exit() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_exit()
