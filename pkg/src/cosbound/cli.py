"""
cosbound CLI - Command-line interface for the V_n computations.

Entry point for the 'cosbound' command.
"""

import argparse
import sys
from pathlib import Path

from cosbound import __version__
from cosbound.common.config import CONFIG_ENV_VAR, load_settings
from cosbound.common.exceptions import (
    CertificationFailed,
    ConfigError,
    CosboundException,
    DomainError,
    NoRestriction,
)
from cosbound.common.logging import get_logger
from cosbound.core.records import (
    SUBPROBLEM_COLUMNS,
    SWEEP_COLUMNS,
    Colors,
    colorize,
    format_constant,
    parse_polynomial,
    rows_to_csv,
    serialize_record,
    write_text,
)
from cosbound.core.trigpoly import (
    class_c0_membership,
    membership_c_n,
    v_functional,
    zero_free_constant,
)
from cosbound.extremal.bounds import (
    DEFAULT_LINES,
    Restriction,
    bound_line_eval,
    lower_envelope,
    restrict_interval_report,
    verify_functionals,
)
from cosbound.extremal.pipeline import compute_vn, sweep, sweep_subproblems, upper_bound_for
from cosbound.extremal.witnesses import PUBLISHED_CONSTANTS
from cosbound.oracle.audit import audit


EXIT_OK = 0
EXIT_USAGE = 1
EXIT_CERTIFICATION = 2


class UsageError(Exception):
    """Raised by the parser instead of exiting with argparse's status 2."""

    pass


class CosboundParser(argparse.ArgumentParser):
    """ArgumentParser that reports usage errors with exit code 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def _report_error(message: str) -> None:
    print(f"{colorize('Error:', Colors.RED, sys.stderr.isatty())} {message}", file=sys.stderr)


def _settings(args, **extra):
    overrides = {
        "grid": getattr(args, "grid", None),
        "seed": getattr(args, "seed", None),
        "restarts": getattr(args, "restarts", None),
        "jobs": getattr(args, "jobs", None),
        "samples": getattr(args, "samples", None),
        "verify_tol": getattr(args, "tol", None),
        "strict_paper_bounds": True if getattr(args, "strict_paper_bounds", False) else None,
    }
    overrides.update(extra)
    return load_settings(args.config, overrides)


def cmd_compute(args) -> int:
    """Compute V_n and print its JSON record."""
    logger = get_logger()
    settings = _settings(args)
    result = compute_vn(args.n, settings)
    record = result.to_record()
    record["v_rounded"] = format_constant(result.v_value)
    write_text(serialize_record(record), args.out)
    logger.info(f"V_{args.n} = {format_constant(result.v_value)} (runtime {result.runtime:.1f} s)")
    return EXIT_OK if result.certified else EXIT_CERTIFICATION


def _sweep_interval(args, settings):
    upper = args.upper if args.upper is not None else upper_bound_for(args.n, settings)
    try:
        report = restrict_interval_report(args.n, upper)
    except NoRestriction as e:
        get_logger().warning(str(e))
        return e.interval
    return report.a_lo, report.a_hi


def _subproblem_path(base: str, label: str) -> str:
    tag = label.strip("{}").replace(",", "-") or "none"
    path = Path(base)
    return str(path.with_name(f"{path.stem}.active-{tag}{path.suffix or '.csv'}"))


def cmd_sweep(args) -> int:
    """Write the sweep CSV (and per-active-set CSVs)."""
    logger = get_logger()
    settings = _settings(args)
    interval = _sweep_interval(args, settings)
    if args.subproblems:
        base = args.csv or f"sweep_n{args.n}.csv"
        tables = sweep_subproblems(args.n, interval, settings.grid, settings)
        for label, rows in tables.items():
            path = _subproblem_path(base, label)
            rows_to_csv(rows, SUBPROBLEM_COLUMNS, path)
            logger.info(f"active set {label}: {len(rows)} rows -> {path}")
        return EXIT_OK

    records = sweep(args.n, interval, settings.grid, settings)
    text = rows_to_csv([r.to_row() for r in records], SWEEP_COLUMNS)
    write_text(text, args.csv)
    finite = [r for r in records if r.certified]
    if finite:
        best = min(finite, key=lambda r: (r.ratio, r.a))
        logger.info(f"grid minimum ratio {format_constant(best.ratio)} at a = {format_constant(best.a)}")
    return EXIT_OK


def cmd_verify(args) -> int:
    """Check a polynomial file for membership and report v(f) and R."""
    try:
        text = Path(args.file).read_text(encoding="utf-8")
    except OSError as e:
        raise DomainError(f"cannot read {args.file}: {e}") from e
    degree, coeffs = parse_polynomial(text)
    report = membership_c_n(coeffs, _settings(args).verify_tol)
    record = {"degree": degree, "coeffs": coeffs, "membership": report.to_dict()}
    try:
        v = v_functional(coeffs)
        record["v"] = v
        record["R"] = zero_free_constant(coeffs)
        record["v_rounded"] = format_constant(v)
        record["R_rounded"] = format_constant(record["R"])
    except DomainError as e:
        record["v"] = None
        record["R"] = None
        get_logger().warning(f"v(f) undefined: {e}")
    record["double_root"] = class_c0_membership(coeffs)
    write_text(serialize_record(record), args.out)
    return EXIT_OK if report.in_class else EXIT_CERTIFICATION


def cmd_bounds(args) -> int:
    """Print the restricted interval and the bound lines."""
    upper = args.upper if args.upper is not None else PUBLISHED_CONSTANTS[args.n - 1]
    functionals = verify_functionals(8)
    try:
        report = restrict_interval_report(args.n, upper)
    except NoRestriction as e:
        get_logger().warning(str(e))
        report = Restriction(args.n, upper, *e.interval)
    lines = []
    for line in DEFAULT_LINES:
        entry = line.to_dict()
        entry["at_a_lo"] = bound_line_eval(line, report.a_lo)
        entry["at_a_hi"] = bound_line_eval(line, report.a_hi)
        lines.append(entry)
    record = {
        "n": args.n,
        "upper": upper,
        "interval": [report.a_lo, report.a_hi],
        "interval_rounded": [format_constant(report.a_lo), format_constant(report.a_hi)],
        "lines": lines,
        "excluded": [{"line": name, "from": lo, "to": hi} for name, lo, hi in report.excluded],
        "lower_envelope": {
            "a_lo": lower_envelope(report.a_lo),
            "a_hi": lower_envelope(report.a_hi),
        },
        "functionals": [f.to_dict() for f in functionals],
    }
    write_text(serialize_record(record), args.out)
    return EXIT_OK


def cmd_audit(args) -> int:
    """Run the oracle audit and print its JSON report."""
    report = audit(args.n, _settings(args))
    write_text(serialize_record(report), args.out)
    return EXIT_OK if report["passed"] else EXIT_CERTIFICATION


def build_parser() -> CosboundParser:
    parser = CosboundParser(
        prog="cosbound",
        description="cosbound - extremal constants V_n for nonnegative cosine polynomials",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog=f"""
{colorize('Examples:', Colors.BOLD)}
  cosbound compute --n 3                      # closed-form V_3
  cosbound compute --n 7 --grid 501 --out v7.json
  cosbound sweep --n 6 --grid 201 --csv v6.csv
  cosbound bounds --n 8 --upper 34.6494874
  cosbound verify witness.json

{colorize('Environment Variables:', Colors.BOLD)}
  {CONFIG_ENV_VAR}    - Path of a 'key = value' settings file
        """,
    )
    parser.add_argument("-v", "--version", action="version", version=f"%(prog)s {__version__}")

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", type=str, default=None, help="Settings file (key = value)")
    common.add_argument("--out", type=str, default=None, help="Write JSON here instead of stdout")
    noise = common.add_mutually_exclusive_group()
    noise.add_argument("--verbose", action="store_true", help="Log solver detail")
    noise.add_argument("--quiet", action="store_true", help="Log errors only")

    solver = argparse.ArgumentParser(add_help=False)
    solver.add_argument("--grid", type=int, default=None, help="Number of a-grid points")
    solver.add_argument("--seed", type=int, default=None, help="Random seed (default: 42)")
    solver.add_argument("--restarts", type=int, default=None, help="Random restarts per subproblem")
    solver.add_argument("--jobs", type=int, default=None, help="Parallel sweep workers")
    solver.add_argument(
        "--strict-paper-bounds",
        action="store_true",
        help="Use the published V_(n-1) as upper bound instead of computing it",
    )

    sub = parser.add_subparsers(dest="command", parser_class=CosboundParser)
    sub.required = True

    p = sub.add_parser("compute", parents=[common, solver], help="Compute V_n")
    p.add_argument("--n", type=int, required=True, choices=range(2, 9), metavar="N")
    p.set_defaults(handler=cmd_compute)

    p = sub.add_parser("sweep", parents=[common, solver], help="Sweep chi_n(a) and write CSV")
    p.add_argument("--n", type=int, required=True, choices=range(4, 9), metavar="N")
    p.add_argument("--csv", type=str, default=None, help="CSV path (default: stdout)")
    p.add_argument("--upper", type=float, default=None, help="Upper bound for V_n")
    p.add_argument("--subproblems", action="store_true", help="One CSV per active set")
    p.set_defaults(handler=cmd_sweep)

    p = sub.add_parser("verify", parents=[common], help="Check a polynomial JSON file")
    p.add_argument("file", type=str, help='{"degree": n, "coeffs": [a0, ..., an]}')
    p.add_argument(
        "--tol",
        type=float,
        default=None,
        help="Membership tolerance (default: 1e-7, for 7-decimal coefficient tables)",
    )
    p.set_defaults(handler=cmd_verify)

    p = sub.add_parser("bounds", parents=[common], help="Restricted a-interval and bound lines")
    p.add_argument("--n", type=int, required=True, choices=range(4, 9), metavar="N")
    p.add_argument("--upper", type=float, default=None, help="Upper bound for V_n")
    p.set_defaults(handler=cmd_bounds)

    p = sub.add_parser("audit", parents=[common, solver], help="Oracle audit of V_n")
    p.add_argument("--n", type=int, required=True, choices=range(2, 9), metavar="N")
    p.add_argument("--samples", type=int, default=None, help="Brute-force samples per point")
    p.set_defaults(handler=cmd_audit)
    return parser


def main(argv=None) -> int:
    """Main CLI entry point."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as e:
        _report_error(str(e))
        return EXIT_USAGE

    logger = get_logger()
    if args.verbose:
        logger.set_level("debug")
    elif args.quiet:
        logger.set_level("error")
    else:
        logger.set_level("info")

    try:
        return args.handler(args)
    except CertificationFailed as e:
        _report_error(str(e))
        return EXIT_CERTIFICATION
    except (ConfigError, DomainError) as e:
        _report_error(str(e))
        return EXIT_USAGE
    except CosboundException as e:
        _report_error(str(e))
        return EXIT_CERTIFICATION
    except KeyboardInterrupt:
        print(f"\n{colorize('Interrupted', Colors.YELLOW)}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
