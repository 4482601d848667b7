# Libraries
import argparse
import logging
import sys
from pathlib import Path

# Modules
from rgroup import __version__
from rgroup.analysis.pipeline import run_pipeline
from rgroup.cli.report import build_report, dump_report, render_text, suite_lines
from rgroup.config import ORACLE_R_MAX_CEILING, configure_logging, get_settings
from rgroup.data_quality.suites import SCOPE_ALIASES, SCOPES, datum_suites, run_oracle
from rgroup.datum.data_loading import dump_document, load_document, parse_datum
from rgroup.datum.fixtures import FIXTURES, fixture_document
from rgroup.errors import RGroupError, SchemaError, ValidationError

logger = logging.getLogger(__name__)

USAGE_ERROR = 1


class _Parser(argparse.ArgumentParser):
    """Usage errors exit 1; exit 2 is reserved for datum validation failures."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(USAGE_ERROR, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="rgroup", description="Knapp-Stein R-groups and elliptic components for Levi subgroups of SU_n.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--log-level", help="Overrides RGROUP_LOG_LEVEL.")
    sub = parser.add_subparsers(dest="command", required=True)

    validate = sub.add_parser("validate", help="Check a datum document and list every violated rule.")
    validate.add_argument("path")
    validate.add_argument("--strict-diff-rule", action="store_true", help="Require Diff(i,j) ∈ Δ′ whenever π_i ≃ π_j.")

    analyze = sub.add_parser("analyze", help="Compute R(σ), its irreps, the regular set and the elliptic split.")
    analyze.add_argument("path")
    output = analyze.add_mutually_exclusive_group()
    output.add_argument("--json", dest="as_json", action="store_true", help="Emit the JSON report.")
    output.add_argument("--text", dest="as_json", action="store_false", help="Emit the text report (default).")
    analyze.add_argument("--with-oracle", action="store_true", help="Run every per-datum oracle suite and embed the results.")
    analyze.add_argument("--strict-diff-rule", action="store_true")
    analyze.set_defaults(as_json=False)

    oracle = sub.add_parser("oracle", help="Run brute-force oracle suites over generated data.")
    oracle.add_argument("scope", help=f"One of: {', '.join(SCOPES)} (or {', '.join(SCOPE_ALIASES)}).")
    oracle.add_argument("--r-max", type=int, help=f"Largest rank to enumerate (at most {ORACLE_R_MAX_CEILING}).")
    oracle.add_argument("--workers", type=int, help="Worker processes for the per-datum suites.")

    fixtures = sub.add_parser("fixtures", help="Write a shipped fixture document.")
    fixtures.add_argument("name", nargs="?")
    fixtures.add_argument("-o", "--output", help="Write to this path instead of stdout.")
    fixtures.add_argument("--list", action="store_true", help="List fixture names.")
    return parser


def cmd_validate(args) -> int:
    d = parse_datum(load_document(args.path), strict_diff=args.strict_diff_rule)
    print(f"VALID: r = {d.r}, m = {d.m}, |Ŵ(σ)| = {len(d.w_sigma_hat)} ({d.w_sigma_hat_mode})")
    return 0


def cmd_analyze(args) -> int:
    d = parse_datum(load_document(args.path), strict_diff=args.strict_diff_rule)
    result = run_pipeline(d)
    oracle = datum_suites(d) if args.with_oracle else None
    report = build_report(result, oracle)
    sys.stdout.write(dump_report(report) if args.as_json else render_text(report))
    if oracle is not None and not all(suite.passed for suite in oracle):
        logger.error("Oracle suites failed for %s", args.path)
        return 3
    return 0


def cmd_oracle(args, settings) -> int:
    if args.scope not in SCOPES and args.scope not in SCOPE_ALIASES:
        print(f"Unknown scope {args.scope!r}; choose from {', '.join(SCOPES)}", file=sys.stderr)
        return USAGE_ERROR
    r_max = args.r_max if args.r_max is not None else settings.oracle_r_max
    workers = args.workers if args.workers is not None else settings.oracle_workers
    if not 1 <= r_max <= ORACLE_R_MAX_CEILING:
        print(f"--r-max must be between 1 and {ORACLE_R_MAX_CEILING}, got {r_max}", file=sys.stderr)
        return USAGE_ERROR
    if workers < 1:
        print(f"--workers must be at least 1, got {workers}", file=sys.stderr)
        return USAGE_ERROR

    results = run_oracle(args.scope, r_max, workers)
    for suite in results:
        summary = suite.to_dict()
        print("\n".join(suite_lines(summary)))
        if suite.counterexample is not None:
            print("    counterexample:")
            print("\n".join(f"      {line}" for line in dump_document(suite.counterexample).splitlines()))
    return 0 if all(suite.passed for suite in results) else 3


def cmd_fixtures(args) -> int:
    if args.list:
        print("\n".join(FIXTURES))
        return 0
    if args.name is None:
        print(f"Name a fixture: {', '.join(FIXTURES)}", file=sys.stderr)
        return USAGE_ERROR
    try:
        text = dump_document(fixture_document(args.name))
    except KeyError as e:
        print(e.args[0], file=sys.stderr)
        return USAGE_ERROR
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
        logger.info("Wrote fixture %s to %s", args.name, args.output)
    else:
        sys.stdout.write(text)
    return 0


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        settings = get_settings()
    except RuntimeError as e:
        print(f"error: {e}", file=sys.stderr)
        return USAGE_ERROR
    configure_logging(args.log_level or settings.log_level)

    try:
        if args.command == "validate":
            return cmd_validate(args)
        if args.command == "analyze":
            return cmd_analyze(args)
        if args.command == "oracle":
            return cmd_oracle(args, settings)
        return cmd_fixtures(args)
    except SchemaError as e:
        print(f"SCHEMA ERROR: {e}", file=sys.stderr)
        return e.exit_code
    except ValidationError as e:
        print(f"INVALID: {e}", file=sys.stderr)
        return e.exit_code
    except RGroupError as e:
        print(f"INCONSISTENT: {e}", file=sys.stderr)
        return e.exit_code


if __name__ == "__main__":
    raise SystemExit(main())
