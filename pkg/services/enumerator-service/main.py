"""
main.py
Enumerator Service Entry Point
🧮 F_q(C(P)), F(P), f-polynomials, P-partitions and the identity suites

Exit codes: 0 success, 1 identity failure, 2 input/usage error
"""

import sys
import argparse
import time
from pathlib import Path
from typing import List, Optional, TextIO

# Add project root to path for core module
sys.path.insert(0, str(Path(__file__).parent.parent.parent))
sys.path.insert(0, str(Path(__file__).parent))

from config import Config
from commands import (
    EXIT_USAGE,
    UsageError,
    cmd_antipode_check,
    cmd_enumerate,
    cmd_fpoly,
    cmd_ppart,
    cmd_search_collision,
    cmd_survey,
    cmd_verify,
    suite_list,
)
from schemas import DocumentError, load_poset

from core.errors import EnumeratorError
from core.observability import LogLevel, StructuredLogger, get_logger, reset_logger
from core.verification import VerifyOptions

POSET_COMMANDS = ("enumerate", "fpoly", "ppart", "antipode-check")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qsym-enumerator",
        description="Weighted quasisymmetric enumerators of poset cones",
    )
    parser.add_argument("--debug", action="store_true", help="Enable debug logging on stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    def poset_command(name: str, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--input", type=str, help="Poset document (JSON or 'n: i<j ...'); stdin if omitted")
        p.add_argument("--format", choices=("text", "json"), default="text", help="Output format")
        return p

    enum = poset_command("enumerate", "Print F_q(C(P)), F(P) or one zeta coefficient")
    enum.add_argument("--basis", choices=("M", "L"), help="Monomial (default) or fundamental basis")
    enum.add_argument("--q0", action="store_true", help="Print F(P) = F_0(C(P))")
    enum.add_argument("--alpha", type=str, help="Single coefficient zeta_alpha of F_q, e.g. 1,3 (alone)")
    enum.add_argument("--m", type=int, help="Expand in x_1..x_m instead (no --basis)")

    poset_command("fpoly", "Print the f-polynomial of C(P)")

    ppart = poset_command("ppart", "P-partition generating function of the labelled poset")
    ppart.add_argument("--m", type=int, help="Number of variables for brute force (default QSYM_TRUNC_M)")
    ppart.add_argument("--extensions", action="store_true", help="Sum of L over linear extensions")
    ppart.add_argument("--basis", choices=("M", "L"), default="M", help="Basis for --extensions")

    poset_command("antipode-check", "Compare S(F_q(C(P))) with the flag sum")

    verify = sub.add_parser("verify", help="Run identity suites over all small posets")
    verify.add_argument("--max-n", type=int, help="Largest poset size (default QSYM_MAX_N)")
    verify.add_argument("--trunc-m", type=int, help="Variables for truncated checks (default QSYM_TRUNC_M)")
    verify.add_argument("--suite", type=str, default="all", help="Comma-separated suites or 'all'")
    verify.add_argument("--threads", type=int, help="Worker threads (default QSYM_THREADS)")
    verify.add_argument("--long", action="store_true", help="Allow --max-n 6")
    verify.add_argument("--json", action="store_true", help="Emit the metrics summary as JSON")

    survey = sub.add_parser("survey", help="Look for posets with equal F(P)")
    survey.add_argument("--max-n", type=int, default=5, help="Largest poset size")
    survey.add_argument("--long", action="store_true", help="Allow --max-n 6")

    search = sub.add_parser("search-collision", help="Equal F(P), different F_q(C(P))")
    search.add_argument("--n", type=int, default=4, help="Poset size")
    search.add_argument("--long", action="store_true", help="Allow --n 7")

    return parser


def read_input(path: Optional[str], stdin: TextIO) -> str:
    """UTF-8 text from --input or stdin; DocumentError on undecodable bytes"""
    try:
        if path:
            return Path(path).read_text(encoding="utf-8")
        return stdin.read()
    except UnicodeDecodeError as exc:
        raise DocumentError(f"input is not valid UTF-8: {exc.reason} at byte {exc.start}") from exc


def verify_options(config: Config, args: argparse.Namespace) -> VerifyOptions:
    """Command-line flags override the config"""
    return VerifyOptions(
        max_n=args.max_n if args.max_n is not None else config.QSYM_MAX_N,
        trunc_m=args.trunc_m if args.trunc_m is not None else config.QSYM_TRUNC_M,
        threads=args.threads if args.threads is not None else config.QSYM_THREADS,
        seed=config.QSYM_RANDOM_SEED,
        random_labellings=config.QSYM_RANDOM_LABELLINGS,
        random_antipode_posets=config.QSYM_RANDOM_ANTIPODE_POSETS,
    )


def dispatch(args: argparse.Namespace, config: Config, stdin: TextIO, out: TextIO,
             logger: StructuredLogger) -> int:
    if args.command in POSET_COMMANDS:
        P, document = load_poset(read_input(args.input, stdin))
        logger.enumerate(f"{args.command} on {P!r}", name=document.name or "")

        if args.command == "enumerate":
            return cmd_enumerate(P, out, args.format, args.basis, args.q0, args.alpha, args.m)
        if args.command == "fpoly":
            return cmd_fpoly(P, out, args.format)
        if args.command == "ppart":
            m = args.m if args.m is not None else config.QSYM_TRUNC_M
            return cmd_ppart(P, out, m, args.extensions, args.format, args.basis)
        return cmd_antipode_check(P, out, args.format)

    if args.command == "verify":
        opts = verify_options(config, args)
        if opts.max_n < 1 or opts.trunc_m < 1 or opts.threads < 1:
            raise UsageError("--max-n, --trunc-m and --threads must be >= 1")
        return cmd_verify(opts, out, suite_list(args.suite), args.long, args.json, logger)

    if args.command == "survey":
        return cmd_survey(args.max_n, out, args.long, logger)

    return cmd_search_collision(args.n, out, args.long, logger)


def main(argv: Optional[List[str]] = None,
         stdin: Optional[TextIO] = None,
         stdout: Optional[TextIO] = None) -> int:
    """Main function"""
    stdin = stdin or sys.stdin
    out = stdout or sys.stdout

    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else 0

    try:
        # Load config
        config = Config()
    except ValueError as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return EXIT_USAGE

    if args.debug:
        config.DEBUG = True

    reset_logger()
    logger = get_logger("enumerator-service", log_dir=config.LOG_DIR or None)
    logger.set_console_level(LogLevel.DEBUG if config.DEBUG else LogLevel.WARNING)

    started = time.time()
    logger.log_session_start(command=args.command)
    try:
        code = dispatch(args, config, stdin, out, logger)
    except (EnumeratorError, IndexError, UsageError, OSError) as exc:
        logger.error(f"{args.command}: {exc}", error_type=type(exc).__name__)
        code = EXIT_USAGE

    logger.log_session_end(time.time() - started, {"command": args.command, "exit_code": code})
    return code


if __name__ == "__main__":
    sys.exit(main())
