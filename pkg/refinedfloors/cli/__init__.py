"""cli - command-line front end with a fixed exit-code contract"""
import json
import logging
import sys
from typing import List, Optional, TextIO

from rich.console import Console

from config import JSON_INDENT
from display_manager import DisplayManager
from errors import DomainError, InvariantViolation, SearchBudgetExceeded, VerificationFailure
from run_logger import RunLogger
from .commands import COMMANDS, CommandContext
from .parser import UsageError, build_parser

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DOMAIN = 2
EXIT_BUDGET = 3
EXIT_VERIFICATION = 4


def dumps(payload) -> str:
    """Deterministic JSON with sorted keys."""
    return json.dumps(payload, sort_keys=True, indent=JSON_INDENT)


def _emit(ctx: Optional[CommandContext], payload, out: TextIO) -> None:
    if payload is not None and (ctx is None or ctx.display is None):
        out.write(dumps(payload) + "\n")


def run(argv: List[str], out: Optional[TextIO] = None, err: Optional[TextIO] = None) -> int:
    """
    Run one CLI invocation.

    Args:
        argv: Arguments without the program name
        out: Result stream (default stdout)
        err: Diagnostic stream (default stderr)

    Returns:
        Exit code: 0 ok, 1 usage, 2 domain error, 3 budget exhausted,
        4 verification failure
    """
    out = out or sys.stdout
    err = err or sys.stderr

    try:
        args = build_parser().parse_args(argv)
    except UsageError as e:
        err.write(f"{e}\n")
        return EXIT_USAGE
    except SystemExit as e:  # --help
        return int(e.code or 0)

    run_logger = None
    if args.log_run:
        run_logger = RunLogger.get_instance(args.log_run)
        run_logger.log_command_start(args.command, argv)
    elif not logging.getLogger().handlers:
        logging.getLogger().addHandler(logging.NullHandler())

    display = DisplayManager(Console(file=out)) if args.pretty else None
    ctx = CommandContext(args, display, run_logger)
    code = EXIT_OK
    try:
        payload = COMMANDS[args.command](ctx)
        _emit(ctx, payload, out)
    except DomainError as e:
        logger.error(f"[cli] {type(e).__name__}: {e}", exc_info=True)
        err.write(f"error: {type(e).__name__}: {e}\n")
        code = EXIT_DOMAIN
    except SearchBudgetExceeded as e:
        logger.error(f"[cli] {e}", exc_info=True)
        err.write(f"error: SearchBudgetExceeded: {e}\n")
        code = EXIT_BUDGET
    except (VerificationFailure, InvariantViolation) as e:
        logger.error(f"[cli] {type(e).__name__}: {e}", exc_info=True)
        _emit(ctx, ctx.payload, out)
        err.write(f"error: {type(e).__name__}: {e}\n")
        code = EXIT_VERIFICATION
    except ValueError as e:
        # malformed environment overrides
        logger.error(f"[cli] {e}", exc_info=True)
        err.write(f"error: {e}\n")
        code = EXIT_USAGE

    if run_logger:
        if code:
            run_logger.log_error(f"exit {code}")
        run_logger.log_run_end(code)
    return code


# Export public API
__all__ = ['run', 'build_parser', 'dumps', 'UsageError', 'CommandContext', 'COMMANDS',
           'EXIT_OK', 'EXIT_USAGE', 'EXIT_DOMAIN', 'EXIT_BUDGET', 'EXIT_VERIFICATION']
