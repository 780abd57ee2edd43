# Copyright 2023 Oliver Smith
# SPDX-License-Identifier: GPL-3.0-or-later
# PYTHON_ARGCOMPLETE_OK
import os
import sys
import traceback
from typing import TYPE_CHECKING

from wreslab.helpers.exceptions import (
    NonBugError,
    PrecisionError,
    SchemaError,
    VerificationFailedError,
)

if TYPE_CHECKING:
    from wreslab.types import WreslabArgs

from . import parse
from .core import Config
from .core.context import get_context
from .commands import run_command
from .helpers import logging

__version__ = "1.0.0"

# Python version check (match/case, X | Y unions)
version = sys.version_info
if version < (3, 10):
    print("You need at least Python 3.10 to run wreslab")
    print("(You are running it with Python " + str(version.major) + "." + str(version.minor) + ")")
    sys.exit()

# Actions whose stdout is their result
QUIET_ACTIONS = ["compose", "adjoint", "residue", "lift", "self-adjointize", "config", "log"]


def print_log_hint() -> None:
    context = get_context(allow_failure=True)
    if context and context.details_to_stdout:
        return
    log = context.log if context else Config().work / "log.txt"
    hint = "Run 'wreslab log' for details."
    if not os.path.exists(log):
        hint += (
            " Alternatively you can use '--details-to-stdout' to see every"
            " Newton step and trial, e.g. 'wreslab --details-to-stdout suite vanish'."
        )
    print(file=sys.stderr)
    print(hint, file=sys.stderr)


def explain(exception: NonBugError) -> None:
    """One extra line for the errors a user can fix from the command line."""
    if isinstance(exception, PrecisionError) and exception.attainable is not None:
        logging.info(
            f"NOTE: the inputs determine degrees down to {exception.attainable},"
            f" try --depth {max(-exception.attainable, 0)} or extend the input symbols"
        )
    elif isinstance(exception, SchemaError):
        logging.info("NOTE: see docs/usage.rst for the layout of symbol, jet and nerve files")


def main() -> int:
    args: WreslabArgs
    try:
        # Parse arguments, set up logging and the context
        args = parse.arguments()

        if not args.action:
            logging.info("Run wreslab -h for usage information.")
            return 0
        run_command(args)
        if args.action not in QUIET_ACTIONS:
            logging.info("DONE!")

    except KeyboardInterrupt:
        print("\nCaught KeyboardInterrupt, exiting …")
        sys.exit(130)  # SIGINT(2) + 128

    except NonBugError as exception:
        logging.error(f"ERROR: {exception}")
        explain(exception)
        return 2

    except VerificationFailedError as exception:
        logging.error(f"ERROR: {exception}")
        print_log_hint()
        return 3

    except Exception as e:
        # Logging is not set up if parsing the arguments failed
        if "args" not in locals():
            import logging as pylogging

            pylogging.getLogger().setLevel(logging.DEBUG)

        logging.info("ERROR: " + str(e))
        logging.debug(traceback.format_exc())

        print_log_hint()
        print(file=sys.stderr)
        print("This is a bug in wreslab, please report it together with the log.", file=sys.stderr)
        print(f"Your version: {__version__}", file=sys.stderr)
        return 1

    return 0
