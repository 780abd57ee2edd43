# Copyright 2023 Oliver Smith
# SPDX-License-Identifier: GPL-3.0-or-later
import os
import sys

import wreslab
import wreslab.config
from wreslab.core import Config
import wreslab.core.context
from wreslab.core.context import ENV_CAP_J, Context
from wreslab.helpers import logging
from wreslab.helpers.exceptions import NonBugError
from wreslab.types import WreslabArgs

"""This file turns the parsed command line into the runtime context.

    1. Argparse
       Variables directly from command line argument parsing (see
       wreslab/parse/arguments.py, the "dest" parameter of the add_argument()
       calls defines where it is stored in args).

       Examples:
       args.action ("residue", "lift", "suite" etc.)
       args.method ("algebraic" or "contour")

    2. Argparse merged with others
       Options from the user's config file (~/.config/wreslab.cfg) that can be
       overridden from the command line and fall back to the class defaults of
       wreslab.core.config.Config. The Fourier cap additionally reads
       $WRESLAB_CAP_J, which ranks between the config file and --cap-j.

       Examples:
       get_context().config.mode (Mode.EXACT, override with --mode)
       get_context().config.depth (6, override with --depth)
"""


def init(args: WreslabArgs) -> WreslabArgs:
    if args.config != wreslab.config.defaults["config"] and not args.config.exists():
        raise NonBugError(f"Couldn't find file passed with --config: {args.config}")
    config = wreslab.config.load(args.config)

    env_cap = os.environ.get(ENV_CAP_J)
    if env_cap:
        try:
            config.cap_j = env_cap
        except ValueError as e:
            raise NonBugError(f"${ENV_CAP_J}: {e}")

    # Override config at runtime with command line arguments
    for key in Config.keys():
        value = getattr(args, key, None)
        if value is not None:
            try:
                setattr(config, key, value)
            except ValueError as e:
                raise NonBugError(str(e))

        # Deny accessing the attribute via args
        if hasattr(args, key):
            delattr(args, key)

    if config.depth < 0:
        raise NonBugError(f"--depth counts degrees below the order and must be >= 0, got {config.depth}")
    if config.grid % 2 == 0:
        raise NonBugError(f"The grid needs an odd number of points, got {config.grid}")
    if config.jobs < 1:
        raise NonBugError(f"--jobs must be positive, got {config.jobs}")

    # Configure runtime context
    context = Context(config)
    if args.log:
        context.log = args.log
    context.details_to_stdout = args.details_to_stdout
    context.quiet = args.quiet
    context.verbose = args.verbose
    context.command = args.action or ""
    wreslab.core.context.set_context(context)

    # Initialize logs (we could raise errors below)
    logging.init(context.log, args.verbose, context.details_to_stdout, context.quiet)
    logging.debug(f"wreslab v{wreslab.__version__} (Python {sys.version})")
    logging.debug(f"Config: mode={config.mode} depth={config.depth} seed={config.seed} cap_j={config.cap_j}")

    # Remove attributes from args so they don't get used by mistake
    for key in ("details_to_stdout", "log", "quiet"):
        delattr(args, key)
    return args
