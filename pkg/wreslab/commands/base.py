# Copyright 2024 Caleb Connolly
# SPDX-License-Identifier: GPL-3.0-or-later
from pathlib import Path
from typing import Any

from wreslab.parse.symbolfile import dumps, write_json


class Command:
    """Base class for wreslab commands."""

    def run(self) -> None:
        """Run the command."""
        raise NotImplementedError()


def emit(obj: Any, out: Path | None) -> None:
    """Write a JSON result to out, or print it to stdout."""
    if out is None:
        print(dumps(obj), end="")
    else:
        write_json(out, obj)
