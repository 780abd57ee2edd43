# Copyright 2025 The wreslab Developers
# SPDX-License-Identifier: GPL-3.0-or-later
from __future__ import annotations

from pathlib import Path
import sys
from typing import Any

from wreslab import commands
import wreslab.config
from wreslab.core import Config
from wreslab.helpers import logging
from wreslab.helpers.exceptions import NonBugError


def to_shell_friendly_representation(value: Any) -> str:
    if isinstance(value, Path):
        return value.as_posix()
    return str(value)


class ConfigCommand(commands.Command):
    """Print, set or reset options of the config file."""

    def __init__(self, path: Path, name: str | None, value: str | None, reset: bool) -> None:
        self.path = path
        self.name = name
        self.value = value
        self.reset = reset

    def run(self) -> None:
        # Reload, the context config carries command line overrides
        config = wreslab.config.load(self.path)
        if self.reset:
            if self.name is None:
                raise NonBugError("config --reset requires a name to be given.")
            default = Config.get_default(self.name)
            setattr(config, self.name, default)
            logging.info(f"Config changed to default: {self.name}='{default}'")
            wreslab.config.save(self.path, config)
        elif self.value is not None:
            assert self.name is not None
            try:
                setattr(config, self.name, self.value)
            except ValueError as e:
                raise NonBugError(str(e))
            logging.info(f"Config changed: {self.name}='{self.value}'")
            wreslab.config.save(self.path, config)
        elif self.name:
            print(to_shell_friendly_representation(getattr(config, self.name)))
        else:
            # Include the defaults, even though they are not written to disk
            wreslab.config.serialize(config, skip_defaults=False).write(sys.stdout)
