# Copyright 2024 Caleb Connolly
# SPDX-License-Identifier: GPL-3.0-or-later
from copy import deepcopy
import enum
import os
from pathlib import Path
from typing import Any

from wreslab.core.scalar import Mode


class Config:
    """Runtime options. Class attributes are the defaults, instances carry the
    values merged from the config file, the environment and the command line."""

    mode: Mode = Mode.EXACT
    # computations determine symbols down to degree -depth
    depth: int = 6
    seed: int = 1
    trials: int = 20
    # contour quadrature nodes
    nodes: int = 128
    # Fourier cutoff above which products get truncated
    cap_j: int = 64
    # odd number of grid points for float checks and Fourier fits
    grid: int = 33
    # worker processes for suite trials
    jobs: int = 1
    work: Path = Path(os.path.expanduser("~") + "/.local/var/wreslab")

    def __init__(self) -> None:
        # Make sure we aren't modifying the class defaults
        for key in Config.__annotations__.keys():
            setattr(self, key, deepcopy(Config.get_default(key)))

    @staticmethod
    def keys() -> list[str]:
        return sorted(Config.__annotations__.keys())

    @staticmethod
    def get_default(key: str) -> Any:
        if key not in Config.__annotations__:
            raise ValueError(f"Invalid config key: {key}")
        return getattr(Config, key)

    def __setattr__(self, key: str, value: Any) -> None:
        """Coerce value to the type of the default, so that strings from the
        config file and the environment end up as proper ints, Paths, Modes."""
        if key not in Config.__annotations__:
            raise ValueError(f"Invalid config key: {key}")
        _type = type(getattr(Config, key))
        try:
            super().__setattr__(key, _type(value))
        except ValueError:
            msg = f"Invalid value for '{key}': '{value}' "
            if issubclass(_type, enum.Enum):
                valid = [str(x.value) for x in _type]
                msg += f"(valid values: {', '.join(valid)})"
            else:
                msg += f"(expected {_type}, got {type(value)})"
            raise ValueError(msg)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Config):
            return NotImplemented
        return all(getattr(self, k) == getattr(other, k) for k in Config.keys())
