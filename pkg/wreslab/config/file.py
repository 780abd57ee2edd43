# Copyright 2023 Oliver Smith
# SPDX-License-Identifier: GPL-3.0-or-later
import configparser
import os
from pathlib import Path

from wreslab.core import Config
from wreslab.helpers import logging
from wreslab.helpers.exceptions import NonBugError

SECTION = "wreslab"


def load(path: Path) -> Config:
    """Read the [wreslab] section of path on top of the defaults. A missing
    file gives the defaults.

    :raises NonBugError: if a value does not fit the type of its option
    """
    config = Config()
    cfg = configparser.ConfigParser()
    if os.path.isfile(path):
        try:
            cfg.read(path)
        except configparser.Error as e:
            raise NonBugError(f"Can't parse {path}: {e}")
    if SECTION not in cfg:
        return config

    section = cfg[SECTION]
    for key, value in section.items():
        if key not in Config.keys():
            logging.warning(f"WARNING: {path}: ignoring unknown option '{key}'")
            continue
        if isinstance(Config.get_default(key), Path):
            value = os.path.expanduser(value)
        try:
            setattr(config, key, value)
        except ValueError as e:
            raise NonBugError(f"{path}: {e}")
    return config


def serialize(config: Config, skip_defaults: bool = True) -> configparser.ConfigParser:
    """Serialize the config object into the wreslab.cfg INI format.

    :param config: The config object to serialize
    :param skip_defaults: Skip options that still have their default value,
        so that a changed default reaches users who never set the option
    """
    cfg = configparser.ConfigParser()
    cfg[SECTION] = {
        key: str(getattr(config, key))
        for key in Config.keys()
        if not (skip_defaults and Config.get_default(key) == getattr(config, key))
    }
    return cfg


def save(output: Path, config: Config) -> None:
    """Save the config object to the specified path.

    IMPORTANT: The global config (available via get_context().config)
    has invocation arguments merged into it. Do NOT call save() with
    the global config object."""
    logging.debug(f"Save config: {output}")
    output.parent.mkdir(parents=True, exist_ok=True)
    with output.open("w") as handle:
        serialize(config).write(handle)
