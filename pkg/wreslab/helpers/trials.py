# Copyright 2025 The wreslab Developers
# SPDX-License-Identifier: GPL-3.0-or-later
"""Seeded trial streams and the worker pool that runs them.

Trial i always draws from the i-th child of SeedSequence(seed), whatever the
number of workers, so a counterexample is reproducible from (seed, index).
"""

from __future__ import annotations

from collections.abc import Callable
import multiprocessing as mp
from typing import Any, TypeVar

import numpy as np

from wreslab.core.scalar import Field, GaussianRational
from wreslab.helpers import logging

T = TypeVar("T")

# Exact random entries are Gaussian integers with parts in [-RANGE, RANGE]
RANGE = 3


def trial_seeds(seed: int, trials: int) -> list[np.random.SeedSequence]:
    return np.random.SeedSequence(seed).spawn(trials)


def trial_rng(seed: int, index: int) -> np.random.Generator:
    """The generator of a single trial, e.g. to replay a counterexample."""
    return np.random.default_rng(np.random.SeedSequence(seed).spawn(index + 1)[index])


def _call(job: tuple[Callable[[int, np.random.Generator], Any], int, np.random.SeedSequence]) -> Any:
    fn, index, seq = job
    return fn(index, np.random.default_rng(seq))


def run_trials(fn: Callable[[int, np.random.Generator], T], seed: int, trials: int, jobs: int = 1) -> list[T]:
    """fn(index, rng) for every trial, results ordered by index.

    fn must be a module-level function when jobs > 1, so it can be pickled.
    """
    work = [(fn, i, seq) for i, seq in enumerate(trial_seeds(seed, trials))]
    if jobs <= 1 or trials <= 1:
        return [_call(job) for job in work]
    logging.debug(f"Running {trials} trials on {jobs} workers")
    with mp.Pool(processes=jobs) as pool:
        return pool.map(_call, work)


# Random scalars


def random_scalar(field: Field, rng: np.random.Generator, scale: float = 1.0) -> Any:
    if field.exact:
        re, im = rng.integers(-RANGE, RANGE + 1, size=2)
        return GaussianRational(int(re), int(im))
    return complex(scale * rng.normal(), scale * rng.normal())


def random_matrix(field: Field, k: int, rng: np.random.Generator, scale: float = 1.0) -> np.ndarray:
    return field.matrix([[random_scalar(field, rng, scale) for _ in range(k)] for _ in range(k)])
