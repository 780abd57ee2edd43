# Copyright 2023 Oliver Smith
# SPDX-License-Identifier: GPL-3.0-or-later
import os
from pathlib import Path

#
# Exported functions
#
from wreslab.config.file import load, save, serialize


#
# Exported variables (internal configuration)
#
wreslab_src: Path = Path(Path(__file__) / "../../..").resolve()

defaults = {
    "config": Path(os.path.expanduser("~") + "/.config/wreslab.cfg"),
    "log": None,
}

# Tolerances. Exact mode never uses them: identities there must hold with
# equality.

# transition maps: multiplicativity, scalar image of the identity
structural_tol = 1e-8
# root-of-unity tests, lambda relations, round trips, idempotency on a grid
scalar_tol = 1e-10
# one floating point operation
float_op_tol = 1e-12
# minimal distance of principal eigenvalues from the lifting contour
contour_clearance = 0.05
# minimal |eigenvalue| of A(x) for positive spectral projections
spectral_gap = 1e-8

# Radius and centre of the circle the contour lift integrates over
contour_center = 1.0
contour_radius = 0.5

# Default sizes of randomized suites
suite_defaults = {
    "k": 2,
    "n_levels": 6,
    "max_j": 4,
}
