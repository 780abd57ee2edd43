# Copyright 2025 The wreslab Developers
# SPDX-License-Identifier: GPL-3.0-or-later
from .wres import RESIDUE_DEGREE, ResidueReport, geometric, residue_report, wres, wres_density

__all__ = ["RESIDUE_DEGREE", "ResidueReport", "geometric", "residue_report", "wres", "wres_density"]
