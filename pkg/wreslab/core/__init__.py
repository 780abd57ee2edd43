# Copyright 2024 Caleb Connolly
# SPDX-License-Identifier: GPL-3.0-or-later

from .scalar import EXACT, F64, Field, GaussianRational, Mode, Scalar, field_for
from .config import Config
from .context import Context
from .trigpoly import TrigPoly
