# Copyright 2025 The wreslab Developers
# SPDX-License-Identifier: GPL-3.0-or-later
from .nerve import NerveData, TransitionSample, apply_map, conjugation_map, matrix_unit
from .inner import align_phase, automorphism_defect, canonical_phase, extract_inner
from .transition import Decomposition, LambdaReport, decompose_transition, reconstruct, transition_sample, verify_lambda
from .dd import CocycleReport, NerveReport, analyze_nerve, dd_cocycle, frame, root_index, triple_scalar
