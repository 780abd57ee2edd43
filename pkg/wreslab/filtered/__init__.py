# Copyright 2025 The wreslab Developers
# SPDX-License-Identifier: GPL-3.0-or-later
from .jet import JetOp, MatrixJet, jet_product, jet_ring_ops
from .trace import ResidueTraceSpec, all_traces, residue_trace
from .idempotent import (
    is_idempotent,
    jet_newton_steps,
    newton_idempotent_lift,
    perturbed_lift,
    unit_conjugate,
    unit_inverse,
)
from .theorem import (
    ExpansionCheck,
    ProjectionTraceReport,
    abcd_decompose,
    catalan,
    commutator_representation,
    expansion_coefficients,
    series_residual,
    verify_projection_trace_invariance,
)
