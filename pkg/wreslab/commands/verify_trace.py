# Copyright 2025 The wreslab Developers
# SPDX-License-Identifier: GPL-3.0-or-later
from __future__ import annotations

from pathlib import Path

from wreslab import commands
from wreslab.core.context import get_context
from wreslab.filtered.theorem import verify_projection_trace_invariance
from wreslab.filtered.trace import ResidueTraceSpec
from wreslab.helpers import logging
from wreslab.helpers.exceptions import StructuralError, VerificationFailedError
from wreslab.parse.symbolfile import load_jet


class VerifyTrace(commands.Command):
    def __init__(self, p: Path, ptilde: Path, trace_index: int | None, out: Path | None) -> None:
        self.p = p
        self.ptilde = ptilde
        self.trace_index = trace_index
        self.out = out

    def run(self) -> None:
        mode = get_context().config.mode
        p, ptilde = load_jet(self.p, mode), load_jet(self.ptilde, mode)
        if p.field != ptilde.field:
            raise StructuralError(f"P is in {p.field.mode} mode, P̃ in {ptilde.field.mode} mode")
        levels = range(p.N) if self.trace_index is None else [self.trace_index]
        reports = [verify_projection_trace_invariance(p, ptilde, ResidueTraceSpec(j)) for j in levels]
        ok = all(r.ok for r in reports)
        commands.emit(
            {
                "n_levels": p.N,
                "checks": [r.as_dict(p.field.encode) for r in reports],
                "ok": ok,
            },
            self.out,
        )
        if not ok:
            failed = [r.j for r in reports if not r.ok]
            raise VerificationFailedError(f"Residue traces or identities differ for j in {failed}")
        logging.info(f"τ_j(P) = τ_j(P̃) for j in {list(levels)}")
