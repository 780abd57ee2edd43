# Copyright 2024 Caleb Connolly
# SPDX-License-Identifier: GPL-3.0-or-later

from __future__ import annotations

from collections import deque

from wreslab import commands
from wreslab.core.context import get_context


class Log(commands.Command):
    clear_log: bool
    lines: int

    def __init__(self, clear_log: bool, lines: int) -> None:
        self.clear_log = clear_log
        self.lines = lines

    def run(self) -> None:
        log = get_context().log
        if self.clear_log:
            log.write_text("")
            return
        if not log.exists():
            return
        # The log is kept open for appending by the logging handler
        with open(log, encoding="utf-8", errors="replace") as handle:
            tail = deque(handle, maxlen=self.lines)
        print("".join(tail), end="")
