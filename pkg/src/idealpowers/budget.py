"""Cooperative resource limits for candidate-enumeration loops.

Checks happen between candidates, never inside an arithmetic step, so exact
state is never left half-written when a limit fires.
"""

from __future__ import annotations

import time

from .errors import LimitExceededError


class Budget:
    def __init__(self, max_candidates: int | None = None, seconds: float | None = None):
        self.max_candidates = max_candidates
        self.deadline = time.monotonic() + seconds if seconds is not None else None
        self.count = 0

    def tick(self, n: int = 1) -> None:
        self.count += n
        if self.max_candidates is not None and self.count > self.max_candidates:
            raise LimitExceededError(
                "candidate-budget",
                f"candidate budget exceeded ({self.count} > {self.max_candidates})",
            )
        if self.deadline is not None and time.monotonic() > self.deadline:
            raise LimitExceededError("time-budget", "time budget exceeded")
