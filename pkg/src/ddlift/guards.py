"""Enumeration guards.

Every potentially explosive enumeration (point tables, block orbits,
transversal subset scans) is bounded by an explicit cap.  Exceeding a cap
raises :class:`GuardExceeded` with the offending count; nothing is ever
silently sampled or truncated.
"""

from __future__ import annotations

from dataclasses import dataclass


class GuardExceeded(RuntimeError):
    """An enumeration would exceed its configured cap."""

    def __init__(self, what: str, required: int, cap: int):
        super().__init__(f"{what} requires {required} items, cap is {cap}")
        self.what = what
        self.required = required
        self.cap = cap


@dataclass(frozen=True)
class Limits:
    """Caps for the enumeration cores."""

    max_points: int = 1_000_000
    max_blocks: int = 1_000_000
    max_subsets: int = 10_000_000
    max_matrix_side: int = 4096
    max_codewords: int = 2**20


DEFAULT_LIMITS = Limits()


def check(what: str, required: int, cap: int) -> None:
    if required > cap:
        raise GuardExceeded(what, required, cap)
