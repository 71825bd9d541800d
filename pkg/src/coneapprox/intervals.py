"""Unions of disjoint closed rotation intervals inside an admissible range.

These sets answer the existential quantifier in gamma-supportedness queries
("is there some rotation at which ..."): a solution's admissible rotations
start as the full range and dominating intervals are subtracted one by one.
Subtraction is exact up to TAU_ANGLE: remainder slivers not longer than
TAU_ANGLE are dropped, and subtrahends not longer than TAU_ANGLE are
invisible (a finite instance would need ~1e12 dominators for that to
matter).  A degenerate ambient range (gamma = pi/2, where phi = 0 is the
only admissible rotation) is kept as the single point interval and is
emptied by any subtrahend touching it.
"""

from __future__ import annotations

from dataclasses import dataclass

from .tolerances import TAU_ANGLE

Interval = tuple[float, float]


@dataclass(frozen=True)
class PhiIntervalSet:
    """Sorted, pairwise disjoint closed intervals within `ambient`."""

    ambient: Interval
    intervals: tuple[Interval, ...] = ()

    @classmethod
    def full(cls, ambient: Interval) -> "PhiIntervalSet":
        return cls(ambient, (ambient,))

    @classmethod
    def empty(cls, ambient: Interval) -> "PhiIntervalSet":
        return cls(ambient, ())

    def is_empty(self) -> bool:
        return not self.intervals

    def is_full(self) -> bool:
        if not self.intervals:
            return self.ambient[1] - self.ambient[0] < -TAU_ANGLE
        return (
            len(self.intervals) == 1
            and self.intervals[0][0] <= self.ambient[0] + TAU_ANGLE
            and self.intervals[0][1] >= self.ambient[1] - TAU_ANGLE
        )

    def total_length(self) -> float:
        return sum(hi - lo for lo, hi in self.intervals)

    def min_length(self) -> float:
        """Length of the shortest interval; 0.0 if the set is empty."""
        if not self.intervals:
            return 0.0
        return min(hi - lo for lo, hi in self.intervals)

    def contains(self, phi: float, tol: float = TAU_ANGLE) -> bool:
        return any(lo - tol <= phi <= hi + tol for lo, hi in self.intervals)

    def subtract(self, lo: float, hi: float, keep_lo: bool = False, keep_hi: bool = False) -> "PhiIntervalSet":
        """Remove the interval [lo, hi], exact up to TAU_ANGLE.

        keep_lo / keep_hi exclude that endpoint from removal (the subtrahend
        is treated as open there); the surviving endpoint is retained even as
        a degenerate single-point interval.  Closed removal drops remainder
        slivers not longer than TAU_ANGLE.
        """
        a0, a1 = self.ambient
        if a1 - a0 <= TAU_ANGLE:
            # Degenerate range: the single admissible rotation either survives
            # untouched or is removed outright (endpoint flags do not apply).
            if self.intervals and lo - TAU_ANGLE <= a0 <= hi + TAU_ANGLE:
                return PhiIntervalSet.empty(self.ambient)
            return self
        if hi - lo <= TAU_ANGLE and not (keep_lo or keep_hi):
            return self
        out: list[Interval] = []
        for p, q in self.intervals:
            if q <= lo or p >= hi:
                out.append((p, q))
                continue
            left = min(q, lo) - p
            if left > TAU_ANGLE or (keep_lo and 0.0 <= left):
                out.append((p, min(q, lo)))
            right = q - max(p, hi)
            if right > TAU_ANGLE or (keep_hi and 0.0 <= right):
                out.append((max(p, hi), q))
        return PhiIntervalSet(self.ambient, tuple(out))
