"""Closed convex planar ordering cones containing the nonnegative orthant.

A cone is described by its inner angle gamma in [pi/2, pi] and a rotation
phi.  The complementary rotation is phi' = gamma - pi/2 - phi, and the cone
is the preimage of the nonnegative orthant under the linear map

    T(y) = ( cos(phi') * y1 + sin(phi') * y2,
             sin(phi)  * y1 + cos(phi)  * y2 ).

The induced vector preorder compares y <= y' exactly when y' - y lies in the
cone, equivalently when T(y) <= T(y') componentwise.  gamma = pi/2 (forcing
phi = 0) recovers the componentwise order; gamma = pi gives the halfplane of
a positively weighted sum.  Admissible rotations form the closed interval
[0, gamma - pi/2] for gamma < pi and the open interval (0, pi/2) for
gamma = pi, where the two axis-aligned halfplanes must be excluded.

In direction space the cone spans the angles [-phi, gamma - phi], which is
what dominating_rotations() exploits to invert membership queries over phi.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import InadmissibleCone, ZeroDirection
from .intervals import PhiIntervalSet
from .tolerances import TAU_ANGLE, TAU_VAL

HALF_PI = 0.5 * math.pi

Vector2 = tuple[float, float]


def admissible(gamma: float, phi: float) -> bool:
    """Whether (gamma, phi) describes a cone that contains the nonnegative
    orthant and meets the negative orthant only at the origin.

    Pure predicate; comparisons are relaxed by TAU_ANGLE.  For gamma = pi
    the rotations 0 and pi/2 are excluded (those halfplanes contain a
    negative direction).
    """
    if not (math.isfinite(gamma) and math.isfinite(phi)):
        return False
    if gamma < HALF_PI - TAU_ANGLE or gamma > math.pi + TAU_ANGLE:
        return False
    hi = gamma - HALF_PI
    if phi < -TAU_ANGLE or phi > hi + TAU_ANGLE:
        return False
    if gamma >= math.pi - TAU_ANGLE and (phi < TAU_ANGLE or phi > hi - TAU_ANGLE):
        return False
    return True


def admissible_range(gamma: float) -> tuple[float, float]:
    """Admissible rotation interval for the given inner angle.

    For gamma = pi the mathematically open interval (0, pi/2) is represented
    by shrinking both ends by TAU_ANGLE.  Raises InadmissibleCone for gamma
    outside [pi/2, pi].
    """
    if not math.isfinite(gamma) or gamma < HALF_PI - TAU_ANGLE or gamma > math.pi + TAU_ANGLE:
        raise InadmissibleCone(f"inner angle {gamma!r} outside [pi/2, pi]")
    hi = max(gamma - HALF_PI, 0.0)
    if gamma >= math.pi - TAU_ANGLE:
        return (TAU_ANGLE, hi - TAU_ANGLE)
    return (0.0, hi)


@dataclass(frozen=True)
class ConeParams:
    """An admissible (gamma, phi) pair with its derived angles.

    Raises InadmissibleCone on construction if the pair is not admissible.
    """

    gamma: float
    phi: float

    def __post_init__(self) -> None:
        if not admissible(self.gamma, self.phi):
            raise InadmissibleCone(f"(gamma={self.gamma!r}, phi={self.phi!r}) is not admissible")

    @classmethod
    def pareto(cls) -> "ConeParams":
        """The componentwise order: gamma = pi/2, phi = 0."""
        return cls(HALF_PI, 0.0)

    @property
    def phi_prime(self) -> float:
        return self.gamma - HALF_PI - self.phi

    @property
    def phi_bar(self) -> float:
        """The symmetric rotation for this inner angle (phi = phi')."""
        return 0.5 * self.gamma - 0.25 * math.pi

    def matrix(self) -> tuple[Vector2, Vector2]:
        """Rows of the linear map reducing this cone order to componentwise."""
        pp = self.phi_prime
        return (
            (math.cos(pp), math.sin(pp)),
            (math.sin(self.phi), math.cos(self.phi)),
        )


def transform(params: ConeParams, y: Vector2) -> Vector2:
    """Apply the cone's reduction map to a single vector."""
    (a, b), (c, d) = params.matrix()
    return (a * y[0] + b * y[1], c * y[0] + d * y[1])


def cone_contains(params: ConeParams, d: Vector2, tol: float = TAU_VAL) -> bool:
    """Closed-cone membership, relaxed by an absolute tolerance on the
    transformed coordinates."""
    t1, t2 = transform(params, d)
    return t1 >= -tol and t2 >= -tol


def cone_leq(params: ConeParams, y: Vector2, y2: Vector2) -> bool:
    """y precedes y2 in the cone order (y2 - y lies in the cone)."""
    return cone_contains(params, (y2[0] - y[0], y2[1] - y[1]))


def rotation_window(gamma: float, d: Vector2) -> tuple[float, float]:
    """Unclipped rotation interval [-theta, gamma - theta] on which d lies in
    the cone, with theta = atan2(d2, d1).  Raises ZeroDirection for d = (0, 0)."""
    if d[0] == 0.0 and d[1] == 0.0:
        raise ZeroDirection("direction (0, 0) has no rotation window")
    theta = math.atan2(d[1], d[0])
    return (-theta, gamma - theta)


def dominating_rotations(gamma: float, d: Vector2) -> PhiIntervalSet:
    """All admissible rotations phi for which d lies in the cone (gamma, phi).

    The rotation window of d clipped to the admissible range: empty, a
    single closed interval (possibly a point), or the whole range.  Raises
    ZeroDirection for d = (0, 0), since callers use this to invert dominance
    queries and equal images never dominate.
    """
    ambient = admissible_range(gamma)
    raw_lo, raw_hi = rotation_window(gamma, d)
    lo = max(ambient[0], raw_lo)
    hi = min(ambient[1], raw_hi)
    if lo > hi:
        return PhiIntervalSet.empty(ambient)
    return PhiIntervalSet(ambient, ((lo, hi),))
