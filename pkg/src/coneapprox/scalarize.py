"""Weighted sum and weighted max-ordering scalarizations.

The max-ordering scalarization minimizes max(w1*f1, w2*f2) over the
solutions.  For a transformed instance of inner angle gamma and rotation
phi, the balanced weights

    w1 = sqrt(sin phi)/sqrt(cos phi') + sqrt(cos phi)/sqrt(sin phi')
    w2 = sqrt(sin phi')/sqrt(cos phi) + sqrt(cos phi')/sqrt(sin phi)

equalize the two weighted transformed components of any solution whose
objective ratio f1/f2 equals sqrt(tan phi')/sqrt(tan phi).  Optimizing this
scalarization for the rotation matched to each realized objective ratio is
what drives the covering-set guarantee: every solution gets covered within
factor 1 + sqrt(tan phi * tan phi') <= 1 + tan(gamma/2 - pi/4).

rotation_for_ratio inverts the matching: given a ratio q it returns the
rotation with sqrt(tan phi')/sqrt(tan phi) = q, in closed form

    phi = arctan( (s*tan gamma + sqrt(1 + s^2 * tan^2 gamma)) / q ),
    s = (q + 1/q) / 2,

falling back to bisection on the (monotone) defining property when
tan(gamma) is too large for the closed form to be well conditioned.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    AlphaBelowOne,
    DegeneratePhi,
    InadmissibleCone,
    InvalidRatio,
    NonpositiveWeight,
    UnsupportedSense,
)
from .geometry import HALF_PI, ConeParams
from .instances import MAX, MIN, Instance
from .tolerances import TAU_ANGLE, TAU_VAL

# Beyond this magnitude of tan(gamma) the closed form for rotation_for_ratio
# is ill conditioned; the defining property itself is authoritative.
_CLOSED_FORM_TAN_LIMIT = 1e6


@dataclass(frozen=True)
class MaxOrderingWeights:
    """A strictly positive weight pair for the max-ordering scalarization."""

    w1: float
    w2: float

    def __post_init__(self) -> None:
        if not (self.w1 > 0.0 and self.w2 > 0.0 and math.isfinite(self.w1) and math.isfinite(self.w2)):
            raise NonpositiveWeight(f"weights must be finite and > 0, got ({self.w1!r}, {self.w2!r})")


def weighted_sum_optima(instance: Instance, w1: float, w2: float) -> set[str]:
    """Argmin (argmax for maximization) set of w1*f1 + w2*f2, ties within TAU_VAL."""
    if not (w1 > 0.0 and w2 > 0.0):
        raise NonpositiveWeight(f"weights must be > 0, got ({w1!r}, {w2!r})")
    arr = instance.objective_array()
    vals = w1 * arr[:, 0] + w2 * arr[:, 1]
    best = vals.max() if instance.sense == MAX else vals.min()
    return {s.id for s, v in zip(instance.solutions, vals) if abs(v - best) <= TAU_VAL}


def _max_ordering_values(instance: Instance, weights: MaxOrderingWeights) -> np.ndarray:
    if instance.sense != MIN:
        raise UnsupportedSense("max-ordering scalarization is defined for minimization instances")
    arr = instance.objective_array()
    return np.maximum(weights.w1 * arr[:, 0], weights.w2 * arr[:, 1])


def max_ordering_optima(instance: Instance, weights: MaxOrderingWeights) -> set[str]:
    """Argmin set of max(w1*f1, w2*f2), ties within TAU_VAL."""
    vals = _max_ordering_values(instance, weights)
    best = vals.min()
    return {s.id for s, v in zip(instance.solutions, vals) if abs(v - best) <= TAU_VAL}


def alpha_approximate_for_max_ordering(
    instance: Instance, weights: MaxOrderingWeights, alpha: float
) -> set[str]:
    """Solutions whose scalarized value is within factor alpha of the optimum."""
    if alpha < 1.0 - TAU_VAL:
        raise AlphaBelowOne(f"alpha must be >= 1, got {alpha!r}")
    vals = _max_ordering_values(instance, weights)
    best = vals.min()
    return {s.id for s, v in zip(instance.solutions, vals) if v <= alpha * best + TAU_VAL}


def balanced_weights(params: ConeParams) -> MaxOrderingWeights:
    """The weight pair balancing the transformed components at the matched ratio.

    Requires a strictly interior rotation: both the rotation and its
    complement must exceed TAU_ANGLE, otherwise a weight diverges.
    """
    phi = params.phi
    phi_p = params.phi_prime
    if phi <= TAU_ANGLE or phi_p <= TAU_ANGLE:
        raise DegeneratePhi(f"interior rotation required, got phi={phi!r}, phi'={phi_p!r}")
    sp, cp = math.sqrt(math.sin(phi)), math.sqrt(math.cos(phi))
    spp, cpp = math.sqrt(math.sin(phi_p)), math.sqrt(math.cos(phi_p))
    return MaxOrderingWeights(sp / cpp + cp / spp, spp / cp + cpp / sp)


def rotation_for_ratio(gamma: float, q: float) -> float:
    """The interior rotation whose tangent ratio matches the objective ratio q.

    Returns phi in (0, gamma - pi/2) with sqrt(tan phi')/sqrt(tan phi) = q.
    """
    if not (math.isfinite(q) and q > 0.0):
        raise InvalidRatio(f"ratio must be finite and > 0, got {q!r}")
    if not (HALF_PI + TAU_ANGLE < gamma <= math.pi + TAU_ANGLE):
        raise InadmissibleCone(f"inner angle {gamma!r} outside (pi/2, pi]")
    span = gamma - HALF_PI
    tan_gamma = 0.0 if gamma >= math.pi - TAU_ANGLE else math.tan(gamma)
    if abs(tan_gamma) > _CLOSED_FORM_TAN_LIMIT:
        # Bisect g(phi) = tan(phi') - q^2 * tan(phi), strictly decreasing from
        # tan(span) > 0 to -q^2 * tan(span) < 0.
        lo, hi = 0.0, span
        while True:
            mid = 0.5 * (lo + hi)
            if mid <= lo or mid >= hi:
                return mid
            if math.tan(span - mid) - q * q * math.tan(mid) > 0.0:
                lo = mid
            else:
                hi = mid
    s = 0.5 * (q + 1.0 / q)
    a = s * tan_gamma
    # a + hypot(1, a) cancels for large negative a; the conjugate form does
    # not (tan(gamma) <= 0 throughout the domain, so a <= 0).
    return math.atan(1.0 / (q * (math.hypot(1.0, a) - a)))


def build_cover_set(instance: Instance, gamma: float, alpha: float = 1.0) -> set[str]:
    """A covering set from one max-ordering optimum per realized objective ratio.

    For each distinct ratio f1/f2 occurring in the instance, pick one
    alpha-approximate solution (the optimum when alpha = 1; ties and level
    sets are broken by lexicographically smallest id) of the balanced
    max-ordering scalarization of the instance transformed at the matched
    rotation.  Only the rotations matched to realized ratios are needed:
    each solution is covered through its own ratio.  The union is an
    (alpha * (1 + tan(gamma/2 - pi/4)))-approximation of the instance.
    """
    if instance.sense != MIN:
        raise UnsupportedSense("build_cover_set is defined for minimization instances")
    if alpha < 1.0 - TAU_VAL:
        raise AlphaBelowOne(f"alpha must be >= 1, got {alpha!r}")
    arr = instance.objective_array()
    ids = instance.ids()
    ratios = sorted({float(r) for r in arr[:, 0] / arr[:, 1]})
    out: set[str] = set()
    for q in ratios:
        params = ConeParams(gamma, rotation_for_ratio(gamma, q))
        weights = balanced_weights(params)
        transformed = arr @ np.array(params.matrix(), dtype=float).T
        vals = np.maximum(weights.w1 * transformed[:, 0], weights.w2 * transformed[:, 1])
        level = alpha * vals.min() + TAU_VAL
        out.add(min(sid for sid, v in zip(ids, vals) if v <= level))
    return out
