"""Multiplicative approximation predicates and exact minimal factors.

A solution x covers a target x' at factor alpha (minimization) when
f(x) precedes alpha * f(x') in the chosen order: componentwise when no cone
is given, otherwise the cone order.  Because all (transformed) objectives
are strictly positive, the smallest factor at which x covers x' is the
largest componentwise ratio of the (transformed) images, so the exact
minimal factor of a whole selection is a max-min-max expression over those
ratios.  Maximization mirrors with reciprocal ratios: x covers x' when
alpha * f(x) weakly exceeds f(x').

rotation_coverage_gaps() decides "covered at every admissible rotation"
exactly, by the same interval subtraction used for supportedness: at fixed
alpha, the set of rotations at which x covers x' is one closed interval.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import AlphaBelowOne, EmptySelection
from .geometry import ConeParams, Vector2, admissible_range, cone_contains, dominating_rotations
from .instances import MAX, Instance
from .intervals import PhiIntervalSet
from .tolerances import TAU_VAL


@dataclass(frozen=True)
class ApproxReport:
    """Outcome of a set-coverage query.

    min_alpha is the exact smallest factor at which the selection covers the
    whole instance; the verdict is min_alpha <= alpha_queried + TAU_VAL.
    Witnesses pair every uncovered solution with its best covering candidate.
    """

    is_valid: bool
    alpha_queried: float
    min_alpha: float
    witnesses: tuple[tuple[str, str], ...]

    def to_obj(self) -> dict:
        return {
            "is_valid": self.is_valid,
            "alpha_queried": self.alpha_queried,
            "min_alpha": self.min_alpha,
            "witnesses": [{"uncovered": u, "best_candidate": c} for u, c in self.witnesses],
        }


def is_alpha_approx_pair(
    instance: Instance,
    params: ConeParams | None,
    by: str,
    target: str,
    alpha: float,
) -> bool:
    """Whether `by` covers `target` at factor alpha.

    Minimization: f(by) precedes alpha * f(target); maximization:
    alpha * f(by) weakly exceeds f(target).  params = None means the
    componentwise order.
    """
    if alpha < 1.0 - TAU_VAL:
        raise AlphaBelowOne(f"alpha must be >= 1, got {alpha!r}")
    fb = instance.objectives_of(by)
    ft = instance.objectives_of(target)
    if instance.sense == MAX:
        d = (alpha * fb[0] - ft[0], alpha * fb[1] - ft[1])
    else:
        d = (alpha * ft[0] - fb[0], alpha * ft[1] - fb[1])
    if params is None:
        return d[0] >= -TAU_VAL and d[1] >= -TAU_VAL
    return cone_contains(params, d)


def _pairwise_factors(instance: Instance, selection: list[str], params: ConeParams | None) -> np.ndarray:
    """Matrix of smallest covering factors, selection rows by instance columns."""
    arr = instance.objective_array()
    if params is not None:
        arr = arr @ np.array(params.matrix(), dtype=float).T
    rows = [instance.index_of(s) for s in selection]
    sel = arr[rows]
    if instance.sense == MAX:
        ratios = arr[np.newaxis, :, :] / sel[:, np.newaxis, :]
    else:
        ratios = sel[:, np.newaxis, :] / arr[np.newaxis, :, :]
    return ratios.max(axis=2)


def min_alpha(instance: Instance, selection: set[str] | list[str], params: ConeParams | None = None) -> float:
    """Exact smallest factor at which the selection covers every solution.

    max over solutions of (min over the selection of the pairwise covering
    factor); well defined because all (transformed) objectives are strictly
    positive.
    """
    sel = sorted(selection)
    if not sel:
        raise EmptySelection("min_alpha needs a nonempty selection")
    return float(_pairwise_factors(instance, sel, params).min(axis=0).max())


def verify_approx_set(
    instance: Instance,
    selection: set[str] | list[str],
    alpha: float,
    params: ConeParams | None = None,
) -> ApproxReport:
    """Check that the selection covers every solution at factor alpha."""
    if alpha < 1.0 - TAU_VAL:
        raise AlphaBelowOne(f"alpha must be >= 1, got {alpha!r}")
    sel = sorted(selection)
    if not sel:
        raise EmptySelection("verify_approx_set needs a nonempty selection")
    factors = _pairwise_factors(instance, sel, params)
    best = factors.min(axis=0)
    best_idx = factors.argmin(axis=0)
    worst = float(best.max())
    witnesses = tuple(
        (s.id, sel[int(k)])
        for s, b, k in zip(instance.solutions, best, best_idx)
        if b > alpha + TAU_VAL
    )
    return ApproxReport(worst <= alpha + TAU_VAL, alpha, worst, witnesses)


def cone_to_componentwise_factor(params: ConeParams, target_objectives: Vector2, alpha: float) -> float:
    """The componentwise factor implied by a cone-order cover of this target.

    A cover at factor alpha in the cone order bounds the componentwise
    ratios by alpha * (1 + max(r * tan(phi), tan(phi') / r)) where r is the
    target's objective ratio f1/f2.
    """
    f1, f2 = target_objectives
    stretch = max(f1 / f2 * math.tan(params.phi), f2 / f1 * math.tan(params.phi_prime))
    return alpha * (1.0 + stretch)


def rotation_coverage_gaps(
    instance: Instance,
    selection: set[str] | list[str],
    gamma: float,
    alpha: float,
) -> dict[str, PhiIntervalSet]:
    """Per solution, the admissible rotations at which nothing covers it.

    For each candidate s and target x (minimization), s covers x at exactly
    the rotations whose cone contains alpha * f(x) - f(s); these closed
    intervals are subtracted from the admissible range.  The selection is an
    alpha-approximation for every admissible rotation iff all gap sets are
    empty.
    """
    if alpha < 1.0 - TAU_VAL:
        raise AlphaBelowOne(f"alpha must be >= 1, got {alpha!r}")
    sel = sorted(selection)
    if not sel:
        raise EmptySelection("rotation_coverage_gaps needs a nonempty selection")
    ambient = admissible_range(gamma)
    sel_objs = [instance.objectives_of(s) for s in sel]
    gaps: dict[str, PhiIntervalSet] = {}
    for sol in instance.solutions:
        ft = sol.objectives
        uncovered = PhiIntervalSet.full(ambient)
        for fs in sel_objs:
            if instance.sense == MAX:
                d = (alpha * fs[0] - ft[0], alpha * fs[1] - ft[1])
            else:
                d = (alpha * ft[0] - fs[0], alpha * ft[1] - fs[1])
            if abs(d[0]) <= TAU_VAL and abs(d[1]) <= TAU_VAL:
                # Scaled images coincide: covered at every rotation.
                uncovered = PhiIntervalSet.empty(ambient)
                break
            covered = dominating_rotations(gamma, d)
            for lo, hi in covered.intervals:
                uncovered = uncovered.subtract(lo, hi)
            if uncovered.is_empty():
                break
        gaps[sol.id] = uncovered
    return gaps


def is_alpha_approx_for_all_rotations(
    instance: Instance,
    selection: set[str] | list[str],
    gamma: float,
    alpha: float,
) -> bool:
    gaps = rotation_coverage_gaps(instance, selection, gamma, alpha)
    return all(g.is_empty() for g in gaps.values())
