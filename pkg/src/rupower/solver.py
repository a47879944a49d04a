"""Inversion of the rate model and load sweeps.

Rate is monotone in the adaptation parameter (t under micro-DTX, m under
antenna muting), so the minimum-power operating point for a load target is
the smallest parameter reaching the wanted rate; power minimality follows
from power being non-decreasing in that parameter. Bisection is used rather
than a closed form so both modes share one code path.
"""

import sys
from dataclasses import dataclass
from typing import Tuple

from .errors import ConvergenceError, InfeasibleTargetError, ValidationError, Violation
from .model import (
    AdaptationMode,
    OperatingPoint,
    PowerBreakdown,
    RateResult,
    RuConfig,
    power,
    rate,
)

__all__ = [
    "LoadTarget",
    "SolvedPoint",
    "CurvePoint",
    "SweepResult",
    "peak_rate",
    "solve_operating_point",
    "sweep_curve",
    "RATE_TOLERANCE",
    "PARAMETER_TOLERANCE",
    "MAX_ITERATIONS",
]

RATE_TOLERANCE = 1e-9  # relative to the reference peak
PARAMETER_TOLERANCE = 1e-12
MAX_ITERATIONS = 200


@dataclass(frozen=True)
class LoadTarget:
    """A wanted load, as a fraction of some reference peak rate."""

    load_fraction: float  # in (0, 1]
    reference_peak: float  # model-rate units defining 100% load

    def __post_init__(self):
        v = []
        if not 0.0 < self.load_fraction <= 1.0:
            v.append(Violation("load_fraction", "must be in (0, 1]", self.load_fraction))
        if not self.reference_peak > 0.0:
            v.append(Violation("reference_peak", "must be > 0", self.reference_peak))
        if v:
            raise ValidationError(v)


@dataclass(frozen=True)
class SolvedPoint:
    op: OperatingPoint
    achieved_rate: float  # model-rate units
    power: PowerBreakdown


@dataclass(frozen=True)
class CurvePoint:
    """One sample of a load sweep."""

    param: float  # the swept parameter value (t or m)
    op: OperatingPoint
    rate: RateResult
    load_fraction: float  # model_rate / reference_peak
    power: PowerBreakdown


@dataclass(frozen=True)
class SweepResult:
    """An ordered load sweep for one config; iterates over its points."""

    config: RuConfig
    reference_peak: float
    points: Tuple[CurvePoint, ...]

    def __iter__(self):
        return iter(self.points)

    def __len__(self):
        return len(self.points)

    def __getitem__(self, index):
        return self.points[index]


def _op_at(config, x):
    if config.adaptation_mode is AdaptationMode.MU_DTX:
        return OperatingPoint(t=x, m=1.0)
    return OperatingPoint(t=1.0, m=x)


def peak_rate(config):
    """Full-activity rate (t = m = 1), in model-rate units."""
    return rate(config, OperatingPoint()).model_rate


def solve_operating_point(config, target):
    """Smallest operating point whose rate meets the target load.

    Bisects the mode's parameter over (0, 1]; the lower bracket sits at
    machine epsilon since the model is defined on the open interval. Raises
    :class:`InfeasibleTargetError` when the wanted rate exceeds the config's
    own peak and :class:`ConvergenceError` if the iteration cap is hit.
    """
    peak = peak_rate(config)
    wanted = target.load_fraction * target.reference_peak
    if wanted > peak:
        # absorb float dust at the feasibility boundary, e.g. 1.0 * self-peak
        if wanted - peak <= RATE_TOLERANCE * target.reference_peak:
            wanted = peak
        else:
            raise InfeasibleTargetError(
                f"target rate {wanted:.6g} exceeds the peak rate {peak:.6g} "
                f"of {config.name!r}")

    lo = sys.float_info.epsilon
    hi = 1.0
    rate_tol = RATE_TOLERANCE * target.reference_peak
    # converge the bracket well inside the published tolerance so that the
    # returned endpoint (not the midpoint) still satisfies it
    param_tol = 0.25 * PARAMETER_TOLERANCE
    achieved = rate(config, _op_at(config, hi)).model_rate
    for _ in range(MAX_ITERATIONS):
        if hi - lo <= param_tol and abs(achieved - wanted) <= rate_tol:
            break
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:  # bracket collapsed to adjacent floats
            break
        r_mid = rate(config, _op_at(config, mid)).model_rate
        if r_mid < wanted:
            lo = mid
        else:
            hi = mid
            achieved = r_mid
    else:
        raise ConvergenceError(
            f"no convergence after {MAX_ITERATIONS} bisection steps for "
            f"{config.name!r} (load {target.load_fraction:.6g})")

    op = _op_at(config, hi)
    return SolvedPoint(op=op, achieved_rate=achieved, power=power(config, op))


def sweep_curve(config, reference_peak, n_points):
    """Sample the load curve at n_points parameter values uniformly in (0, 1].

    The sweep runs over the mode's own parameter (so it is uniform in t or m,
    not in load) and always includes the full-activity endpoint.
    """
    v = []
    if not (isinstance(n_points, int) and n_points >= 2):
        v.append(Violation("n_points", "must be an integer >= 2", n_points))
    if not reference_peak > 0.0:
        v.append(Violation("reference_peak", "must be > 0", reference_peak))
    if v:
        raise ValidationError(v)

    points = []
    for i in range(1, n_points + 1):
        x = i / n_points
        op = _op_at(config, x)
        r = rate(config, op)
        points.append(CurvePoint(
            param=x,
            op=op,
            rate=r,
            load_fraction=r.model_rate / reference_peak,
            power=power(config, op),
        ))
    return SweepResult(config=config, reference_peak=reference_peak,
                       points=tuple(points))
