"""Normalization of sweep results and delimited-text emission.

Curves are expressed the way the comparison figure presents them: load and
power in percent of one baseline config's peak rate and peak power. CSV
emission fixes numbers at 6 significant digits so golden files stay stable
across platforms.
"""

from dataclasses import dataclass
from typing import Tuple

from .errors import UnknownBaselineError, ValidationError, Violation
from .model import AdaptationMode, OperatingPoint, PowerBreakdown, power
from .scenario import ComparisonReport
from .solver import peak_rate

__all__ = [
    "NormalizedPoint",
    "NormalizedCurve",
    "normalize_curves",
    "emit_csv",
    "emit_comparison_csv",
    "CSV_HEADER",
    "COMPARISON_CSV_HEADER",
]

CSV_HEADER = ("config,param,load,load_pct,power_w,power_pct,"
              "pa_w,driver_w,lna_w,dfe_tx_w,dfe_rx_w,static_w")
COMPARISON_CSV_HEADER = (
    "config,peak_rate,peak_rate_ratio,peak_power_w,peak_power_ratio,"
    "daily_power_w,daily_power_ratio,bits_per_joule,bits_per_joule_ratio")


@dataclass(frozen=True)
class NormalizedPoint:
    param: float  # swept t or m
    load: float  # fraction of the baseline peak rate
    load_pct: float
    power_w: float  # raw total, watts
    power_pct: float  # percent of the baseline peak power
    breakdown: PowerBreakdown

    @property
    def breakdown_fractions(self):
        """Component shares of the total; all zero for a zero total."""
        if self.breakdown.total == 0:
            return (0.0,) * 6
        return tuple(c / self.breakdown.total for c in self.breakdown.components())


@dataclass(frozen=True)
class NormalizedCurve:
    name: str
    future: bool  # antenna-muting configs; drawn dashed in the figure
    points: Tuple[NormalizedPoint, ...]


def normalize_curves(sweeps, baseline):
    """Express every sweep in percent of the named baseline's peaks.

    The baseline is matched by config name, case-insensitively; normalization
    uses raw rates and powers, so it does not matter which reference peak the
    sweeps themselves were computed against.
    """
    wanted = baseline.lower()
    base_cfg = None
    for sweep in sweeps:
        if sweep.config.name.lower() == wanted:
            base_cfg = sweep.config
            break
    if base_cfg is None:
        known = ", ".join(s.config.name for s in sweeps)
        raise UnknownBaselineError(
            f"baseline {baseline!r} not among the swept configs ({known})")

    base_rate = peak_rate(base_cfg)
    base_power = power(base_cfg, OperatingPoint()).total
    curves = []
    for sweep in sweeps:
        pts = []
        for p in sweep.points:
            load = p.rate.model_rate / base_rate
            pts.append(NormalizedPoint(
                param=p.param,
                load=load,
                load_pct=100.0 * load,
                power_w=p.power.total,
                power_pct=100.0 * p.power.total / base_power,
                breakdown=p.power,
            ))
        curves.append(NormalizedCurve(
            name=sweep.config.name,
            future=sweep.config.adaptation_mode is AdaptationMode.ANTENNA_MUTING,
            points=tuple(pts),
        ))
    return curves


def _fmt(x):
    return format(float(x), ".6g")


def emit_csv(curves_or_report):
    """Render normalized curves (or a ComparisonReport) as CSV text.

    One header line, then one row per point (or per compared config), numbers
    at 6 significant digits, rows in input order. Deterministic: identical
    inputs give byte-identical text.
    """
    if isinstance(curves_or_report, ComparisonReport):
        return emit_comparison_csv(curves_or_report)
    curves = list(curves_or_report)
    if not curves:
        raise ValidationError([Violation("curves", "must be non-empty", curves)])
    lines = [CSV_HEADER]
    for curve in curves:
        for p in curve.points:
            cells = [curve.name, _fmt(p.param), _fmt(p.load), _fmt(p.load_pct),
                     _fmt(p.power_w), _fmt(p.power_pct)]
            cells.extend(_fmt(c) for c in p.breakdown.components())
            lines.append(",".join(cells))
    return "\n".join(lines) + "\n"


def emit_comparison_csv(report):
    lines = [COMPARISON_CSV_HEADER]
    for e in report.entries:
        lines.append(",".join([
            e.name,
            _fmt(e.peak_rate), _fmt(e.peak_rate_ratio),
            _fmt(e.peak_power_w), _fmt(e.peak_power_ratio),
            _fmt(e.daily_power_w), _fmt(e.daily_power_ratio),
            _fmt(e.bits_per_joule), _fmt(e.bits_per_joule_ratio),
        ]))
    return "\n".join(lines) + "\n"
