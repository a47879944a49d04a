"""Load-profile energy accounting and multi-config comparison.

Takes a daily load profile, solves each segment for the minimum-power
operating point, and aggregates average power, energy and delivered bits.
Also houses the four built-in radio-unit presets (today's and a future
massive-MIMO unit at 64 chains / 100 MHz, and an extreme-MIMO unit at
128 chains / 400 MHz in both technology generations).
"""

from dataclasses import dataclass
from typing import Optional, Tuple

from .errors import ValidationError, Violation
from .model import (
    AdaptationMode,
    OperatingPoint,
    PowerBreakdown,
    RuConfig,
    power,
    zero_load_power,
)
from .solver import LoadTarget, peak_rate, solve_operating_point

__all__ = [
    "ProfileSegment",
    "LoadProfile",
    "SegmentEnergy",
    "EnergyReport",
    "ComparisonEntry",
    "ComparisonReport",
    "daily_energy",
    "compare",
    "builtin_configs",
    "builtin_config",
    "typical_daily_profile",
]

JOULES_PER_KWH = 3.6e6
BITS_PER_GB = 8e9


@dataclass(frozen=True)
class ProfileSegment:
    hours: float  # > 0
    load_fraction: float  # in [0, 1]; 0 means the zero-load floor

    def __post_init__(self):
        v = []
        if not self.hours > 0:
            v.append(Violation("hours", "must be > 0", self.hours))
        if not 0.0 <= self.load_fraction <= 1.0:
            v.append(Violation("load_fraction", "must be in [0, 1]", self.load_fraction))
        if v:
            raise ValidationError(v)


@dataclass(frozen=True)
class LoadProfile:
    """Ordered (hours, load_fraction) segments; plain tuples are accepted."""

    segments: Tuple[ProfileSegment, ...]

    def __post_init__(self):
        coerced = tuple(
            seg if isinstance(seg, ProfileSegment) else ProfileSegment(*seg)
            for seg in self.segments)
        object.__setattr__(self, "segments", coerced)
        if not coerced:
            raise ValidationError(
                [Violation("segments", "must contain at least one segment", ())])

    @property
    def total_hours(self):
        return sum(seg.hours for seg in self.segments)


@dataclass(frozen=True)
class SegmentEnergy:
    """Solved state for one profile segment; op is None at zero load."""

    hours: float
    load_fraction: float
    op: Optional[OperatingPoint]
    power: PowerBreakdown
    throughput_bps: float


@dataclass(frozen=True)
class EnergyReport:
    config_name: str
    average_power_w: float
    energy_kwh: float  # over the whole profile
    delivered_bits: float
    bits_per_joule: float
    per_segment: Tuple[SegmentEnergy, ...]

    @property
    def gb_per_kwh(self):
        return self.bits_per_joule * JOULES_PER_KWH / BITS_PER_GB


@dataclass(frozen=True)
class ComparisonEntry:
    name: str
    peak_rate: float
    peak_rate_ratio: float
    peak_power_w: float
    peak_power_ratio: float
    daily_power_w: float
    daily_power_ratio: float
    bits_per_joule: float
    bits_per_joule_ratio: float


@dataclass(frozen=True)
class ComparisonReport:
    baseline: str
    entries: Tuple[ComparisonEntry, ...]


def daily_energy(config, profile, reference_peak=None):
    """Energy accounting for a load profile.

    reference_peak selects what 100% load means: None uses the config's own
    peak rate (the default used for daily averages), a number pins an
    external reference, e.g. a baseline config's peak. Zero-load segments
    use the limiting power rather than the solver.
    """
    ref = peak_rate(config) if reference_peak is None else reference_peak
    segments = []
    for seg in profile.segments:
        if seg.load_fraction == 0.0:
            segments.append(SegmentEnergy(
                hours=seg.hours, load_fraction=0.0, op=None,
                power=zero_load_power(config), throughput_bps=0.0))
            continue
        solved = solve_operating_point(
            config, LoadTarget(load_fraction=seg.load_fraction, reference_peak=ref))
        throughput = solved.achieved_rate * config.reference_bandwidth_mhz * 1e6
        segments.append(SegmentEnergy(
            hours=seg.hours, load_fraction=seg.load_fraction, op=solved.op,
            power=solved.power, throughput_bps=throughput))

    total_hours = profile.total_hours
    average_power = sum(s.hours * s.power.total for s in segments) / total_hours
    joules = average_power * total_hours * 3600.0
    delivered_bits = sum(s.hours * 3600.0 * s.throughput_bps for s in segments)
    return EnergyReport(
        config_name=config.name,
        average_power_w=average_power,
        energy_kwh=joules / JOULES_PER_KWH,
        delivered_bits=delivered_bits,
        bits_per_joule=delivered_bits / joules if joules > 0 else 0.0,
        per_segment=tuple(segments),
    )


def compare(configs, baseline_index, profile):
    """Peak-rate, peak-power, daily-power and efficiency ratios vs a baseline.

    Daily averages use each config's own peak as the 100% load reference, so
    the configs are compared at equal relative load, not equal traffic.
    """
    v = []
    if len(configs) < 2:
        v.append(Violation("configs", "need at least two configs to compare",
                           len(configs)))
    if not 0 <= baseline_index < len(configs):
        v.append(Violation("baseline_index", "out of range", baseline_index))
    if v:
        raise ValidationError(v)

    peaks = [peak_rate(cfg) for cfg in configs]
    peak_powers = [power(cfg, OperatingPoint()).total for cfg in configs]
    reports = [daily_energy(cfg, profile) for cfg in configs]

    def ratio(i, values):
        if i == baseline_index:
            return 1.0
        base = values[baseline_index]
        return values[i] / base if base != 0 else float("inf")

    entries = []
    for i, cfg in enumerate(configs):
        entries.append(ComparisonEntry(
            name=cfg.name,
            peak_rate=peaks[i],
            peak_rate_ratio=ratio(i, peaks),
            peak_power_w=peak_powers[i],
            peak_power_ratio=ratio(i, peak_powers),
            daily_power_w=reports[i].average_power_w,
            daily_power_ratio=ratio(i, [r.average_power_w for r in reports]),
            bits_per_joule=reports[i].bits_per_joule,
            bits_per_joule_ratio=ratio(i, [r.bits_per_joule for r in reports]),
        ))
    return ComparisonReport(baseline=configs[baseline_index].name,
                            entries=tuple(entries))


# Table-style unit parameters: the mMIMO column (64 chains, 16 layers,
# 200 W TRP over 100 MHz) and the xMIMO column (128 chains, 32 layers,
# 400 W over 400 MHz). Technology generations differ only in PA line-up
# efficiency, DSP efficiency and the adaptation capability.
_MMIMO_COLUMN = dict(
    num_trx_chains=64,
    num_layers=16,
    trp_watts=200.0,
    bandwidth_mhz=100.0,
    insertion_loss_db=1.1,
    layer_sinr_db=25.0,
    dl_ratio=0.75,
    carrier_frequency_ghz=3.5,
    num_antenna_elements=192,
)
_XMIMO_COLUMN = dict(
    num_trx_chains=128,
    num_layers=32,
    trp_watts=400.0,
    bandwidth_mhz=400.0,
    insertion_loss_db=2.3,
    layer_sinr_db=21.0,
    dl_ratio=0.75,
    carrier_frequency_ghz=7.0,
    num_antenna_elements=1024,
)
_TODAY_TECH = dict(
    pa_lineup_efficiency=0.45,
    dsp_efficiency_factor=1.0,
    adaptation_mode=AdaptationMode.MU_DTX,
    chip_deactivation=False,
)
_FUTURE_TECH = dict(
    pa_lineup_efficiency=0.55,
    dsp_efficiency_factor=2.0,
    adaptation_mode=AdaptationMode.ANTENNA_MUTING,
    chip_deactivation=True,
)


def builtin_configs():
    """The four named presets, baseline first."""
    return (
        RuConfig(name="mMIMO-today", **_MMIMO_COLUMN, **_TODAY_TECH),
        RuConfig(name="xMIMO-future", **_XMIMO_COLUMN, **_FUTURE_TECH),
        RuConfig(name="mMIMO-future", **_MMIMO_COLUMN, **_FUTURE_TECH),
        RuConfig(name="xMIMO-today-tech", **_XMIMO_COLUMN, **_TODAY_TECH),
    )


def builtin_config(name):
    """Look up a preset by name, case-insensitively. Raises KeyError."""
    wanted = name.lower()
    for cfg in builtin_configs():
        if cfg.name.lower() == wanted:
            return cfg
    raise KeyError(name)


def typical_daily_profile():
    """The three-segment 24 h profile: half load during the 8 busy hours,
    30% for 10 shoulder hours, 5% for the 6 night hours."""
    return LoadProfile(segments=(
        ProfileSegment(hours=8.0, load_fraction=0.50),
        ProfileSegment(hours=10.0, load_fraction=0.30),
        ProfileSegment(hours=6.0, load_fraction=0.05),
    ))
