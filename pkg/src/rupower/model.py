"""Radio-unit power and downlink-rate models.

A radio unit (RU) is described by :class:`RuConfig` and operated at an
:class:`OperatingPoint` ``(t, m)``: the fraction of active transmission /
reception time and the fraction of active TRX chains. :func:`power` evaluates
the per-component consumption in watts, :func:`rate` the Shannon-style
downlink rate. Both are pure functions of their inputs and safe to call from
any number of threads; dB-valued config fields are converted to linear ratios
internally.
"""

import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .errors import ModeViolationError, ValidationError, Violation

__all__ = [
    "AdaptationMode",
    "RuConfig",
    "OperatingPoint",
    "PowerBreakdown",
    "RateResult",
    "db_to_linear",
    "layer_count",
    "power",
    "rate",
    "validate_config",
    "zero_load_power",
]


class AdaptationMode(Enum):
    """How the RU sheds power as the network load drops."""

    MU_DTX = "mu_dtx"  # micro-DTX/DRX: sweep t, all chains stay active
    ANTENNA_MUTING = "antenna_muting"  # mute TRX chains: sweep m, t pinned at 1


def db_to_linear(x):
    """Convert a dB value to a linear power ratio, 10^(x/10)."""
    return 10.0 ** (x / 10.0)


@dataclass(frozen=True)
class RuConfig:
    """Full parameterization of one radio unit.

    Invalid combinations raise :class:`ValidationError` at construction,
    listing every violated constraint.
    """

    name: str
    num_trx_chains: int  # M, transceiver chains
    num_layers: int  # L, spatial layers, <= M
    trp_watts: float  # total radiated power at full load
    bandwidth_mhz: float  # occupied bandwidth
    insertion_loss_db: float  # antenna-network loss, >= 0 dB
    layer_sinr_db: float  # per-layer SINR
    dl_ratio: float  # downlink slot fraction, in (0, 1)
    pa_lineup_efficiency: float  # PA line-up PAE, in (0, 1]
    dsp_efficiency_factor: float  # relative compute intensity per watt, >= 1
    adaptation_mode: AdaptationMode
    reference_bandwidth_mhz: float = 100.0  # bandwidth the relative factor b is measured against
    pa_psu_efficiency: float = 0.94  # PA power-supply efficiency, in (0, 1]
    num_chips: int = 4  # processors carrying the DFE + BB work
    chip_deactivation: bool = False  # switch chips off as their chains mute
    # full-load power per TRX chain, watts
    p_rfic_driver: float = 0.5
    p_rfic_lna: float = 0.3
    p_dfe_bb_tx: float = 1.75
    p_dfe_bb_rx: float = 1.5
    p_dfe_bb_static: float = 2.0
    # descriptive metadata, not used by the power/rate formulas
    carrier_frequency_ghz: Optional[float] = None
    num_antenna_elements: Optional[int] = None

    def __post_init__(self):
        violations = _config_violations(self)
        if violations:
            raise ValidationError(violations)

    @property
    def relative_bandwidth(self):
        """b: occupied bandwidth relative to the reference bandwidth."""
        return self.bandwidth_mhz / self.reference_bandwidth_mhz


def _finite(x):
    return isinstance(x, (int, float)) and math.isfinite(x)


def _config_violations(cfg):
    v = []

    def check(cond, field, constraint, value):
        if not cond:
            v.append(Violation(field, constraint, value))

    check(_finite(cfg.num_trx_chains) and cfg.num_trx_chains >= 1,
          "num_trx_chains", "must be >= 1", cfg.num_trx_chains)
    check(_finite(cfg.num_layers) and cfg.num_layers >= 1,
          "num_layers", "must be >= 1", cfg.num_layers)
    if _finite(cfg.num_layers) and _finite(cfg.num_trx_chains):
        check(cfg.num_layers <= cfg.num_trx_chains,
              "num_layers", "must not exceed num_trx_chains", cfg.num_layers)
    check(_finite(cfg.trp_watts) and cfg.trp_watts >= 0,
          "trp_watts", "must be >= 0", cfg.trp_watts)
    check(_finite(cfg.bandwidth_mhz) and cfg.bandwidth_mhz > 0,
          "bandwidth_mhz", "must be > 0", cfg.bandwidth_mhz)
    check(_finite(cfg.reference_bandwidth_mhz) and cfg.reference_bandwidth_mhz > 0,
          "reference_bandwidth_mhz", "must be > 0", cfg.reference_bandwidth_mhz)
    check(_finite(cfg.insertion_loss_db) and cfg.insertion_loss_db >= 0,
          "insertion_loss_db", "must be >= 0 dB", cfg.insertion_loss_db)
    check(_finite(cfg.layer_sinr_db), "layer_sinr_db", "must be finite", cfg.layer_sinr_db)
    check(_finite(cfg.dl_ratio) and 0 < cfg.dl_ratio < 1,
          "dl_ratio", "must be in (0, 1)", cfg.dl_ratio)
    check(_finite(cfg.pa_lineup_efficiency) and 0 < cfg.pa_lineup_efficiency <= 1,
          "pa_lineup_efficiency", "must be in (0, 1]", cfg.pa_lineup_efficiency)
    check(_finite(cfg.pa_psu_efficiency) and 0 < cfg.pa_psu_efficiency <= 1,
          "pa_psu_efficiency", "must be in (0, 1]", cfg.pa_psu_efficiency)
    check(_finite(cfg.dsp_efficiency_factor) and cfg.dsp_efficiency_factor >= 1,
          "dsp_efficiency_factor", "must be >= 1", cfg.dsp_efficiency_factor)
    check(_finite(cfg.num_chips) and cfg.num_chips >= 1,
          "num_chips", "must be >= 1", cfg.num_chips)
    for field in ("p_rfic_driver", "p_rfic_lna", "p_dfe_bb_tx", "p_dfe_bb_rx",
                  "p_dfe_bb_static"):
        value = getattr(cfg, field)
        check(_finite(value) and value >= 0, field, "must be >= 0 W", value)
    check(isinstance(cfg.adaptation_mode, AdaptationMode),
          "adaptation_mode", "must be an AdaptationMode", cfg.adaptation_mode)
    if cfg.adaptation_mode is AdaptationMode.MU_DTX:
        check(not cfg.chip_deactivation,
              "chip_deactivation", "requires antenna muting", cfg.chip_deactivation)
    return v


def validate_config(config):
    """Return ``config`` unchanged, or raise with every violated invariant.

    Constructors already validate; this re-checks an existing instance and is
    the hook used by the document parser.
    """
    violations = _config_violations(config)
    if violations:
        raise ValidationError(violations)
    return config


@dataclass(frozen=True)
class OperatingPoint:
    """(t, m): active time fraction and active chain fraction, each in (0, 1]."""

    t: float = 1.0
    m: float = 1.0

    def __post_init__(self):
        v = []
        if not 0.0 < self.t <= 1.0:
            v.append(Violation("t", "must be in (0, 1]", self.t))
        if not 0.0 < self.m <= 1.0:
            v.append(Violation("m", "must be in (0, 1]", self.m))
        if v:
            raise ValidationError(v)


@dataclass(frozen=True)
class PowerBreakdown:
    """Per-component power in watts; ``total`` is the sum of the six parts."""

    pa: float
    rfic_driver: float
    rfic_lna: float
    dfe_bb_tx: float
    dfe_bb_rx: float
    static: float
    total: float

    def components(self):
        """The six components in reporting order (PA first, static last)."""
        return (self.pa, self.rfic_driver, self.rfic_lna,
                self.dfe_bb_tx, self.dfe_bb_rx, self.static)


@dataclass(frozen=True)
class RateResult:
    """Downlink rate at an operating point."""

    model_rate: float  # dimensionless, per unit of reference bandwidth
    throughput_bps: float  # model_rate scaled by the reference bandwidth in Hz
    layers_used: float  # effective layer count min(L, m*M), fractional allowed


def layer_count(config, m):
    """Effective spatial layers min(L, m*M); layers cannot exceed active chains."""
    return min(float(config.num_layers), m * config.num_trx_chains)


def _require_mode_compatible(config, op):
    mode = config.adaptation_mode
    if mode is AdaptationMode.MU_DTX and op.m != 1.0:
        raise ModeViolationError(
            f"{config.name!r} adapts via micro-DTX: m must stay 1, got {op.m}")
    if mode is AdaptationMode.ANTENNA_MUTING and op.t != 1.0:
        raise ModeViolationError(
            f"{config.name!r} adapts via antenna muting: t must stay 1, got {op.t}")


def _active_chips(config, m):
    # step function: a chip powers down only once all its chains are muted
    if config.chip_deactivation:
        return math.ceil(m * config.num_chips)
    return config.num_chips


def power(config, op):
    """Per-component power consumption at an operating point, in watts.

    PA, driver and LNA scale with both t and m; the DFE/BB transmit and
    receive shares scale with m and the relative bandwidth but not with t;
    the static share steps down with chip deactivation only.
    """
    _require_mode_compatible(config, op)
    t, m = op.t, op.m
    beta = config.dl_ratio
    chains = config.num_trx_chains
    b = config.relative_bandwidth
    eta_dsp = config.dsp_efficiency_factor
    eps_lin = db_to_linear(config.insertion_loss_db)

    pa = beta * m * t * eps_lin * config.trp_watts / (
        config.pa_psu_efficiency * config.pa_lineup_efficiency)
    rfic_driver = beta * chains * m * t * config.p_rfic_driver
    rfic_lna = (1.0 - beta) * chains * m * t * config.p_rfic_lna
    dfe_bb_tx = beta * chains * (m * b / eta_dsp) * config.p_dfe_bb_tx
    dfe_bb_rx = (1.0 - beta) * chains * (m * b / eta_dsp) * config.p_dfe_bb_rx
    static = (chains * _active_chips(config, m)
              / (eta_dsp * config.num_chips) * config.p_dfe_bb_static)
    total = pa + rfic_driver + rfic_lna + dfe_bb_tx + dfe_bb_rx + static
    return PowerBreakdown(pa=pa, rfic_driver=rfic_driver, rfic_lna=rfic_lna,
                          dfe_bb_tx=dfe_bb_tx, dfe_bb_rx=dfe_bb_rx,
                          static=static, total=total)


def zero_load_power(config):
    """Limit of :func:`power` as the adaptation parameter goes to zero.

    Micro-DTX (t -> 0, m = 1) keeps the full digital-processing floor; antenna
    muting (m -> 0, t = 1) retains only the static share, reduced to a single
    chip when chip deactivation is available.
    """
    chains = config.num_trx_chains
    beta = config.dl_ratio
    b = config.relative_bandwidth
    eta_dsp = config.dsp_efficiency_factor
    if config.adaptation_mode is AdaptationMode.MU_DTX:
        dfe_bb_tx = beta * chains * (b / eta_dsp) * config.p_dfe_bb_tx
        dfe_bb_rx = (1.0 - beta) * chains * (b / eta_dsp) * config.p_dfe_bb_rx
        chips = config.num_chips
    else:
        dfe_bb_tx = 0.0
        dfe_bb_rx = 0.0
        chips = 1 if config.chip_deactivation else config.num_chips
    static = chains * chips / (eta_dsp * config.num_chips) * config.p_dfe_bb_static
    total = dfe_bb_tx + dfe_bb_rx + static
    return PowerBreakdown(pa=0.0, rfic_driver=0.0, rfic_lna=0.0,
                          dfe_bb_tx=dfe_bb_tx, dfe_bb_rx=dfe_bb_rx,
                          static=static, total=total)


def rate(config, op):
    """Shannon-style downlink rate at an operating point.

    Muting chains costs array gain (the m^2 factor) and, below m = L/M,
    spatial layers; the model assumes one SINR shared by all layers.
    """
    _require_mode_compatible(config, op)
    t, m = op.t, op.m
    b = config.relative_bandwidth
    gamma_lin = db_to_linear(config.layer_sinr_db)
    layers = layer_count(config, m)
    share = config.num_layers / layers  # L/l(m): SINR re-concentration across layers
    model_rate = (config.dl_ratio * b * t * layers
                  * math.log2(1.0 + m * m * share * gamma_lin))
    throughput_bps = model_rate * config.reference_bandwidth_mhz * 1e6
    return RateResult(model_rate=model_rate, throughput_bps=throughput_bps,
                      layers_used=layers)
