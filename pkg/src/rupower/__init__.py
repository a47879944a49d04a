"""Power-consumption and downlink-rate modeling for massive-MIMO radio units.

The model layer evaluates per-component power and Shannon-style rate at an
operating point, the solver inverts the rate curve to find minimum-power
points for a load target, and the scenario layer aggregates daily energy and
cross-config comparisons. Reports can be emitted as CSV, standalone SVG, or
matplotlib figures; see the ``rupower`` CLI.
"""

from .errors import (
    ConvergenceError,
    InfeasibleTargetError,
    ModeViolationError,
    ParseError,
    RuPowerError,
    UnknownBaselineError,
    ValidationError,
    Violation,
)
from .model import (
    AdaptationMode,
    OperatingPoint,
    PowerBreakdown,
    RateResult,
    RuConfig,
    db_to_linear,
    layer_count,
    power,
    rate,
    validate_config,
    zero_load_power,
)
from .solver import (
    MAX_ITERATIONS,
    PARAMETER_TOLERANCE,
    RATE_TOLERANCE,
    CurvePoint,
    LoadTarget,
    SolvedPoint,
    SweepResult,
    peak_rate,
    solve_operating_point,
    sweep_curve,
)
from .scenario import (
    ComparisonEntry,
    ComparisonReport,
    EnergyReport,
    LoadProfile,
    ProfileSegment,
    SegmentEnergy,
    builtin_config,
    builtin_configs,
    compare,
    daily_energy,
    typical_daily_profile,
)
from .curves import (
    COMPARISON_CSV_HEADER,
    CSV_HEADER,
    NormalizedCurve,
    NormalizedPoint,
    emit_comparison_csv,
    emit_csv,
    normalize_curves,
)
from .fileio import (
    emit_config,
    emit_profile,
    parse_config,
    parse_profile,
    write_presets,
)
from .svg import PALETTE, SvgOptions, emit_svg

__version__ = "0.1.0"

__all__ = [
    "AdaptationMode",
    "COMPARISON_CSV_HEADER",
    "CSV_HEADER",
    "ComparisonEntry",
    "ComparisonReport",
    "ConvergenceError",
    "CurvePoint",
    "EnergyReport",
    "InfeasibleTargetError",
    "LoadProfile",
    "LoadTarget",
    "MAX_ITERATIONS",
    "ModeViolationError",
    "NormalizedCurve",
    "NormalizedPoint",
    "OperatingPoint",
    "PALETTE",
    "PARAMETER_TOLERANCE",
    "ParseError",
    "PowerBreakdown",
    "ProfileSegment",
    "RATE_TOLERANCE",
    "RateResult",
    "RuConfig",
    "RuPowerError",
    "SegmentEnergy",
    "SolvedPoint",
    "SvgOptions",
    "SweepResult",
    "UnknownBaselineError",
    "ValidationError",
    "Violation",
    "builtin_config",
    "builtin_configs",
    "compare",
    "daily_energy",
    "db_to_linear",
    "emit_comparison_csv",
    "emit_config",
    "emit_csv",
    "emit_profile",
    "emit_svg",
    "layer_count",
    "normalize_curves",
    "parse_config",
    "parse_profile",
    "peak_rate",
    "power",
    "rate",
    "solve_operating_point",
    "sweep_curve",
    "typical_daily_profile",
    "validate_config",
    "write_presets",
    "zero_load_power",
    "__version__",
]
