"""Command-line interface.

Subcommands: power (one operating point), sweep (power-vs-load curves as CSV
and optionally SVG or a matplotlib figure), daily (load-profile energy
accounting), compare (multi-config ratio report), presets (write the builtin
config documents). Exit codes: 0 success, 1 validation or usage error,
2 infeasible load target, 3 I/O error. Diagnostics go to stderr.
"""

import argparse
import json
import os
import sys

from .curves import emit_csv, normalize_curves
from .errors import (
    InfeasibleTargetError,
    ParseError,
    RuPowerError,
    UnknownBaselineError,
    ValidationError,
)
from .model import OperatingPoint, power, rate
from .scenario import builtin_config, compare, daily_energy, typical_daily_profile
from .solver import peak_rate, sweep_curve
from .fileio import parse_config, parse_profile, write_presets
from .svg import SvgOptions, emit_svg

__all__ = ["cli_main", "main"]

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_INFEASIBLE = 2
EXIT_IO = 3


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on bad usage, which collides with the
    # infeasible-target code; raise instead and map to the validation status
    def error(self, message):
        raise _UsageError(f"{self.prog}: {message}")


def _fmt(x):
    return format(float(x), ".6g")


def _load_config(source):
    """A config argument is a document path or a builtin preset name."""
    if os.path.exists(source):
        with open(source, "r", encoding="utf-8") as fh:
            return parse_config(fh.read())
    try:
        return builtin_config(source)
    except KeyError:
        raise FileNotFoundError(
            f"{source!r} is neither a config file nor a builtin preset") from None


def _load_profile(source):
    if source == "daily":
        return typical_daily_profile()
    with open(source, "r", encoding="utf-8") as fh:
        return parse_profile(fh.read())


def _resolve_baseline(configs, name):
    wanted = name.lower()
    for cfg in configs:
        if cfg.name.lower() == wanted:
            return cfg
    raise UnknownBaselineError(
        f"baseline {name!r} not among the loaded configs "
        f"({', '.join(c.name for c in configs)})")


def _write_text(path, text):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)


def _cmd_power(args):
    cfg = _load_config(args.config)
    op = OperatingPoint(t=1.0 if args.t is None else args.t,
                        m=1.0 if args.m is None else args.m)
    pb = power(cfg, op)
    rr = rate(cfg, op)
    if args.json:
        doc = {
            "config": cfg.name,
            "t": op.t,
            "m": op.m,
            "power_w": {
                "pa": pb.pa, "rfic_driver": pb.rfic_driver,
                "rfic_lna": pb.rfic_lna, "dfe_bb_tx": pb.dfe_bb_tx,
                "dfe_bb_rx": pb.dfe_bb_rx, "static": pb.static,
                "total": pb.total,
            },
            "rate": {
                "model_rate": rr.model_rate,
                "throughput_bps": rr.throughput_bps,
                "layers_used": rr.layers_used,
            },
        }
        print(json.dumps(doc, indent=2))
        return EXIT_OK
    print(f"config: {cfg.name} (adaptation: {cfg.adaptation_mode.value})")
    print(f"operating point: t={_fmt(op.t)} m={_fmt(op.m)}")
    print(f"rate: {_fmt(rr.model_rate)} model units, "
          f"{_fmt(rr.throughput_bps / 1e9)} Gbit/s, "
          f"layers {_fmt(rr.layers_used)}")
    print(f"power: {_fmt(pb.total)} W")
    for label, value in zip(("pa", "rfic_driver", "rfic_lna", "dfe_bb_tx",
                             "dfe_bb_rx", "static"), pb.components()):
        print(f"  {label:<12} {_fmt(value)} W")
    return EXIT_OK


def _cmd_sweep(args):
    configs = [_load_config(c) for c in args.config]
    baseline = _resolve_baseline(configs, args.baseline)
    ref = peak_rate(baseline)
    sweeps = [sweep_curve(cfg, ref, args.points) for cfg in configs]
    curves = normalize_curves(sweeps, args.baseline)
    _write_text(args.out, emit_csv(curves))
    if args.svg:
        _write_text(args.svg, emit_svg(curves, SvgOptions()))
    if args.fig:
        from .plotting import render_curves
        render_curves(curves, args.fig)
    print(f"wrote {sum(len(c.points) for c in curves)} points "
          f"for {len(curves)} configs to {args.out}")
    return EXIT_OK


def _cmd_daily(args):
    configs = [_load_config(c) for c in args.config]
    profile = _load_profile(args.profile)
    baseline = _resolve_baseline(configs, args.baseline or configs[0].name)
    external_ref = peak_rate(baseline) if args.reference == "baseline" else None
    reports = [daily_energy(cfg, profile, reference_peak=external_ref)
               for cfg in configs]
    base_report = reports[[c.name for c in configs].index(baseline.name)]
    for cfg, rep in zip(configs, reports):
        print(f"{rep.config_name}: average {_fmt(rep.average_power_w)} W, "
              f"{_fmt(rep.energy_kwh)} kWh, "
              f"{_fmt(rep.delivered_bits / 8e9)} GB delivered, "
              f"{_fmt(rep.bits_per_joule)} bit/J "
              f"({_fmt(rep.gb_per_kwh)} GB/kWh)")
        for seg in rep.per_segment:
            if seg.op is None:
                knob = "floor"
            elif cfg.adaptation_mode.value == "mu_dtx":
                knob = f"t={_fmt(seg.op.t)}"
            else:
                knob = f"m={_fmt(seg.op.m)}"
            print(f"  {_fmt(seg.hours)} h at load {_fmt(seg.load_fraction)}: "
                  f"{knob}, {_fmt(seg.power.total)} W")
    print(f"daily-average ratios vs {baseline.name}:")
    for rep in reports:
        r = rep.average_power_w / base_report.average_power_w
        print(f"  {rep.config_name}: {_fmt(r)}")
    return EXIT_OK


def _cmd_compare(args):
    configs = [_load_config(c) for c in args.config]
    baseline = _resolve_baseline(configs, args.baseline or configs[0].name)
    profile = _load_profile(args.profile)
    report = compare(configs, [c.name for c in configs].index(baseline.name),
                     profile)
    print(f"baseline: {report.baseline}")
    header = (f"{'config':<18} {'peak_rate':>10} {'ratio':>7} "
              f"{'peak_W':>9} {'ratio':>7} {'daily_W':>9} {'ratio':>7} "
              f"{'bit/J':>10} {'ratio':>7}")
    print(header)
    for e in report.entries:
        print(f"{e.name:<18} {_fmt(e.peak_rate):>10} {_fmt(e.peak_rate_ratio):>7} "
              f"{_fmt(e.peak_power_w):>9} {_fmt(e.peak_power_ratio):>7} "
              f"{_fmt(e.daily_power_w):>9} {_fmt(e.daily_power_ratio):>7} "
              f"{_fmt(e.bits_per_joule):>10} {_fmt(e.bits_per_joule_ratio):>7}")
    if args.out:
        _write_text(args.out, emit_csv(report))
    if args.fig:
        from .plotting import render_comparison
        render_comparison(report, args.fig)
    return EXIT_OK


def _cmd_presets(args):
    paths = write_presets(args.out)
    for path in paths:
        print(path)
    return EXIT_OK


def _build_parser():
    parser = _Parser(prog="rupower",
                     description="Radio-unit power and downlink-rate modeling")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("power", help="evaluate one operating point")
    p.add_argument("--config", required=True,
                   help="config document path or builtin preset name")
    p.add_argument("--t", type=float, default=None,
                   help="active time fraction in (0, 1], default 1")
    p.add_argument("--m", type=float, default=None,
                   help="active chain fraction in (0, 1], default 1")
    p.add_argument("--json", action="store_true", help="emit JSON")
    p.set_defaults(func=_cmd_power)

    p = sub.add_parser("sweep", help="write normalized power-vs-load curves")
    p.add_argument("--config", action="append", required=True,
                   help="config path or preset; repeatable")
    p.add_argument("--baseline", required=True,
                   help="config name whose peaks define 100%%")
    p.add_argument("--points", type=int, default=101,
                   help="sweep samples per config (default 101)")
    p.add_argument("--out", required=True, help="CSV output path")
    p.add_argument("--svg", default=None, help="also write an SVG chart here")
    p.add_argument("--fig", default=None,
                   help="also render a matplotlib figure here (png/pdf/...)")
    p.set_defaults(func=_cmd_sweep)

    p = sub.add_parser("daily", help="energy accounting over a load profile")
    p.add_argument("--config", action="append", required=True,
                   help="config path or preset; repeatable")
    p.add_argument("--profile", default="daily",
                   help="profile document path, or 'daily' for the builtin "
                        "8h@50%% / 10h@30%% / 6h@5%% profile")
    p.add_argument("--baseline", default=None,
                   help="config name for the ratio lines (default: first)")
    p.add_argument("--reference", choices=("self", "baseline"), default="self",
                   help="what 100%% load means per config: its own peak "
                        "(default) or the baseline's peak")
    p.set_defaults(func=_cmd_daily)

    p = sub.add_parser("compare", help="ratio report across configs")
    p.add_argument("--config", action="append", required=True,
                   help="config path or preset; repeatable, at least two")
    p.add_argument("--baseline", default=None,
                   help="config name to compare against (default: first)")
    p.add_argument("--profile", default="daily",
                   help="profile document path or 'daily'")
    p.add_argument("--out", default=None, help="also write the report as CSV")
    p.add_argument("--fig", default=None,
                   help="also render a ratio bar chart here")
    p.set_defaults(func=_cmd_compare)

    p = sub.add_parser("presets", help="write builtin config documents")
    p.add_argument("--out", required=True, help="output directory")
    p.set_defaults(func=_cmd_presets)

    return parser


def cli_main(argv=None):
    """Run the CLI; returns the process exit status instead of raising."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except _UsageError as e:
        print(str(e), file=sys.stderr)
        return EXIT_VALIDATION
    except InfeasibleTargetError as e:
        print(f"infeasible: {e}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except (ParseError, ValidationError, UnknownBaselineError, RuPowerError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_VALIDATION
    except OSError as e:
        print(f"i/o error: {e}", file=sys.stderr)
        return EXIT_IO


def main():
    sys.exit(cli_main())


if __name__ == "__main__":
    main()
