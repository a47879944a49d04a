"""Standalone SVG rendering of normalized power-vs-load curves.

Produces a self-contained vector document with no rendering dependency so
tests can diff it as text: one polyline per curve (dashed for future,
antenna-muting configs), percent axes anchored at the origin, a legend of
config names. For raster/PDF output see the plotting module instead.
"""

import math
import warnings
from dataclasses import dataclass
from typing import Optional
from xml.sax.saxutils import escape

from .errors import ValidationError, Violation

__all__ = ["SvgOptions", "emit_svg", "PALETTE"]

PALETTE = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf")

_MARGIN_LEFT = 72
_MARGIN_RIGHT = 24
_MARGIN_TOP = 24
_MARGIN_BOTTOM = 64
_FONT = "font-family=\"Helvetica, Arial, sans-serif\""


@dataclass(frozen=True)
class SvgOptions:
    width: int = 760
    height: int = 500
    x_label: str = "Network load [% of baseline peak rate]"
    y_label: str = "Power consumption [% of baseline peak power]"
    title: Optional[str] = None


def _nice_step(rough):
    # smallest of {1, 2, 2.5, 5, 10} x 10^k at or above the rough spacing
    mag = 10.0 ** math.floor(math.log10(rough))
    for mult in (1.0, 2.0, 2.5, 5.0, 10.0):
        if mult * mag >= rough:
            return mult * mag
    return 10.0 * mag


def _nice_ceiling(value, max_ticks=6):
    """Axis upper bound >= value landing on a round tick; returns (top, step)."""
    if value <= 0 or not math.isfinite(value):
        return 1.0, 0.25
    step = _nice_step(value / max_ticks)
    return step * math.ceil(value / step), step


def _px(x):
    return format(x, ".2f").rstrip("0").rstrip(".")


def emit_svg(curves, options=None):
    """Render normalized curves to SVG text.

    Curves without points are skipped with a warning; at least one curve must
    be supplied. Output is deterministic for identical inputs.
    """
    curves = list(curves)
    if not curves:
        raise ValidationError([Violation("curves", "must be non-empty", curves)])
    opts = options or SvgOptions()

    drawable = []
    for curve in curves:
        if curve.points:
            drawable.append(curve)
        else:
            warnings.warn(f"curve {curve.name!r} has no points; omitted from SVG")

    x_top, x_step = _nice_ceiling(max(
        (p.load_pct for c in drawable for p in c.points), default=0.0))
    y_top, y_step = _nice_ceiling(max(
        (p.power_pct for c in drawable for p in c.points), default=0.0))

    plot_w = opts.width - _MARGIN_LEFT - _MARGIN_RIGHT
    plot_h = opts.height - _MARGIN_TOP - _MARGIN_BOTTOM

    def sx(load_pct):
        return _MARGIN_LEFT + plot_w * load_pct / x_top

    def sy(power_pct):
        return _MARGIN_TOP + plot_h * (1.0 - power_pct / y_top)

    out = []
    out.append(f'<svg xmlns="http://www.w3.org/2000/svg" '
               f'width="{opts.width}" height="{opts.height}" '
               f'viewBox="0 0 {opts.width} {opts.height}">')
    out.append(f'<rect x="0" y="0" width="{opts.width}" height="{opts.height}" '
               f'fill="white"/>')
    if opts.title:
        out.append(f'<text x="{_px(opts.width / 2)}" y="16" text-anchor="middle" '
                   f'{_FONT} font-size="14">{escape(opts.title)}</text>')

    # gridlines and tick labels
    tick = 0.0
    while tick <= x_top + 1e-9:
        x = sx(tick)
        out.append(f'<line x1="{_px(x)}" y1="{_px(sy(0))}" x2="{_px(x)}" '
                   f'y2="{_px(sy(y_top))}" stroke="#dddddd" stroke-width="1"/>')
        out.append(f'<text x="{_px(x)}" y="{_px(sy(0) + 18)}" text-anchor="middle" '
                   f'{_FONT} font-size="12">{format(tick, "g")}</text>')
        tick += x_step
    tick = 0.0
    while tick <= y_top + 1e-9:
        y = sy(tick)
        out.append(f'<line x1="{_px(sx(0))}" y1="{_px(y)}" x2="{_px(sx(x_top))}" '
                   f'y2="{_px(y)}" stroke="#dddddd" stroke-width="1"/>')
        out.append(f'<text x="{_px(sx(0) - 8)}" y="{_px(y + 4)}" text-anchor="end" '
                   f'{_FONT} font-size="12">{format(tick, "g")}</text>')
        tick += y_step

    # axes on top of the grid
    out.append(f'<line x1="{_px(sx(0))}" y1="{_px(sy(0))}" x2="{_px(sx(x_top))}" '
               f'y2="{_px(sy(0))}" stroke="black" stroke-width="1.5"/>')
    out.append(f'<line x1="{_px(sx(0))}" y1="{_px(sy(0))}" x2="{_px(sx(0))}" '
               f'y2="{_px(sy(y_top))}" stroke="black" stroke-width="1.5"/>')
    out.append(f'<text x="{_px(_MARGIN_LEFT + plot_w / 2)}" '
               f'y="{_px(opts.height - 16)}" text-anchor="middle" {_FONT} '
               f'font-size="13">{escape(opts.x_label)}</text>')
    y_mid = _MARGIN_TOP + plot_h / 2
    out.append(f'<text x="18" y="{_px(y_mid)}" text-anchor="middle" {_FONT} '
               f'font-size="13" transform="rotate(-90 18 {_px(y_mid)})">'
               f'{escape(opts.y_label)}</text>')

    for i, curve in enumerate(drawable):
        color = PALETTE[i % len(PALETTE)]
        dash = ' stroke-dasharray="7 4"' if curve.future else ""
        pts = " ".join(f"{_px(sx(p.load_pct))},{_px(sy(p.power_pct))}"
                       for p in curve.points)
        out.append(f'<polyline fill="none" stroke="{color}" stroke-width="2"'
                   f'{dash} points="{pts}"/>')

    # legend, top-left inside the plot area
    lx = _MARGIN_LEFT + 12
    ly = _MARGIN_TOP + 14
    for i, curve in enumerate(drawable):
        color = PALETTE[i % len(PALETTE)]
        dash = ' stroke-dasharray="7 4"' if curve.future else ""
        y = ly + 18 * i
        out.append(f'<line x1="{_px(lx)}" y1="{_px(y)}" x2="{_px(lx + 28)}" '
                   f'y2="{_px(y)}" stroke="{color}" stroke-width="2"{dash}/>')
        out.append(f'<text x="{_px(lx + 34)}" y="{_px(y + 4)}" {_FONT} '
                   f'font-size="12">{escape(curve.name)}</text>')

    out.append("</svg>")
    return "\n".join(out) + "\n"
