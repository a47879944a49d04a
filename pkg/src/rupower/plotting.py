"""Matplotlib rendering of curves and comparison reports to image files.

Complements the dependency-free SVG emitter: same data, raster/vector output
through matplotlib for reports. Uses the Agg backend so it works headless.
"""

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402

__all__ = ["render_curves", "render_comparison"]


def render_curves(curves, path, title=None):
    """Plot normalized power vs load, one line per config, dashed for future."""
    fig, ax = plt.subplots(figsize=(7.5, 5.0))
    for curve in curves:
        if not curve.points:
            continue
        loads = [p.load_pct for p in curve.points]
        powers = [p.power_pct for p in curve.points]
        ax.plot(loads, powers, linestyle="--" if curve.future else "-",
                linewidth=2, label=curve.name)
    ax.set_xlabel("Network load [% of baseline peak rate]")
    ax.set_ylabel("Power consumption [% of baseline peak power]")
    ax.set_xlim(left=0)
    ax.set_ylim(bottom=0)
    ax.grid(alpha=0.3)
    ax.legend(loc="upper left")
    if title:
        ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def render_comparison(report, path):
    """Grouped bars of each config's ratios against the baseline."""
    metrics = (
        ("peak rate", "peak_rate_ratio"),
        ("peak power", "peak_power_ratio"),
        ("daily power", "daily_power_ratio"),
        ("bits/J", "bits_per_joule_ratio"),
    )
    entries = report.entries
    width = 0.8 / len(metrics)
    fig, ax = plt.subplots(figsize=(7.5, 5.0))
    for j, (label, attr) in enumerate(metrics):
        xs = [i + (j - (len(metrics) - 1) / 2) * width for i in range(len(entries))]
        ax.bar(xs, [getattr(e, attr) for e in entries], width=width, label=label)
    ax.axhline(1.0, color="black", linewidth=1, linestyle=":")
    ax.set_xticks(range(len(entries)))
    ax.set_xticklabels([e.name for e in entries], rotation=15, ha="right")
    ax.set_ylabel(f"Ratio vs {report.baseline}")
    ax.grid(axis="y", alpha=0.3)
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
