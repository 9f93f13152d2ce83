"""
Figures for density reports and sweep summaries.

All functions draw on the non-interactive Agg backend and write straight to
a file; nothing is shown on screen.
"""

from __future__ import annotations

import math
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402


def pretty_plot(width=8, height=None):
    """A figure/axes pair with readable default font sizes."""
    golden_ratio = (math.sqrt(5) - 1.0) / 2.0
    if not height:
        height = width * golden_ratio
    fig, ax = plt.subplots(figsize=(width, height), facecolor="w")
    ax.tick_params(labelsize=width * 1.5)
    return fig, ax


def _save(fig, path):
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fig.savefig(path, dpi=120, bbox_inches="tight")
    plt.close(fig)
    return path


def plot_counts(report, path):
    """f(x) against pi_1, pi_2, pi_3 and their sum, log-log."""
    fig, ax = pretty_plot()
    xs = report.checkpoints
    for k, ys in sorted(report.pi.items()):
        ax.loglog(xs, ys, marker="o", lw=1, label=rf"$\pi_{k}(x)$")
    total = [sum(report.pi[k][i] for k in report.pi) for i in range(len(xs))]
    ax.loglog(xs, total, ls="--", color="grey", label=r"$\pi_1+\pi_2+\pi_3$")
    ax.loglog(xs, report.f, marker="s", lw=2, color="k", label=r"$f(x)$")
    ax.set_xlabel("x", fontsize=12)
    ax.set_ylabel("count up to x", fontsize=12)
    ax.legend(fontsize=10)
    return _save(fig, path)


def plot_ratios(report, path):
    """Landau ratios per k and the envelope constant."""
    fig, ax = pretty_plot()
    xs = report.checkpoints
    for k, ys in sorted(report.landau_ratio.items()):
        ax.semilogx(xs, ys, marker="o", label=f"Landau ratio, k={k}")
    ax.semilogx(xs, report.envelope_C, marker="s", color="k", label="envelope C")
    ax.axhline(1.0, color="grey", lw=0.8, ls=":")
    ax.set_xlabel("x", fontsize=12)
    ax.set_ylabel("ratio", fontsize=12)
    ax.legend(fontsize=10)
    return _save(fig, path)


def plot_s_histogram(sweep_result, path):
    fig, ax = pretty_plot()
    s_vals = sorted(sweep_result.s_counts)
    ax.bar(s_vals, [sweep_result.s_counts[s] for s in s_vals], color="steelblue")
    ax.set_yscale("log")
    ax.set_xlabel("s(n)", fontsize=12)
    ax.set_ylabel("recurrent n", fontsize=12)
    ax.set_title(f"[{sweep_result.lo}, {sweep_result.hi}]", fontsize=12)
    return _save(fig, path)


def density_figures(report, directory, stem="density"):
    """Write the count and ratio figures for ``report`` into ``directory``."""
    directory = Path(directory)
    return [
        plot_counts(report, directory / f"{stem}_counts.png"),
        plot_ratios(report, directory / f"{stem}_ratios.png"),
    ]
