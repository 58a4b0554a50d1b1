"""Figures for verification reports, rendered off-screen."""

from __future__ import annotations

from pathlib import Path
from typing import Sequence

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .verify import SuiteReport  # noqa: E402

PASS_COLOR = "#2a7f62"
FAIL_COLOR = "#c0392b"


def plot_suite(report: SuiteReport, path: str | Path) -> Path:
    """Expected against observed values for every check that has them, plus case counts."""
    path = Path(path)
    fig, (left, right) = plt.subplots(1, 2, figsize=(11, 4.5))
    lo = hi = 0.0
    plotted = False
    for check in report.checks:
        if not check.points:
            continue
        xs = [float(e) for e, _ in check.points]
        ys = [float(o) for _, o in check.points]
        lo, hi = min(lo, *xs, *ys), max(hi, *xs, *ys)
        left.scatter(xs, ys, s=12, alpha=0.6, label=check.identity[:40])
        plotted = True
    if plotted:
        left.plot([lo, hi], [lo, hi], color="grey", linewidth=0.8, linestyle="--")
        left.legend(fontsize=7, loc="upper left")
    else:
        left.text(0.5, 0.5, "no numeric comparisons", ha="center", va="center", transform=left.transAxes)
    left.set_xlabel("expected")
    left.set_ylabel("observed")
    left.set_title(f"{report.suite}: expected vs observed")

    names = [c.identity[:45] for c in report.checks]
    counts = [c.cases for c in report.checks]
    colors = [PASS_COLOR if c.passed else FAIL_COLOR for c in report.checks]
    right.barh(range(len(names)), counts, color=colors)
    right.set_yticks(range(len(names)))
    right.set_yticklabels(names, fontsize=7)
    right.invert_yaxis()
    right.set_xlabel("cases checked")
    right.set_title("PASS" if report.passed else "FAIL")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def plot_summary(reports: Sequence[SuiteReport], path: str | Path) -> Path:
    path = Path(path)
    fig, ax = plt.subplots(figsize=(8, 0.45 * len(reports) + 1.2))
    labels = [f"{r.criterion} {r.suite}" for r in reports]
    times = [max(r.elapsed, 1e-3) for r in reports]
    ax.barh(range(len(reports)), times, color=[PASS_COLOR if r.passed else FAIL_COLOR for r in reports])
    ax.set_yticks(range(len(reports)))
    ax.set_yticklabels(labels, fontsize=8)
    ax.invert_yaxis()
    ax.set_xlabel("seconds (green = pass, red = fail)")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path
