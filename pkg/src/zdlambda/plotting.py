"""Figures for the family tables."""

from __future__ import annotations

from pathlib import Path
from typing import Sequence

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402


def plot_table(rows: Sequence[dict], path: str | Path, title: str = "") -> Path:
    """Constructed span and exact lambda against the closed form, one point per row."""
    path = Path(path)
    fig, ax = plt.subplots(figsize=(5.5, 5))
    formula = [r["formula"] for r in rows]
    span = [r["span"] for r in rows]
    ax.scatter(formula, span, marker="o", facecolors="none", edgecolors="tab:blue",
               label="constructed span")
    solved = [r for r in rows if r.get("exact") is not None]
    if solved:
        ax.scatter([r["formula"] for r in solved], [r["exact"] for r in solved],
                   marker="x", color="tab:red", label="exact lambda")
    if formula:
        lo, hi = min(formula + span), max(formula + span)
        ax.plot([lo, hi], [lo, hi], color="grey", linewidth=0.8, linestyle="--")
        ax.set_xscale("log" if hi > 50 * max(lo, 1) else "linear")
        ax.set_yscale(ax.get_xscale())
    ax.set_xlabel("closed-form lambda")
    ax.set_ylabel("value")
    if title:
        ax.set_title(title)
    ax.legend(loc="upper left")
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)
    return path
