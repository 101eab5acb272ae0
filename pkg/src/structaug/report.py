"""Runtime figures for ``bench`` output."""

from __future__ import annotations

from collections import defaultdict
from typing import Dict, List, Sequence

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402


def runtime_figure(rows: Sequence[Dict[str, object]], path: str, title: str = "solver runtime") -> None:
    """Median seconds per (solver, n_g), one line per solver, log-scaled time axis."""
    series: Dict[str, Dict[int, List[float]]] = defaultdict(lambda: defaultdict(list))
    for row in rows:
        series[str(row["solver"])][int(row["n_g"])].append(float(row["seconds"]))
    fig, ax = plt.subplots(figsize=(5.5, 3.6))
    for name in sorted(series):
        pts = sorted(series[name].items())
        xs = [n for n, _ in pts]
        ys = [sorted(v)[len(v) // 2] for _, v in pts]
        ax.plot(xs, ys, marker="o", label=name)
    ax.set_xlabel("|V(G)|")
    ax.set_ylabel("median seconds")
    ax.set_yscale("log")
    ax.set_title(title)
    ax.grid(True, which="both", alpha=0.3)
    ax.legend(frameon=False)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
