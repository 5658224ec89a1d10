"""Figures for count tables."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

MARKERS = "osD^v<>p"


def plot_count_table(table: dict[str, list[tuple[int, int]]], k: int, l: int, path: str) -> str:
    """Write a log-scale plot of count against n, one line per type, to ``path``."""
    fig, ax = plt.subplots(figsize=(6.4, 4.0))
    for marker, (type_, points) in zip(MARKERS, table.items()):
        points = [(n, c) for n, c in points if c > 0]
        if not points:
            continue
        xs, ys = zip(*points)
        ax.plot(xs, ys, marker=marker, markersize=4, linewidth=1.2, label=type_)
    ax.set_yscale("log")
    ax.set_xlabel("length n")
    ax.set_ylabel("number of permutations")
    ax.set_title(f"crucial permutations, (k, l) = ({k}, {l})")
    ax.grid(True, which="major", alpha=0.3)
    ax.xaxis.get_major_locator().set_params(integer=True)
    ax.legend(fontsize=8, frameon=False, ncol=2)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path
