"""Figure rendering for the CLI report paths.

Each report subcommand can save a figure next to its delimited output:
sequence tables become n-vs-count plots, bivariate series dumps become
support scatters, and bijection listings render the tilings as colored
strips.  matplotlib is imported lazily with the Agg backend so plain runs
never touch it.
"""

from __future__ import annotations

from typing import Sequence

from .bijection import RED, Tiling


def _axes():
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
    fig, ax = plt.subplots(figsize=(6.4, 4.0))
    return plt, fig, ax


def save_sequence_plot(rows: Sequence[tuple[int, int]], title: str,
                       path: str) -> None:
    """Plot (n, value) rows, switching to a log scale once the values span
    several decades."""
    plt, fig, ax = _axes()
    xs = [n for n, _ in rows]
    ys = [float(v) for _, v in rows]
    ax.plot(xs, ys, marker="o", markersize=4, linewidth=1.2, color="#1f77b4")
    positives = [y for y in ys if y > 0]
    if positives and max(positives) / min(positives) >= 1000 and min(ys) >= 0:
        ax.set_yscale("symlog")
    ax.set_xlabel("n")
    ax.set_ylabel("count")
    ax.set_title(title)
    ax.grid(True, alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def save_bivariate_plot(triples: Sequence[tuple[int, int, int]], title: str,
                        path: str) -> None:
    """Scatter the support of a bivariate series: x degree against y
    exponent, dot area tracking the coefficient size."""
    import math

    plt, fig, ax = _axes()
    xs = [n for n, _, _ in triples]
    ys = [e for _, e, _ in triples]
    sizes = [12 + 18 * math.log1p(abs(c)) for _, _, c in triples]
    ax.scatter(xs, ys, s=sizes, alpha=0.7, color="#d62728", edgecolors="none")
    ax.set_xlabel("x degree")
    ax.set_ylabel("y exponent")
    ax.set_title(title)
    ax.grid(True, alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def save_tiling_plot(tilings: Sequence[Tiling], title: str, path: str) -> None:
    """Render each tiling as one horizontal strip, red tile highlighted."""
    plt, fig, ax = _axes()
    height = max(1.5, 0.28 * len(tilings) + 0.8)
    fig.set_size_inches(6.4, min(height, 10.0))
    for row, tiling in enumerate(tilings):
        offset = 0
        y = len(tilings) - 1 - row
        for color, length in tiling:
            face = "#d62728" if color == RED else "#1f77b4"
            ax.barh(y, length, left=offset, height=0.8, color=face,
                    edgecolor="white", linewidth=1.0)
            offset += length
    ax.set_yticks([])
    ax.set_xlabel("square")
    ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
