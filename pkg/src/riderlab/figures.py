"""Matplotlib report figures saved next to the delimited outputs.

matplotlib is imported lazily so the core library works without it; these
renderings are presentation artifacts and are not covered by the byte-exact
output guarantees (the SVG emitter is the deterministic path).
"""

from __future__ import annotations


def _pyplot():
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
    return plt


def plot_counts(rows, path, title: str) -> None:
    """Line plot of (n, count) rows on a log-scaled count axis."""
    plt = _pyplot()
    ns = [n for n, _ in rows]
    counts = [c for _, c in rows]
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.plot(ns, counts, marker="o", ms=3, lw=1)
    if any(c > 0 for c in counts):
        ax.set_yscale("symlog")
    ax.set_xlabel("board size n")
    ax.set_ylabel("placements")
    ax.set_title(title)
    ax.grid(True, alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def plot_config(config, path, title: str) -> None:
    """Scatter of a generated configuration with its attack segments."""
    plt = _pyplot()
    fig, ax = plt.subplots(figsize=(5, 5))
    xs = [p[0] for p in config.positions]
    ys = [p[1] for p in config.positions]
    for (i, j, _) in config.move_equations:
        ax.plot([xs[i - 1], xs[j - 1]], [ys[i - 1], ys[j - 1]],
                color="#c33", lw=1, zorder=1)
    ax.scatter(xs, ys, s=60, color="#1a4f8b", zorder=2)
    for idx, (x, y) in enumerate(config.positions, start=1):
        ax.annotate(str(idx), (x, y), ha="center", va="center",
                    color="white", fontsize=7, zorder=3)
    ax.set_aspect("equal")
    ax.set_title(title)
    ax.grid(True, alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
