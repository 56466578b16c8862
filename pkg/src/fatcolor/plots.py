"""Figures for the ``report`` command: feasible parameters and the coarsening order."""

from __future__ import annotations

from collections import defaultdict

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .coloring import format_rational  # noqa: E402

RC = {
    "font.size": 10,
    "axes.spines.top": False,
    "axes.spines.right": False,
    "savefig.dpi": 150,
    "svg.hashsalt": "fatcolor",
}


def plot_feasible(rows, path, title=None):
    """Scatter of realized (k, alpha); marker area scales with the coloring count.

    ``rows`` are ``(k, alpha, count, has_irreducible)`` tuples.
    """
    with plt.rc_context(RC):
        fig, ax = plt.subplots(figsize=(5, 3.5))
        for k, alpha, count, irreducible in rows:
            ax.scatter([k], [float(alpha)], s=30 + 12 * count ** 0.5,
                       facecolor="C3" if irreducible else "white",
                       edgecolor="C3" if irreducible else "0.2", zorder=3)
            ax.annotate(format_rational(alpha), (k, float(alpha)),
                        xytext=(6, 4), textcoords="offset points", fontsize=8)
        ks = sorted({r[0] for r in rows})
        ax.set_xticks(ks)
        ax.set_xlabel("number of classes k")
        ax.set_ylabel(r"fairness parameter $\alpha$")
        ax.set_ylim(-0.05, 1.1)
        if title:
            ax.set_title(title)
        fig.tight_layout()
        fig.savefig(path, metadata={"Software": None} if str(path).endswith(".png") else None)
        plt.close(fig)


def plot_poset(p, path, title=None):
    """Hasse diagram with one row per k; irreducible elements filled."""
    levels = defaultdict(list)
    for i, fc in enumerate(p.elements):
        levels[fc.k].append(i)
    pos = {}
    for k, members in levels.items():
        for j, i in enumerate(members):
            pos[i] = ((j + 1) / (len(members) + 1), k)
    maximal = set(p.maximal)
    with plt.rc_context(RC):
        fig, ax = plt.subplots(figsize=(7, 1.2 + 1.1 * len(levels)))
        for fine, coarse in p.hasse_edges:
            (x0, y0), (x1, y1) = pos[fine], pos[coarse]
            ax.plot([x0, x1], [y0, y1], color="0.7", lw=0.5, zorder=1)
        many = len(p.elements) > 40
        for i, (x, y) in pos.items():
            fc = p.elements[i]
            ax.scatter([x], [y], s=12 if many else 60, zorder=2,
                       facecolor="C0" if i in maximal else "white", edgecolor="C0")
            if not many:
                ax.annotate(format_rational(fc.alpha), (x, y), xytext=(5, 3),
                            textcoords="offset points", fontsize=7)
        ax.set_yticks(sorted(levels))
        ax.set_ylabel("k")
        ax.set_xticks([])
        ax.spines["bottom"].set_visible(False)
        if title:
            ax.set_title(title)
        fig.tight_layout()
        fig.savefig(path, metadata={"Software": None} if str(path).endswith(".png") else None)
        plt.close(fig)
