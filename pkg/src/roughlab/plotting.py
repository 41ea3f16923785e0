"""Figures written next to the textual reports."""

from __future__ import annotations

from pathlib import Path
from typing import Sequence

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from roughlab.approximations import ApproximationResult, Indefinite  # noqa: E402
from roughlab.relations import popcount  # noqa: E402
from roughlab.topologies import SetFamily  # noqa: E402


def plot_approximations(results: Sequence[ApproximationResult], path, title: str = "") -> Path:
    """Lower/upper sizes and accuracy per target set. Indefinite accuracies are marked with 'x'."""
    labels = [str(r.target) for r in results]
    x = range(len(results))
    width = max(6.0, 0.45 * len(results))
    fig, (ax_size, ax_acc) = plt.subplots(2, 1, figsize=(width, 6), sharex=True)

    ax_size.bar([i - 0.2 for i in x], [len(r.lower) for r in results], width=0.4, label="lower")
    ax_size.bar([i + 0.2 for i in x], [len(r.upper) for r in results], width=0.4, label="upper")
    ax_size.set_ylabel("size")
    ax_size.legend(frameon=False, fontsize=8)
    if title:
        ax_size.set_title(title)

    defined = [(i, float(r.accuracy)) for i, r in zip(x, results) if not isinstance(r.accuracy, Indefinite)]
    undefined = [i for i, r in zip(x, results) if isinstance(r.accuracy, Indefinite)]
    if defined:
        ax_acc.bar([i for i, _ in defined], [v for _, v in defined], width=0.6, color="0.4")
    if undefined:
        ax_acc.scatter(undefined, [0.05] * len(undefined), marker="x", color="C3", label="indefinite")
        ax_acc.legend(frameon=False, fontsize=8)
    ax_acc.set_ylim(0, 1.05)
    ax_acc.set_ylabel("accuracy")
    ax_acc.set_xticks(list(x))
    ax_acc.set_xticklabels(labels, rotation=60, ha="right", fontsize=7)

    fig.tight_layout()
    path = Path(path)
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def _covers(masks: Sequence[int]) -> list[tuple[int, int]]:
    members = list(masks)
    edges = []
    for a in members:
        for b in members:
            if a == b or a & ~b:
                continue
            # b covers a when no member sits strictly between them
            if not any(c not in (a, b) and not a & ~c and not c & ~b for c in members):
                edges.append((a, b))
    return edges


def plot_topology(family: SetFamily, path, title: str = "") -> Path:
    """Hasse diagram of the open sets ordered by inclusion."""
    levels: dict[int, list[int]] = {}
    for m in family.masks:
        levels.setdefault(popcount(m), []).append(m)
    pos = {}
    for size, group in levels.items():
        for k, m in enumerate(group):
            pos[m] = ((k + 1) / (len(group) + 1), size)

    widest = max(len(g) for g in levels.values())
    fig, ax = plt.subplots(figsize=(max(4.0, 1.3 * widest), 1.2 * (family.universe.n + 1)))
    for a, b in _covers(family.masks):
        ax.plot([pos[a][0], pos[b][0]], [pos[a][1], pos[b][1]], color="0.6", lw=0.8, zorder=1)
    for m, (px, py) in pos.items():
        ax.text(px, py, str(family.universe.from_mask(m)), ha="center", va="center", fontsize=8,
                bbox=dict(boxstyle="round,pad=0.2", fc="white", ec="0.3"), zorder=2)
    ax.set_xlim(0, 1)
    ax.set_ylim(-0.5, family.universe.n + 0.5)
    ax.set_yticks(range(family.universe.n + 1))
    ax.set_ylabel("|F|")
    ax.set_xticks([])
    for side in ("top", "right", "bottom"):
        ax.spines[side].set_visible(False)
    if title:
        ax.set_title(title)
    fig.tight_layout()
    path = Path(path)
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path
