"""Matplotlib renderings: order diagrams and verification summaries."""

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
from matplotlib.patches import Rectangle

from .logic import model_set_names


def save_order_figure(order, path, title=None):
    """Draw an order as a stack of class boxes, most plausible class on top."""
    k = len(order.classes)
    fig, ax = plt.subplots(figsize=(4.2, 0.75 * k + 0.6))
    for row, mask in enumerate(order.classes):
        y = k - 1 - row
        ax.add_patch(
            Rectangle((0, y), 4, 0.8, facecolor="#e8eef7", edgecolor="#345")
        )
        label = "   ".join(model_set_names(mask, order.alphabet))
        ax.text(2, y + 0.4, label, ha="center", va="center", fontsize=11)
    ax.set_xlim(-0.2, 4.2)
    ax.set_ylim(-0.2, k)
    ax.axis("off")
    if title:
        ax.set_title(title, fontsize=11)
    fig.savefig(path, bbox_inches="tight", dpi=120)
    plt.close(fig)
    return path


def save_suite_figure(results, path, title=None):
    """Horizontal pass/fail chart, one bar per check."""
    names = [r.name for r in results]
    colors = ["#2c8a43" if r.ok else "#b03030" for r in results]
    n = len(results)
    fig, ax = plt.subplots(figsize=(8, 0.32 * n + 1.0))
    ax.barh(range(n), [1] * n, color=colors)
    ax.set_yticks(range(n))
    ax.set_yticklabels(names, fontsize=8)
    ax.invert_yaxis()
    ax.set_xticks([])
    for spine in ax.spines.values():
        spine.set_visible(False)
    passed = sum(r.ok for r in results)
    ax.set_title(title or f"{passed}/{n} checks passed", fontsize=11)
    fig.savefig(path, bbox_inches="tight", dpi=120)
    plt.close(fig)
    return path
