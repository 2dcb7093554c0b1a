"""Figure rendering for census reports (headless matplotlib backend)."""

from __future__ import annotations

from collections import Counter

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402

from .gmp2 import CensusReport  # noqa: E402

_CLASS_ORDER = ["scalar", "complex_reflection", "point_reflection", "regular_elliptic"]
_CLASS_LABELS = {
    "scalar": "scalar",
    "complex_reflection": "complex refl.",
    "point_reflection": "point refl.",
    "regular_elliptic": "regular ell.",
}


def render_census_figure(report: CensusReport, path: str) -> str:
    """Write a two-panel summary (class counts, orders by class) to path."""
    fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(9, 3.6))

    class_counts = Counter(r.tag for r in report.rows)
    tags = [t for t in _CLASS_ORDER if class_counts.get(t)]
    ax1.bar(range(len(tags)), [class_counts[t] for t in tags], color="#4878a8")
    ax1.set_xticks(range(len(tags)))
    ax1.set_xticklabels([_CLASS_LABELS[t] for t in tags], rotation=20, ha="right")
    ax1.set_ylabel("elements")
    ax1.set_title(f"G({report.m},{report.p},2): classes")

    orders = sorted({r.order for r in report.rows})
    width = 0.8 / max(1, len(tags))
    for i, tag in enumerate(tags):
        counts = Counter(r.order for r in report.rows if r.tag == tag)
        xs = [k + i * width for k in range(len(orders))]
        ax2.bar(xs, [counts.get(o, 0) for o in orders], width=width,
                label=_CLASS_LABELS[tag])
    ax2.set_xticks([k + 0.4 - width / 2 for k in range(len(orders))])
    ax2.set_xticklabels([str(o) for o in orders])
    ax2.set_xlabel("element order")
    ax2.set_ylabel("elements")
    ax2.set_title("orders by class")
    ax2.legend(fontsize=8)

    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path
