"""Figure and CSV rendering for the pair-family diagnostics report."""

from __future__ import annotations

import os

from .game import D_DIFF_BOUNDS, P_DIFF_BOUNDS, ConjectureReport


def conjecture_csv(report: ConjectureReport) -> str:
    """Aligned families as CSV: index, both pairs, and the differences."""
    lines = ["i,p0,q0,p1,q1,p_diff,d_diff"]
    for r0, r1, dp, dd in zip(
        report.wythoff_rows, report.one_rows, report.p_diffs, report.d_diffs
    ):
        lines.append(f"{r0.i},{r0.p},{r0.q},{r1.p},{r1.q},{dp},{dd}")
    return "\n".join(lines) + "\n"


def render_figures(report: ConjectureReport, outdir: str) -> list[str]:
    """Write the p-vs-q scatter and the difference plots as PNG files.

    Returns the paths written.  matplotlib is imported lazily so the
    solver-only paths never pay for it.
    """
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    os.makedirs(outdir, exist_ok=True)
    paths = []

    fig, ax = plt.subplots(figsize=(6, 5))
    ax.scatter(
        [r.p for r in report.wythoff_rows],
        [r.q for r in report.wythoff_rows],
        s=18,
        label="fixed jar 0 (wythoff)",
    )
    ax.scatter(
        [r.p for r in report.one_rows],
        [r.q for r in report.one_rows],
        s=18,
        marker="x",
        label="fixed jar 1",
    )
    pmax = max(r.p for r in report.wythoff_rows + report.one_rows)
    phi = (1 + 5**0.5) / 2
    ax.plot([0, pmax], [0, phi * pmax], lw=0.8, ls="--", color="gray",
            label="slope phi")
    ax.set_xlabel("p")
    ax.set_ylabel("q")
    ax.set_title(f"Losing pairs, first {report.count} rows per family")
    ax.legend()
    path = os.path.join(outdir, "pairs_scatter.png")
    fig.savefig(path, dpi=120, bbox_inches="tight")
    plt.close(fig)
    paths.append(path)

    fig, (ax1, ax2) = plt.subplots(2, 1, figsize=(6, 6), sharex=True)
    idx = range(1, report.count + 1)
    ax1.plot(idx, report.p_diffs, marker="o", ms=3, lw=0.8)
    for y in P_DIFF_BOUNDS:
        ax1.axhline(y, color="red", lw=0.8, ls=":")
    ax1.set_ylabel("p1 - p0")
    ax2.plot(idx, report.d_diffs, marker="o", ms=3, lw=0.8, color="tab:orange")
    for y in D_DIFF_BOUNDS:
        ax2.axhline(y, color="red", lw=0.8, ls=":")
    ax2.set_ylabel("(q1-p1) - (q0-p0)")
    ax2.set_xlabel("row index")
    fig.suptitle("Aligned family differences vs the observed-prefix bounds")
    path = os.path.join(outdir, "pair_differences.png")
    fig.savefig(path, dpi=120, bbox_inches="tight")
    plt.close(fig)
    paths.append(path)
    return paths
