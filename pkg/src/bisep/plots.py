"""Optional matplotlib figures for verify-paper and search reports.

matplotlib is imported lazily so the core package has no hard
dependency on it; callers get a clear error if it is missing.
"""

from __future__ import annotations

import os


def _plt():
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    return plt


def render_verify(results, outdir):
    """Horizontal pass/fail bar per criterion plus a runtime chart."""
    plt = _plt()
    os.makedirs(outdir, exist_ok=True)
    names = [r["name"] for r in results]
    ok = [r["pass"] for r in results]
    ms = [r["ms"] for r in results]
    ypos = range(len(names))

    fig, (ax1, ax2) = plt.subplots(
        1, 2, figsize=(11, 0.5 * len(names) + 2), sharey=True
    )
    ax1.barh(list(ypos), [1] * len(names),
             color=["#2a9d4e" if o else "#d62828" for o in ok])
    ax1.set_yticks(list(ypos))
    ax1.set_yticklabels(names, fontsize=8)
    ax1.set_xticks([])
    ax1.set_title("verification suite (green = pass)")
    ax1.invert_yaxis()

    ax2.barh(list(ypos), ms, color="#457b9d")
    ax2.set_xlabel("runtime (ms)")
    ax2.set_title("per-criterion runtime")

    fig.tight_layout()
    path = os.path.join(outdir, "verify_paper.png")
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return [path]


def render_search(report, outdir):
    """Candidate funnel for a search report."""
    plt = _plt()
    os.makedirs(outdir, exist_ok=True)
    labels = ["candidates", "filter hits", "unknowns", "violations"]
    values = [
        report["candidates"],
        report["filter_hits"],
        report["unknowns"],
        len(report["violations"]),
    ]
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.bar(labels, values, color=["#457b9d", "#2a9d4e", "#e9c46a", "#d62828"])
    for i, v in enumerate(values):
        ax.text(i, v, str(v), ha="center", va="bottom", fontsize=9)
    flt = ",".join(report["config"]["filter"])
    ax.set_title("search: filter=%s expect=%s" % (flt, report["config"]["expect"]))
    fig.tight_layout()
    path = os.path.join(outdir, "search_summary.png")
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return [path]
