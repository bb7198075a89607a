"""Render a suite run to files: delimited results plus overview figures.

``write_report`` drops three artifacts into the target directory:

* results.csv      -- one row per check (id, suite, status, claim, orders, ms)
* check_timings.png -- horizontal bar chart of per-check runtime, colored
                       by status
* pseudocentre_orders.png -- log-log scatter of |P(G)| against |G| for every
                       check that computed a pseudocentre
"""

from __future__ import annotations

import csv
from pathlib import Path

_STATUS_COLORS = {"pass": "#2a9d2a", "fail": "#d62728", "skip": "#999999"}


def write_csv(result, path):
    with open(path, "w", newline="") as handle:
        writer = csv.writer(handle)
        writer.writerow(
            ["check_id", "suite", "status", "claim", "expected", "computed",
             "group_order", "pseudocentre_order", "ms"]
        )
        for r in result.records:
            writer.writerow(
                [r.check_id, r.suite, r.status, r.claim, r.expected, r.computed,
                 r.group_order if r.group_order is not None else "",
                 r.pseudocentre_order if r.pseudocentre_order is not None else "",
                 f"{r.ms:.1f}"]
            )


def _timings_figure(result, path):
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    records = sorted(result.records, key=lambda r: r.ms)
    if not records:
        fig, ax = plt.subplots(figsize=(6, 2))
        ax.text(0.5, 0.5, "no checks ran", ha="center", va="center", transform=ax.transAxes)
        fig.savefig(path, dpi=150)
        plt.close(fig)
        return
    names = [f"{r.suite}:{r.check_id}" for r in records]
    times = [max(r.ms, 0.01) for r in records]
    colors = [_STATUS_COLORS.get(r.status, "#333333") for r in records]

    height = max(2.5, 0.22 * len(records) + 1.2)
    fig, ax = plt.subplots(figsize=(9, height))
    ax.barh(range(len(records)), times, color=colors)
    ax.set_yticks(range(len(records)))
    ax.set_yticklabels(names, fontsize=7)
    ax.set_xscale("log")
    ax.set_xlabel("runtime (ms, log scale)")
    ax.set_title(f"suite '{result.name}': per-check runtime")
    handles = [plt.Rectangle((0, 0), 1, 1, color=c) for c in _STATUS_COLORS.values()]
    ax.legend(handles, list(_STATUS_COLORS), loc="lower right", fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def _orders_figure(result, path):
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    points = [
        (r.group_order, r.pseudocentre_order, r.status)
        for r in result.records
        if r.group_order and r.pseudocentre_order
    ]
    fig, ax = plt.subplots(figsize=(6, 5))
    if points:
        for status in ("pass", "fail", "skip"):
            xs = [g for g, p, s in points if s == status]
            ys = [p for g, p, s in points if s == status]
            if xs:
                ax.scatter(xs, ys, s=24, alpha=0.75, color=_STATUS_COLORS[status], label=status)
        limit = max(g for g, _, _ in points)
        ax.plot([1, limit], [1, limit], linestyle=":", color="#777777", linewidth=1)
        ax.set_xscale("log")
        ax.set_yscale("log")
        ax.legend(fontsize=8)
    else:
        ax.text(0.5, 0.5, "no pseudocentre computations in this suite",
                ha="center", va="center", transform=ax.transAxes)
    ax.set_xlabel("|G|")
    ax.set_ylabel("|P(G)|")
    ax.set_title("pseudocentre order against group order")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def write_report(result, directory):
    """Write results.csv and the two figures; returns the paths written."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    csv_path = directory / "results.csv"
    timings_path = directory / "check_timings.png"
    orders_path = directory / "pseudocentre_orders.png"
    write_csv(result, csv_path)
    _timings_figure(result, timings_path)
    _orders_figure(result, orders_path)
    return [csv_path, timings_path, orders_path]
