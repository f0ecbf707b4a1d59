"""Render cross-check reports: delimited trial tables and figure files."""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .oracle import CrossCheckReport  # noqa: E402

TABLE_FIELDS = ("trial", "seed", "errors", "in_contract", "found", "list_size",
                "kernel_dim", "zero_count", "oracle_ran", "oracle_misses", "pass")


def write_trial_table(path, report: CrossCheckReport) -> None:
    """One semicolon-delimited line per trial."""
    lines = [";".join(TABLE_FIELDS)]
    for r in report.records:
        lines.append(";".join(str(v) for v in (
            r.index, r.seed, r.errors, int(r.in_contract), int(r.transmitted_found),
            r.list_size, r.kernel_dim, r.zero_count, int(r.oracle_ran),
            r.oracle_misses, int(r.ok))))
    Path(path).write_text("\n".join(lines) + "\n")


def render_list_size_figure(report: CrossCheckReport, path, list_cap: int | None = None) -> None:
    fig, ax = plt.subplots(figsize=(6, 3.2))
    xs = [r.index for r in report.records]
    ax.bar(xs, [r.list_size for r in report.records], color="#4878b0")
    if list_cap is not None:
        ax.axhline(list_cap, color="#c44e52", linestyle="--", linewidth=1,
                   label=f"list cap {list_cap}")
        ax.legend(loc="upper right", frameon=False)
        ax.set_yscale("log")
    ax.set_xlabel("trial")
    ax.set_ylabel("candidates returned")
    ax.set_title("List size per decode trial")
    fig.tight_layout()
    fig.savefig(path, dpi=140)
    plt.close(fig)


def render_distance_figure(report: CrossCheckReport, path) -> None:
    fig, ax = plt.subplots(figsize=(6, 3.2))
    dists = [d for r in report.records for d in r.candidate_distances]
    bins = range(0, report.radius + 3)
    ax.hist(dists, bins=bins, align="left", rwidth=0.8, color="#6aa66a")
    ax.axvline(report.radius + 0.5, color="#c44e52", linestyle="--", linewidth=1,
               label=f"radius {report.radius}")
    ax.set_xlabel("column distance of returned candidate")
    ax.set_ylabel("count across trials")
    ax.set_title("Candidate distances")
    ax.legend(loc="upper left", frameon=False)
    fig.tight_layout()
    fig.savefig(path, dpi=140)
    plt.close(fig)


def render_report(report: CrossCheckReport, outdir, stem: str,
                  list_cap: int | None = None) -> list[str]:
    """Write the delimited table and the figures; returns the paths."""
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    table = outdir / f"{stem}_trials.csv"
    sizes = outdir / f"{stem}_list_sizes.png"
    dists = outdir / f"{stem}_distances.png"
    write_trial_table(table, report)
    render_list_size_figure(report, sizes, list_cap)
    render_distance_figure(report, dists)
    return [str(table), str(sizes), str(dists)]
