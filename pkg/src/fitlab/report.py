"""Delimited verdict reports and the figures rendered next to them.

One line per verdict, globally sorted, plus a count footer; identical
verdict lists produce byte-identical reports.  Figure rendering is the
only place that touches matplotlib, and imports it lazily so every
other code path stays import-light.
"""

from __future__ import annotations

from collections import Counter
from pathlib import Path

from .theorems import TheoremVerdict

__all__ = ["render_report", "emit_report", "write_figures"]

_STATUSES = ("pass", "fail", "skipped")


def render_report(verdicts) -> str:
    lines = []
    for v in sorted(verdicts, key=lambda v: v.sort_key):
        detail = v.detail_text or "-"
        lines.append(f"THEOREM {v.theorem} GROUP {v.group} STATUS {v.status} DETAIL {detail}")
    counts = Counter(v.status for v in verdicts)
    lines.append(
        "SUMMARY {} pass / {} fail / {} skipped".format(
            counts["pass"], counts["fail"], counts["skipped"]
        )
    )
    return "\n".join(lines) + "\n"


def emit_report(verdicts, destination=None) -> str:
    """Write the report to ``destination`` (a path) or return it only.

    Returns the rendered text either way so callers can echo it.
    """
    text = render_report(verdicts)
    if destination is not None:
        Path(destination).write_text(text, encoding="utf-8")
    return text


def _figure_paths(report_path) -> tuple[Path, Path]:
    base = Path(report_path)
    stem = base.stem or "report"
    return (
        base.with_name(f"{stem}-verdicts.png"),
        base.with_name(f"{stem}-heights.png"),
    )


def write_figures(verdicts, report_path) -> list[Path]:
    """Render summary figures next to the report file.

    A stacked bar of verdict statuses per suite always appears; the
    height scatter only when sandwich verdicts carrying htilde/hstar
    pairs exist.  Returns the written paths.
    """
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    verdict_path, heights_path = _figure_paths(report_path)
    written = []

    by_theorem: dict[str, Counter] = {}
    for v in verdicts:
        by_theorem.setdefault(v.theorem, Counter())[v.status] += 1
    theorems = sorted(by_theorem)
    fig, ax = plt.subplots(figsize=(max(6, 0.6 * len(theorems) + 2), 4))
    bottoms = [0] * len(theorems)
    colors = {"pass": "#4a7c59", "fail": "#b3273a", "skipped": "#b8b8b8"}
    for status in _STATUSES:
        heights = [by_theorem[t][status] for t in theorems]
        ax.bar(theorems, heights, bottom=bottoms, label=status, color=colors[status])
        bottoms = [b + h for b, h in zip(bottoms, heights)]
    ax.set_ylabel("verdicts")
    ax.set_title("verdicts by suite")
    ax.legend()
    ax.tick_params(axis="x", rotation=60)
    fig.tight_layout()
    fig.savefig(verdict_path)
    plt.close(fig)
    written.append(verdict_path)

    points = []
    for v in verdicts:
        detail = dict(v.detail)
        if "htilde" in detail and "hstar" in detail:
            try:
                points.append((float(detail["htilde"]), float(detail["hstar"])))
            except ValueError:
                continue
    if points:
        fig, ax = plt.subplots(figsize=(5, 5))
        weight = Counter(points)
        xs = [p[0] for p in weight]
        ys = [p[1] for p in weight]
        sizes = [20 + 12 * weight[p] for p in weight]
        ax.scatter(xs, ys, s=sizes, alpha=0.7, color="#34558b")
        top = max(max(xs), max(ys)) + 1
        ax.plot([0, top], [0, top], lw=1, ls="--", color="#888888")
        ax.plot([0, top], [0, 2 * top], lw=1, ls=":", color="#888888")
        ax.set_xlabel("non-Frattini height")
        ax.set_ylabel("quasinilpotent height")
        ax.set_title("height sandwich")
        fig.tight_layout()
        fig.savefig(heights_path)
        plt.close(fig)
        written.append(heights_path)
    return written
