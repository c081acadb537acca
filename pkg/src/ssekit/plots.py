"""Render study and benchmark reports to figure files.

Used by the CLI when --plot is given; the delimited/JSON reports stay the
primary output and are unchanged by plotting.
"""

from __future__ import annotations

from pathlib import Path
from typing import Sequence

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .simulate import StudyRow

FIG_SIZE = (7.0, 4.3)


def plot_study(rows: Sequence[StudyRow], out_dir: Path) -> list[Path]:
    """Write the three study figures (mean entropies, ranges, ratio curve)."""
    out_dir.mkdir(parents=True, exist_ok=True)
    sizes = [r.alphabet_size for r in rows]
    written = []

    fig, ax = plt.subplots(figsize=FIG_SIZE)
    ax.plot(sizes, [r.source_mean for r in rows], label="source", marker="o", ms=3)
    ax.plot(sizes, [r.target_mean for r in rows], label="transformed", marker="s", ms=3)
    ax.set_xlabel("alphabet size")
    ax.set_ylabel("mean entropy (bits/byte)")
    ax.legend()
    written.append(_save(fig, out_dir / "study_entropy_mean.png"))

    fig, ax = plt.subplots(figsize=FIG_SIZE)
    ax.fill_between(
        sizes,
        [r.source_min for r in rows],
        [r.source_max for r in rows],
        alpha=0.3,
        label="source min..max",
    )
    ax.fill_between(
        sizes,
        [r.target_min for r in rows],
        [r.target_max for r in rows],
        alpha=0.3,
        label="transformed min..max",
    )
    ax.plot(sizes, [r.source_mean for r in rows], lw=1)
    ax.plot(sizes, [r.target_mean for r in rows], lw=1)
    ax.set_xlabel("alphabet size")
    ax.set_ylabel("entropy (bits/byte)")
    ax.legend()
    written.append(_save(fig, out_dir / "study_entropy_range.png"))

    fig, ax = plt.subplots(figsize=FIG_SIZE)
    ax.plot(sizes, [r.ratio_mean for r in rows], marker="o", ms=3)
    ax.axhline(1.0, color="gray", lw=0.8, ls="--")
    ax.set_xlabel("alphabet size")
    ax.set_ylabel("mean entropy ratio (transformed / source)")
    ax.set_ylim(0.0, 1.2)
    written.append(_save(fig, out_dir / "study_ratio.png"))

    return written


def plot_bench(results: dict, out_path: Path) -> Path:
    """Write a grouped bar chart of the benchmark's four ratios."""
    out_path.parent.mkdir(parents=True, exist_ok=True)
    labels = ["entropy", "actual"]
    source = [results["entropy"]["source_ratio"], results["actual"]["source"]["ratio"]]
    sse = [results["entropy"]["sse_ratio"], results["actual"]["sse"]["ratio"]]

    fig, ax = plt.subplots(figsize=FIG_SIZE)
    x = range(len(labels))
    width = 0.35
    ax.bar([i - width / 2 for i in x], source, width, label="source")
    ax.bar([i + width / 2 for i in x], sse, width, label="transformed")
    ax.set_xticks(list(x))
    ax.set_xticklabels(labels)
    ax.set_ylabel("compression ratio")
    ax.legend()
    return _save(fig, out_path)


def _save(fig, path: Path) -> Path:
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path
