"""Report rendering: stable-order text files, TSV tables, and matplotlib figures."""
from __future__ import annotations

import os

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

RED = "#c0392b"
BLUE = "#2e5fa3"
GREY = "#9b9b9b"


def resolve_out_dir(explicit: str | None = None) -> str:
    """Output directory: explicit path, else $TOPOCERT_OUT, else the working directory."""
    path = explicit or os.environ.get("TOPOCERT_OUT") or "."
    os.makedirs(path, exist_ok=True)
    return path


def format_value(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return repr(v)
    return str(v)


def write_report(path: str, title: str, sections) -> None:
    """Write `[section]` blocks of `key = value` lines in the caller's order.

    Args:
        sections: iterable of (header, iterable of (key, value)) pairs.

    No timestamps or environment data are written, so identical inputs give
    byte-identical files.
    """
    lines = ["# %s" % title]
    for header, items in sections:
        lines.append("")
        lines.append("[%s]" % header)
        for key, value in items:
            lines.append("%s = %s" % (key, format_value(value)))
    with open(path, "w") as fh:
        fh.write("\n".join(lines) + "\n")


def write_tsv(path: str, header, rows) -> None:
    """Write a tab-delimited table with a single header row."""
    with open(path, "w") as fh:
        fh.write("\t".join(header) + "\n")
        for row in rows:
            fh.write("\t".join(format_value(v) for v in row) + "\n")


def _save(fig, path: str) -> None:
    fig.savefig(path, dpi=110, metadata={"Software": None})
    plt.close(fig)


def _region_bars(ax, sizes: dict[str, int]) -> None:
    names = list(sizes)
    vals = [sizes[k] for k in names]
    colors = {"A": RED, "B": BLUE, "C": GREY}
    ax.bar(names, vals, color=[colors.get(k, "#555555") for k in names])
    for i, v in enumerate(vals):
        ax.text(i, v, str(v), ha="center", va="bottom", fontsize=9)
    ax.set_ylabel("qudits")


def partition_figure(layout, A, B, C, path: str, title: str = "") -> None:
    """Scatter the A/B/C qudit regions by position; bar chart when unembeddable."""
    groups = (("A", A, RED, 22), ("B", B, BLUE, 22), ("C", C, GREY, 8))
    d = getattr(layout, "d", None)
    pos0 = layout.position(A[0]) if A else (layout.position(0) if layout.n else None)
    if pos0 is None or d not in (2, 3):
        fig, ax = plt.subplots(figsize=(4.2, 3.4))
        _region_bars(ax, {"A": len(A), "B": len(B), "C": len(C)})
        ax.set_title(title or "region sizes")
        fig.tight_layout()
        _save(fig, path)
        return
    fig = plt.figure(figsize=(5.6, 5.2))
    if d == 3:
        ax = fig.add_subplot(projection="3d")
    else:
        ax = fig.add_subplot()
        ax.set_aspect("equal")
    for name, ids, color, size in groups:
        if not ids:
            continue
        pts = [layout.position(q) for q in ids]
        coords = list(zip(*pts))
        kwargs = {"s": size, "c": color, "label": "%s (%d)" % (name, len(ids))}
        if d == 3:
            kwargs["depthshade"] = False
        ax.scatter(*coords, **kwargs)
    ax.legend(loc="upper right", fontsize=8)
    ax.set_title(title or "qudit partition")
    fig.tight_layout()
    _save(fig, path)


def cellulation_figure(cellulation, path: str, title: str = "") -> None:
    """Block-color grid for 2D cubical cellulations; cell-count bars otherwise."""
    fig, ax = plt.subplots(figsize=(4.6, 4.0))
    if cellulation.kind == "cubical" and cellulation.d == 2:
        b = cellulation.blocks_per_axis
        grid = [[0] * b for _ in range(b)]
        for cell, color in zip(cellulation.cells, cellulation.colors):
            x, y = cell
            grid[y][x] = 1 if color == "red" else 0
        ax.imshow(grid, cmap=matplotlib.colors.ListedColormap([BLUE, RED]),
                  origin="lower", vmin=0, vmax=1)
        ax.set_xticks(range(b))
        ax.set_yticks(range(b))
        ax.set_xlabel("block x")
        ax.set_ylabel("block y")
    else:
        counts = cellulation.color_counts()
        ax.bar(["red", "blue"], [counts["red"], counts["blue"]], color=[RED, BLUE])
        ax.set_ylabel("cells")
    ax.set_title(title or "cellulation colors")
    fig.tight_layout()
    _save(fig, path)


def sweep_figure(report, path: str, title: str = "") -> None:
    """Bar chart of correctable versus violating samples, plus region-size spread."""
    bad = len(report.counterexamples)
    good = report.samples - bad
    fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(7.2, 3.2))
    ax1.bar(["correctable", "violating"], [good, bad], color=["#3a7d44", RED])
    for i, v in enumerate((good, bad)):
        ax1.text(i, v, str(v), ha="center", va="bottom", fontsize=9)
    ax1.set_ylabel("samples")
    ax1.set_title("fraction = %s" % repr(report.fraction_correctable), fontsize=10)
    ax2.hist(report.region_sizes, bins=min(12, max(3, report.samples // 5)),
             color=BLUE)
    ax2.set_xlabel("sampled region size (qudits)")
    ax2.set_ylabel("count")
    fig.suptitle(title or "ball-union correctability sweep", fontsize=11)
    fig.tight_layout()
    _save(fig, path)
