"""Render root scatter figures from plot-data rows.

The CLI emits roots and check boundaries as tab-separated rows; this module
draws the same rows with matplotlib when a figure path is requested.  File
format follows the extension (png, pdf, svg)."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt


def render_figure(rows, path, title=None):
    """Draw plot-data rows (kind, label, re, im) and save to `path`."""
    fig, ax = plt.subplots(figsize=(7.0, 5.5))

    real_pts = [(r["re"], r["im"]) for r in rows if r["kind"] == "root" and r["im"] == 0.0]
    cplx_pts = [(r["re"], r["im"]) for r in rows if r["kind"] == "root" and r["im"] != 0.0]
    if cplx_pts:
        xs, ys = zip(*cplx_pts)
        ax.scatter(xs, ys, marker="x", color="tab:blue", label="complex roots", zorder=3)
    if real_pts:
        xs, ys = zip(*real_pts)
        ax.scatter(xs, ys, marker="o", facecolors="none", edgecolors="tab:red",
                   label="real roots", zorder=3)

    lines: dict[str, list[tuple[float, float]]] = {}
    for r in rows:
        if r["kind"] == "boundary":
            lines.setdefault(r["label"], []).append((r["re"], r["im"]))
    for label, pts in lines.items():
        xs, ys = zip(*pts)
        style = ":" if "disk" in label else "--"
        ax.plot(xs, ys, style, color="gray", linewidth=1.0, label=label, zorder=2)

    ax.axhline(0.0, color="black", linewidth=0.5, zorder=1)
    ax.axvline(-0.5, color="black", linewidth=0.5, linestyle="-.", zorder=1)
    ax.set_xlabel("Re")
    ax.set_ylabel("Im")
    if title:
        ax.set_title(title)
    ax.legend(loc="best", fontsize=8)
    ax.set_aspect("equal", adjustable="datalim")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
