"""Report rendering: delimited orbit/check tables plus matplotlib figures.

The CLI's report path drops three artifacts into a directory: a CSV of
the orbit classes (or check records), a bar chart of orbit sizes, and a
drawing of the Coxeter graph in its canonical family layout with an
optional configuration painted on the vertices.
"""

from __future__ import annotations

import csv
import math
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .gf2 import Gf2Vector
from .graphs import FAMILY_A, FAMILY_D, FAMILY_E, CoxeterGraph
from .verify import VerifySuiteResult


def graph_layout(g: CoxeterGraph) -> dict[int, tuple[float, float]]:
    """Vertex positions: a path with the family's branch vertex raised."""
    if g.family == FAMILY_A:
        return {s: (float(s), 0.0) for s in range(1, g.n + 1)}
    if g.family == FAMILY_D:
        pos = {s: (float(s), 0.0) for s in range(1, g.n)}
        pos[g.n] = (float(g.n - 2), 1.0)
        return pos
    if g.family == FAMILY_E:
        pos = {s: (float(s), 0.0) for s in range(1, g.n)}
        pos[g.n] = (float(g.n - 3), 1.0)
        return pos
    # custom graphs go on a circle
    pos = {}
    for s in range(1, g.n + 1):
        angle = 2 * math.pi * (s - 1) / g.n
        pos[s] = (math.cos(angle), math.sin(angle))
    return pos


def render_graph(
    g: CoxeterGraph, path: Path, config: Gf2Vector | None = None, title: str = ""
) -> Path:
    """Draw the graph; black/white vertex fill mirrors the configuration."""
    pos = graph_layout(g)
    fig, ax = plt.subplots(figsize=(max(4, 0.9 * g.n), 3))
    for u, v in sorted(g.edges):
        (x0, y0), (x1, y1) = pos[u], pos[v]
        ax.plot([x0, x1], [y0, y1], color="gray", zorder=1)
    for s, (x, y) in pos.items():
        filled = bool(config and config.bit(s))
        ax.scatter(
            [x], [y], s=420, zorder=2,
            facecolor="black" if filled else "white",
            edgecolor="black",
        )
        ax.annotate(
            f"s{s}", (x, y), textcoords="offset points", xytext=(0, -22),
            ha="center", fontsize=9,
        )
    ax.set_title(title or f"{g.family} graph on {g.n} vertices")
    ax.set_aspect("equal")
    ax.axis("off")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def render_orbit_sizes(classes: list[dict], path: Path, title: str) -> Path:
    """Bar chart of orbit sizes (log scale once they spread out)."""
    labels = [c["label"] for c in classes]
    sizes = [int(c["size"]) for c in classes]
    fig, ax = plt.subplots(figsize=(max(4, 0.8 * len(labels)), 3.2))
    ax.bar(labels, sizes, color="steelblue", edgecolor="black")
    if max(sizes) >= 64 * max(1, min(sizes)):
        ax.set_yscale("log")
    for i, size in enumerate(sizes):
        ax.annotate(str(size), (i, size), ha="center", va="bottom", fontsize=8)
    ax.set_ylabel("configurations")
    ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def write_orbit_csv(classes: list[dict], path: Path) -> Path:
    with open(path, "w", newline="") as fh:
        writer = csv.DictWriter(fh, fieldnames=["label", "size", "rep"])
        writer.writeheader()
        writer.writerows(classes)
    return path


def write_orbit_report(
    g: CoxeterGraph, classes: list[dict], outdir: str | Path
) -> dict[str, str]:
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    name = f"{g.family}{g.n}"
    paths = {
        "csv": write_orbit_csv(classes, outdir / f"orbits_{name}.csv"),
        "sizes_figure": render_orbit_sizes(
            classes, outdir / f"orbit_sizes_{name}.png", f"Orbit sizes of {name}"
        ),
        "graph_figure": render_graph(g, outdir / f"graph_{name}.png"),
    }
    return {k: str(v) for k, v in paths.items()}


def write_checks_csv(result: VerifySuiteResult, path: Path) -> Path:
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["name", "expected", "computed", "pass"])
        for c in result.checks:
            writer.writerow([c.name, c.expected, c.computed, c.passed])
    return path


def write_verify_report(result: VerifySuiteResult, outdir: str | Path) -> dict[str, str]:
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    csv_path = write_checks_csv(result, outdir / f"checks_{result.suite}.csv")
    fig_path = outdir / f"checks_{result.suite}.png"
    passed = sum(1 for c in result.checks if c.passed)
    failed = len(result.checks) - passed
    fig, ax = plt.subplots(figsize=(4, 3))
    ax.bar(["pass", "fail"], [passed, failed], color=["seagreen", "firebrick"])
    ax.set_title(f"suite {result.suite}: {passed}/{len(result.checks)} pass")
    for i, v in enumerate([passed, failed]):
        ax.annotate(str(v), (i, v), ha="center", va="bottom")
    fig.tight_layout()
    fig.savefig(fig_path, dpi=150)
    plt.close(fig)
    return {"csv": str(csv_path), "figure": str(fig_path)}
