# render_complex.py
#
# SVG rendering ενός complex με matplotlib:
# ακμές ως ευθύγραμμα τμήματα, filled triangles σκιασμένα, τρύπες λευκές,
# highlighted cycles με παχιά χρωματιστή γραμμή.
#
# Ντετερμινισμός: σταθερό svg.hashsalt + χωρίς Date metadata
# -> ίδια bytes για ίδιο input.

from __future__ import annotations

import io
import os
from typing import Sequence

import matplotlib
from matplotlib.figure import Figure
from matplotlib.patches import Polygon

from homology import Cycle, contour_cycles, h1_basis, hole_boundaries
from simplicial_complex import Complex

HIGHLIGHT_COLORS = {
    "h1": "#d62728",
    "hole": "#1f77b4",
    "contour": "#2ca02c",
}
FILL_COLOR = "#d9d9d9"
EDGE_COLOR = "#404040"

_RC = {
    "svg.hashsalt": "shapesig",
    "svg.fonttype": "none",
    "path.simplify": False,
}


def highlight_cycles(complex_: Complex, mode: str) -> list[tuple[Cycle, str]]:
    """Cycles to stroke for --highlight holes|h1|all."""
    if mode == "holes":
        return [(c, "hole") for c in hole_boundaries(complex_)]
    if mode == "h1":
        return [(c, "h1") for c in h1_basis(complex_).h1_representatives]
    if mode == "all":
        return (
            [(c, "h1") for c in h1_basis(complex_).h1_representatives]
            + [(c, "hole") for c in hole_boundaries(complex_)]
            + [(c, "contour") for c in contour_cycles(complex_)]
        )
    raise ValueError(f"Unknown highlight mode {mode!r} (expected holes, h1 or all)")


def render_svg(complex_: Complex, highlights: Sequence[tuple[Cycle, str]] = ()) -> str:
    """
    SVG text. Element ids: triangle-<id>, edge-<id>, highlight-<k>-<tag>-<edge id>.
    """
    with matplotlib.rc_context(_RC):
        fig = Figure(figsize=(6, 6))
        ax = fig.add_subplot(111)
        ax.set_aspect("equal")
        ax.set_axis_off()

        for t in complex_.triangles:
            patch = Polygon(
                [complex_.point(v) for v in t.corners],
                closed=True,
                facecolor=FILL_COLOR,
                edgecolor="none",
            )
            patch.set_gid(f"triangle-{t.id}")
            ax.add_patch(patch)

        for e in complex_.edges:
            (x1, y1), (x2, y2) = (complex_.point(v) for v in e.endpoints)
            (line,) = ax.plot([x1, x2], [y1, y2], color=EDGE_COLOR, linewidth=1.0)
            line.set_gid(f"edge-{e.id}")

        for k, (cycle, tag) in enumerate(highlights):
            color = HIGHLIGHT_COLORS[tag]
            for eid in cycle.edge_ids:
                u, v = complex_.edges[complex_.edge_index(eid)].endpoints
                (x1, y1), (x2, y2) = complex_.point(u), complex_.point(v)
                (line,) = ax.plot([x1, x2], [y1, y2], color=color, linewidth=2.5)
                line.set_gid(f"highlight-{k}-{tag}-{eid}")

        xy = complex_.coords
        (dots,) = ax.plot(xy[:, 0], xy[:, 1], linestyle="none", marker="o", markersize=3, color="black")
        dots.set_gid("vertices")
        ax.autoscale_view()

        buf = io.StringIO()
        fig.savefig(buf, format="svg", metadata={"Date": None})
    return buf.getvalue()


def write_svg(path: str, text: str) -> str:
    folder = os.path.dirname(path)
    if folder:
        os.makedirs(folder, exist_ok=True)
    with open(path, "w", encoding="utf-8") as f:
        f.write(text)
    return path
