import math
import os
import sys
from itertools import combinations

import numpy as np
import pytest

ROOT = os.path.abspath(os.path.join(os.path.dirname(__file__), ".."))
sys.path.insert(0, os.path.join(ROOT, "src"))
FIXTURES = os.path.join(ROOT, "data", "fixtures")

from complex_files import read_complex  # noqa: E402
from homology import cycle_from_traversal  # noqa: E402
from simplicial_complex import build_complex  # noqa: E402
from triangulate_polygon import PolygonWithHoles  # noqa: E402

# fig3: δύο cycles που μοιράζονται το arc v3 v6 v4
FIG3_CYCLE_A = (1, 2, 3, 6, 4, 5)
FIG3_CYCLE_B = (3, 7, 8, 9, 4, 6)

HOLE_CENTRES = [(-3.0, 0.0), (3.0, 0.0), (0.0, 3.0)]


def fixture_path(name: str) -> str:
    return os.path.join(FIXTURES, name)


@pytest.fixture
def tri():
    return read_complex(fixture_path("tri.cplx"))


@pytest.fixture
def fig2():
    return read_complex(fixture_path("fig2.cplx"))


@pytest.fixture
def twohole():
    return read_complex(fixture_path("twohole.cplx"))


@pytest.fixture
def fig3():
    return read_complex(fixture_path("fig3.cplx"))


@pytest.fixture
def all_fixtures(tri, fig2, twohole, fig3):
    return {"tri": tri, "fig2": fig2, "twohole": twohole, "fig3": fig3}


def as_tuples(complex_):
    """(vertices, edges, triangles) as plain tuples, for rebuilding variants."""
    return (
        [(v.id, v.x, v.y) for v in complex_.vertices],
        [(e.id, *e.endpoints) for e in complex_.edges],
        [(t.id, *t.corners) for t in complex_.triangles],
    )


def transformed(complex_, angle=0.0, shift=(0.0, 0.0)):
    """Rigid motion of the vertex coordinates, combinatorics unchanged."""
    c, s = math.cos(angle), math.sin(angle)
    verts, edges, tris = as_tuples(complex_)
    moved = [(i, c * x - s * y + shift[0], s * x + c * y + shift[1]) for i, x, y in verts]
    return build_complex(moved, edges, tris)


def shuffled(complex_, rng):
    verts, edges, tris = as_tuples(complex_)
    return build_complex(
        [verts[i] for i in rng.permutation(len(verts))],
        [edges[i] for i in rng.permutation(len(edges))],
        [tris[i] for i in rng.permutation(len(tris))],
    )


def random_complex(rng, max_vertices=12, max_edges=14, fill=0.5):
    """Random abstract complex with random coordinates (embedding not planar)."""
    n = int(rng.integers(1, max_vertices + 1))
    pts = rng.uniform(-5.0, 5.0, size=(n, 2))
    pairs = list(combinations(range(n), 2))
    k = int(rng.integers(0, min(max_edges, len(pairs)) + 1))
    chosen = [pairs[i] for i in rng.choice(len(pairs), size=k, replace=False)] if k else []
    present = set(chosen)
    candidates = [t for t in combinations(range(n), 3)
                  if {(t[0], t[1]), (t[0], t[2]), (t[1], t[2])} <= present]
    filled = [t for t in candidates if rng.random() < fill]
    return build_complex(
        [(i, float(x), float(y)) for i, (x, y) in enumerate(pts)],
        [(j, a, b) for j, (a, b) in enumerate(chosen)],
        [(j, *t) for j, t in enumerate(filled)],
    )


def random_polygon(rng, n_holes=None):
    """Star-shaped outer ring (radius 8..10) with 0-3 small holes at fixed centres."""
    k = 12
    base = 2 * math.pi * np.arange(k) / k + rng.uniform(-0.1, 0.1, size=k)
    radii = rng.uniform(8.0, 10.0, size=k)
    outer = tuple((float(r * math.cos(a)), float(r * math.sin(a))) for r, a in zip(radii, base))

    if n_holes is None:
        n_holes = int(rng.integers(0, 4))
    holes = []
    for cx, cy in HOLE_CENTRES[:n_holes]:
        m = int(rng.integers(3, 6))
        ang = 2 * math.pi * np.arange(m) / m + rng.uniform(-0.15, 0.15, size=m)
        rad = rng.uniform(0.5, 1.0, size=m)
        holes.append(tuple((float(cx + r * math.cos(a)), float(cy + r * math.sin(a))) for r, a in zip(rad, ang)))
    return PolygonWithHoles(outer=outer, holes=tuple(holes))


def congruent_cycles_complex():
    """
    A big square plus three congruent unit triangles, all disjoint.
    Returns (complex, [square, tri1, tri2, tri3]).
    """
    h = math.sqrt(3) / 2
    verts = [(0, 0.0, 0.0), (1, 4.0, 0.0), (2, 4.0, 4.0), (3, 0.0, 4.0)]
    edges = [(0, 0, 1), (1, 1, 2), (2, 2, 3), (3, 0, 3)]
    loops = [(0, 1, 2, 3)]
    for k, ox in enumerate((10.0, 13.0, 16.0)):
        a, b, c = 4 + 3 * k, 5 + 3 * k, 6 + 3 * k
        verts += [(a, ox, 0.0), (b, ox + 1.0, 0.0), (c, ox + 0.5, h)]
        edges += [(len(edges), a, b), (len(edges) + 1, b, c), (len(edges) + 2, a, c)]
        loops.append((a, b, c))
    complex_ = build_complex(verts, edges)
    return complex_, [cycle_from_traversal(complex_, loop) for loop in loops]


@pytest.fixture
def congruent():
    return congruent_cycles_complex()
