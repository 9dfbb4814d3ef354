import numpy as np
import pytest

from conftest import FIG3_CYCLE_A, FIG3_CYCLE_B, random_polygon
from geometry import Arc, PhiConfig, cycle_elements, phi
from homology import cycle_from_traversal, hole_boundaries
from proximity import (
    ProximityConfig,
    cycle_nearness_matrix,
    cycles_dnear,
    descriptive_intersection,
    dnear,
    spatial_intersection,
    strongly_near,
    strongly_near_arc,
)
from triangulate_polygon import triangulate_polygon


@pytest.fixture
def fig3_pool(fig3):
    """Elements (cycles, corner/uniform arcs, segments) of four fig3 cycles."""
    cycles = [
        cycle_from_traversal(fig3, FIG3_CYCLE_A),
        cycle_from_traversal(fig3, FIG3_CYCLE_B),
        cycle_from_traversal(fig3, [1, 2, 3, 4, 5]),
    ] + hole_boundaries(fig3)
    pool: dict = {}
    for c in cycles:
        for x in cycle_elements(fig3, c, PhiConfig()):
            pool[x] = None
    return fig3, list(pool)


def _subset(rng, pool, p=0.2):
    return [x for x in pool if rng.random() < p]


# ---------- spatial ----------

def test_spatial_intersection_fig3(fig3):
    a = cycle_from_traversal(fig3, FIG3_CYCLE_A)
    b = cycle_from_traversal(fig3, FIG3_CYCLE_B)
    verts, edges = spatial_intersection(a, b)
    assert verts == {3, 4, 6}
    assert edges == {6, 7}
    assert strongly_near(a, b)


def test_vertex_only_contact_is_not_strong(twohole):
    left, right = sorted(hole_boundaries(twohole), key=lambda c: c.vertex_ids)
    assert not strongly_near(left, right)
    pentagons = [cycle_from_traversal(twohole, [1, 2, 3, 4, 5]), cycle_from_traversal(twohole, [1, 7, 8, 9, 10])]
    verts, edges = spatial_intersection(*pentagons)
    assert verts == {1} and not edges
    assert not strongly_near(*pentagons)


def test_strongly_near_arc(fig2):
    hole = hole_boundaries(fig2)[0]
    assert strongly_near_arc(fig2, hole, Arc((2, 3, 4)))
    assert not strongly_near_arc(fig2, hole, Arc((1, 2)))


def test_strongly_near_arc_skips_missing_edges(fig2):
    hole = hole_boundaries(fig2)[0]
    # v1-v3 δεν είναι ακμή, v3-v4 είναι η e3
    assert strongly_near_arc(fig2, hole, Arc((1, 3, 4)))
    assert not strongly_near_arc(fig2, hole, Arc((1, 3)))


# ---------- descriptive ----------

def test_congruent_corner_arcs(congruent):
    K, cycles = congruent
    cfg = ProximityConfig()
    t1, t2 = cycles[1].traversal, cycles[2].traversal
    a = Arc(t1).canonical()
    b = Arc(t2).canonical()
    square_corner = Arc(cycles[0].traversal[:3]).canonical()
    assert phi(K, a, cfg.phi_config) == phi(K, b, cfg.phi_config)
    assert descriptive_intersection(K, [a, square_corner], [b], cfg) == {a, b}


def test_congruent_cycles_are_near(congruent):
    K, cycles = congruent
    cfg = ProximityConfig()
    assert cycles_dnear(K, cycles[1], cycles[3], cfg)
    assert not cycles_dnear(K, cycles[0], cycles[1], cfg)
    assert not cycles_dnear(K, cycles[0], cycles[1], ProximityConfig(epsilon=0.1))


def test_empty_sets(fig2):
    cfg = ProximityConfig()
    hole = hole_boundaries(fig2)[0]
    assert descriptive_intersection(fig2, [], [hole], cfg) == frozenset()
    assert not dnear(fig2, [], [hole], cfg)


def test_epsilon_must_be_nonnegative():
    with pytest.raises(ValueError):
        ProximityConfig(epsilon=-0.1)


def test_nearness_matrix(congruent):
    K, cycles = congruent
    near = cycle_nearness_matrix(K, cycles, ProximityConfig())
    assert near.dtype == bool
    assert near.diagonal().all()
    assert (near == near.T).all()
    expected = np.array([
        [True, False, False, False],
        [False, True, True, True],
        [False, True, True, True],
        [False, True, True, True],
    ])
    assert (near == expected).all()


def test_nearness_matrix_agrees_with_pairwise(fig3):
    cfg = ProximityConfig(epsilon=0.1)
    cycles = [cycle_from_traversal(fig3, FIG3_CYCLE_A), cycle_from_traversal(fig3, FIG3_CYCLE_B)] + hole_boundaries(fig3)
    near = cycle_nearness_matrix(fig3, cycles, cfg)
    for i in range(len(cycles)):
        for j in range(len(cycles)):
            if i != j:
                assert near[i, j] == cycles_dnear(fig3, cycles[i], cycles[j], cfg)


# ---------- axioms ----------

@pytest.mark.parametrize("eps", [0.0, 0.1])
def test_axioms_dp0_to_dp3(fig3_pool, eps):
    K, pool = fig3_pool
    cfg = ProximityConfig(epsilon=eps)
    rng = np.random.default_rng(int(eps * 10) + 1)
    for _ in range(150):
        A, B, C = _subset(rng, pool), _subset(rng, pool), _subset(rng, pool)
        # dP0
        assert not dnear(K, [], A, cfg)
        # dP1
        ab = dnear(K, A, B, cfg)
        assert ab == dnear(K, B, A, cfg)
        # dP2 and its converse: nearness is exactly a nonempty descriptive intersection
        assert ab == bool(descriptive_intersection(K, A, B, cfg))
        if set(A) & set(B):
            assert ab
        # dP3
        assert dnear(K, A, B + C, cfg) == (ab or dnear(K, A, C, cfg))


def test_axiom_dp4_exact_descriptions(fig3_pool):
    K, pool = fig3_pool
    cfg = ProximityConfig(epsilon=0.0)
    rng = np.random.default_rng(4)
    hits = 0
    for _ in range(500):
        A, B, C = _subset(rng, pool), _subset(rng, pool, 0.1), _subset(rng, pool, 0.4)
        if not B:
            continue
        if dnear(K, A, B, cfg) and all(dnear(K, [b], C, cfg) for b in B):
            hits += 1
            assert dnear(K, A, C, cfg)
    assert hits > 0


def test_shared_edge_implies_descriptive_nearness():
    rng = np.random.default_rng(21)
    cfg = ProximityConfig(epsilon=0.0)
    checked = 0
    while checked < 200:
        K = triangulate_polygon(random_polygon(rng))
        triangles = [cycle_from_traversal(K, t.corners) for t in K.triangles]
        by_edge: dict[int, list[int]] = {}
        for k, c in enumerate(triangles):
            for eid in c.edge_ids:
                by_edge.setdefault(eid, []).append(k)
        for pair in by_edge.values():
            if len(pair) != 2:
                continue
            a, b = triangles[pair[0]], triangles[pair[1]]
            assert strongly_near(a, b)
            assert cycles_dnear(K, a, b, cfg)
            checked += 1
