import math

import numpy as np
import pytest

from conftest import as_tuples, random_complex, shuffled
from simplicial_complex import (
    BadDimension,
    Chain,
    DanglingReference,
    DegenerateSimplex,
    DimensionMismatch,
    DuplicateSimplex,
    EmptyComplex,
    InvalidId,
    MissingTriangleEdge,
    NonFiniteCoordinate,
    boundary_matrix,
    boundary_of_chain,
    build_complex,
)


def test_tri_sizes(tri):
    assert (tri.size(0), tri.size(1), tri.size(2)) == (3, 3, 1)


def test_fig2_sizes(fig2):
    assert (len(fig2.vertices), len(fig2.edges), len(fig2.triangles)) == (6, 10, 4)


def test_triangle_without_its_edge(fig2):
    verts, edges, tris = as_tuples(fig2)
    edges = [e for e in edges if (e[1], e[2]) != (3, 6)]
    tris = [t for t in tris if t[0] != 3] + [(9, 3, 4, 6)]
    with pytest.raises(MissingTriangleEdge) as info:
        build_complex(verts, edges, tris)
    assert info.value.kind == "t"
    assert info.value.simplex_id == 9


@pytest.mark.parametrize(
    "vertices, edges, triangles, error",
    [
        ([], [], [], EmptyComplex),
        ([(0, 0, 0), (0, 1, 0)], [], [], DuplicateSimplex),
        ([(-1, 0, 0)], [], [], InvalidId),
        ([(0, 0, math.nan)], [], [], NonFiniteCoordinate),
        ([(0, 0, 0), (1, 1, 0)], [(0, 0, 2)], [], DanglingReference),
        ([(0, 0, 0), (1, 1, 0)], [(0, 1, 1)], [], DegenerateSimplex),
        ([(0, 0, 0), (1, 1, 0)], [(0, 0, 1), (1, 1, 0)], [], DuplicateSimplex),
        ([(0, 0, 0), (1, 1, 0), (2, 0, 1)], [(0, 0, 1), (1, 1, 2), (2, 0, 2)], [(0, 0, 1, 1)], DegenerateSimplex),
        ([(0, 0, 0), (1, 1, 0), (2, 0, 1)], [(0, 0, 1), (1, 1, 2), (2, 0, 2)], [(0, 0, 1, 5)], DanglingReference),
        (
            [(0, 0, 0), (1, 1, 0), (2, 0, 1)],
            [(0, 0, 1), (1, 1, 2), (2, 0, 2)],
            [(0, 0, 1, 2), (1, 2, 1, 0)],
            DuplicateSimplex,
        ),
    ],
)
def test_build_rejects(vertices, edges, triangles, error):
    with pytest.raises(error):
        build_complex(vertices, edges, triangles)


def test_boundary_matrices_tri(tri):
    d1 = boundary_matrix(tri, 1)
    d2 = boundary_matrix(tri, 2)
    assert (d1.rows, d1.cols) == (3, 3)
    assert d1.column_weights().tolist() == [2, 2, 2]
    assert (d2.rows, d2.cols) == (3, 1)
    assert d2.entries[:, 0].tolist() == [1, 1, 1]


def test_boundary_matrix_fig2(fig2):
    d2 = boundary_matrix(fig2, 2)
    assert (d2.rows, d2.cols) == (10, 4)
    assert d2.column_weights().tolist() == [3, 3, 3, 3]
    assert boundary_matrix(fig2, 1).column_weights().tolist() == [2] * 10


def test_boundary_matrix_bad_dimension(tri):
    with pytest.raises(BadDimension):
        boundary_matrix(tri, 3)
    with pytest.raises(BadDimension):
        boundary_matrix(tri, 0)


def test_boundary_of_boundary_fixtures(all_fixtures):
    for complex_ in all_fixtures.values():
        assert (boundary_matrix(complex_, 1) @ boundary_matrix(complex_, 2)).is_zero()


def test_boundary_of_boundary_random():
    rng = np.random.default_rng(7)
    for _ in range(100):
        K = random_complex(rng)
        assert (K.boundary_1 @ K.boundary_2).is_zero()
        assert all(w == 3 for w in K.boundary_2.column_weights())


def test_pentagon_has_no_boundary(fig2):
    assert boundary_of_chain(fig2, fig2.chain(1, [1, 2, 3, 4, 5])).is_zero()


def test_path_boundary_is_its_ends(fig2):
    b = boundary_of_chain(fig2, fig2.chain(1, [1, 2]))
    assert fig2.chain_ids(b) == (1, 3)


def test_hole_loop_has_no_boundary_mod_2(fig2):
    assert boundary_of_chain(fig2, fig2.chain(1, [3, 6, 7])).is_zero()


def test_boundary_of_triangle_chain(fig2):
    b = boundary_of_chain(fig2, fig2.chain(2, [1]))
    assert b.dimension == 1
    assert fig2.chain_ids(b) == (1, 5, 8)


def test_boundary_of_chain_length_mismatch(fig2):
    with pytest.raises(DimensionMismatch):
        boundary_of_chain(fig2, Chain(1, np.zeros(3, dtype=np.uint8)))


def test_boundary_of_zero_chain_dimension(fig2):
    with pytest.raises(BadDimension):
        boundary_of_chain(fig2, fig2.zero_chain(0))


def test_boundary_is_linear():
    rng = np.random.default_rng(11)
    for _ in range(50):
        K = random_complex(rng)
        for dim in (1, 2):
            n = K.size(dim)
            a = Chain(dim, rng.integers(0, 2, size=n))
            b = Chain(dim, rng.integers(0, 2, size=n))
            assert boundary_of_chain(K, a + b) == boundary_of_chain(K, a) + boundary_of_chain(K, b)


def test_chain_add_is_xor(fig2):
    a = fig2.chain(1, [1, 2, 3])
    b = fig2.chain(1, [3, 4])
    assert fig2.chain_ids(a + b) == (1, 2, 4)
    assert (a + a).is_zero()


def test_chain_repeated_ids_cancel(fig2):
    assert fig2.chain(1, [2, 2]).is_zero()


def test_order_insensitive_build(fig2, twohole):
    rng = np.random.default_rng(3)
    for K in (fig2, twohole):
        for _ in range(5):
            assert shuffled(K, rng).canonical_form() == K.canonical_form()


def test_canonical_order(fig2):
    assert [e.endpoints for e in fig2.edges] == sorted(e.endpoints for e in fig2.edges)
    assert [t.corners for t in fig2.triangles] == sorted(t.corners for t in fig2.triangles)


def test_edge_between(fig2):
    assert fig2.edge_between(6, 3).id == 7
    assert fig2.edge_between(1, 3) is None
