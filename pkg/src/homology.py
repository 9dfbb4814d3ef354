# homology.py
#
# GF(2) γραμμική άλγεβρα πάνω στο complex:
#   - ranks των Z1 = ker ∂1 και B1 = img ∂2, Betti numbers
#   - fundamental cycles από spanning forest (networkx)
#   - αντιπρόσωποι του H1 = Z1 / B1
#   - διάσπαση ενός 1-cycle σε απλούς κλειστούς δρόμους
#   - faces του επίπεδου embedding (holes + contour)

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import networkx as nx
import numpy as np

from simplicial_complex import Chain, Complex, Gf2Matrix, boundary_of_chain


class NotACycle(ValueError):
    pass


# ---------- GF(2) elimination ----------

def gf2_row_echelon(entries) -> tuple[np.ndarray, list[int]]:
    """
    Row-reduce a binary matrix over GF(2) with XOR row operations.
    Returns (R, pivot_cols); len(pivot_cols) is the rank. Input is copied.
    """
    R = (np.asarray(entries, dtype=np.uint8) % 2).copy()
    if R.ndim == 1:
        R = R.reshape(1, -1)
    m, n = R.shape
    pivot_cols: list[int] = []
    pivot_row = 0
    for col in range(n):
        if pivot_row == m:
            break
        rows = np.flatnonzero(R[pivot_row:, col])
        if len(rows) == 0:
            continue
        found = pivot_row + int(rows[0])
        if found != pivot_row:
            R[[pivot_row, found]] = R[[found, pivot_row]]
        below = pivot_row + 1 + np.flatnonzero(R[pivot_row + 1:, col])
        R[below] ^= R[pivot_row]
        pivot_cols.append(col)
        pivot_row += 1
    return R, pivot_cols


def gf2_rank(matrix) -> int:
    """Rank over GF(2); accepts a Gf2Matrix or anything array-like."""
    entries = matrix.entries if isinstance(matrix, Gf2Matrix) else matrix
    arr = np.asarray(entries)
    if arr.size == 0:
        return 0
    _, pivots = gf2_row_echelon(arr)
    return len(pivots)


class Gf2Span:
    """
    Incrementally grown span of GF(2) vectors, kept in reduced form keyed by
    the lowest set index of each basis vector.
    """

    def __init__(self, length: int):
        self.length = length
        self._basis: dict[int, np.ndarray] = {}

    @property
    def rank(self) -> int:
        return len(self._basis)

    def reduce(self, vec) -> np.ndarray:
        v = (np.asarray(vec, dtype=np.uint8) % 2).copy()
        while True:
            nz = np.flatnonzero(v)
            hit = next((int(i) for i in nz if int(i) in self._basis), None)
            if hit is None:
                return v
            v ^= self._basis[hit]

    def contains(self, vec) -> bool:
        return not self.reduce(vec).any()

    def add(self, vec) -> bool:
        """Add vec; True if it was independent of the span."""
        v = self.reduce(vec)
        nz = np.flatnonzero(v)
        if len(nz) == 0:
            return False
        self._basis[int(nz[0])] = v
        return True


# ---------- Graph side ----------

def skeleton_graph(complex_: Complex) -> nx.Graph:
    """1-skeleton with nodes/edges inserted in canonical order (BFS stays deterministic)."""
    G = nx.Graph()
    G.add_nodes_from(v.id for v in complex_.vertices)
    for e in complex_.edges:
        G.add_edge(*e.endpoints, id=e.id)
    return G


def betti0(complex_: Complex) -> int:
    """Connected components of the 1-skeleton."""
    return nx.number_connected_components(skeleton_graph(complex_))


def _spanning_forest(G):
    forest = nx.Graph()
    forest.add_nodes_from(G.nodes)
    for comp in sorted(nx.connected_components(G), key=min):
        forest.add_edges_from(nx.bfs_edges(G, min(comp)))
    return forest


def cycle_space_basis(complex_: Complex) -> list[Chain]:
    """Fundamental cycles of a BFS spanning forest, one per non-tree edge in canonical order."""
    G = skeleton_graph(complex_)
    forest = _spanning_forest(G)
    basis: list[Chain] = []
    for e in complex_.edges:
        u, v = e.endpoints
        if forest.has_edge(u, v):
            continue
        path = nx.shortest_path(forest, u, v)
        ids = [e.id] + [G.edges[a, b]["id"] for a, b in zip(path, path[1:])]
        basis.append(complex_.chain(1, ids))
    return basis


def in_boundary_span(complex_: Complex, chain: Chain) -> bool:
    """True iff the 1-chain is a sum of filled-triangle boundaries."""
    d2 = complex_.boundary_2.entries
    span = Gf2Span(complex_.size(1))
    for j in range(d2.shape[1]):
        span.add(d2[:, j])
    return span.contains(chain.coefficients)


def abstract_betti(n_vertices: int,
                   edges: Sequence[tuple[int, int]],
                   triangles: Sequence[tuple[int, int, int]] = ()) -> tuple[int, int]:
    """(β0, β1) of an abstract complex given by vertex indices 0..n-1."""
    edge_pos = {tuple(sorted(e)): j for j, e in enumerate(edges)}
    d1 = np.zeros((n_vertices, len(edges)), dtype=np.uint8)
    for j, (a, b) in enumerate(edges):
        d1[a, j] = d1[b, j] = 1
    d2 = np.zeros((len(edges), len(triangles)), dtype=np.uint8)
    for j, (a, b, c) in enumerate(triangles):
        for pair in ((a, b), (a, c), (b, c)):
            d2[edge_pos[tuple(sorted(pair))], j] = 1
    r1 = gf2_rank(d1)
    r2 = gf2_rank(d2)
    return n_vertices - r1, len(edges) - r1 - r2


# ---------- Cycles ----------

@dataclass(frozen=True)
class Cycle:
    """
    A 1-cycle. traversal is set only when the edge set is one simple closed
    path; it starts at the lowest vertex id and heads to its lower neighbour.
    """
    edge_set: Chain
    traversal: tuple[int, ...] | None
    simple: bool
    edge_ids: tuple[int, ...]
    vertex_ids: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.edge_ids)


def _canonical_traversal(loop: Sequence[int]) -> tuple[int, ...]:
    i = loop.index(min(loop))
    rot = list(loop[i:]) + list(loop[:i])
    if len(rot) > 2 and rot[-1] < rot[1]:
        rot = [rot[0]] + rot[1:][::-1]
    return tuple(rot)


def _vertex_ids_of(complex_, chain):
    return tuple(sorted({vid for e in complex_.edges_of(chain) for vid in e.endpoints}))


def _make_cycle(complex_: Complex, chain: Chain, traversal: tuple[int, ...] | None) -> Cycle:
    return Cycle(
        edge_set=chain,
        traversal=traversal,
        simple=traversal is not None,
        edge_ids=complex_.chain_ids(chain),
        vertex_ids=_vertex_ids_of(complex_, chain),
    )


def chain_to_simple_cycles(complex_: Complex, chain: Chain) -> list[Cycle]:
    """
    Peel a zero-boundary 1-chain into edge-disjoint simple closed paths.
    At every step the walk takes the lowest-id unused edge at the current vertex.
    """
    if chain.dimension != 1 or not boundary_of_chain(complex_, chain).is_zero():
        raise NotACycle("Chain has a nonzero boundary, it is not a 1-cycle")

    # adjacency: vertex -> [(edge id, neighbour)] ταξινομημένα κατά edge id
    adj: dict[int, list[tuple[int, int]]] = {}
    for e in complex_.edges_of(chain):
        u, v = e.endpoints
        adj.setdefault(u, []).append((e.id, v))
        adj.setdefault(v, []).append((e.id, u))
    for nbrs in adj.values():
        nbrs.sort()
    used: set[int] = set()

    def next_edge(vid: int) -> tuple[int, int] | None:
        return next(((eid, w) for eid, w in adj[vid] if eid not in used), None)

    cycles: list[Cycle] = []
    for start in sorted(adj):
        path = [start]
        path_edges: list[int] = []
        pos = {start: 0}
        while True:
            step = next_edge(path[-1])
            if step is None:
                break
            eid, nxt = step
            used.add(eid)
            if nxt in pos:
                i = pos[nxt]
                loop = path[i:]
                loop_edges = path_edges[i:] + [eid]
                cycles.append(_make_cycle(
                    complex_, complex_.chain(1, loop_edges), _canonical_traversal(loop)
                ))
                for vid in path[i + 1:]:
                    del pos[vid]
                del path[i + 1:]
                del path_edges[i:]
            else:
                pos[nxt] = len(path)
                path.append(nxt)
                path_edges.append(eid)
    return cycles


def cycle_from_chain(complex_: Complex, chain: Chain) -> Cycle:
    """Wrap a zero-boundary chain; simple only when it is a single closed path."""
    parts = chain_to_simple_cycles(complex_, chain)
    if len(parts) == 1:
        return parts[0]
    return _make_cycle(complex_, chain, None)


def cycle_from_traversal(complex_: Complex, traversal: Sequence[int]) -> Cycle:
    """Simple cycle through the given vertices (closing edge implied)."""
    loop = list(traversal)
    if len(loop) < 3 or len(set(loop)) != len(loop):
        raise NotACycle(f"Traversal {loop} is not a simple closed path")
    ids = []
    for a, b in zip(loop, loop[1:] + loop[:1]):
        e = complex_.edge_between(a, b)
        if e is None:
            raise NotACycle(f"Traversal {loop} uses the missing edge {a}-{b}")
        ids.append(e.id)
    return _make_cycle(complex_, complex_.chain(1, ids), _canonical_traversal(loop))


@dataclass(frozen=True)
class HomologyResult:
    betti0: int
    rankZ1: int
    rankB1: int
    rankH1: int
    h1_representatives: tuple[Cycle, ...]
    z1_basis: tuple[Chain, ...]
    b1_basis: tuple[Chain, ...]


def h1_basis(complex_: Complex) -> HomologyResult:
    """
    Ranks of Z1, B1, H1 and one representative per H1 generator.

    Fundamental cycles are scanned in canonical order; a cycle is kept when it
    is independent of span(B1 ∪ kept so far).
    """
    d2 = complex_.boundary_2.entries
    span = Gf2Span(complex_.size(1))
    b1: list[Chain] = []
    for j in range(d2.shape[1]):
        if span.add(d2[:, j]):
            b1.append(Chain(1, d2[:, j]))
    rank_b1 = span.rank

    z1 = cycle_space_basis(complex_)
    reps: list[Cycle] = []
    for chain in z1:
        if span.add(chain.coefficients):
            reps.append(chain_to_simple_cycles(complex_, chain)[0])

    return HomologyResult(
        betti0=betti0(complex_),
        rankZ1=len(z1),
        rankB1=rank_b1,
        rankH1=len(z1) - rank_b1,
        h1_representatives=tuple(reps),
        z1_basis=tuple(z1),
        b1_basis=tuple(b1),
    )


# ---------- Faces του επίπεδου embedding ----------

@dataclass(frozen=True)
class PlanarFace:
    boundary_walk: tuple[int, ...]
    signed_area: float
    edge_set: Chain

    @property
    def bounded(self) -> bool:
        return self.signed_area > 1e-12


def planar_faces(complex_: Complex) -> list[PlanarFace]:
    """
    Trace every face of the straight-line embedding. Bounded faces come out
    counterclockwise (positive area), the outer face of each component clockwise.
    """
    G = skeleton_graph(complex_)
    ccw: dict[int, list[int]] = {}
    for v in G.nodes:
        px, py = complex_.point(v)
        ccw[v] = sorted(
            G.neighbors(v),
            key=lambda w: math.atan2(complex_.point(w)[1] - py, complex_.point(w)[0] - px),
        )

    visited: set[tuple[int, int]] = set()
    faces: list[PlanarFace] = []
    for e in complex_.edges:
        for start in (e.endpoints, e.endpoints[::-1]):
            if start in visited:
                continue
            walk: list[int] = []
            ids: list[int] = []
            u, v = start
            while (u, v) not in visited:
                visited.add((u, v))
                walk.append(u)
                ids.append(G.edges[u, v]["id"])
                ring = ccw[v]
                # ο γείτονας ακριβώς πριν το u στη ccw σειρά γύρω από το v
                w = ring[(ring.index(u) - 1) % len(ring)]
                u, v = v, w
            pts = np.array([complex_.point(x) for x in walk])
            area = 0.5 * float(np.sum(pts[:, 0] * np.roll(pts[:, 1], -1) - np.roll(pts[:, 0], -1) * pts[:, 1]))
            faces.append(PlanarFace(tuple(walk), area, complex_.chain(1, ids)))
    return faces


def hole_boundaries(complex_: Complex) -> list[Cycle]:
    """Simple cycles bounding the bounded faces that are not filled triangles."""
    filled = {t.corners for t in complex_.triangles}
    out: list[Cycle] = []
    for face in planar_faces(complex_):
        if not face.bounded:
            continue
        if len(face.boundary_walk) == 3 and tuple(sorted(face.boundary_walk)) in filled:
            continue
        if face.edge_set.is_zero():
            continue
        out.extend(chain_to_simple_cycles(complex_, face.edge_set))
    return out


def contour_cycles(complex_: Complex) -> list[Cycle]:
    """Simple cycles along the outer face of every component (dangling edges cancel)."""
    out: list[Cycle] = []
    for face in planar_faces(complex_):
        if face.bounded or face.edge_set.is_zero():
            continue
        out.extend(chain_to_simple_cycles(complex_, face.edge_set))
    return out


def unique_cycles(cycles: Iterable[Cycle]) -> list[Cycle]:
    """Drop repeats (same edge set), keeping first occurrence order."""
    seen: set[tuple[int, ...]] = set()
    out: list[Cycle] = []
    for c in cycles:
        if c.edge_ids in seen:
            continue
        seen.add(c.edge_ids)
        out.append(c)
    return out
