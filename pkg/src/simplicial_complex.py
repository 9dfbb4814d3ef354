# simplicial_complex.py
#
# Μοντέλο δεδομένων για πεπερασμένο επίπεδο simplicial complex K που καλύπτει
# ένα σχήμα, μαζί με τους boundary operators ∂1, ∂2 πάνω από GF(2).
#
# ΣΗΜΑΝΤΙΚΟ:
# - Οι τρύπες (holes) είναι τρίγωνα που ΔΕΝ δηλώνονται ως filled.
# - Κάθε simplex ταξινομείται με βάση το sorted tuple των vertex ids.
#   Όλος ο ντετερμινισμός downstream στηρίζεται σε αυτή τη σειρά.
# - Δεν ελέγχουμε αν το embedding αυτοτέμνεται (ευθύνη του caller).

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

import numpy as np


# ---------- Errors ----------

class ComplexError(ValueError):
    """Base class for validation errors; kind/simplex_id point at the culprit."""

    def __init__(self, message: str, kind: str | None = None, simplex_id: int | None = None):
        super().__init__(message)
        self.kind = kind
        self.simplex_id = simplex_id


class EmptyComplex(ComplexError):
    pass


class InvalidId(ComplexError):
    pass


class NonFiniteCoordinate(ComplexError):
    pass


class DanglingReference(ComplexError):
    pass


class DuplicateSimplex(ComplexError):
    pass


class MissingTriangleEdge(ComplexError):
    pass


class DegenerateSimplex(ComplexError):
    pass


class BadDimension(ComplexError):
    pass


class DimensionMismatch(ComplexError):
    pass


# ---------- Simplexes ----------

@dataclass(frozen=True)
class Vertex:
    id: int
    x: float
    y: float


@dataclass(frozen=True)
class Edge:
    id: int
    endpoints: tuple[int, int]


@dataclass(frozen=True)
class Triangle:
    id: int
    corners: tuple[int, int, int]

    def corner_pairs(self) -> tuple[tuple[int, int], ...]:
        a, b, c = self.corners
        return ((a, b), (a, c), (b, c))


# ---------- GF(2) vectors / matrices ----------

@dataclass(frozen=True, eq=False)
class Chain:
    """
    GF(2) chain: coefficients[i] είναι ο συντελεστής του i-οστού simplex
    διάστασης `dimension`, στη canonical σειρά του complex.
    """
    dimension: int
    coefficients: np.ndarray

    def __post_init__(self):
        bits = np.asarray(self.coefficients, dtype=np.uint8) % 2
        bits.setflags(write=False)
        object.__setattr__(self, "coefficients", bits)

    def __len__(self) -> int:
        return len(self.coefficients)

    def __add__(self, other: "Chain") -> "Chain":
        if other.dimension != self.dimension or len(other) != len(self):
            raise DimensionMismatch(
                f"Cannot add a {other.dimension}-chain of length {len(other)} "
                f"to a {self.dimension}-chain of length {len(self)}"
            )
        return Chain(self.dimension, np.bitwise_xor(self.coefficients, other.coefficients))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Chain):
            return NotImplemented
        return self.dimension == other.dimension and np.array_equal(self.coefficients, other.coefficients)

    def __hash__(self) -> int:
        return hash((self.dimension, self.coefficients.tobytes()))

    def support(self) -> tuple[int, ...]:
        """Canonical indices with coefficient 1."""
        return tuple(int(i) for i in np.flatnonzero(self.coefficients))

    def is_zero(self) -> bool:
        return not self.coefficients.any()

    @property
    def weight(self) -> int:
        return int(self.coefficients.sum())


@dataclass(frozen=True, eq=False)
class Gf2Matrix:
    entries: np.ndarray

    def __post_init__(self):
        bits = np.atleast_2d(np.asarray(self.entries, dtype=np.uint8) % 2)
        bits.setflags(write=False)
        object.__setattr__(self, "entries", bits)

    @property
    def rows(self) -> int:
        return self.entries.shape[0]

    @property
    def cols(self) -> int:
        return self.entries.shape[1]

    def __matmul__(self, other: "Gf2Matrix") -> "Gf2Matrix":
        # int64 για να μη γίνει overflow πριν το mod 2
        prod = self.entries.astype(np.int64) @ other.entries.astype(np.int64)
        return Gf2Matrix(prod % 2)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Gf2Matrix):
            return NotImplemented
        return np.array_equal(self.entries, other.entries)

    __hash__ = None

    def column_weights(self) -> np.ndarray:
        return self.entries.sum(axis=0).astype(int)

    def is_zero(self) -> bool:
        return not self.entries.any()


# ---------- Complex ----------

@dataclass(frozen=True)
class Complex:
    """
    Immutable planar simplicial complex. vertices sorted by id, edges by their
    endpoint pair, triangles by their corner triple (canonical order).
    """
    vertices: tuple[Vertex, ...]
    edges: tuple[Edge, ...]
    triangles: tuple[Triangle, ...]

    # --- lookups ---

    @cached_property
    def _vertex_pos(self) -> dict[int, int]:
        return {v.id: i for i, v in enumerate(self.vertices)}

    @cached_property
    def _edge_pos(self) -> dict[int, int]:
        return {e.id: i for i, e in enumerate(self.edges)}

    @cached_property
    def _triangle_pos(self) -> dict[int, int]:
        return {t.id: i for i, t in enumerate(self.triangles)}

    @cached_property
    def _edge_by_pair(self) -> dict[tuple[int, int], Edge]:
        return {e.endpoints: e for e in self.edges}

    @cached_property
    def coords(self) -> np.ndarray:
        """(V, 2) array of coordinates in canonical vertex order."""
        arr = np.array([[v.x, v.y] for v in self.vertices], dtype=float).reshape(-1, 2)
        arr.setflags(write=False)
        return arr

    def size(self, dimension: int) -> int:
        if dimension == 0:
            return len(self.vertices)
        if dimension == 1:
            return len(self.edges)
        if dimension == 2:
            return len(self.triangles)
        raise BadDimension(f"No simplexes of dimension {dimension} in a planar complex")

    def vertex(self, vertex_id: int) -> Vertex:
        return self.vertices[self._vertex_pos[vertex_id]]

    def point(self, vertex_id: int) -> np.ndarray:
        return self.coords[self._vertex_pos[vertex_id]]

    def vertex_index(self, vertex_id: int) -> int:
        return self._vertex_pos[vertex_id]

    def edge_index(self, edge_id: int) -> int:
        return self._edge_pos[edge_id]

    def triangle_index(self, triangle_id: int) -> int:
        return self._triangle_pos[triangle_id]

    def edge_between(self, u: int, v: int) -> Edge | None:
        return self._edge_by_pair.get((min(u, v), max(u, v)))

    def has_vertex(self, vertex_id: int) -> bool:
        return vertex_id in self._vertex_pos

    # --- chains ---

    def zero_chain(self, dimension: int) -> Chain:
        return Chain(dimension, np.zeros(self.size(dimension), dtype=np.uint8))

    def chain(self, dimension: int, ids: Iterable[int]) -> Chain:
        """Chain with coefficient 1 on the simplexes with these user ids (repeats cancel)."""
        lookup = (self._vertex_pos, self._edge_pos, self._triangle_pos)[dimension] \
            if dimension in (0, 1, 2) else None
        if lookup is None:
            raise BadDimension(f"No simplexes of dimension {dimension} in a planar complex")
        bits = np.zeros(self.size(dimension), dtype=np.uint8)
        for sid in ids:
            if sid not in lookup:
                raise DanglingReference(f"Unknown {dimension}-simplex id {sid}", simplex_id=sid)
            bits[lookup[sid]] ^= 1
        return Chain(dimension, bits)

    def chain_ids(self, chain: Chain) -> tuple[int, ...]:
        """User ids in the support of a chain, sorted."""
        simplexes = (self.vertices, self.edges, self.triangles)[chain.dimension]
        return tuple(sorted(simplexes[i].id for i in chain.support()))

    def edges_of(self, chain: Chain) -> tuple[Edge, ...]:
        return tuple(self.edges[i] for i in chain.support())

    # --- boundary operators (cached, complex is immutable) ---

    @cached_property
    def boundary_1(self) -> Gf2Matrix:
        d1 = np.zeros((len(self.vertices), len(self.edges)), dtype=np.uint8)
        for j, e in enumerate(self.edges):
            for vid in e.endpoints:
                d1[self._vertex_pos[vid], j] = 1
        return Gf2Matrix(d1)

    @cached_property
    def boundary_2(self) -> Gf2Matrix:
        d2 = np.zeros((len(self.edges), len(self.triangles)), dtype=np.uint8)
        for j, t in enumerate(self.triangles):
            for pair in t.corner_pairs():
                d2[self._edge_pos[self._edge_by_pair[pair].id], j] = 1
        return Gf2Matrix(d2)

    def canonical_form(self) -> tuple:
        return (
            tuple((v.id, v.x, v.y) for v in self.vertices),
            tuple((e.id, e.endpoints) for e in self.edges),
            tuple((t.id, t.corners) for t in self.triangles),
        )


# ---------- Construction ----------

def _as_vertex(item) -> Vertex:
    if isinstance(item, Vertex):
        return item
    vid, x, y = item
    return Vertex(int(vid), float(x), float(y))


def _as_edge(item):
    if isinstance(item, Edge):
        return item.id, tuple(item.endpoints)
    eid, *ends = item
    return int(eid), tuple(int(v) for v in ends)


def _as_triangle(item):
    if isinstance(item, Triangle):
        return item.id, tuple(item.corners)
    tid, *corners = item
    return int(tid), tuple(int(v) for v in corners)


def _check_id(kind: str, sid: int, seen: set[int]) -> None:
    if sid < 0:
        raise InvalidId(f"{kind} id {sid} is negative", kind=kind, simplex_id=sid)
    if sid in seen:
        raise DuplicateSimplex(f"{kind} id {sid} declared twice", kind=kind, simplex_id=sid)
    seen.add(sid)


def build_complex(vertices: Iterable, edges: Iterable = (), triangles: Iterable = ()) -> Complex:
    """
    Validate and canonicalise a complex.

    vertices: (id, x, y) tuples or Vertex; edges: (id, u, v) or Edge;
    triangles: (id, a, b, c) or Triangle. Input order does not matter.
    """
    verts = [_as_vertex(v) for v in vertices]
    if not verts:
        raise EmptyComplex("A complex needs at least one vertex")

    seen: set[int] = set()
    for v in verts:
        _check_id("v", v.id, seen)
        if not (math.isfinite(v.x) and math.isfinite(v.y)):
            raise NonFiniteCoordinate(f"Vertex {v.id} has non-finite coordinates", kind="v", simplex_id=v.id)
    known = seen

    edge_list: list[Edge] = []
    pairs: set[tuple[int, int]] = set()
    seen = set()
    for item in edges:
        eid, ends = _as_edge(item)
        _check_id("e", eid, seen)
        if len(ends) != 2 or ends[0] == ends[1]:
            raise DegenerateSimplex(f"Edge {eid} must join two distinct vertices, got {ends}", kind="e", simplex_id=eid)
        for vid in ends:
            if vid not in known:
                raise DanglingReference(f"Edge {eid} names unknown vertex {vid}", kind="e", simplex_id=eid)
        pair = (min(ends), max(ends))
        if pair in pairs:
            raise DuplicateSimplex(f"Edge {eid} repeats the endpoint pair {pair}", kind="e", simplex_id=eid)
        pairs.add(pair)
        edge_list.append(Edge(eid, pair))

    tri_list: list[Triangle] = []
    triples: set[tuple[int, int, int]] = set()
    seen = set()
    for item in triangles:
        tid, corners = _as_triangle(item)
        _check_id("t", tid, seen)
        if len(corners) != 3 or len(set(corners)) != 3:
            raise DegenerateSimplex(f"Triangle {tid} needs three distinct corners, got {corners}", kind="t", simplex_id=tid)
        for vid in corners:
            if vid not in known:
                raise DanglingReference(f"Triangle {tid} names unknown vertex {vid}", kind="t", simplex_id=tid)
        triple = tuple(sorted(corners))
        if triple in triples:
            raise DuplicateSimplex(f"Triangle {tid} repeats the corners {triple}", kind="t", simplex_id=tid)
        tri = Triangle(tid, triple)
        for pair in tri.corner_pairs():
            if pair not in pairs:
                raise MissingTriangleEdge(
                    f"Triangle {tid} needs edge {pair[0]}-{pair[1]}, which is not declared",
                    kind="t", simplex_id=tid,
                )
        triples.add(triple)
        tri_list.append(tri)

    return Complex(
        vertices=tuple(sorted(verts, key=lambda v: v.id)),
        edges=tuple(sorted(edge_list, key=lambda e: e.endpoints)),
        triangles=tuple(sorted(tri_list, key=lambda t: t.corners)),
    )


def boundary_matrix(complex_: Complex, p: int) -> Gf2Matrix:
    """∂p as a GF(2) matrix: p=1 gives V×E, p=2 gives E×F."""
    if p == 1:
        return complex_.boundary_1
    if p == 2:
        return complex_.boundary_2
    raise BadDimension(f"boundary_matrix needs p in {{1, 2}}, got {p}")


def boundary_of_chain(complex_: Complex, chain: Chain) -> Chain:
    """Boundary of a 1- or 2-chain, summed mod 2."""
    if chain.dimension not in (1, 2):
        raise BadDimension(f"Only 1- and 2-chains have a boundary here, got dimension {chain.dimension}")
    if len(chain) != complex_.size(chain.dimension):
        raise DimensionMismatch(
            f"{chain.dimension}-chain has length {len(chain)}, "
            f"complex has {complex_.size(chain.dimension)} simplexes of that dimension"
        )
    d = boundary_matrix(complex_, chain.dimension).entries.astype(np.int64)
    return Chain(chain.dimension - 1, (d @ chain.coefficients.astype(np.int64)) % 2)
