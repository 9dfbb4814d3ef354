# geometry.py
#
# Γεωμετρικοί descriptors Φ για arcs και 1-cycles:
#   μήκος, εμβαδόν (shoelace), διακριτή καμπυλότητα ανά vertex,
#   uniform iso-curvature για arcs.
#
# Καμπυλότητα σε εσωτερικό vertex = εξωτερική γωνία στροφής (π - εσωτερική γωνία).
# Με πρόσημο για το turning number, σε απόλυτη τιμή για τα στατιστικά.
# Οι ακμές θεωρούνται ευθύγραμμα τμήματα.

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence, Union

import numpy as np

from homology import Cycle
from simplicial_complex import Complex


class NotSimple(ValueError):
    pass


class ArcTooShort(ValueError):
    pass


class InvalidArc(ValueError):
    pass


CYCLE_COMPONENTS = ("edge_count", "length", "enclosed_area", "mean_curvature", "curvature_stdev")
ARC_COMPONENTS = ("arc_length", "mean_curvature", "curvature_stdev", "is_uniform_iso")
# counts / flags, not quantized
DISCRETE_COMPONENTS = frozenset({"edge_count", "is_uniform_iso"})
# float slack στη σύγκριση stdev <= tau
UNIFORM_EPS = 1e-9


@dataclass(frozen=True)
class PhiConfig:
    """
    components: active component names (None = all of them).
    quant_step: q, 0 disables quantization. tau: uniformity tolerance for arcs.
    fourier_harmonics: reserved slot, must stay 0.
    """
    quant_step: float = 0.05
    tau: float = 0.05
    components: tuple[str, ...] | None = None
    fourier_harmonics: int = 0

    def __post_init__(self):
        if self.quant_step < 0 or self.tau < 0:
            raise ValueError(f"quant_step and tau must be >= 0, got {self.quant_step}, {self.tau}")
        if self.fourier_harmonics:
            raise ValueError("Fourier descriptors are not supported (fourier_harmonics must be 0)")
        if self.components is not None:
            unknown = set(self.components) - set(CYCLE_COMPONENTS) - set(ARC_COMPONENTS)
            if unknown:
                raise ValueError(f"Unknown Φ components: {sorted(unknown)}")
            object.__setattr__(self, "components", tuple(self.components))

    def to_dict(self) -> dict:
        return {
            "quant_step": self.quant_step,
            "tau": self.tau,
            "components": list(self.components) if self.components is not None else None,
            "fourier_harmonics": self.fourier_harmonics,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "PhiConfig":
        comps = d.get("components")
        return cls(
            quant_step=float(d.get("quant_step", 0.05)),
            tau=float(d.get("tau", 0.05)),
            components=tuple(comps) if comps is not None else None,
            fourier_harmonics=int(d.get("fourier_harmonics", 0)),
        )


@dataclass(frozen=True)
class FeatureVector:
    """Φ(x): named finite real components; kind is 'cycle' or 'arc'."""
    kind: str
    names: tuple[str, ...]
    values: tuple[float, ...]

    def __post_init__(self):
        if len(self.names) != len(self.values):
            raise ValueError("FeatureVector names/values length mismatch")
        if not all(math.isfinite(v) for v in self.values):
            raise ValueError(f"Non-finite component in {dict(zip(self.names, self.values))}")

    def __getitem__(self, name: str) -> float:
        return self.values[self.names.index(name)]

    def as_dict(self) -> dict[str, float]:
        return dict(zip(self.names, self.values))

    def array(self) -> np.ndarray:
        return np.array(self.values, dtype=float)

    def comparable(self, other: "FeatureVector") -> bool:
        return self.kind == other.kind and self.names == other.names

    def distance(self, other: "FeatureVector") -> float:
        """Max-norm distance; inf between vectors of different shape."""
        if not self.comparable(other):
            return math.inf
        if not self.names:
            return 0.0
        return float(np.max(np.abs(self.array() - other.array())))


@dataclass(frozen=True)
class Arc:
    """Vertex path along declared edges (≥ 2 vertices, no edge used twice)."""
    vertices: tuple[int, ...]

    def canonical(self) -> "Arc":
        rev = self.vertices[::-1]
        return Arc(min(self.vertices, rev))

    def edge_pairs(self) -> list[tuple[int, int]]:
        return [(min(a, b), max(a, b)) for a, b in zip(self.vertices, self.vertices[1:])]


Element = Union[Arc, Cycle]


# ---------- βασικές γεωμετρικές ποσότητες ----------

def turning_angles(points: np.ndarray, closed: bool) -> np.ndarray:
    """
    Signed exterior angle at each vertex (closed) or at each interior vertex
    (open path), via atan2(cross, dot) of consecutive segment vectors.
    """
    pts = np.asarray(points, dtype=float)
    if closed:
        incoming = pts - np.roll(pts, 1, axis=0)
        outgoing = np.roll(pts, -1, axis=0) - pts
    else:
        incoming = pts[1:-1] - pts[:-2]
        outgoing = pts[2:] - pts[1:-1]
    cross = incoming[:, 0] * outgoing[:, 1] - incoming[:, 1] * outgoing[:, 0]
    dot = np.sum(incoming * outgoing, axis=1)
    return np.arctan2(cross, dot)


def shoelace_area(points: np.ndarray) -> float:
    """Signed area of a closed ring (positive when counterclockwise)."""
    pts = np.asarray(points, dtype=float)
    x, y = pts[:, 0], pts[:, 1]
    return 0.5 * float(np.sum(x * np.roll(y, -1) - np.roll(x, -1) * y))


def _segment_lengths(points, closed):
    pts = np.asarray(points, dtype=float)
    nxt = np.roll(pts, -1, axis=0) if closed else pts[1:]
    cur = pts if closed else pts[:-1]
    return np.hypot(*(nxt - cur).T)


def _traversal_points(complex_, cycle):
    if not cycle.simple or cycle.traversal is None:
        raise NotSimple(f"Cycle with edges {cycle.edge_ids} has no simple traversal")
    return np.array([complex_.point(v) for v in cycle.traversal])


def turning_number(complex_: Complex, cycle: Cycle) -> float:
    """Sum of signed exterior angles over 2π; ±1 for a simple closed traversal."""
    return float(np.sum(turning_angles(_traversal_points(complex_, cycle), closed=True))) / (2 * math.pi)


def _validate_arc(complex_: Complex, arc: Arc) -> None:
    for vid in arc.vertices:
        if not complex_.has_vertex(vid):
            raise InvalidArc(f"Arc {arc.vertices} names unknown vertex {vid}")
    pairs = arc.edge_pairs()
    for a, b in pairs:
        if complex_.edge_between(a, b) is None:
            raise InvalidArc(f"Arc {arc.vertices} uses the missing edge {a}-{b}")
    if len(set(pairs)) != len(pairs):
        raise InvalidArc(f"Arc {arc.vertices} repeats an edge")


# ---------- descriptors ----------

def cycle_geometry(complex_: Complex, cycle: Cycle) -> FeatureVector:
    """Length, |shoelace| area and curvature statistics of a simple cycle."""
    pts = _traversal_points(complex_, cycle)
    curv = np.abs(turning_angles(pts, closed=True))
    values = (
        float(len(pts)),
        float(np.sum(_segment_lengths(pts, closed=True))),
        abs(shoelace_area(pts)),
        float(np.mean(curv)),
        float(np.std(curv)),
    )
    return FeatureVector("cycle", CYCLE_COMPONENTS, values)


def arc_descriptor(complex_: Complex, arc: Arc, tau: float) -> FeatureVector:
    """
    Curvature at the interior vertices of an arc; is_uniform_iso is 1 when
    their standard deviation is ≤ tau.
    """
    if tau < 0:
        raise ValueError(f"tau must be >= 0, got {tau}")
    _validate_arc(complex_, arc)
    if len(arc.vertices) < 3:
        raise ArcTooShort(f"Arc {arc.vertices} has no interior vertex")
    pts = np.array([complex_.point(v) for v in arc.vertices])
    curv = np.abs(turning_angles(pts, closed=False))
    stdev = float(np.std(curv))
    values = (
        float(np.sum(_segment_lengths(pts, closed=False))),
        float(np.mean(curv)),
        stdev,
        1.0 if stdev <= tau + UNIFORM_EPS else 0.0,
    )
    return FeatureVector("arc", ARC_COMPONENTS, values)


def segment_descriptor(complex_: Complex, arc: Arc) -> FeatureVector:
    """A single edge as an arc: straight, so zero curvature and uniform."""
    _validate_arc(complex_, arc)
    if len(arc.vertices) != 2:
        raise InvalidArc(f"A segment has exactly two vertices, got {arc.vertices}")
    a, b = (complex_.point(v) for v in arc.vertices)
    return FeatureVector("arc", ARC_COMPONENTS, (float(np.hypot(*(b - a))), 0.0, 0.0, 1.0))


def quantize(value: float, q: float) -> float:
    """Nearest multiple of q (q=0 leaves value untouched); -0.0 folded to 0.0."""
    if q <= 0:
        return float(value) + 0.0
    return round(round(value / q) * q, 12) + 0.0


def phi(complex_: Complex, element: Element, config: PhiConfig) -> FeatureVector:
    """Φ(x) for an arc or a cycle, restricted to the active components and quantized."""
    if isinstance(element, Cycle):
        fv = cycle_geometry(complex_, element)
    elif isinstance(element, Arc) and len(element.vertices) == 2:
        fv = segment_descriptor(complex_, element)
    elif isinstance(element, Arc):
        fv = arc_descriptor(complex_, element, config.tau)
    else:
        raise TypeError(f"Φ is defined for Arc or Cycle, got {type(element).__name__}")

    names = fv.names
    if config.components is not None:
        names = tuple(n for n in fv.names if n in config.components)
    values = tuple(
        fv[n] if n in DISCRETE_COMPONENTS else quantize(fv[n], config.quant_step)
        for n in names
    )
    return FeatureVector(fv.kind, names, values)


def maximal_uniform_arcs(complex_: Complex, cycle: Cycle, tau: float) -> list[Arc]:
    """
    Greedy split of the traversal into maximal runs of vertices whose
    curvature spread stays ≤ tau; runs of ≥ 2 vertices give arcs of ≥ 4 vertices.
    """
    pts = _traversal_points(complex_, cycle)
    t = cycle.traversal
    n = len(t)
    curv = np.abs(turning_angles(pts, closed=True))
    arcs: list[Arc] = []
    i = 0
    while i < n:
        j = i + 1
        while j - i < n - 2 and float(np.std(curv[[k % n for k in range(i, j + 1)]])) <= tau + UNIFORM_EPS:
            j += 1
        if j - i >= 2:
            verts = [t[(i - 1) % n]] + [t[k % n] for k in range(i, j)] + [t[j % n]]
            arcs.append(Arc(tuple(verts)).canonical())
        i = j
    return arcs


def cycle_elements(complex_: Complex,
                   cycle: Cycle,
                   config: PhiConfig,
                   include_segments: bool = True) -> list[Element]:
    """
    Elements that describe a cycle: the whole cycle, its corner arcs, its
    maximal uniform-iso arcs and (optionally) each edge as a segment.
    """
    t = cycle.traversal
    if t is None:
        raise NotSimple(f"Cycle with edges {cycle.edge_ids} has no simple traversal")
    n = len(t)
    out: dict[Element, None] = {cycle: None}
    for i in range(n):
        out[Arc((t[i - 1], t[i], t[(i + 1) % n])).canonical()] = None
    for arc in maximal_uniform_arcs(complex_, cycle, config.tau):
        out[arc] = None
    if include_segments:
        for i in range(n):
            out[Arc((t[i], t[(i + 1) % n])).canonical()] = None
    return list(out)


def arc_from_edges(complex_: Complex, edge_ids: Sequence[int]) -> Arc:
    """Order a set of edges forming one open path into an Arc (lowest end first)."""
    adj: dict[int, list[int]] = {}
    for eid in edge_ids:
        u, v = complex_.edges[complex_.edge_index(eid)].endpoints
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    ends = sorted(v for v, nb in adj.items() if len(nb) == 1)
    if len(ends) != 2 or any(len(nb) > 2 for nb in adj.values()):
        raise InvalidArc(f"Edges {sorted(edge_ids)} do not form a single open path")
    path = [ends[0]]
    prev = None
    while path[-1] != ends[1]:
        cur = path[-1]
        nxt = next(w for w in adj[cur] if w != prev)
        prev = cur
        path.append(nxt)
    if len(path) - 1 != len(set(edge_ids)):
        raise InvalidArc(f"Edges {sorted(edge_ids)} do not form a single open path")
    return Arc(tuple(path)).canonical()
