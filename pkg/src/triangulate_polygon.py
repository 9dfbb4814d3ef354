# triangulate_polygon.py
#
# Ear clipping για πολύγωνο με τρύπες:
#   1) κάθε τρύπα (ξεκινώντας από αυτή με το πιο δεξί vertex) ενώνεται με
#      bridge στο κοντινότερο ορατό vertex του τρέχοντος ring
#   2) το ενιαίο (weakly simple) ring κόβεται σε αυτιά (ears)
# Τα διπλά vertices του bridge έχουν το ίδιο id, οπότε το complex βγαίνει
# με rank H1 = πλήθος τρυπών.

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from simplicial_complex import Complex, build_complex

# ανοχή collinearity στα ear tests
EPS = 1e-12

Ring = tuple[tuple[float, float], ...]


class PolygonError(ValueError):
    pass


class DegenerateRing(PolygonError):
    pass


class SelfIntersectingRing(PolygonError):
    pass


class HoleOutsideOuter(PolygonError):
    pass


class OverlappingHoles(PolygonError):
    pass


class TriangulationFailed(PolygonError):
    pass


@dataclass(frozen=True)
class PolygonWithHoles:
    """outer counterclockwise, holes clockwise; rings are not closed (no repeated first point)."""
    outer: Ring
    holes: tuple[Ring, ...] = ()


# ---------- primitives ----------

def _cross(o, a, b) -> float:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def ring_area(ring) -> float:
    pts = np.asarray(ring, dtype=float)
    x, y = pts[:, 0], pts[:, 1]
    return 0.5 * float(np.sum(x * np.roll(y, -1) - np.roll(x, -1) * y))


def _on_segment(p, a, b) -> bool:
    return (abs(_cross(a, b, p)) <= EPS
            and min(a[0], b[0]) - EPS <= p[0] <= max(a[0], b[0]) + EPS
            and min(a[1], b[1]) - EPS <= p[1] <= max(a[1], b[1]) + EPS)


def segments_intersect(a, b, c, d) -> bool:
    """Closed segments ab and cd share at least one point."""
    d1, d2 = _cross(c, d, a), _cross(c, d, b)
    d3, d4 = _cross(a, b, c), _cross(a, b, d)
    if ((d1 > EPS and d2 < -EPS) or (d1 < -EPS and d2 > EPS)) and \
       ((d3 > EPS and d4 < -EPS) or (d3 < -EPS and d4 > EPS)):
        return True
    return _on_segment(a, c, d) or _on_segment(b, c, d) or _on_segment(c, a, b) or _on_segment(d, a, b)


def point_in_ring(p, ring) -> bool:
    """Ray casting; points on the boundary count as outside."""
    inside = False
    n = len(ring)
    for i in range(n):
        a, b = ring[i], ring[(i + 1) % n]
        if _on_segment(p, a, b):
            return False
        if (a[1] > p[1]) != (b[1] > p[1]):
            x = a[0] + (p[1] - a[1]) * (b[0] - a[0]) / (b[1] - a[1])
            if x > p[0]:
                inside = not inside
    return inside


def _point_in_triangle(p, a, b, c) -> bool:
    """Closed test (boundary counts as inside) for a counterclockwise triangle."""
    return _cross(a, b, p) >= -EPS and _cross(b, c, p) >= -EPS and _cross(c, a, p) >= -EPS


def _ring_edges(ring):
    n = len(ring)
    return [(ring[i], ring[(i + 1) % n]) for i in range(n)]


# ---------- validation ----------

def _check_ring(ring, what: str) -> None:
    if len(ring) < 3:
        raise DegenerateRing(f"{what} has {len(ring)} vertices, needs at least 3")
    if any(not (math.isfinite(x) and math.isfinite(y)) for x, y in ring):
        raise DegenerateRing(f"{what} has non-finite coordinates")
    if abs(ring_area(ring)) <= EPS:
        raise DegenerateRing(f"{what} has zero area")
    edges = _ring_edges(ring)
    n = len(edges)
    for i in range(n):
        a, b = edges[i]
        if math.dist(a, b) <= EPS:
            raise DegenerateRing(f"{what} repeats the point {a}")
        for j in range(i + 1, n):
            if j == i + 1 or (i == 0 and j == n - 1):
                # γειτονικές ακμές: επιτρέπεται μόνο το κοινό vertex
                c, d = edges[j]
                far_i, far_j = (a, d) if j == i + 1 else (b, c)
                if _on_segment(far_j, a, b) or _on_segment(far_i, c, d):
                    raise SelfIntersectingRing(f"{what} folds back on itself near {far_i}")
                continue
            if segments_intersect(a, b, *edges[j]):
                raise SelfIntersectingRing(f"{what} crosses itself between {a}-{b} and {edges[j][0]}-{edges[j][1]}")


def normalized(polygon: PolygonWithHoles) -> PolygonWithHoles:
    """Validate and return the polygon with outer ccw and holes cw."""
    outer = tuple((float(x), float(y)) for x, y in polygon.outer)
    _check_ring(outer, "outer ring")
    if ring_area(outer) < 0:
        outer = outer[::-1]

    holes = []
    for k, hole in enumerate(polygon.holes):
        hole = tuple((float(x), float(y)) for x, y in hole)
        _check_ring(hole, f"hole {k}")
        if ring_area(hole) > 0:
            hole = hole[::-1]
        for p in hole:
            if not point_in_ring(p, outer):
                raise HoleOutsideOuter(f"hole {k} vertex {p} is not strictly inside the outer ring")
        for a, b in _ring_edges(hole):
            for c, d in _ring_edges(outer):
                if segments_intersect(a, b, c, d):
                    raise HoleOutsideOuter(f"hole {k} touches the outer ring")
        holes.append(hole)

    for i in range(len(holes)):
        for j in range(i + 1, len(holes)):
            hi, hj = holes[i], holes[j]
            if any(segments_intersect(a, b, c, d) for a, b in _ring_edges(hi) for c, d in _ring_edges(hj)) \
                    or point_in_ring(hi[0], hj) or point_in_ring(hj[0], hi):
                raise OverlappingHoles(f"holes {i} and {j} overlap")
    return PolygonWithHoles(outer, tuple(holes))


# ---------- bridges ----------

def _in_wedge(pts, prev_id, v_id, next_id, target) -> bool:
    """Direction v->target lies inside the interior angle at v of a ccw ring."""
    v = pts[v_id]
    ang = lambda p: math.atan2(p[1] - v[1], p[0] - v[0])
    base = ang(pts[next_id])
    span = (ang(pts[prev_id]) - base) % (2 * math.pi)
    d = (ang(target) - base) % (2 * math.pi)
    return 0 < d < span or span == 0


def _visible(pts, ring, own_hole, pending_holes, h_id, v_id) -> bool:
    a, b = pts[h_id], pts[v_id]
    for k in range(len(ring)):
        u, w = ring[k], ring[(k + 1) % len(ring)]
        if h_id in (u, w) or v_id in (u, w):
            continue
        if segments_intersect(a, b, pts[u], pts[w]):
            return False
    for hole in [own_hole] + pending_holes:
        for k in range(len(hole)):
            u, w = hole[k], hole[(k + 1) % len(hole)]
            if h_id in (u, w):
                continue
            if segments_intersect(a, b, pts[u], pts[w]):
                return False
    mid = ((a[0] + b[0]) / 2, (a[1] + b[1]) / 2)
    return not point_in_ring(mid, [pts[v] for v in own_hole])


def _bridge_holes(pts, outer_ids: list[int], hole_ids: list[list[int]]) -> list[int]:
    ring = list(outer_ids)
    order = sorted(range(len(hole_ids)), key=lambda k: (-max(pts[v][0] for v in hole_ids[k]), k))
    pending = [hole_ids[k] for k in order]
    while pending:
        hole = pending.pop(0)
        # πιο δεξί vertex της τρύπας, ties -> μικρότερο id
        m = min(range(len(hole)), key=lambda i: (-pts[hole[i]][0], hole[i]))
        h_id = hole[m]
        rotated = hole[m:] + hole[:m]
        hp = pts[h_id]

        candidates = sorted(set(ring), key=lambda v: (math.dist(hp, pts[v]), v))
        pos = None
        for v in candidates:
            if not _visible(pts, ring, hole, pending, h_id, v):
                continue
            slots = [p for p, rid in enumerate(ring) if rid == v]
            ok = [p for p in slots
                  if _in_wedge(pts, ring[p - 1], v, ring[(p + 1) % len(ring)], hp)]
            if ok:
                pos = ok[0]
                break
        if pos is None:
            raise TriangulationFailed(f"no visible bridge for hole vertex {h_id}")
        ring = ring[:pos + 1] + rotated + [h_id, ring[pos]] + ring[pos + 1:]
    return ring


# ---------- ear clipping ----------

def ear_clip(pts, ring: list[int]) -> list[tuple[int, int, int]]:
    ring = list(ring)
    triangles: list[tuple[int, int, int]] = []
    while len(ring) > 3:
        n = len(ring)
        for i in range(n):
            a, b, c = ring[i - 1], ring[i], ring[(i + 1) % n]
            if len({a, b, c}) < 3 or _cross(pts[a], pts[b], pts[c]) <= EPS:
                continue
            blocked = False
            for k in range(n):
                o = ring[k]
                if o in (a, b, c):
                    continue
                if _point_in_triangle(pts[o], pts[a], pts[b], pts[c]):
                    blocked = True
                    break
            if not blocked:
                triangles.append((a, b, c))
                del ring[i]
                break
        else:
            raise TriangulationFailed(f"no ear found with {n} vertices left")
    a, b, c = ring
    if len({a, b, c}) == 3 and _cross(pts[a], pts[b], pts[c]) > EPS:
        triangles.append((a, b, c))
    return triangles


def triangulate_polygon(polygon: PolygonWithHoles) -> Complex:
    """
    Complex covering the outer ring minus the holes. Vertex ids: outer ring
    first, then each hole in input order.
    """
    poly = normalized(polygon)
    pts: list[tuple[float, float]] = list(poly.outer)
    outer_ids = list(range(len(poly.outer)))
    hole_ids = []
    for hole in poly.holes:
        start = len(pts)
        pts.extend(hole)
        hole_ids.append(list(range(start, start + len(hole))))

    ring = _bridge_holes(pts, outer_ids, hole_ids)
    tris = ear_clip(pts, ring)

    pairs = sorted({tuple(sorted(p)) for a, b, c in tris for p in ((a, b), (b, c), (a, c))})
    corners = sorted(tuple(sorted(t)) for t in tris)
    return build_complex(
        [(i, x, y) for i, (x, y) in enumerate(pts)],
        [(j, u, v) for j, (u, v) in enumerate(pairs)],
        [(j, *t) for j, t in enumerate(corners)],
    )
