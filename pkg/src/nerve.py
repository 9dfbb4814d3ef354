# nerve.py
#
# Homology nerves (cycles με κοινό χωρικό στοιχείο), descriptive nerves γύρω
# από έναν nucleus, Leader cover και διαγνωστικά reports.
#
# Ground set: συνήθως H1 representatives + hole boundaries + contour.
# Η απαρίθμηση των faces είναι εκθετική -> όριο 16 cycles.

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Sequence

import networkx as nx
import numpy as np

from homology import (
    Cycle,
    HomologyResult,
    abstract_betti,
    contour_cycles,
    h1_basis,
    hole_boundaries,
    unique_cycles,
)
from proximity import ProximityConfig, cycle_nearness_matrix, spatial_intersection
from simplicial_complex import Complex

GROUND_SET_CAP = 16
LEADER_CLOSURE_CAP = 512


class GroundSetTooLarge(ValueError):
    pass


class UnknownNucleus(ValueError):
    pass


def _set_key(s):
    return (len(s), tuple(sorted(s)))


def _check_ground(cycles):
    if len(cycles) > GROUND_SET_CAP:
        raise GroundSetTooLarge(
            f"Nerve enumeration is capped at {GROUND_SET_CAP} cycles, got {len(cycles)}"
        )


# ---------- homology nerve ----------

@dataclass(frozen=True)
class NerveComplex:
    """
    Abstract simplicial complex on cycle indices: a face is a subcollection
    whose members all share at least one vertex (hence possibly an edge).
    """
    cycles: tuple[Cycle, ...]
    faces: tuple[tuple[int, ...], ...]
    maximal_faces: tuple[tuple[int, ...], ...]

    @property
    def ground(self) -> tuple[int, ...]:
        return tuple(range(len(self.cycles)))

    def has_face(self, members) -> bool:
        return tuple(sorted(members)) in set(self.faces)

    @property
    def max_face_size(self) -> int:
        return max((len(f) for f in self.maximal_faces), default=0)

    def faces_of_size(self, k: int) -> list[tuple[int, ...]]:
        return [f for f in self.faces if len(f) == k]


def homology_nerve(cycles: Sequence[Cycle]) -> NerveComplex:
    """All subcollections of cycles with a common vertex or edge, plus the maximal ones."""
    cycles = tuple(cycles)
    _check_ground(cycles)

    # carrier(v) = τα cycles που περνούν από το vertex v
    carriers: dict[int, set[int]] = {}
    for i, c in enumerate(cycles):
        for vid in c.vertex_ids:
            carriers.setdefault(vid, set()).add(i)
    tops = {frozenset(s) for s in carriers.values()}
    maximal = [s for s in tops if not any(s < other for other in tops)]

    faces: set[tuple[int, ...]] = set()
    for top in maximal:
        members = sorted(top)
        for k in range(1, len(members) + 1):
            faces.update(combinations(members, k))

    return NerveComplex(
        cycles=cycles,
        faces=tuple(sorted(faces, key=_set_key)),
        maximal_faces=tuple(sorted((tuple(sorted(s)) for s in maximal), key=_set_key)),
    )


# ---------- descriptive nerve ----------

@dataclass(frozen=True)
class DescriptiveNerve:
    nucleus: int
    members: tuple[int, ...]


def descriptive_nerve(complex_: Complex,
                      nucleus: int,
                      cycles: Sequence[Cycle],
                      config: ProximityConfig,
                      nearness: np.ndarray | None = None) -> DescriptiveNerve:
    """Cluster of the cycles descriptively near the nucleus (the nucleus included)."""
    if not 0 <= nucleus < len(cycles):
        raise UnknownNucleus(f"Nucleus {nucleus} is not an index into {len(cycles)} cycles")
    near = nearness if nearness is not None else cycle_nearness_matrix(complex_, cycles, config)
    members = tuple(int(j) for j in np.flatnonzero(near[nucleus]))
    return DescriptiveNerve(nucleus, members)


# ---------- Leader cover ----------

@dataclass(frozen=True)
class LeaderCover:
    clusters: tuple[DescriptiveNerve, ...]
    closure: tuple[frozenset[int], ...]
    capped: bool
    cap: int = LEADER_CLOSURE_CAP

    def covers(self, n: int) -> bool:
        return set().union(*(c.members for c in self.clusters)) == set(range(n))

    @property
    def distinct_clusters(self) -> tuple[tuple[int, ...], ...]:
        return tuple(sorted({c.members for c in self.clusters}, key=_set_key))


def descriptive_meet(near: np.ndarray, s: frozenset[int], t: frozenset[int]) -> frozenset[int]:
    """{x ∈ S ∪ T : x is near some member of S and some member of T}."""
    if not s or not t:
        return frozenset()
    si, ti = sorted(s), sorted(t)
    return frozenset(x for x in s | t if near[x, si].any() and near[x, ti].any())


def descriptive_join(near: np.ndarray, s: frozenset[int], t: frozenset[int]) -> frozenset[int]:
    """Every cycle near some member of S ∪ T."""
    st = sorted(s | t)
    if not st:
        return frozenset()
    return frozenset(int(x) for x in np.flatnonzero(near[:, st].any(axis=1)))


def leader_cover(complex_: Complex,
                 cycles: Sequence[Cycle],
                 config: ProximityConfig,
                 cap: int = LEADER_CLOSURE_CAP) -> LeaderCover:
    """
    One descriptive nerve per cycle, then the closure of their member sets:
    meets for every pair, joins only for pairs that share a member.
    """
    if not cycles:
        raise ValueError("leader_cover needs at least one cycle")
    _check_ground(cycles)
    near = cycle_nearness_matrix(complex_, cycles, config)
    clusters = tuple(descriptive_nerve(complex_, i, cycles, config, near) for i in range(len(cycles)))

    known: list[frozenset[int]] = []
    for c in clusters:
        s = frozenset(c.members)
        if s not in known:
            known.append(s)
    seen = set(known)
    capped = False
    done: set[tuple[int, int]] = set()
    changed = True
    while changed and not capped:
        changed = False
        for i in range(len(known)):
            for j in range(i + 1, len(known)):
                if (i, j) in done:
                    continue
                done.add((i, j))
                s, t = known[i], known[j]
                new = [descriptive_meet(near, s, t)]
                if s & t:
                    new.append(descriptive_join(near, s, t))
                for r in new:
                    if r in seen:
                        continue
                    if len(known) >= cap:
                        capped = True
                        break
                    known.append(r)
                    seen.add(r)
                    changed = True
                if capped:
                    break
            if capped:
                break

    return LeaderCover(
        clusters=clusters,
        closure=tuple(sorted(known, key=_set_key)),
        capped=capped,
        cap=cap,
    )


# ---------- diagnostics ----------

@dataclass(frozen=True)
class NerveUnionReport:
    nerve_betti: tuple[int, int]
    union_betti: tuple[int, int]

    @property
    def agree(self) -> bool:
        return self.nerve_betti == self.union_betti

    @property
    def betti0_agree(self) -> bool:
        return self.nerve_betti[0] == self.union_betti[0]


def nerve_union_betti_report(complex_: Complex, nerve: NerveComplex) -> NerveUnionReport:
    """
    (β0, β1) of the nerve as an abstract complex next to (β0, β1) of the union
    of its cycles. Diagnostic only: a circle's nerve is a point.
    """
    n = len(nerve.cycles)
    nerve_b = abstract_betti(n, nerve.faces_of_size(2), nerve.faces_of_size(3))

    G = nx.Graph()
    for c in nerve.cycles:
        G.add_nodes_from(c.vertex_ids)
        for eid in c.edge_ids:
            G.add_edge(*complex_.edges[complex_.edge_index(eid)].endpoints)
    b0 = nx.number_connected_components(G)
    union_b = (b0, G.number_of_edges() - G.number_of_nodes() + b0)
    return NerveUnionReport(nerve_betti=nerve_b, union_betti=union_b)


def shape_ground_set(complex_: Complex, homology: HomologyResult | None = None) -> list[Cycle]:
    """H1 representatives, hole boundaries and contour, repeats dropped."""
    hom = homology if homology is not None else h1_basis(complex_)
    return unique_cycles(
        list(hom.h1_representatives) + hole_boundaries(complex_) + contour_cycles(complex_)
    )


@dataclass(frozen=True)
class ConjectureReport:
    has_holes: bool
    message: str
    ground: tuple[Cycle, ...] = ()
    hole_indices: tuple[int, ...] = ()
    nerve_meets_hole: bool | None = None
    nerve_avoids_holes: bool | None = None
    descriptive_nerve_meets_hole: bool | None = None
    descriptive_nerve_avoids_holes: bool | None = None
    witnesses: dict = field(default_factory=dict)


def conjecture_report(complex_: Complex, config: ProximityConfig) -> ConjectureReport:
    """
    Looks for witnesses in this complex: a (descriptive) nerve with a member
    touching a hole boundary, and one whose members touch no hole at all.
    """
    hom = h1_basis(complex_)
    if hom.rankH1 == 0:
        return ConjectureReport(has_holes=False, message="no holes, conjectures vacuous")

    ground = shape_ground_set(complex_, hom)
    holes = hole_boundaries(complex_)
    hole_keys = {h.edge_ids for h in holes}
    hole_idx = tuple(i for i, c in enumerate(ground) if c.edge_ids in hole_keys)

    def meets_hole(i: int) -> bool:
        c = ground[i]
        return any(
            c.edge_ids != h.edge_ids and any(spatial_intersection(c, h))
            for h in holes
        )

    def touches_no_hole(i: int) -> bool:
        return i not in hole_idx and not meets_hole(i)

    nerve = homology_nerve(ground)
    cover = leader_cover(complex_, ground, config)
    big_faces = [f for f in nerve.maximal_faces if len(f) >= 2]
    big_clusters = [c.members for c in cover.clusters if len(c.members) >= 2]

    witnesses: dict[str, tuple[int, ...]] = {}
    checks = {
        "nerve_meets_hole": (big_faces, lambda f: any(meets_hole(i) for i in f)),
        "nerve_avoids_holes": (big_faces, lambda f: all(touches_no_hole(i) for i in f)),
        "descriptive_nerve_meets_hole": (big_clusters, lambda f: any(meets_hole(i) for i in f)),
        "descriptive_nerve_avoids_holes": (big_clusters, lambda f: all(touches_no_hole(i) for i in f)),
    }
    found: dict[str, bool] = {}
    for name, (candidates, test) in checks.items():
        hit = next((f for f in candidates if test(f)), None)
        found[name] = hit is not None
        if hit is not None:
            witnesses[name] = tuple(hit)

    return ConjectureReport(
        has_holes=True,
        message=f"{hom.rankH1} hole(s), {len(ground)} cycles in the ground set",
        ground=tuple(ground),
        hole_indices=hole_idx,
        witnesses=witnesses,
        **found,
    )
