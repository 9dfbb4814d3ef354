# proximity.py
#
# Σχέσεις εγγύτητας (proximity) πάνω σε cycles και arcs:
#   - spatial: κοινά vertices / edges, strong nearness = κοινή ακμή
#   - descriptive: Φ(x) κοντά (max-norm ≤ epsilon) σε Φ του A ΚΑΙ του B
#
# epsilon = 0 σημαίνει ακριβή ισότητα μετά το quantization.

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from geometry import Arc, Element, FeatureVector, PhiConfig, cycle_elements, phi
from homology import Cycle
from simplicial_complex import Complex

# float slack όταν συγκρίνουμε quantized τιμές
_SLACK = 1e-12


@dataclass(frozen=True)
class ProximityConfig:
    epsilon: float = 0.0
    phi_config: PhiConfig = field(default_factory=PhiConfig)
    include_segments: bool = True

    def __post_init__(self):
        if self.epsilon < 0:
            raise ValueError(f"epsilon must be >= 0, got {self.epsilon}")

    def to_dict(self) -> dict:
        return {
            "epsilon": self.epsilon,
            "include_segments": self.include_segments,
            "phi": self.phi_config.to_dict(),
        }

    @classmethod
    def from_dict(cls, d: dict) -> "ProximityConfig":
        return cls(
            epsilon=float(d.get("epsilon", 0.0)),
            phi_config=PhiConfig.from_dict(d.get("phi", {})),
            include_segments=bool(d.get("include_segments", True)),
        )


# ---------- spatial ----------

def spatial_intersection(cyc_a: Cycle, cyc_b: Cycle) -> tuple[frozenset[int], frozenset[int]]:
    """(shared vertex ids, shared edge ids)."""
    return (
        frozenset(cyc_a.vertex_ids) & frozenset(cyc_b.vertex_ids),
        frozenset(cyc_a.edge_ids) & frozenset(cyc_b.edge_ids),
    )


def strongly_near(cyc_a: Cycle, cyc_b: Cycle) -> bool:
    """Overlapping interiors, read as: the cycles share at least one edge."""
    return bool(spatial_intersection(cyc_a, cyc_b)[1])


def strongly_near_arc(complex_: Complex, cycle: Cycle, arc: Arc) -> bool:
    """The cycle runs along at least one edge of the arc; vertex pairs with no edge are skipped."""
    pairs = (complex_.edge_between(a, b) for a, b in arc.edge_pairs())
    arc_edges = {e.id for e in pairs if e is not None}
    return bool(arc_edges & set(cycle.edge_ids))


# ---------- descriptive ----------

def _group(described):
    """Stack descriptions that are comparable with each other (same kind + names)."""
    groups: dict[tuple, list] = {}
    for _, fv in described:
        groups.setdefault((fv.kind, fv.names), []).append(fv.values)
    return {k: np.array(v, dtype=float).reshape(len(v), -1) for k, v in groups.items()}


def _near_any(fv: FeatureVector, groups: dict[tuple, np.ndarray], eps: float) -> bool:
    block = groups.get((fv.kind, fv.names))
    if block is None:
        return False
    if block.shape[1] == 0:
        return True
    dist = np.max(np.abs(block - np.array(fv.values)), axis=1)
    return bool(np.any(dist <= eps + _SLACK))


def describe(complex_: Complex, elements: Iterable[Element], config: ProximityConfig) -> list[tuple[Element, FeatureVector]]:
    """(element, Φ(element)) pairs, repeats dropped, first-seen order kept."""
    uniq = dict.fromkeys(elements)
    return [(x, phi(complex_, x, config.phi_config)) for x in uniq]


def descriptive_intersection(complex_: Complex,
                             A: Iterable[Element],
                             B: Iterable[Element],
                             config: ProximityConfig) -> frozenset:
    """
    {x ∈ A ∪ B : Φ(x) within epsilon of some Φ(a), a ∈ A, and of some Φ(b), b ∈ B}.
    """
    da = describe(complex_, A, config)
    db = describe(complex_, B, config)
    if not da or not db:
        return frozenset()
    ga, gb = _group(da), _group(db)
    union = {x: fv for x, fv in da + db}
    return frozenset(
        x for x, fv in union.items()
        if _near_any(fv, ga, config.epsilon) and _near_any(fv, gb, config.epsilon)
    )


def dnear(complex_: Complex, A: Iterable[Element], B: Iterable[Element], config: ProximityConfig) -> bool:
    """A δΦ B ⇔ A ⌢Φ B ≠ ∅."""
    return bool(descriptive_intersection(complex_, A, B, config))


def elements_of(complex_: Complex, cycle: Cycle, config: ProximityConfig) -> list[Element]:
    return cycle_elements(complex_, cycle, config.phi_config, include_segments=config.include_segments)


def cycles_dnear(complex_: Complex, cyc_a: Cycle, cyc_b: Cycle, config: ProximityConfig) -> bool:
    """Descriptive nearness of two cycles through their element sets."""
    return dnear(complex_, elements_of(complex_, cyc_a, config), elements_of(complex_, cyc_b, config), config)


def cycle_nearness_matrix(complex_: Complex, cycles: Sequence[Cycle], config: ProximityConfig) -> np.ndarray:
    """
    n×n boolean matrix, entry (i, j) = cycles_dnear(cycles[i], cycles[j]).
    Element sets are described once per cycle.
    """
    groups = [_group(describe(complex_, elements_of(complex_, c, config), config)) for c in cycles]
    n = len(cycles)
    near = np.zeros((n, n), dtype=bool)
    for i in range(n):
        near[i, i] = True
        for j in range(i + 1, n):
            near[i, j] = near[j, i] = _groups_near(groups[i], groups[j], config.epsilon)
    return near


def _groups_near(ga, gb, eps):
    for key, block_a in ga.items():
        block_b = gb.get(key)
        if block_b is None:
            continue
        if block_a.shape[1] == 0:
            return True
        dist = np.max(np.abs(block_a[:, None, :] - block_b[None, :, :]), axis=2)
        if np.any(dist <= eps + _SLACK):
            return True
    return False
