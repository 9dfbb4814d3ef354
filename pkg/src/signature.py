# signature.py
#
# Υπογραφή σχήματος sig(sh A): ένα feature record με
#   1) geometry των cycles      2) ranks (β0, rZ1, rB1, rH1)
#   3) nerve features            4) closure-finite counts
#   5) descriptors των arcs που μοιράζονται ≥ 2 cycles
# και μια απόσταση για σύγκριση υπογραφών.
#
# Τα ranks μπαίνουν πάντα (αρκούν από μόνα τους για υπογραφή),
# τα υπόλοιπα components απενεργοποιούνται από το config.

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations
from typing import Sequence

import networkx as nx
import pandas as pd

from geometry import (
    ARC_COMPONENTS,
    CYCLE_COMPONENTS,
    Arc,
    FeatureVector,
    PhiConfig,
    arc_from_edges,
    phi,
)
from homology import Cycle, h1_basis
from nerve import homology_nerve, leader_cover, shape_ground_set
from proximity import ProximityConfig, spatial_intersection, strongly_near_arc
from simplicial_complex import Complex


class ConfigMismatch(ValueError):
    pass


# ---------- config ----------

@dataclass(frozen=True)
class SignatureConfig:
    proximity: ProximityConfig = field(default_factory=ProximityConfig)
    include_geometry: bool = True
    include_nerve: bool = True
    include_closure: bool = True
    include_shared_arcs: bool = True

    @property
    def phi_config(self) -> PhiConfig:
        return self.proximity.phi_config

    def to_dict(self) -> dict:
        pc = self.phi_config
        return {
            "quant_step": pc.quant_step,
            "tau": pc.tau,
            "components": list(pc.components) if pc.components is not None else None,
            "epsilon": self.proximity.epsilon,
            "include_segments": self.proximity.include_segments,
            "signature": {
                "geometry": self.include_geometry,
                "nerve": self.include_nerve,
                "closure": self.include_closure,
                "shared_arcs": self.include_shared_arcs,
            },
        }

    @classmethod
    def from_dict(cls, d: dict) -> "SignatureConfig":
        """Reads the layout of config/shapesig_defaults.json (the 'weights' key is ignored)."""
        switches = d.get("signature", {})
        comps = d.get("components")
        phi_cfg = PhiConfig(
            quant_step=float(d.get("quant_step", 0.05)),
            tau=float(d.get("tau", 0.05)),
            components=tuple(comps) if comps is not None else None,
        )
        return cls(
            proximity=ProximityConfig(
                epsilon=float(d.get("epsilon", 0.0)),
                phi_config=phi_cfg,
                include_segments=bool(d.get("include_segments", True)),
            ),
            include_geometry=bool(switches.get("geometry", True)),
            include_nerve=bool(switches.get("nerve", True)),
            include_closure=bool(switches.get("closure", True)),
            include_shared_arcs=bool(switches.get("shared_arcs", True)),
        )


@dataclass(frozen=True)
class DistanceWeights:
    ranks: float = 10.0
    cycles: float = 1.0
    nerve: float = 1.0
    unmatched: float = 1.0

    def to_dict(self) -> dict:
        return {"ranks": self.ranks, "cycles": self.cycles, "nerve": self.nerve, "unmatched": self.unmatched}

    @classmethod
    def from_dict(cls, d: dict) -> "DistanceWeights":
        base = cls()
        return cls(**{k: float(d.get(k, getattr(base, k))) for k in base.to_dict()})


# ---------- signature ----------

@dataclass(frozen=True)
class NerveFeatures:
    max_face_size: int
    cluster_count: int
    largest_cluster: int
    matched_components: tuple[tuple[str, float], ...] = ()

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.max_face_size, self.cluster_count, self.largest_cluster)


@dataclass(frozen=True)
class Signature:
    betti0: int
    rankZ1: int
    rankB1: int
    rankH1: int
    cycle_features: tuple[FeatureVector, ...]
    nerve_features: NerveFeatures | None
    shared_arc_features: tuple[FeatureVector, ...]
    closure_finite_count: tuple[int, ...]
    config_echo: dict

    def ranks(self) -> tuple[int, int, int, int]:
        return (self.betti0, self.rankZ1, self.rankB1, self.rankH1)


def _cycle_sort_key(fv):
    d = fv.as_dict()
    return (-d.get("length", 0.0), -d.get("enclosed_area", 0.0), fv.values)


def shared_arcs(complex_: Complex, cycles: Sequence[Cycle]) -> list[Arc]:
    """Maximal paths of edges common to at least two of the cycles."""
    arcs: dict[Arc, None] = {}
    for a, b in combinations(cycles, 2):
        common = spatial_intersection(a, b)[1]
        if not common:
            continue
        G = nx.Graph()
        for eid in common:
            G.add_edge(*complex_.edges[complex_.edge_index(eid)].endpoints, id=eid)
        for comp in nx.connected_components(G):
            ids = [d["id"] for _, _, d in G.subgraph(comp).edges(data=True)]
            arcs[arc_from_edges(complex_, ids)] = None
    return sorted(arcs, key=lambda arc: arc.vertices)


def _nerve_features(complex_: Complex, ground: Sequence[Cycle], config: SignatureConfig) -> NerveFeatures:
    if not ground:
        return NerveFeatures(0, 0, 0)
    nerve = homology_nerve(ground)
    cover = leader_cover(complex_, ground, config.proximity)
    clusters = cover.distinct_clusters

    # components του nucleus που ταιριάζουν σε όλα τα μέλη του cluster
    eps = config.proximity.epsilon
    matched: set[tuple[str, float]] = set()
    descs = [phi(complex_, c, config.phi_config) for c in ground]
    for cl in cover.clusters:
        if len(cl.members) < 2:
            continue
        nuc = descs[cl.nucleus]
        for name, value in zip(nuc.names, nuc.values):
            if all(abs(descs[m][name] - value) <= eps + 1e-12 for m in cl.members):
                matched.add((name, value))

    return NerveFeatures(
        max_face_size=nerve.max_face_size,
        cluster_count=len(clusters),
        largest_cluster=max(len(c) for c in clusters),
        matched_components=tuple(sorted(matched)),
    )


def build_signature(complex_: Complex, config: SignatureConfig | None = None) -> Signature:
    """sig(sh A) for one complex; deterministic for a fixed config."""
    config = config or SignatureConfig()
    hom = h1_basis(complex_)
    ground = shape_ground_set(complex_, hom)

    cycle_features: tuple[FeatureVector, ...] = ()
    if config.include_geometry:
        cycle_features = tuple(sorted(
            (phi(complex_, c, config.phi_config) for c in ground), key=_cycle_sort_key
        ))

    nerve_features = _nerve_features(complex_, ground, config) if config.include_nerve else None

    arc_rows: list[tuple[FeatureVector, int]] = []
    if config.include_shared_arcs or config.include_closure:
        for arc in shared_arcs(complex_, ground):
            count = sum(strongly_near_arc(complex_, c, arc) for c in ground)
            arc_rows.append((phi(complex_, arc, config.phi_config), count))
        arc_rows.sort(key=lambda row: (row[0].values, row[1]))

    return Signature(
        betti0=hom.betti0,
        rankZ1=hom.rankZ1,
        rankB1=hom.rankB1,
        rankH1=hom.rankH1,
        cycle_features=cycle_features,
        nerve_features=nerve_features,
        shared_arc_features=tuple(fv for fv, _ in arc_rows) if config.include_shared_arcs else (),
        closure_finite_count=tuple(n for _, n in arc_rows) if config.include_closure else (),
        config_echo=config.to_dict(),
    )


# ---------- JSON ----------

def _r9(x):
    """9 significant digits, -0.0 folded to 0.0."""
    return float(f"{x:.9g}") + 0.0


def _fv_to_json(fv):
    return {n: _r9(v) for n, v in zip(fv.names, fv.values)}


def _fv_from_json(kind: str, d: dict) -> FeatureVector:
    order = CYCLE_COMPONENTS if kind == "cycle" else ARC_COMPONENTS
    names = tuple(n for n in order if n in d)
    return FeatureVector(kind, names, tuple(float(d[n]) for n in names))


def _clean(obj):
    if isinstance(obj, float):
        return _r9(obj)
    if isinstance(obj, dict):
        return {k: _clean(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_clean(v) for v in obj]
    return obj


def signature_to_dict(sig: Signature) -> dict:
    nf = sig.nerve_features
    return {
        "betti0": sig.betti0,
        "rankZ1": sig.rankZ1,
        "rankB1": sig.rankB1,
        "rankH1": sig.rankH1,
        "cycle_features": [_fv_to_json(fv) for fv in sig.cycle_features],
        "nerve_features": None if nf is None else {
            "max_face_size": nf.max_face_size,
            "cluster_count": nf.cluster_count,
            "largest_cluster": nf.largest_cluster,
            "matched_components": [[name, _r9(v)] for name, v in nf.matched_components],
        },
        "shared_arc_features": [_fv_to_json(fv) for fv in sig.shared_arc_features],
        "closure_finite_count": list(sig.closure_finite_count),
        "config_echo": _clean(sig.config_echo),
    }


def signature_to_json(sig: Signature) -> str:
    """Byte-deterministic JSON: sorted keys, 9 significant digits, canonical arrays."""
    return json.dumps(signature_to_dict(sig), sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def signature_from_json(text: str) -> Signature:
    d = json.loads(text)
    nf = d.get("nerve_features")
    return Signature(
        betti0=int(d["betti0"]),
        rankZ1=int(d["rankZ1"]),
        rankB1=int(d["rankB1"]),
        rankH1=int(d["rankH1"]),
        cycle_features=tuple(_fv_from_json("cycle", x) for x in d.get("cycle_features", [])),
        nerve_features=None if nf is None else NerveFeatures(
            max_face_size=int(nf["max_face_size"]),
            cluster_count=int(nf["cluster_count"]),
            largest_cluster=int(nf["largest_cluster"]),
            matched_components=tuple((str(n), float(v)) for n, v in nf.get("matched_components", [])),
        ),
        shared_arc_features=tuple(_fv_from_json("arc", x) for x in d.get("shared_arc_features", [])),
        closure_finite_count=tuple(int(n) for n in d.get("closure_finite_count", [])),
        config_echo=d["config_echo"],
    )


# ---------- σύγκριση ----------

def distance_breakdown(sig_a: Signature, sig_b: Signature, weights: DistanceWeights | None = None) -> pd.DataFrame:
    """
    Per-term table (term, raw, weight, weighted). Cycles are matched greedily
    in their canonical order; leftovers pay the unmatched weight each.
    """
    if _clean(sig_a.config_echo) != _clean(sig_b.config_echo):
        raise ConfigMismatch("Signatures were built with different configurations")
    w = weights or DistanceWeights()

    rank_raw = float(sum(abs(a - b) for a, b in zip(sig_a.ranks(), sig_b.ranks())))

    fa, fb = sig_a.cycle_features, sig_b.cycle_features
    cycle_raw = float(sum(x.distance(y) for x, y in zip(fa, fb)))
    unmatched_raw = float(abs(len(fa) - len(fb)))

    na, nb = sig_a.nerve_features, sig_b.nerve_features
    if na is None and nb is None:
        nerve_raw = 0.0
    else:
        ta = na.as_tuple() if na is not None else (0, 0, 0)
        tb = nb.as_tuple() if nb is not None else (0, 0, 0)
        nerve_raw = float(sum(abs(a - b) for a, b in zip(ta, tb)))

    df = pd.DataFrame(
        {
            "term": ["ranks", "cycles", "unmatched", "nerve"],
            "raw": [rank_raw, cycle_raw, unmatched_raw, nerve_raw],
            "weight": [w.ranks, w.cycles, w.unmatched, w.nerve],
        }
    )
    df["weighted"] = df["raw"] * df["weight"]
    return df


def signature_distance(sig_a: Signature, sig_b: Signature, weights: DistanceWeights | None = None) -> float:
    """Weighted, symmetric, zero on identical signatures."""
    df = distance_breakdown(sig_a, sig_b, weights)
    return float(sum(df["weighted"].tolist()))
