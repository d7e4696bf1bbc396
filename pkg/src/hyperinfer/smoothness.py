"""Smoothness measures on hypergraphs.

Two per-edge measures: the ev measure sums squared distances between an
edge's own feature vector and its member nodes; the v measure needs node
features only and takes the largest squared pairwise distance inside the
edge. Ablation variants (mean / min / random pair) share the v measure's
shape. Probabilities enter through a convex objective whose data term is
the weighted v measure.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .core import DomainError, Hypergraph, as_features

VARIANT_KINDS = ("max", "mean", "min", "random")


@dataclass(frozen=True)
class SmoothnessVector:
    """Per-edge smoothness values; ``kind`` is "ev" or "v"."""

    values: np.ndarray
    kind: str

    def __post_init__(self):
        if self.kind not in ("ev", "v"):
            raise DomainError(f"unknown smoothness kind {self.kind!r}")
        object.__setattr__(self, "values", np.asarray(self.values, dtype=float))

    @property
    def total(self) -> float:
        return float(np.sum(self.values))


@dataclass(frozen=True)
class SmoothnessVariant:
    """Which pairwise statistic scores an edge: max, mean, min, or a random pair.

    The random variant draws one node pair per edge from a generator keyed on
    (seed, edge nodes), so runs are reproducible and the draw for an edge does
    not depend on where the edge sits in a candidate list.
    """

    kind: str = "max"
    seed: int | None = None

    def __post_init__(self):
        if self.kind not in VARIANT_KINDS:
            raise DomainError(
                f"unknown smoothness variant {self.kind!r}; expected one of {VARIANT_KINDS}"
            )
        if self.kind == "random" and self.seed is None:
            raise DomainError("random smoothness variant requires an explicit seed")


def _edge_nodes(edge: Iterable[int], n_rows: int) -> list[int]:
    nodes = sorted(int(v) for v in set(edge))
    if nodes and (nodes[0] < 0 or nodes[-1] >= n_rows):
        raise DomainError(f"edge {tuple(nodes)} indexes outside the feature matrix ({n_rows} rows)")
    return nodes


def edge_smoothness_ev(edge: Iterable[int], x_nodes, x_edge) -> float:
    """Sum of squared L2 distances from the edge feature to each member node."""
    xv = as_features(x_nodes, name="node features")
    xe = np.asarray(x_edge, dtype=float).reshape(-1)
    if xe.shape[0] != xv.shape[1]:
        raise DomainError(
            f"edge feature dimension {xe.shape[0]} != node feature dimension {xv.shape[1]}"
        )
    nodes = _edge_nodes(edge, xv.shape[0])
    if not nodes:
        raise DomainError("edge must contain at least one node")
    diff = xv[nodes] - xe[None, :]
    return float(np.sum(diff * diff))


def smoothness_ev(h: Hypergraph, x_nodes, x_edges) -> tuple[float, SmoothnessVector]:
    """Total and per-edge ev smoothness of a hypergraph.

    ``x_edges`` carries one feature row per hyperedge, aligned with edge
    order. The total equals the L1 norm of the per-edge vector.
    """
    xv = as_features(x_nodes, name="node features")
    xe = as_features(x_edges, name="edge features")
    if xe.shape[0] != h.m:
        raise DomainError(f"edge feature rows {xe.shape[0]} != edge count {h.m}")
    if xe.shape[1] != xv.shape[1]:
        raise DomainError(
            f"edge feature dimension {xe.shape[1]} != node feature dimension {xv.shape[1]}"
        )
    values = np.array(
        [edge_smoothness_ev(edge, xv, xe[i]) for i, edge in enumerate(h.edges)]
    )
    s = SmoothnessVector(values=values, kind="ev")
    return s.total, s


def edge_smoothness_v(edge: Iterable[int], x_nodes) -> float:
    """Largest squared pairwise L2 distance among an edge's nodes."""
    return variant_edge_smoothness(edge, x_nodes, SmoothnessVariant("max"))


def smoothness_v(h: Hypergraph, x_nodes) -> tuple[float, SmoothnessVector]:
    """Total and per-edge v smoothness (max-pairwise measure, node features only)."""
    xv = as_features(x_nodes, name="node features")
    values = np.array([edge_smoothness_v(edge, xv) for edge in h.edges])
    s = SmoothnessVector(values=values, kind="v")
    return s.total, s


def weighted_smoothness_ev(w, candidates: Hypergraph, x_nodes, x_edges) -> float:
    """Probability-weighted ev smoothness: dot(w, per-edge ev values)."""
    weights = np.asarray(w, dtype=float).reshape(-1)
    if weights.shape[0] != candidates.m:
        raise DomainError(f"got {weights.shape[0]} weights for {candidates.m} edges")
    if np.any(weights < 0.0) or np.any(weights > 1.0):
        raise DomainError("weights must lie in [0, 1]")
    _, s = smoothness_ev(candidates, x_nodes, x_edges)
    return float(weights @ s.values)


def inference_objective(w, s_prime: SmoothnessVector) -> float:
    """Convex objective over probabilities: w.s' - sum(log w) + ||w||_1.

    The log barrier keeps every probability strictly positive and the L1
    term penalises dense structures. Natural logarithm, so the coordinate
    minimum sits at w_i = 1 / (s'_i + 1).
    """
    if s_prime.kind != "v":
        raise DomainError(f"objective needs a 'v' smoothness vector, got {s_prime.kind!r}")
    weights = np.asarray(w, dtype=float).reshape(-1)
    if weights.shape[0] != s_prime.values.shape[0]:
        raise DomainError(
            f"got {weights.shape[0]} weights for {s_prime.values.shape[0]} scores"
        )
    if np.any(weights <= 0.0):
        raise DomainError("probabilities must be strictly positive")
    if np.any(weights > 1.0):
        raise DomainError("probabilities must lie in (0, 1]")
    return float(
        weights @ s_prime.values - np.sum(np.log(weights)) + np.sum(weights)
    )


def variant_edge_smoothness(edge: Iterable[int], x_nodes, variant: SmoothnessVariant) -> float:
    """Score one edge by the variant's pairwise statistic on squared L2 distances."""
    xv = as_features(x_nodes, name="node features")
    nodes = _edge_nodes(edge, xv.shape[0])
    if len(nodes) < 2:
        raise DomainError(f"edge {tuple(nodes)} too small to score (need >= 2 nodes)")
    x = xv[nodes]
    diff = x[:, None, :] - x[None, :, :]
    sq = np.sum(diff * diff, axis=-1)
    iu = np.triu_indices(len(nodes), k=1)
    pair_dists = sq[iu]
    if variant.kind == "max":
        return float(np.max(pair_dists))
    if variant.kind == "mean":
        return float(np.mean(pair_dists))
    if variant.kind == "min":
        return float(np.min(pair_dists))
    rng = np.random.default_rng([variant.seed, *nodes])
    return float(pair_dists[rng.integers(pair_dists.shape[0])])


def pairwise_sq_dists(x_nodes) -> np.ndarray:
    """Full n x n squared-distance matrix (Gram trick, clipped at zero)."""
    xv = as_features(x_nodes, name="node features")
    sq_norms = np.sum(xv * xv, axis=1)
    d = sq_norms[:, None] + sq_norms[None, :] - 2.0 * (xv @ xv.T)
    np.clip(d, 0.0, None, out=d)
    np.fill_diagonal(d, 0.0)
    return d
