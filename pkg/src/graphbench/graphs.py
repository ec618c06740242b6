"""Undirected attributed graphs and the structural statistics logged per run."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .errors import GraphError


@dataclass(frozen=True, eq=False)
class AttributedGraph:
    """Immutable undirected simple graph with optional features and labels.

    Edges are canonicalized on construction: each row is an unordered pair
    stored as (u, v) with u < v, rows sorted lexicographically, duplicates
    rejected. ``features`` is a float array of shape (num_nodes, d_feat),
    ``labels`` an int array of shape (num_nodes,); either may be None
    (motif-count graphs carry a dummy feature and no labels).

    Instances are treated as read-only and are safe to share across worker
    processes; all statistics below are pure functions of the graph.
    """

    num_nodes: int
    edges: np.ndarray
    features: np.ndarray | None = None
    labels: np.ndarray | None = None

    def __post_init__(self):
        if self.num_nodes < 1:
            raise GraphError("graph needs at least one node")
        edges = np.asarray(self.edges, dtype=np.int64).reshape(-1, 2)
        if edges.size:
            if edges.min() < 0 or edges.max() >= self.num_nodes:
                raise GraphError("edge endpoint out of range")
            if np.any(edges[:, 0] == edges[:, 1]):
                raise GraphError("self-loops are not allowed")
            lo = np.minimum(edges[:, 0], edges[:, 1])
            hi = np.maximum(edges[:, 0], edges[:, 1])
            edges = np.stack([lo, hi], axis=1)
            order = np.lexsort((edges[:, 1], edges[:, 0]))
            edges = edges[order]
            if edges.shape[0] > 1 and np.any(np.all(edges[1:] == edges[:-1], axis=1)):
                raise GraphError("duplicate edge")
        object.__setattr__(self, "edges", edges)
        if self.features is not None:
            feats = np.asarray(self.features, dtype=np.float64)
            if feats.ndim != 2 or feats.shape[0] != self.num_nodes:
                raise GraphError("features must be (num_nodes, d_feat)")
            object.__setattr__(self, "features", feats)
        if self.labels is not None:
            labels = np.asarray(self.labels, dtype=np.int64)
            if labels.shape != (self.num_nodes,):
                raise GraphError("labels must be (num_nodes,)")
            object.__setattr__(self, "labels", labels)

    @property
    def num_edges(self) -> int:
        return int(self.edges.shape[0])

    @cached_property
    def degrees(self) -> np.ndarray:
        deg = np.zeros(self.num_nodes, dtype=np.int64)
        if self.edges.size:
            np.add.at(deg, self.edges[:, 0], 1)
            np.add.at(deg, self.edges[:, 1], 1)
        return deg

    @cached_property
    def neighbor_sets(self) -> list[set]:
        nbrs = [set() for _ in range(self.num_nodes)]
        for u, v in self.edges:
            nbrs[u].add(int(v))
            nbrs[v].add(int(u))
        return nbrs

    @cached_property
    def triangles_per_node(self) -> np.ndarray:
        """Number of triangles through each node, by edge-wise intersection."""
        tri = np.zeros(self.num_nodes, dtype=np.int64)
        nbrs = self.neighbor_sets
        # Each triangle {a,b,c} is credited to c exactly once: when the edge
        # (a,b) is processed and c shows up in N(a) & N(b).
        for u, v in self.edges:
            for w in nbrs[u] & nbrs[v]:
                tri[w] += 1
        return tri

    def to_json_dict(self) -> dict:
        """One-object-per-graph dump format."""
        return {
            "num_nodes": self.num_nodes,
            "edges": [[int(u), int(v)] for u, v in self.edges],
            "features": None if self.features is None else self.features.tolist(),
            "labels": None if self.labels is None else self.labels.tolist(),
        }

    @classmethod
    def from_json_dict(cls, obj: dict) -> "AttributedGraph":
        return cls(
            num_nodes=int(obj["num_nodes"]),
            edges=np.asarray(obj["edges"], dtype=np.int64).reshape(-1, 2),
            features=None if obj.get("features") is None else np.asarray(obj["features"], dtype=np.float64),
            labels=None if obj.get("labels") is None else np.asarray(obj["labels"], dtype=np.int64),
        )


def average_degree(g: AttributedGraph) -> float:
    """2m/n."""
    return 2.0 * g.num_edges / g.num_nodes


def edge_homogeneity(g: AttributedGraph) -> float:
    """Fraction of edges whose endpoints share a label."""
    if g.num_edges == 0:
        raise GraphError("edge homogeneity undefined on an edgeless graph")
    if g.labels is None:
        raise GraphError("edge homogeneity needs labels")
    same = g.labels[g.edges[:, 0]] == g.labels[g.edges[:, 1]]
    return float(np.mean(same))


def degree_gini(g: AttributedGraph) -> float:
    """Gini coefficient of the degree sequence: sum_ij |d_i - d_j| / (2 n^2 dbar).

    Plain population formula, no small-sample correction. Computed from the
    sorted sequence so it stays O(n log n).
    """
    deg = np.sort(g.degrees).astype(np.float64)
    total = deg.sum()
    if total == 0:
        raise GraphError("degree Gini undefined when all degrees are zero")
    n = g.num_nodes
    # sum_ij |d_i - d_j| = 2 * sum_i (2i - n + 1) * d_(i) for ascending sort.
    i = np.arange(n, dtype=np.float64)
    abs_diff_sum = 2.0 * np.sum((2.0 * i - n + 1.0) * deg)
    return float(abs_diff_sum / (2.0 * n * total))


def avg_clustering_coefficient(g: AttributedGraph) -> float:
    """Mean over nodes of local clustering; degree < 2 contributes 0."""
    deg = g.degrees.astype(np.float64)
    tri = g.triangles_per_node.astype(np.float64)
    pairs = deg * (deg - 1.0) / 2.0
    local = np.zeros(g.num_nodes)
    mask = pairs > 0
    local[mask] = tri[mask] / pairs[mask]
    return float(local.mean())


def graph_statistics(g: AttributedGraph) -> dict:
    """The four statistics attached to every result record.

    Values that are undefined for the graph at hand (homogeneity without
    labels or edges, Gini with no edges) are reported as None rather than
    raised, since record logging must not fail on degenerate samples.
    """
    stats = {"average_degree": average_degree(g)}
    try:
        stats["edge_homogeneity"] = edge_homogeneity(g)
    except GraphError:
        stats["edge_homogeneity"] = None
    try:
        stats["degree_gini"] = degree_gini(g)
    except GraphError:
        stats["degree_gini"] = None
    stats["avg_clustering"] = avg_clustering_coefficient(g)
    return stats
