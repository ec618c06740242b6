"""Task dataset construction: split protocols for NC, LP, and GPP samples."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .errors import SplitInfeasible
from .generators import GeneratorConfig, count_tailed_triangles, sample_er_graph
from .graphs import AttributedGraph

NC_NODES_PER_CLASS = 5  # per split, train and tune each
LP_TUNE_FRACTION = 0.1
LP_TEST_FRACTION = 0.1
GPP_TUNE_FRACTION = 0.2


@dataclass(frozen=True, eq=False)
class NodeTask:
    """One graph with disjoint train/tune node sets; test is the remainder."""

    graph: AttributedGraph
    train_nodes: np.ndarray
    tune_nodes: np.ndarray
    test_nodes: np.ndarray

    task = "NC"

    @property
    def num_classes(self) -> int:
        return int(self.graph.labels.max()) + 1


@dataclass(frozen=True, eq=False)
class LinkTask:
    """One graph with an 80/10/10 edge partition plus sampled non-edges.

    Message passing and heuristic scoring must only ever see train_graph.
    """

    graph: AttributedGraph
    train_edges: np.ndarray
    tune_edges: np.ndarray
    test_edges: np.ndarray
    tune_neg: np.ndarray
    test_neg: np.ndarray

    task = "LP"

    @cached_property
    def train_graph(self) -> AttributedGraph:
        return AttributedGraph(
            num_nodes=self.graph.num_nodes,
            edges=self.train_edges,
            features=self.graph.features,
            labels=self.graph.labels,
        )


@dataclass(frozen=True, eq=False)
class GraphTask:
    """A list of small graphs with motif-count targets, split by graph index."""

    graphs: tuple
    targets: np.ndarray
    train_graphs: np.ndarray
    tune_graphs: np.ndarray
    test_graphs: np.ndarray

    task = "GPP"

    def batch(self, indices: np.ndarray) -> "GraphBatch":
        return GraphBatch.from_graphs([self.graphs[i] for i in indices])


@dataclass(frozen=True, eq=False)
class GraphBatch:
    """Disjoint union of graphs, for one full-batch pass over a split."""

    features: np.ndarray
    edges: np.ndarray
    segments: np.ndarray  # node -> graph position within the batch
    num_graphs: int
    num_nodes: int

    @classmethod
    def from_graphs(cls, graphs) -> "GraphBatch":
        offsets = np.cumsum([0] + [g.num_nodes for g in graphs])
        edges = [g.edges + offsets[i] for i, g in enumerate(graphs) if g.num_edges]
        return cls(
            features=np.concatenate([g.features for g in graphs], axis=0),
            edges=np.concatenate(edges, axis=0) if edges else np.empty((0, 2), dtype=np.int64),
            segments=np.repeat(np.arange(len(graphs)), [g.num_nodes for g in graphs]),
            num_graphs=len(graphs),
            num_nodes=int(offsets[-1]),
        )


def make_nc_dataset(g: AttributedGraph, rng: np.random.Generator) -> NodeTask:
    """Uniform 5-per-class train and tune samples; every class needs >= 10 nodes."""
    if g.labels is None or g.features is None:
        raise SplitInfeasible("node classification needs labels and features")
    k = int(g.labels.max()) + 1
    train, tune = [], []
    for c in range(k):
        members = np.flatnonzero(g.labels == c)
        if len(members) < 2 * NC_NODES_PER_CLASS:
            raise SplitInfeasible(f"class {c} has {len(members)} < {2 * NC_NODES_PER_CLASS} nodes")
        picked = rng.choice(members, size=2 * NC_NODES_PER_CLASS, replace=False)
        train.append(picked[:NC_NODES_PER_CLASS])
        tune.append(picked[NC_NODES_PER_CLASS:])
    train = np.sort(np.concatenate(train))
    tune = np.sort(np.concatenate(tune))
    held = np.zeros(g.num_nodes, dtype=bool)
    held[train] = True
    held[tune] = True
    return NodeTask(graph=g, train_nodes=train, tune_nodes=tune, test_nodes=np.flatnonzero(~held))


def _all_non_edges(g: AttributedGraph) -> np.ndarray:
    adj = np.zeros((g.num_nodes, g.num_nodes), dtype=bool)
    if g.num_edges:
        adj[g.edges[:, 0], g.edges[:, 1]] = True
    iu = np.triu_indices(g.num_nodes, k=1)
    free = ~adj[iu]
    return np.stack([iu[0][free], iu[1][free]], axis=1)


def make_lp_dataset(g: AttributedGraph, rng: np.random.Generator) -> LinkTask:
    """80/10/10 edge partition with matched numbers of sampled non-edges.

    Tune/test sizes are floors of the fractions; the remainder stays in train.
    Negatives are drawn uniformly without replacement from the non-edges of
    the full graph (quadratic enumeration; fine at benchmark graph sizes).
    """
    m = g.num_edges
    if m < 10:
        raise SplitInfeasible(f"link prediction needs >= 10 edges, got {m}")
    n_tune = int(LP_TUNE_FRACTION * m)
    n_test = int(LP_TEST_FRACTION * m)
    perm = rng.permutation(m)
    tune_edges = g.edges[perm[:n_tune]]
    test_edges = g.edges[perm[n_tune : n_tune + n_test]]
    train_edges = g.edges[perm[n_tune + n_test :]]
    non_edges = _all_non_edges(g)
    if len(non_edges) < n_tune + n_test:
        raise SplitInfeasible("not enough non-edges to sample negatives")
    picked = rng.choice(len(non_edges), size=n_tune + n_test, replace=False)
    return LinkTask(
        graph=g,
        train_edges=train_edges,
        tune_edges=tune_edges,
        test_edges=test_edges,
        tune_neg=non_edges[picked[:n_tune]],
        test_neg=non_edges[picked[n_tune:]],
    )


def make_gpp_dataset(cfg: GeneratorConfig, rng: np.random.Generator) -> GraphTask:
    """Sample a collection of ER graphs with tailed-triangle count targets."""
    ngraphs = int(cfg["ngraphs"])
    graphs = tuple(
        sample_er_graph(int(cfg["num_vertices"]), float(cfg["edge_prob"]), rng)
        for _ in range(ngraphs)
    )
    targets = np.array([count_tailed_triangles(g) for g in graphs], dtype=np.float64)
    n_train = int(float(cfg["train_prob"]) * ngraphs + 0.5)
    n_tune = int(GPP_TUNE_FRACTION * ngraphs + 0.5)
    perm = rng.permutation(ngraphs)
    return GraphTask(
        graphs=graphs,
        targets=targets,
        train_graphs=np.sort(perm[:n_train]),
        tune_graphs=np.sort(perm[n_train : n_train + n_tune]),
        test_graphs=np.sort(perm[n_train + n_tune :]),
    )
