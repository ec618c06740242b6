"""Generator parameter spaces and the random-graph samplers behind each task.

Node-classification and link-prediction samples come from a degree-corrected
stochastic block model with Gaussian node features; graph-property samples are
collections of small Erdos-Renyi graphs labelled with tailed-triangle counts.
All sampling is a pure function of (config, rng), so identical seeds give
bitwise-identical graphs.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ConfigError, GraphError
from .graphs import AttributedGraph

# Canonical parameter order per task; also fixes key order in logs/configs.
SBM_PARAMS = (
    "nvertex",
    "p_q_ratio",
    "avg_degree",
    "feature_center_distance",
    "num_clusters",
    "cluster_size_slope",
    "power_exponent",
)
GPP_PARAMS = ("ngraphs", "num_vertices", "edge_prob", "train_prob")

# Width of the sampled Gaussian features. Not part of the published parameter
# tables, so it rides along as a fixed config entry rather than a sampled axis.
DEFAULT_FEATURE_DIM = 16

GeneratorConfig = dict


@dataclass(frozen=True)
class ParamRange:
    low: float
    high: float
    integer: bool = False

    def __post_init__(self):
        if self.low > self.high:
            raise ConfigError(f"empty interval [{self.low}, {self.high}]")


@dataclass(frozen=True)
class ParamSpace:
    """Per-parameter sampling intervals for one task (NC, LP, or GPP)."""

    task: str
    params: dict

    def __post_init__(self):
        if self.task not in ("NC", "LP", "GPP"):
            raise ConfigError(f"unknown task {self.task!r}")
        required = GPP_PARAMS if self.task == "GPP" else SBM_PARAMS
        allowed = set(required) | ({"feature_dim"} if self.task != "GPP" else set())
        names = set(self.params)
        missing = set(required) - names
        extra = names - allowed
        if missing:
            raise ConfigError(f"param space for {self.task} missing {sorted(missing)}")
        if extra:
            raise ConfigError(f"param space for {self.task} has unknown {sorted(extra)}")

    def names(self) -> tuple:
        order = GPP_PARAMS if self.task == "GPP" else SBM_PARAMS
        if "feature_dim" in self.params:
            order = order + ("feature_dim",)
        return order


def sample_generator_config(space: ParamSpace, rng: np.random.Generator) -> GeneratorConfig:
    """Draw each parameter independently and uniformly over its interval.

    Integer parameters use the uniform integer law with inclusive bounds.
    For SBM tasks, feature_dim defaults to DEFAULT_FEATURE_DIM unless the
    space carries an explicit range for it.
    """
    cfg = {}
    for name in space.names():
        r = space.params[name]
        if r.integer:
            cfg[name] = int(rng.integers(int(r.low), int(r.high) + 1))
        else:
            cfg[name] = float(r.low + (r.high - r.low) * rng.random())
    if space.task != "GPP" and "feature_dim" not in cfg:
        cfg["feature_dim"] = DEFAULT_FEATURE_DIM
    return cfg


def cluster_sizes(n: int, k: int, slope: float) -> np.ndarray:
    """Deterministic apportionment of n nodes over k clusters.

    Size weights are 1 + slope*i for cluster i; integer sizes come from
    largest-remainder apportionment with ties broken toward the higher index.
    Every cluster gets at least one node (extreme slopes are rebalanced from
    the largest clusters), sizes are nondecreasing and sum to n exactly.
    """
    if k < 1 or n < k:
        raise GraphError(f"cannot split {n} nodes into {k} nonempty clusters")
    weights = 1.0 + slope * np.arange(k, dtype=np.float64)
    quota = n * weights / weights.sum()
    sizes = np.floor(quota).astype(np.int64)
    remainder = quota - sizes
    # Stable argsort ascending, take from the back: largest remainders win and
    # equal remainders resolve to the higher index.
    extra = np.argsort(remainder, kind="stable")[::-1][: n - sizes.sum()]
    sizes[extra] += 1
    if np.any(sizes == 0):
        deficit = int(np.sum(sizes == 0))
        sizes[sizes == 0] = 1
        for _ in range(deficit):
            sizes[np.argmax(sizes)] -= 1
        sizes = np.sort(sizes)
    return sizes


def sample_degree_propensities(block_size: int, power_exponent: float, rng: np.random.Generator) -> np.ndarray:
    """Power-law degree propensities, rescaled to mean exactly 1 in the block.

    Raw values are u**(1/a) for u uniform on (0, 1], i.e. density a*x^(a-1)
    on (0, 1]; bounded, so small exponents skew low rather than growing a
    heavy tail.
    """
    if block_size < 1:
        raise GraphError("block must be nonempty")
    if power_exponent <= 0:
        raise GraphError("power exponent must be positive")
    u = 1.0 - rng.random(block_size)  # (0, 1]
    raw = u ** (1.0 / power_exponent)
    return raw / raw.mean()


def derive_edge_probs(cfg: GeneratorConfig, sizes: np.ndarray) -> tuple:
    """Solve for (p, q) hitting the requested ratio and expected average degree.

    With unit-mean propensities, the expected degree of a node in cluster c is
    p*(s_c - 1) + q*(n - s_c); averaging over nodes and substituting p = r*q
    gives q = d*n / sum_c s_c * (r*(s_c - 1) + (n - s_c)).
    """
    r = float(cfg["p_q_ratio"])
    d = float(cfg["avg_degree"])
    n = int(np.sum(sizes))
    sizes = np.asarray(sizes, dtype=np.float64)
    denom = float(np.sum(sizes * (r * (sizes - 1.0) + (n - sizes))))
    if denom <= 0:
        raise GraphError("cannot derive edge probabilities for a single node")
    q = d * n / denom
    return r * q, q


def _bernoulli_block(rng, prob_matrix):
    """Indices of hits in an upper-level Bernoulli matrix draw."""
    draws = rng.random(prob_matrix.shape)
    return np.nonzero(draws < prob_matrix)


def sample_sbm_block_edges(
    sizes: np.ndarray,
    p: float,
    q: float,
    theta: np.ndarray,
    rng: np.random.Generator,
) -> np.ndarray:
    """Sample the edge list of a degree-corrected block model.

    Pair (u, v) is an edge with probability min(1, theta_u*theta_v*B), where B
    is p within a block and q across blocks. Iterates the (at most k*(k+1)/2)
    block pairs with a vectorized Bernoulli draw per pair; node indices are
    ordered cluster 0 first.
    """
    offsets = np.concatenate([[0], np.cumsum(sizes)])
    edge_chunks = []
    k = len(sizes)
    for a in range(k):
        ta = theta[offsets[a] : offsets[a + 1]]
        # Within-block: strict upper triangle of the s_a x s_a pair matrix.
        probs = np.minimum(1.0, p * np.outer(ta, ta))
        iu = np.triu_indices(len(ta), k=1)
        draws = rng.random(len(iu[0]))
        hit = draws < probs[iu]
        if hit.any():
            edge_chunks.append(
                np.stack([offsets[a] + iu[0][hit], offsets[a] + iu[1][hit]], axis=1)
            )
        for b in range(a + 1, k):
            tb = theta[offsets[b] : offsets[b + 1]]
            probs = np.minimum(1.0, q * np.outer(ta, tb))
            rows, cols = _bernoulli_block(rng, probs)
            if len(rows):
                edge_chunks.append(
                    np.stack([offsets[a] + rows, offsets[b] + cols], axis=1)
                )
    if not edge_chunks:
        return np.empty((0, 2), dtype=np.int64)
    return np.concatenate(edge_chunks, axis=0)


def sample_sbm_graph(cfg: GeneratorConfig, rng: np.random.Generator) -> AttributedGraph:
    """Realize a degree-corrected SBM graph; labels are cluster assignments.

    Features are left unset; attach them with sample_features.
    """
    n = int(cfg["nvertex"])
    k = int(cfg["num_clusters"])
    sizes = cluster_sizes(n, k, float(cfg["cluster_size_slope"]))
    labels = np.repeat(np.arange(k, dtype=np.int64), sizes)
    theta = np.concatenate(
        [sample_degree_propensities(int(s), float(cfg["power_exponent"]), rng) for s in sizes]
    )
    p, q = derive_edge_probs(cfg, sizes)
    edges = sample_sbm_block_edges(sizes, p, q, theta, rng)
    return AttributedGraph(num_nodes=n, edges=edges, labels=labels)


def sample_features(
    labels: np.ndarray,
    center_distance: float,
    feature_dim: int,
    rng: np.random.Generator,
) -> tuple:
    """Per-cluster Gaussian features with unit within-cluster covariance.

    Cluster centers are drawn iid from Normal(0, center_distance^2 * I), so
    center_distance is the standard deviation of the center prior and scales
    linearly with typical inter-center distance. Returns (features, centers).
    """
    if center_distance < 0:
        raise GraphError("center distance must be nonnegative")
    labels = np.asarray(labels, dtype=np.int64)
    k = int(labels.max()) + 1
    centers = rng.normal(0.0, 1.0, size=(k, feature_dim)) * center_distance
    features = centers[labels] + rng.normal(0.0, 1.0, size=(len(labels), feature_dim))
    return features, centers


def attach_features(g: AttributedGraph, cfg: GeneratorConfig, rng: np.random.Generator) -> AttributedGraph:
    feats, _ = sample_features(
        g.labels, float(cfg["feature_center_distance"]), int(cfg.get("feature_dim", DEFAULT_FEATURE_DIM)), rng
    )
    return AttributedGraph(num_nodes=g.num_nodes, edges=g.edges, features=feats, labels=g.labels)


def sample_er_graph(num_vertices: int, edge_prob: float, rng: np.random.Generator) -> AttributedGraph:
    """Erdos-Renyi graph with a dummy unit one-dimensional feature per node."""
    if not 0.0 <= edge_prob <= 1.0:
        raise GraphError("edge probability must be in [0, 1]")
    n = int(num_vertices)
    iu = np.triu_indices(n, k=1)
    hit = rng.random(len(iu[0])) < edge_prob
    edges = np.stack([iu[0][hit], iu[1][hit]], axis=1)
    return AttributedGraph(num_nodes=n, edges=edges, features=np.ones((n, 1)))


def count_tailed_triangles(g: AttributedGraph) -> int:
    """Non-induced tailed triangles: a triangle plus an edge to a fourth node.

    Every vertex v of a triangle contributes deg(v) - 2 tails, since exactly
    its two triangle partners are excluded, so the total is
    sum_v triangles(v) * (deg(v) - 2).
    """
    deg = g.degrees
    tri = g.triangles_per_node
    return int(np.sum(tri * np.maximum(deg - 2, 0)))
