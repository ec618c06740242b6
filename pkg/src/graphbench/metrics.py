"""Evaluation metrics: rank-based ROC-AUC (binary and one-vs-rest) and scaled MSE."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.stats import rankdata

from .errors import DegenerateLabels, DegenerateTargets

AUC = "auc"
AUC_OVR = "auc_ovr"
SCALED_MSE = "scaled_mse"

TASK_METRIC = {"NC": AUC_OVR, "LP": AUC, "GPP": SCALED_MSE}


@dataclass(frozen=True)
class MetricValue:
    metric: str
    value: float


def lower_is_better(metric: str) -> bool:
    return metric == SCALED_MSE


def roc_auc(scores, labels) -> float:
    """P(random positive outscores random negative), ties counting 1/2.

    Mann-Whitney formulation via midranks, so the result is exact and
    invariant under strictly increasing transforms of the scores.
    """
    scores = np.asarray(scores, dtype=np.float64)
    labels = np.asarray(labels).astype(bool)
    n_pos = int(labels.sum())
    n_neg = int(len(labels) - n_pos)
    if n_pos == 0 or n_neg == 0:
        raise DegenerateLabels("need at least one positive and one negative")
    ranks = rankdata(scores, method="average")
    rank_sum = float(ranks[labels].sum())
    return (rank_sum - n_pos * (n_pos + 1) / 2.0) / (n_pos * n_neg)


def roc_auc_ovr(class_scores, labels) -> float:
    """Unweighted mean of per-class one-vs-rest AUCs.

    Classes without both positives and negatives in the evaluated set are
    skipped; if no class qualifies the metric is undefined.
    """
    class_scores = np.asarray(class_scores, dtype=np.float64)
    labels = np.asarray(labels, dtype=np.int64)
    if class_scores.ndim != 2 or class_scores.shape[1] < 2:
        raise DegenerateLabels("need score columns for at least two classes")
    aucs = []
    for c in range(class_scores.shape[1]):
        positives = labels == c
        if positives.any() and not positives.all():
            aucs.append(roc_auc(class_scores[:, c], positives))
    if not aucs:
        raise DegenerateLabels("no class has both positives and negatives")
    return float(np.mean(aucs))


def scaled_mse(preds, targets) -> float:
    """sum (y - yhat)^2 / sum (y - ybar)^2, with ybar the evaluated-set mean.

    The constant mean predictor scores exactly 1.0 by construction.
    """
    preds = np.asarray(preds, dtype=np.float64)
    targets = np.asarray(targets, dtype=np.float64)
    if targets.size < 2:
        raise DegenerateTargets("need at least two targets")
    denom = float(np.sum((targets - targets.mean()) ** 2))
    if denom == 0.0:
        raise DegenerateTargets("targets are constant")
    return float(np.sum((targets - preds) ** 2)) / denom
