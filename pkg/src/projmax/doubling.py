"""Greedy nets and a practical doubling-dimension estimator.

The estimate is the local covering-count form: across dyadic scales anchored
at the diameter, the worst log2 of how many half-scale net points fall inside
one net point's ball.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .dataset import PointSet, distance_matrix
from .spanning_coverage import Selection

MAX_SCALES = 40


@dataclass(frozen=True)
class DoublingEstimate:
    lambda_hat: float
    per_scale: tuple[tuple[float, int], ...]  # (radius, max local covering count)


def _net_from_matrix(D: np.ndarray, r: float) -> list[int]:
    n = D.shape[0]
    net: list[int] = []
    mind = np.full(n, np.inf)
    for i in range(n):
        if mind[i] > r:
            net.append(i)
            mind = np.minimum(mind, D[i])
    return net


def greedy_net(ps: PointSet, r: float) -> Selection:
    """Greedy r-net: scan indices in order, keeping points farther than r
    from everything kept so far. The result is both an r-packing and an
    r-covering."""
    if not r > 0:
        raise ValueError(f"net radius must be positive, got {r}")
    return Selection(tuple(_net_from_matrix(distance_matrix(ps), r)))


def estimate_doubling_dim(ps: PointSet) -> DoublingEstimate:
    """Estimate the doubling dimension from dyadic-scale net counts.

    Scales run from the diameter down to the smallest positive pairwise
    distance (at most 40). At each scale r the estimate counts, for every
    r-net point, the r/2-net points within distance r of it; lambda_hat is
    the max log2 of those counts.
    """
    if ps.n < 2:
        raise ValueError("estimator needs n >= 2")
    D = distance_matrix(ps)
    positive = D[D > 0]
    if positive.size == 0:
        raise ValueError("all points coincide; no positive distance")
    dmax = float(D.max())
    dmin = float(positive.min())

    per_scale = []
    best = 1
    r = dmax
    for _ in range(MAX_SCALES):
        if r < dmin:
            break
        net = _net_from_matrix(D, r)
        half = _net_from_matrix(D, r / 2.0)
        block = D[np.ix_(net, half)]
        count = int((block <= r).sum(axis=1).max())
        per_scale.append((r, count))
        best = max(best, count)
        r /= 2.0
    lam = math.log2(best)
    return DoublingEstimate(lambda_hat=lam, per_scale=tuple(per_scale))
