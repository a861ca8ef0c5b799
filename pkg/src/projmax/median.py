"""Geometric 1-median via Weiszfeld iteration, with the standard fix for
iterates that land on a data point."""

from __future__ import annotations

import numpy as np

from .dataset import PointSet


def median_cost(ps: PointSet, c: np.ndarray) -> float:
    """Sum of distances from c to every point."""
    c = np.asarray(c, dtype=np.float64)
    if c.shape != (ps.d,):
        raise ValueError(f"center must have shape ({ps.d},), got {c.shape}")
    if not np.all(np.isfinite(c)):
        raise ValueError("center must be finite")
    return float(np.linalg.norm(ps.coords - c, axis=1).sum())


def weiszfeld_iterates(ps: PointSet, tol: float = 1e-10, max_iter: int = 10_000):
    """Yield successive Weiszfeld iterates starting from the coordinate mean.

    When an iterate falls within ``tol`` of a data point, the singular term is
    removed and the update shifted along the subgradient; if the remaining
    pull is weaker than the coinciding points' weight, that data point is
    optimal and iteration stops there.
    """
    if not tol > 0:
        raise ValueError(f"tol must be positive, got {tol}")
    X = ps.coords
    y = X.mean(axis=0)
    yield y.copy()
    for _ in range(max_iter):
        dists = np.linalg.norm(X - y, axis=1)
        close = dists < tol
        if not close.any():
            w = 1.0 / dists
            y_new = (X * w[:, None]).sum(axis=0) / w.sum()
        else:
            m = float(close.sum())
            far = ~close
            if not far.any():
                return  # every point coincides with the iterate
            w = 1.0 / dists[far]
            pull = ((X[far] - y) * w[:, None]).sum(axis=0)
            r = float(np.linalg.norm(pull))
            if r <= m:
                return  # the data point itself is the minimizer
            t_step = (X[far] * w[:, None]).sum(axis=0) / w.sum()
            y_new = (1.0 - m / r) * t_step + (m / r) * y
        step = float(np.linalg.norm(y_new - y))
        y = y_new
        yield y.copy()
        if step < tol:
            return


def geometric_median(
    ps: PointSet, tol: float = 1e-10, max_iter: int = 10_000
) -> tuple[np.ndarray, float]:
    """Approximate 1-median and its cost.

    Runs Weiszfeld until successive iterates move less than ``tol`` or the
    iteration budget runs out; the cost is non-increasing along the way.
    """
    y = None
    for y in weiszfeld_iterates(ps, tol=tol, max_iter=max_iter):
        pass
    return y, median_cost(ps, y)
