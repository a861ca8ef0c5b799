"""Maximum spanning tree, max k-coverage, and the general subset-selection
objective sum_p f(distances from p to the selected points)."""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations

import numpy as np
from scipy.spatial.distance import cdist

from .dataset import CACHE_LIMIT, PointSet, distance_matrix

EXACT_SUBSET_BUDGET = 10**6


@dataclass(frozen=True)
class EdgeSet:
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        object.__setattr__(
            self,
            "edges",
            tuple((int(min(a, b)), int(max(a, b))) for a, b in self.edges),
        )


@dataclass(frozen=True)
class Selection:
    """Distinct point indices; order records the pick sequence when greedy."""

    indices: tuple[int, ...]

    def __post_init__(self):
        idx = tuple(int(i) for i in self.indices)
        if len(set(idx)) != len(idx):
            raise ValueError("selection indices must be distinct")
        if any(i < 0 for i in idx):
            raise ValueError("selection indices must be nonnegative")
        object.__setattr__(self, "indices", idx)

    @property
    def k(self) -> int:
        return len(self.indices)


@dataclass(frozen=True)
class FSpec:
    """Aggregation function applied to each point's distance vector.

    Kinds: ``linf`` (largest distance, the k-coverage objective), ``lp`` with
    parameter p >= 1, ``sum``, and ``median`` (mean of the two middle order
    statistics for even length, which keeps it 1-Lipschitz in the sup norm).
    """

    kind: str
    p: float | None = None

    def __post_init__(self):
        if self.kind not in ("linf", "lp", "sum", "median"):
            raise ValueError(f"unknown f kind {self.kind!r}")
        if self.kind == "lp":
            if self.p is None or not (self.p >= 1.0):
                raise ValueError("lp needs p >= 1")
            if math.isinf(self.p):
                object.__setattr__(self, "kind", "linf")
                object.__setattr__(self, "p", None)

    def lipschitz_bound(self, k: int) -> float:
        """Sup-norm Lipschitz constant of f on R^k."""
        if self.kind in ("linf", "median"):
            return 1.0
        if self.kind == "sum":
            return float(k)
        return float(k) ** (1.0 / self.p)

    def rows(self, dists: np.ndarray) -> np.ndarray:
        """Apply f to each row of an (n, k) distance array."""
        if self.kind == "linf":
            return dists.max(axis=1)
        if self.kind == "sum":
            return dists.sum(axis=1)
        if self.kind == "median":
            return np.median(dists, axis=1)
        return (dists**self.p).sum(axis=1) ** (1.0 / self.p)

    @staticmethod
    def parse(text: str) -> "FSpec":
        if text == "linf":
            return FSpec("linf")
        if text in ("sum", "median"):
            return FSpec(text)
        if text.startswith("lp:"):
            return FSpec("lp", p=float(text[3:]))
        raise ValueError(f"cannot parse f spec {text!r}")


def max_spanning_tree(ps: PointSet) -> tuple[EdgeSet, float]:
    """Maximum-weight spanning tree of the complete distance graph (Prim).

    Ties between equally heavy candidate edges break toward the
    lexicographically smallest edge.
    """
    n = ps.n
    if n < 2:
        raise ValueError(f"spanning tree needs n >= 2, got {n}")
    D = distance_matrix(ps)
    in_tree = np.zeros(n, dtype=bool)
    in_tree[0] = True
    key = D[0].copy()
    parent = np.zeros(n, dtype=int)
    key[0] = -np.inf
    edges = []
    total = 0.0
    for _ in range(n - 1):
        candidates = np.flatnonzero(~in_tree)
        best = candidates[np.argmax(key[candidates])]
        best_key = key[best]
        # resolve ties toward the smallest (min endpoint, max endpoint) edge
        tied = candidates[key[candidates] == best_key]
        if len(tied) > 1:
            best = min(
                tied, key=lambda v: (min(parent[v], v), max(parent[v], v))
            )
        v = int(best)
        edges.append((int(parent[v]), v))
        total += float(D[parent[v], v])
        in_tree[v] = True
        key[v] = -np.inf
        improved = D[v] > key
        improved &= ~in_tree
        parent[improved] = v
        key[improved] = D[v][improved]
    return EdgeSet(tuple(edges)), total


def spanning_tree_value(ps: PointSet, es: EdgeSet) -> float:
    """Total edge length; validates that the edges form a spanning tree."""
    n = ps.n
    if len(es.edges) != n - 1:
        raise ValueError(f"spanning tree needs {n - 1} edges, got {len(es.edges)}")
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    total = 0.0
    for a, b in es.edges:
        if b >= n:
            raise ValueError(f"edge ({a}, {b}) out of range for n={n}")
        ra, rb = find(a), find(b)
        if ra == rb:
            raise ValueError(f"edge ({a}, {b}) closes a cycle")
        parent[ra] = rb
        total += float(np.linalg.norm(ps.coords[a] - ps.coords[b]))
    return total


def _selection_columns(ps: PointSet, indices) -> np.ndarray:
    return cdist(ps.coords, ps.coords[list(indices)])


def k_coverage_value(ps: PointSet, sel: Selection) -> float:
    """Sum over all points of the distance to their farthest selected point."""
    if sel.k == 0:
        raise ValueError("selection must be nonempty")
    if max(sel.indices) >= ps.n:
        raise ValueError("selection index out of range")
    return float(_selection_columns(ps, sel.indices).max(axis=1).sum())


def large_opt_value(ps: PointSet, sel: Selection, f: FSpec) -> float:
    """Sum over all points of f applied to the vector of distances to the
    selection, in selection order."""
    if sel.k == 0:
        raise ValueError("selection must be nonempty")
    if max(sel.indices) >= ps.n:
        raise ValueError("selection index out of range")
    return float(f.rows(_selection_columns(ps, sel.indices)).sum())


def _check_subset_budget(n: int, k: int) -> None:
    if math.comb(n, k) > EXACT_SUBSET_BUDGET:
        raise ValueError(
            f"exact selection over C({n},{k}) subsets exceeds the {EXACT_SUBSET_BUDGET} budget"
        )


def _exact_select(ps: PointSet, k: int, objective) -> tuple[Selection, float]:
    _check_subset_budget(ps.n, k)
    best_val = -np.inf
    best = None
    for subset in combinations(range(ps.n), k):
        val = objective(subset)
        if val > best_val:
            best_val = val
            best = subset
    return Selection(best), float(best_val)


def k_coverage_select(ps: PointSet, k: int, mode: str = "greedy") -> tuple[Selection, float]:
    """Pick k points maximizing coverage value.

    ``exact`` enumerates subsets within the budget; ``greedy`` adds the point
    that raises the coverage the most, ties to the smallest index. Greedy
    keeps per-point running maxima so each step is one distance column per
    candidate.
    """
    return large_opt_select(ps, k, FSpec("linf"), mode)


def large_opt_select(
    ps: PointSet, k: int, f: FSpec, mode: str = "greedy"
) -> tuple[Selection, float]:
    n = ps.n
    if not 1 <= k <= n:
        raise ValueError(f"k={k} out of range for n={n}")
    if mode == "exact":
        if n <= CACHE_LIMIT:
            D = distance_matrix(ps)
            return _exact_select(ps, k, lambda s: float(f.rows(D[:, s]).sum()))
        return _exact_select(
            ps, k, lambda s: float(f.rows(_selection_columns(ps, s)).sum())
        )
    if mode != "greedy":
        raise ValueError(f"unknown mode {mode!r}")

    D = distance_matrix(ps) if n <= CACHE_LIMIT else None

    def column(i: int) -> np.ndarray:
        if D is not None:
            return D[:, i]
        return cdist(ps.coords, ps.coords[i : i + 1]).ravel()

    picked: list[int] = []
    if f.kind in ("linf", "sum"):
        # incremental: keep each point's running max / running sum over picks
        state = None
        for _ in range(k):
            best_val = -np.inf
            best_i = -1
            best_col = None
            for i in range(n):
                if i in picked:
                    continue
                col = column(i)
                agg = col if state is None else (
                    np.maximum(state, col) if f.kind == "linf" else state + col
                )
                val = float(agg.sum())
                if val > best_val:
                    best_val = val
                    best_i = i
                    best_col = agg
            picked.append(best_i)
            state = best_col
        return Selection(tuple(picked)), float(best_val)

    # median / lp: full recompute per candidate
    best_val = -np.inf
    for _ in range(k):
        best_val = -np.inf
        best_i = -1
        for i in range(n):
            if i in picked:
                continue
            trial = picked + [i]
            cols = (
                D[:, trial] if D is not None else _selection_columns(ps, trial)
            )
            val = float(f.rows(cols).sum())
            if val > best_val:
                best_val = val
                best_i = i
        picked.append(best_i)
    return Selection(tuple(picked)), float(best_val)
