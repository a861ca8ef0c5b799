"""Remote-subgraph diversity measures, subset selection, and k-center machinery."""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations

import numpy as np
from scipy.spatial.distance import cdist

from .dataset import CACHE_LIMIT, PointSet, diameter_pair, distance_matrix
from .matching import _max_weight_perfect_matching
from .spanning_coverage import EXACT_SUBSET_BUDGET, Selection
from .tours import _greedy_cycle, _held_karp_max_cycle

REMOTE_MEASURES = ("edge", "clique", "tree", "star", "cycle", "matching", "pseudoforest")

# caps on the exact inner solvers used by remote-cycle / remote-matching
CYCLE_EXACT_CAP = 14
MATCHING_EXACT_CAP = 20


@dataclass(frozen=True)
class KCenterResult:
    centers: Selection
    radius: float
    assignment: tuple[int, ...]  # each point's nearest center, as a point index


def measure_edge_count(measure: str, k: int) -> int:
    """Number of edges in the subgraph a measure scores on a size-k set."""
    return {
        "edge": 1,
        "clique": k * (k - 1) // 2,
        "tree": k - 1,
        "star": k - 1,
        "cycle": k,
        "matching": k // 2,
        "pseudoforest": k,
    }[measure]


def _check_arity(measure: str, k: int) -> None:
    if measure not in REMOTE_MEASURES:
        raise ValueError(f"unknown measure {measure!r}")
    if measure == "cycle":
        if k < 3:
            raise ValueError("remote-cycle needs |S| >= 3")
    elif measure == "matching":
        if k < 2 or k % 2:
            raise ValueError("remote-matching needs even |S| >= 2")
    elif k < 2:
        raise ValueError(f"remote-{measure} needs |S| >= 2")


def _min_spanning_value(D: np.ndarray) -> float:
    n = D.shape[0]
    in_tree = np.zeros(n, dtype=bool)
    in_tree[0] = True
    key = D[0].copy()
    key[0] = np.inf
    total = 0.0
    for _ in range(n - 1):
        v = int(np.argmin(np.where(in_tree, np.inf, key)))
        total += float(key[v])
        in_tree[v] = True
        key = np.minimum(key, D[v])
    return total


def _min_matching_value(D: np.ndarray) -> tuple[float, bool]:
    """Min-weight matching covering all points (even size) or all but one
    (odd size, used only as a greedy-step objective). Returns (value, exact)."""
    n = D.shape[0]
    if n == 1:
        return 0.0, True
    if n % 2 == 0:
        if n <= MATCHING_EXACT_CAP:
            _, neg = _max_weight_perfect_matching((-D).tolist())
            return -neg, True
        return _greedy_min_matching(D), False
    best = np.inf
    for skip in range(n):
        keep = [i for i in range(n) if i != skip]
        sub = D[np.ix_(keep, keep)]
        val, _ = _min_matching_value(sub)
        best = min(best, val)
    return float(best), n - 1 <= MATCHING_EXACT_CAP


def _greedy_min_matching(D: np.ndarray) -> float:
    n = D.shape[0]
    ii, jj = np.triu_indices(n, k=1)
    order = np.lexsort((jj, ii, D[ii, jj]))
    used = np.zeros(n, dtype=bool)
    total = 0.0
    taken = 0
    for idx in order:
        a, b = int(ii[idx]), int(jj[idx])
        if not used[a] and not used[b]:
            used[a] = used[b] = True
            total += float(D[a, b])
            taken += 1
            if taken == n // 2:
                break
    return total


def _min_cycle_value(D: np.ndarray) -> tuple[float, bool]:
    n = D.shape[0]
    if n == 1:
        return 0.0, True
    if n == 2:
        return 2.0 * float(D[0, 1]), True  # out-and-back degenerate cycle
    if n <= CYCLE_EXACT_CAP:
        _, neg = _held_karp_max_cycle((-D).tolist())
        return -neg, True
    order = _greedy_cycle((-D).tolist())
    total = float(sum(D[order[i], order[(i + 1) % n]] for i in range(n)))
    return total, False


def _subset_value(D: np.ndarray, measure: str) -> tuple[float, bool]:
    """Measure value on the point subset whose distance matrix is D.

    The bool says whether the inner optimization was exact (min-cycle and
    min-matching fall back to greedy beyond their caps).
    """
    k = D.shape[0]
    if measure == "edge":
        iu = np.triu_indices(k, 1)
        return float(D[iu].min()), True
    if measure == "clique":
        iu = np.triu_indices(k, 1)
        return float(D[iu].sum()), True
    if measure == "star":
        return float(D.sum(axis=1).min()), True
    if measure == "pseudoforest":
        off = D + np.diag(np.full(k, np.inf))
        return float(off.min(axis=1).sum()), True
    if measure == "tree":
        return _min_spanning_value(D), True
    if measure == "cycle":
        return _min_cycle_value(D)
    if measure == "matching":
        return _min_matching_value(D)
    raise ValueError(f"unknown measure {measure!r}")


def remote_value_flagged(ps: PointSet, sel: Selection, measure: str) -> tuple[float, bool]:
    _check_arity(measure, sel.k)
    if max(sel.indices) >= ps.n:
        raise ValueError("selection index out of range")
    sub = ps.coords[list(sel.indices)]
    D = cdist(sub, sub)
    return _subset_value(D, measure)


def remote_value(ps: PointSet, sel: Selection, measure: str) -> float:
    """Diversity value of the selected subset under one of the seven measures.

    Pairs are counted once (unordered) in the clique sum.
    """
    return remote_value_flagged(ps, sel, measure)[0]


def _greedy_step_value(D: np.ndarray, measure: str) -> float:
    """Greedy-step objective: the measure itself, extended to the sizes the
    incremental construction passes through (size-2 cycles are out-and-back,
    odd matchings leave one point unmatched)."""
    k = D.shape[0]
    if k == 1:
        return 0.0
    if measure == "cycle":
        return _min_cycle_value(D)[0]
    if measure == "matching":
        return _min_matching_value(D)[0]
    return _subset_value(D, measure)[0]


def remote_select(
    ps: PointSet, k: int, measure: str, mode: str = "greedy"
) -> tuple[Selection, float]:
    """Choose k points maximizing a remote measure.

    ``exact`` enumerates subsets within the budget; ``greedy`` seeds with the
    smaller-index endpoint of a farthest pair and adds the point maximizing
    the updated measure; ``gmm`` takes the first k picks of the farthest-point
    traversal regardless of measure. Ties break to the smallest index.
    """
    n = ps.n
    _check_arity(measure, k)
    if k > n:
        raise ValueError(f"k={k} exceeds n={n}")
    D = distance_matrix(ps) if n <= CACHE_LIMIT else None

    def subset_matrix(idx: list[int]) -> np.ndarray:
        if D is not None:
            return D[np.ix_(idx, idx)]
        sub = ps.coords[idx]
        return cdist(sub, sub)

    if mode == "exact":
        if math.comb(n, k) > EXACT_SUBSET_BUDGET:
            raise ValueError(
                f"exact selection over C({n},{k}) subsets exceeds the budget"
            )
        if measure == "cycle" and k > CYCLE_EXACT_CAP:
            raise ValueError(f"exact remote-cycle capped at |S|={CYCLE_EXACT_CAP}")
        if measure == "matching" and k > MATCHING_EXACT_CAP:
            raise ValueError(f"exact remote-matching capped at |S|={MATCHING_EXACT_CAP}")
        best_val = -np.inf
        best = None
        for subset in combinations(range(n), k):
            val, _ = _subset_value(subset_matrix(list(subset)), measure)
            if val > best_val:
                best_val = val
                best = subset
        return Selection(best), float(best_val)

    if mode == "gmm":
        order = farthest_point_order(ps, k)
        sel = Selection(tuple(order))
        return sel, remote_value(ps, sel, measure)

    if mode != "greedy":
        raise ValueError(f"unknown mode {mode!r}")

    seed = diameter_pair(ps)[0]
    picked = [seed]
    while len(picked) < k:
        if measure == "clique" and D is not None:
            gains = D[:, picked].sum(axis=1)
            gains[picked] = -np.inf
            best_i = int(np.argmax(gains))
        else:
            best_val = -np.inf
            best_i = -1
            for i in range(n):
                if i in picked:
                    continue
                val = _greedy_step_value(subset_matrix(picked + [i]), measure)
                if val > best_val:
                    best_val = val
                    best_i = i
        picked.append(best_i)
    sel = Selection(tuple(picked))
    return sel, remote_value(ps, sel, measure)


def farthest_point_order(ps: PointSet, k: int) -> list[int]:
    """First k picks of the farthest-point traversal started at index 0."""
    if not 1 <= k <= ps.n:
        raise ValueError(f"k={k} out of range for n={ps.n}")
    picks = [0]
    mind = cdist(ps.coords, ps.coords[0:1]).ravel()
    mind[0] = -np.inf  # never re-pick (duplicates make 0 a valid max)
    for _ in range(k - 1):
        nxt = int(np.argmax(mind))  # first max = smallest index on ties
        picks.append(nxt)
        mind = np.minimum(mind, cdist(ps.coords, ps.coords[nxt : nxt + 1]).ravel())
        mind[nxt] = -np.inf
    return picks


def _assign(ps: PointSet, centers: list[int]) -> tuple[np.ndarray, tuple[int, ...]]:
    Dc = cdist(ps.coords, ps.coords[centers])
    rowmin = Dc.min(axis=1)
    carr = np.array(centers)
    tied = np.where(Dc == rowmin[:, None], carr[None, :], ps.n)
    assignment = tied.min(axis=1)
    return rowmin, tuple(int(a) for a in assignment)


def gonzalez(ps: PointSet, k: int) -> KCenterResult:
    """Farthest-point k-center heuristic from index 0 (2-approximation)."""
    picks = farthest_point_order(ps, k)
    rowmin, assignment = _assign(ps, picks)
    return KCenterResult(Selection(tuple(picks)), float(rowmin.max()), assignment)


def k_center_exact(ps: PointSet, k: int) -> KCenterResult:
    """Optimal discrete k-center by subset enumeration (budget-capped).

    Ties go to the lexicographically smallest center set.
    """
    n = ps.n
    if not 1 <= k <= n:
        raise ValueError(f"k={k} out of range for n={n}")
    if math.comb(n, k) > EXACT_SUBSET_BUDGET:
        raise ValueError(f"exact k-center over C({n},{k}) subsets exceeds the budget")
    D = distance_matrix(ps)
    best_r = np.inf
    best = None
    for subset in combinations(range(n), k):
        r = D[:, subset].min(axis=1).max()
        if r < best_r:
            best_r = r
            best = subset
    rowmin, assignment = _assign(ps, list(best))
    return KCenterResult(Selection(best), float(best_r), assignment)
