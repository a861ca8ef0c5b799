"""Maximum-weight matching and hypermatching solvers.

Exact solvers are subset-DP oracles capped at desk scale; the bipartite case
uses the assignment algorithm; greedy covers everything larger.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import numpy as np
from scipy.optimize import linear_sum_assignment
from scipy.spatial.distance import cdist

from .dataset import PointSet, distance_matrix

EXACT_MATCHING_CAP = 20
EXACT_HYPERMATCHING_CAP = 12


@dataclass(frozen=True)
class Matching:
    """Disjoint unordered index pairs; may be partial or empty."""

    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        normalized = []
        seen: set[int] = set()
        for a, b in self.pairs:
            a, b = int(a), int(b)
            if a == b:
                raise ValueError(f"pair ({a}, {b}) repeats an index")
            if a > b:
                a, b = b, a
            if a in seen or b in seen:
                raise ValueError(f"index reused across pairs: ({a}, {b})")
            seen.add(a)
            seen.add(b)
            if a < 0:
                raise ValueError(f"negative index in pair ({a}, {b})")
            normalized.append((a, b))
        object.__setattr__(self, "pairs", tuple(normalized))


@dataclass(frozen=True)
class HyperMatching:
    """Partition of all indices into equal-size groups."""

    groups: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if not self.groups:
            raise ValueError("hypermatching needs at least one group")
        k = len(self.groups[0])
        seen: set[int] = set()
        normalized = []
        for g in self.groups:
            if len(g) != k:
                raise ValueError("groups must all have the same size")
            g = tuple(sorted(int(i) for i in g))
            if any(i in seen for i in g):
                raise ValueError("groups must be disjoint")
            seen.update(g)
            normalized.append(g)
        object.__setattr__(self, "groups", tuple(normalized))

    @property
    def k(self) -> int:
        return len(self.groups[0])


def matching_value(ps: PointSet, m: Matching) -> float:
    """Sum of pair distances. Raises if any index overflows the point set."""
    total = 0.0
    for a, b in m.pairs:
        if b >= ps.n:
            raise ValueError(f"pair ({a}, {b}) out of range for n={ps.n}")
        total += float(np.linalg.norm(ps.coords[a] - ps.coords[b]))
    return total


def hypermatching_value(ps: PointSet, hm: HyperMatching) -> float:
    """Sum over groups of all intra-group pairwise distances."""
    covered = {i for g in hm.groups for i in g}
    if len(covered) != ps.n or max(covered) >= ps.n:
        raise ValueError(f"groups must partition all {ps.n} indices")
    total = 0.0
    for g in hm.groups:
        sub = ps.coords[list(g)]
        diffs = sub[:, None, :] - sub[None, :, :]
        total += float(np.sqrt((diffs**2).sum(-1)).sum()) / 2.0
    return total


def _require_even(n: int) -> None:
    if n % 2:
        raise ValueError(f"perfect matching needs even n, got {n}")


def _max_weight_perfect_matching(W) -> tuple[list[tuple[int, int]], float]:
    """Subset DP over index sets; W is a symmetric weight matrix (list of lists).

    Each state pairs its lowest unmatched index, so every perfect matching is
    explored exactly once. Reconstruction prefers the smallest partner on
    ties, which yields the lexicographically smallest pair sequence among the
    maximizers reachable through exact float equality.
    """
    n = len(W)
    full = (1 << n) - 1
    g = [0.0] * (full + 1)
    for mask in range(3, full + 1):
        if mask.bit_count() % 2:
            continue
        low = mask & -mask
        i = low.bit_length() - 1
        rest = mask ^ low
        Wi = W[i]
        best = -np.inf
        m2 = rest
        while m2:
            jb = m2 & -m2
            v = Wi[jb.bit_length() - 1] + g[rest ^ jb]
            if v > best:
                best = v
            m2 ^= jb
        g[mask] = best

    pairs: list[tuple[int, int]] = []
    mask = full
    while mask:
        low = mask & -mask
        i = low.bit_length() - 1
        rest = mask ^ low
        Wi = W[i]
        target = g[mask]
        m2 = rest
        while m2:
            jb = m2 & -m2
            j = jb.bit_length() - 1
            if Wi[j] + g[rest ^ jb] == target:
                pairs.append((i, j))
                mask = rest ^ jb
                break
            m2 ^= jb
        else:  # pragma: no cover - the maximum is one of the inspected sums
            raise AssertionError("matching reconstruction failed")
    return pairs, g[full]


def max_matching_exact(ps: PointSet) -> Matching:
    """Maximum-weight perfect matching by dynamic programming over subsets.

    Capped at n = 20 (the DP touches 2^n states).
    """
    _require_even(ps.n)
    if ps.n > EXACT_MATCHING_CAP:
        raise ValueError(f"exact matching capped at n={EXACT_MATCHING_CAP}, got {ps.n}")
    W = distance_matrix(ps).tolist()
    pairs, _ = _max_weight_perfect_matching(W)
    return Matching(tuple(pairs))


def max_matching_line(ps: PointSet) -> Matching:
    """Exact maximum matching of 1-D points: i-th smallest pairs with the
    (n/2+i)-th smallest, so the value is (upper-half sum) - (lower-half sum)."""
    if ps.d != 1:
        raise ValueError(f"line matching needs d=1, got d={ps.d}")
    _require_even(ps.n)
    vals = ps.coords[:, 0]
    order = np.lexsort((np.arange(ps.n), vals))
    half = ps.n // 2
    pairs = tuple((int(order[i]), int(order[i + half])) for i in range(half))
    return Matching(pairs)


def max_matching_bipartite(ps: PointSet, split: int) -> Matching:
    """Exact maximum-weight perfect matching across the bipartition
    [0, split) vs [split, n), via the assignment algorithm."""
    if not 0 < split < ps.n:
        raise ValueError(f"split {split} must be inside (0, n)")
    if split != ps.n - split:
        raise ValueError(f"sides must be equal: {split} vs {ps.n - split}")
    cost = cdist(ps.coords[:split], ps.coords[split:])
    rows, cols = linear_sum_assignment(cost, maximize=True)
    pairs = tuple((int(r), int(split + c)) for r, c in zip(rows, cols))
    return Matching(pairs)


def max_matching_greedy(ps: PointSet) -> Matching:
    """Repeatedly match the farthest still-unmatched pair.

    Deterministic: ties break on the lexicographically smallest pair. The
    value is at least half the optimum (standard greedy bound).
    """
    _require_even(ps.n)
    n = ps.n
    D = distance_matrix(ps)
    ii, jj = np.triu_indices(n, k=1)
    dd = D[ii, jj]
    order = np.lexsort((jj, ii, -dd))
    used = np.zeros(n, dtype=bool)
    pairs = []
    for idx in order:
        a, b = int(ii[idx]), int(jj[idx])
        if not used[a] and not used[b]:
            used[a] = used[b] = True
            pairs.append((a, b))
            if len(pairs) == n // 2:
                break
    return Matching(tuple(pairs))


def _partitions(indices: tuple[int, ...], k: int):
    """All partitions of ``indices`` into groups of size k, in the canonical
    order where each group is anchored by its smallest member."""
    if not indices:
        yield ()
        return
    first = indices[0]
    rest = indices[1:]
    for others in combinations(rest, k - 1):
        group = (first,) + others
        remaining = tuple(i for i in rest if i not in others)
        for tail in _partitions(remaining, k):
            yield (group,) + tail


def max_hypermatching(ps: PointSet, k: int, mode: str = "exact") -> tuple[HyperMatching, float]:
    """Partition into n/k groups of size k maximizing total intra-group distance.

    ``exact`` enumerates every partition (n <= 12); ``greedy`` fills one group
    at a time, seeding each with the smallest unused index and repeatedly
    adding the point that raises the intra-group sum the most.
    """
    n = ps.n
    if k < 1 or n % k != 0:
        raise ValueError(f"k={k} must divide n={n}")
    if mode == "exact":
        if n > EXACT_HYPERMATCHING_CAP:
            raise ValueError(f"exact hypermatching capped at n={EXACT_HYPERMATCHING_CAP}")
        D = distance_matrix(ps)
        best_val = -np.inf
        best = None
        for part in _partitions(tuple(range(n)), k):
            val = 0.0
            for g in part:
                for a, b in combinations(g, 2):
                    val += D[a][b]
            if val > best_val:
                best_val = val
                best = part
        hm = HyperMatching(best)
        return hm, float(best_val)
    if mode == "greedy":
        D = distance_matrix(ps)
        unused = list(range(n))
        groups = []
        while unused:
            seed = unused.pop(0)
            group = [seed]
            while len(group) < k:
                gains = D[np.ix_(unused, group)].sum(axis=1)
                pick = int(np.argmax(gains))  # first max = smallest index
                group.append(unused.pop(pick))
            groups.append(tuple(sorted(group)))
        hm = HyperMatching(tuple(groups))
        return hm, hypermatching_value(ps, hm)
    raise ValueError(f"unknown mode {mode!r}")
