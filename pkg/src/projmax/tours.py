"""Max-TSP solvers: exact Held-Karp oracle, greedy edge insertion, random-tour
sampling, and the tour-to-matchings decomposition."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .dataset import PointSet, distance_matrix
from .matching import Matching

EXACT_TSP_CAP = 14


@dataclass(frozen=True)
class Tour:
    """Cyclic visiting order: a permutation of 0..n-1.

    n = 1 and n = 2 are degenerate (value 0 and twice the pair distance).
    """

    order: tuple[int, ...]

    def __post_init__(self):
        order = tuple(int(i) for i in self.order)
        if sorted(order) != list(range(len(order))):
            raise ValueError("order must be a permutation of 0..n-1")
        object.__setattr__(self, "order", order)

    @property
    def n(self) -> int:
        return len(self.order)


def tour_value(ps: PointSet, t: Tour) -> float:
    """Total length of the cycle, including the closing edge."""
    if t.n != ps.n:
        raise ValueError(f"tour covers {t.n} points, point set has {ps.n}")
    if t.n == 1:
        return 0.0
    total = 0.0
    for i in range(t.n):
        a, b = t.order[i], t.order[(i + 1) % t.n]
        total += float(np.linalg.norm(ps.coords[a] - ps.coords[b]))
    return total


def _held_karp_max_cycle(W) -> tuple[list[int], float]:
    """Max-weight Hamiltonian cycle anchored at node 0; W is a weight matrix.

    States are (visited subset of 1..n-1, last node). Reconstruction prefers
    the smallest node on exact-equality ties.
    """
    n = len(W)
    m = n - 1  # nodes 1..n-1, bit b <-> node b+1
    size = 1 << m
    NEG = -np.inf
    dp = [[NEG] * n for _ in range(size)]
    for b in range(m):
        dp[1 << b][b + 1] = W[0][b + 1]
    for mask in range(1, size):
        row = dp[mask]
        if mask & (mask - 1) == 0:
            continue
        m2 = mask
        while m2:
            lb = m2 & -m2
            last = lb.bit_length()  # node index = bit + 1
            prev_mask = mask ^ lb
            best = NEG
            p2 = prev_mask
            prev_row = dp[prev_mask]
            while p2:
                pb = p2 & -p2
                prev = pb.bit_length()
                v = prev_row[prev] + W[prev][last]
                if v > best:
                    best = v
                p2 ^= pb
            row[last] = best
            m2 ^= lb

    full = size - 1
    best_val = NEG
    best_last = -1
    for last in range(1, n):
        v = dp[full][last] + W[last][0]
        if v > best_val:
            best_val = v
            best_last = last

    # walk back through exact dp equalities, smallest predecessor first
    path = [best_last]
    mask = full
    last = best_last
    while mask & (mask - 1):
        target = dp[mask][last]
        prev_mask = mask ^ (1 << (last - 1))
        p2 = prev_mask
        while p2:
            pb = p2 & -p2
            prev = pb.bit_length()
            if dp[prev_mask][prev] + W[prev][last] == target:
                path.append(prev)
                mask = prev_mask
                last = prev
                break
            p2 ^= pb
        else:  # pragma: no cover
            raise AssertionError("tour reconstruction failed")
    path.append(0)
    order = list(reversed(path))
    return _canonical_cycle(order), float(best_val)


def _canonical_cycle(order: list[int]) -> list[int]:
    """Rotate to start at 0 and orient so the second entry is the smaller
    neighbor (cycles are rotation/reversal invariant)."""
    i = order.index(0)
    order = order[i:] + order[:i]
    if len(order) >= 3 and order[1] > order[-1]:
        order = [order[0]] + order[1:][::-1]
    return order


def max_tsp_exact(ps: PointSet) -> tuple[Tour, float]:
    """Maximum traveling-salesman cycle by Held-Karp DP (3 <= n <= 14)."""
    if not 3 <= ps.n <= EXACT_TSP_CAP:
        raise ValueError(f"exact max-TSP needs 3 <= n <= {EXACT_TSP_CAP}, got {ps.n}")
    W = distance_matrix(ps).tolist()
    order, value = _held_karp_max_cycle(W)
    return Tour(tuple(order)), value


def _greedy_cycle(W) -> list[int]:
    """Greedy edge insertion on a weight matrix: repeatedly accept the
    heaviest edge that keeps degrees <= 2 and closes no premature cycle."""
    n = len(W)
    edges = [(W[i][j], i, j) for i in range(n) for j in range(i + 1, n)]
    edges.sort(key=lambda e: (-e[0], e[1], e[2]))
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    deg = [0] * n
    adj: list[list[int]] = [[] for _ in range(n)]
    count = 0
    for _, i, j in edges:
        if count == n - 1:
            break
        if deg[i] >= 2 or deg[j] >= 2:
            continue
        ri, rj = find(i), find(j)
        if ri == rj:
            continue
        parent[ri] = rj
        deg[i] += 1
        deg[j] += 1
        adj[i].append(j)
        adj[j].append(i)
        count += 1
    ends = [v for v in range(n) if deg[v] < 2]
    assert len(ends) == 2
    adj[ends[0]].append(ends[1])
    adj[ends[1]].append(ends[0])

    order = [0]
    prev = -1
    cur = 0
    for _ in range(n - 1):
        nxt = min(v for v in adj[cur] if v != prev)
        order.append(nxt)
        prev, cur = cur, nxt
    return _canonical_cycle(order)


def max_tsp_greedy(ps: PointSet) -> tuple[Tour, float]:
    """Greedy edge-insertion heuristic for max-TSP (n >= 3)."""
    if ps.n < 3:
        raise ValueError(f"need n >= 3, got {ps.n}")
    W = distance_matrix(ps).tolist()
    order = _greedy_cycle(W)
    t = Tour(tuple(order))
    return t, tour_value(ps, t)


def random_tour_best(ps: PointSet, m: int, seed: int) -> tuple[Tour, float]:
    """Best of m uniformly random cyclic orders from a seeded stream.

    A small number of samples already lands within a constant factor of the
    maximum tour with good probability.
    """
    if ps.n < 3:
        raise ValueError(f"need n >= 3, got {ps.n}")
    if m < 1:
        raise ValueError(f"need m >= 1, got {m}")
    rng = np.random.default_rng(seed)
    D = distance_matrix(ps)
    best_val = -np.inf
    best_order = None
    for _ in range(m):
        perm = rng.permutation(ps.n)
        val = float(D[perm, np.roll(perm, -1)].sum())
        if val > best_val:
            best_val = val
            best_order = perm
    t = Tour(tuple(int(i) for i in best_order))
    return t, best_val


def decompose_tour(t: Tour) -> tuple[Matching, Matching, Matching]:
    """Split the cycle's edges into three matchings.

    Edges at even positions go to the first matching, odd positions to the
    second; for odd n the closing edge alone forms the third, and for even n
    the third is empty. Together they partition the tour's edges exactly.
    """
    n = t.n
    if n < 3:
        raise ValueError(f"decomposition needs n >= 3, got {n}")
    edges = [(t.order[i], t.order[(i + 1) % n]) for i in range(n)]
    if n % 2 == 0:
        m1 = edges[0::2]
        m2 = edges[1::2]
        m3: list[tuple[int, int]] = []
    else:
        m1 = edges[0 : n - 1 : 2]
        m2 = edges[1 : n - 1 : 2]
        m3 = [edges[n - 1]]
    return Matching(tuple(m1)), Matching(tuple(m2)), Matching(tuple(m3))
