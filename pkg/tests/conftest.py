"""Shared brute-force oracles. These enumerate solution spaces directly and
stay independent of the solver implementations they check."""

from __future__ import annotations

from itertools import combinations, permutations

import numpy as np
import pytest

from projmax.dataset import PointSet, distance_matrix


def enum_perfect_matchings(n: int):
    """Yield every perfect matching of 0..n-1 as a tuple of (i < j) pairs."""
    idx = tuple(range(n))

    def rec(remaining):
        if not remaining:
            yield ()
            return
        first = remaining[0]
        for pos in range(1, len(remaining)):
            partner = remaining[pos]
            rest = remaining[1:pos] + remaining[pos + 1 :]
            for tail in rec(rest):
                yield ((first, partner),) + tail

    yield from rec(idx)


def brute_max_matching(ps: PointSet) -> float:
    D = distance_matrix(ps)
    return max(
        sum(D[a][b] for a, b in m) for m in enum_perfect_matchings(ps.n)
    )


def enum_cycles(n: int):
    """Every distinct undirected Hamiltonian cycle: fix start 0, orient with
    second vertex smaller than the last."""
    for perm in permutations(range(1, n)):
        if perm[0] < perm[-1]:
            yield (0,) + perm


def brute_max_tsp(ps: PointSet) -> float:
    D = distance_matrix(ps)
    best = -np.inf
    for cyc in enum_cycles(ps.n):
        val = sum(D[cyc[i]][cyc[(i + 1) % ps.n]] for i in range(ps.n))
        best = max(best, val)
    return float(best)


def brute_bipartite(ps: PointSet, split: int) -> float:
    D = distance_matrix(ps)
    m = split
    best = -np.inf
    for perm in permutations(range(m)):
        val = sum(D[i][split + perm[i]] for i in range(m))
        best = max(best, val)
    return float(best)


def enum_partitions(indices: tuple[int, ...], k: int):
    if not indices:
        yield ()
        return
    first, rest = indices[0], indices[1:]
    for others in combinations(rest, k - 1):
        group = (first,) + others
        remaining = tuple(i for i in rest if i not in others)
        for tail in enum_partitions(remaining, k):
            yield (group,) + tail


def brute_hypermatching(ps: PointSet, k: int) -> float:
    D = distance_matrix(ps)
    best = -np.inf
    for part in enum_partitions(tuple(range(ps.n)), k):
        val = sum(D[a][b] for g in part for a, b in combinations(g, 2))
        best = max(best, val)
    return float(best)


def kruskal_max(ps: PointSet) -> float:
    """Independent maximum-spanning-tree implementation."""
    n = ps.n
    D = distance_matrix(ps)
    edges = sorted(
        ((D[i][j], i, j) for i in range(n) for j in range(i + 1, n)),
        key=lambda e: -e[0],
    )
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    total = 0.0
    taken = 0
    for w, i, j in edges:
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[ri] = rj
            total += w
            taken += 1
            if taken == n - 1:
                break
    return total


def enum_spanning_trees(n: int):
    """All spanning trees of the complete graph on 0..n-1 (tiny n only)."""
    all_edges = [(i, j) for i in range(n) for j in range(i + 1, n)]
    for subset in combinations(all_edges, n - 1):
        parent = list(range(n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        ok = True
        for a, b in subset:
            ra, rb = find(a), find(b)
            if ra == rb:
                ok = False
                break
            parent[ra] = rb
        if ok:
            yield subset


@pytest.fixture
def rng():
    return np.random.default_rng(20250401)


def random_point_set(rng, n: int, d: int, scale: float = 1.0) -> PointSet:
    return PointSet(rng.normal(0.0, scale, size=(n, d)))
