"""Seeded Gaussian projection maps and their application to point sets."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .dataset import PointSet

_SEED_MASK = (1 << 64) - 1


@dataclass(frozen=True)
class ProjectionMap:
    """A t x d Gaussian matrix used as a linear map R^d -> R^t.

    ``variance`` is the per-entry variance: 1/t for a distance-preserving map,
    pi/2 for the one-dimensional absolute-value map.
    """

    entries: np.ndarray
    seed: int
    variance: float

    def __post_init__(self):
        entries = np.array(self.entries, dtype=np.float64, copy=True)
        if entries.ndim != 2 or entries.shape[0] < 1 or entries.shape[1] < 1:
            raise ValueError(f"entries must be a nonempty 2-D matrix, got shape {entries.shape}")
        if not np.all(np.isfinite(entries)):
            raise ValueError("entries contain NaN or Inf")
        entries.setflags(write=False)
        object.__setattr__(self, "entries", entries)

    @property
    def t(self) -> int:
        return self.entries.shape[0]

    @property
    def d(self) -> int:
        return self.entries.shape[1]


def make_jl_map(d: int, t: int, seed: int) -> ProjectionMap:
    """Sample a t x d matrix of i.i.d. N(0, 1/t) entries from a seeded stream.

    Same (d, t, seed) always reproduces the same matrix within one build.
    """
    if d < 1 or t < 1:
        raise ValueError(f"need d >= 1 and t >= 1, got d={d}, t={t}")
    rng = np.random.default_rng(seed & _SEED_MASK)
    entries = rng.normal(0.0, math.sqrt(1.0 / t), size=(t, d))
    return ProjectionMap(entries, seed=seed, variance=1.0 / t)


def make_line_map(d: int, seed: int) -> ProjectionMap:
    """Sample the 1 x d map with i.i.d. N(0, pi/2) entries.

    Per-entry variance pi/2 makes E|g . x| = ||x|| for every x (half-normal mean).
    """
    if d < 1:
        raise ValueError(f"need d >= 1, got d={d}")
    rng = np.random.default_rng(seed & _SEED_MASK)
    entries = rng.normal(0.0, math.sqrt(math.pi / 2.0), size=(1, d))
    return ProjectionMap(entries, seed=seed, variance=math.pi / 2.0)


def apply_map(pm: ProjectionMap, ps: PointSet) -> PointSet:
    """Project every point; row i of the result is the image of row i."""
    if pm.d != ps.d:
        raise ValueError(f"map expects dimension {pm.d}, point set has {ps.d}")
    return PointSet(ps.coords @ pm.entries.T, label=ps.label)


def derive_seed(seed: int, index: int) -> int:
    """Per-trial seed stream: XOR the base seed with the trial counter.

    The derived value feeds numpy's default generator, whose seed sequence
    hashes it, so nearby counters still yield statistically independent
    streams. This is the splittable counter scheme used by every multi-trial
    experiment in the package.
    """
    return (seed ^ index) & _SEED_MASK
