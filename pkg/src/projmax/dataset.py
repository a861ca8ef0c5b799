"""Point sets: the dataset carrier, synthetic generators, metric primitives, file I/O.

Coordinates are always float64 (the threshold measurements need the headroom);
row i of ``coords`` is point i for every solver and report in the package.
"""

from __future__ import annotations

import struct
from dataclasses import dataclass

import numpy as np
from scipy.spatial.distance import cdist, pdist, squareform

_BIN_MAGIC = b"PTS1"

# Solvers precompute the full n x n distance table up to this many points and
# compute distances on demand beyond it (memory vs. speed crossover).
CACHE_LIMIT = 2048

GENERATOR_KINDS = ("basis", "cumsum", "gaussian_blob", "noisy_copy")


@dataclass(frozen=True)
class PointSet:
    """An immutable n x d set of Euclidean points with an optional text label."""

    coords: np.ndarray
    label: str = ""

    def __post_init__(self):
        coords = np.array(self.coords, dtype=np.float64, copy=True)
        if coords.ndim != 2:
            raise ValueError(f"coords must be a 2-D array, got shape {coords.shape}")
        n, d = coords.shape
        if n < 1 or d < 1:
            raise ValueError(f"need n >= 1 and d >= 1, got n={n}, d={d}")
        if not np.all(np.isfinite(coords)):
            raise ValueError("coords contain NaN or Inf")
        coords.setflags(write=False)
        object.__setattr__(self, "coords", coords)

    @property
    def n(self) -> int:
        return self.coords.shape[0]

    @property
    def d(self) -> int:
        return self.coords.shape[1]

    def point(self, i: int) -> np.ndarray:
        return self.coords[self._check_index(i)]

    def _check_index(self, i: int) -> int:
        if not 0 <= i < self.n:
            raise IndexError(f"point index {i} out of range for n={self.n}")
        return i


def generate(
    kind: str,
    n: int,
    seed: int = 0,
    *,
    d: int | None = None,
    sigma: float = 1.0,
    base: PointSet | None = None,
    label: str | None = None,
) -> PointSet:
    """Generate a synthetic point set.

    Kinds:
      * ``basis``: the n standard basis vectors of R^n.
      * ``cumsum``: their running sums e1, e1+e2, ..., e1+...+en (a set whose
        pairwise distances are sqrt(|i-j|), so its intrinsic dimension is tiny).
      * ``gaussian_blob``: n i.i.d. N(0, sigma^2 I_d) points; requires ``d``.
      * ``noisy_copy``: ``base`` plus independent N(0, sigma^2) per coordinate.

    Deterministic for a fixed seed.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if not np.isfinite(sigma):
        raise ValueError(f"sigma must be finite, got {sigma}")
    if label is None:
        label = f"{kind}-{n}"

    if kind == "basis":
        return PointSet(np.eye(n), label=label)
    if kind == "cumsum":
        return PointSet(np.tril(np.ones((n, n))), label=label)
    if kind == "gaussian_blob":
        if d is None or d < 1:
            raise ValueError("gaussian_blob requires d >= 1")
        rng = np.random.default_rng(seed)
        return PointSet(rng.normal(0.0, sigma, size=(n, d)), label=label)
    if kind == "noisy_copy":
        if base is None:
            raise ValueError("noisy_copy requires a base point set")
        if n != base.n:
            raise ValueError(f"noisy_copy n={n} does not match base n={base.n}")
        rng = np.random.default_rng(seed)
        noise = rng.normal(0.0, sigma, size=base.coords.shape)
        return PointSet(base.coords + noise, label=label)
    raise ValueError(f"unknown generator kind {kind!r}")


def load(path, format: str | None = None, header: bool = False) -> PointSet:
    """Load a point set from ``path``.

    ``format`` is "csv" or "bin"; inferred from the file extension when omitted.
    ``header=True`` skips the first CSV line. No normalization is applied to
    loaded coordinates.
    """
    path = str(path)
    fmt = format or _infer_format(path)
    if fmt == "csv":
        return _load_csv(path, header)
    if fmt == "bin":
        return _load_bin(path)
    raise ValueError(f"unknown format {fmt!r}")


def store(ps: PointSet, path, format: str | None = None) -> None:
    """Write ``ps`` to ``path``.

    The binary format round-trips bit-exactly; CSV stores 17 significant digits
    (enough to reproduce every float64).
    """
    path = str(path)
    fmt = format or _infer_format(path)
    if fmt == "csv":
        np.savetxt(path, ps.coords, delimiter=",", fmt="%.17g")
    elif fmt == "bin":
        with open(path, "wb") as fh:
            fh.write(_BIN_MAGIC)
            fh.write(struct.pack("<QQ", ps.n, ps.d))
            fh.write(np.ascontiguousarray(ps.coords, dtype="<f8").tobytes())
    else:
        raise ValueError(f"unknown format {fmt!r}")


def _infer_format(path: str) -> str:
    if path.endswith(".csv"):
        return "csv"
    if path.endswith(".bin"):
        return "bin"
    raise ValueError(f"cannot infer format from {path!r}; pass format explicitly")


def _load_csv(path: str, header: bool) -> PointSet:
    with open(path, "r", encoding="utf-8") as fh:
        lines = [line.strip() for line in fh]
    lines = [line for line in lines if line]
    if header:
        lines = lines[1:]
    if not lines:
        raise ValueError(f"{path}: empty file")
    rows = []
    width = None
    for lineno, line in enumerate(lines, start=1):
        cells = line.split(",")
        if width is None:
            width = len(cells)
        elif len(cells) != width:
            raise ValueError(
                f"{path}: ragged row at line {lineno} (width {len(cells)}, expected {width})"
            )
        try:
            rows.append([float(c) for c in cells])
        except ValueError:
            raise ValueError(f"{path}: non-numeric cell at line {lineno}") from None
    return PointSet(np.array(rows, dtype=np.float64), label=_stem(path))


def _load_bin(path: str) -> PointSet:
    with open(path, "rb") as fh:
        blob = fh.read()
    if len(blob) < len(_BIN_MAGIC) + 16:
        raise ValueError(f"{path}: truncated header")
    if blob[: len(_BIN_MAGIC)] != _BIN_MAGIC:
        raise ValueError(f"{path}: bad magic bytes")
    n, d = struct.unpack_from("<QQ", blob, len(_BIN_MAGIC))
    payload = blob[len(_BIN_MAGIC) + 16 :]
    expected = n * d * 8
    if len(payload) != expected:
        raise ValueError(f"{path}: truncated payload ({len(payload)} bytes, expected {expected})")
    coords = np.frombuffer(payload, dtype="<f8").reshape(n, d)
    return PointSet(coords, label=_stem(path))


def _stem(path: str) -> str:
    name = path.rsplit("/", 1)[-1]
    return name.rsplit(".", 1)[0]


def distance(ps: PointSet, i: int, j: int) -> float:
    """Euclidean distance between points i and j."""
    ps._check_index(i)
    ps._check_index(j)
    return float(np.linalg.norm(ps.coords[i] - ps.coords[j]))


def distance_matrix(ps: PointSet) -> np.ndarray:
    """Full n x n symmetric distance table."""
    return squareform(pdist(ps.coords))


def distances_from(ps: PointSet, i: int) -> np.ndarray:
    """Distances from point i to every point, as a length-n vector."""
    ps._check_index(i)
    return cdist(ps.coords, ps.coords[i : i + 1]).ravel()


def cross_distances(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return cdist(a, b)


def diameter(ps: PointSet) -> float:
    """Max pairwise distance, by exhaustive scan."""
    if ps.n == 1:
        return 0.0
    if ps.n <= CACHE_LIMIT:
        return float(pdist(ps.coords).max())
    best = 0.0
    step = CACHE_LIMIT
    for lo in range(0, ps.n, step):
        block = cdist(ps.coords[lo : lo + step], ps.coords)
        best = max(best, float(block.max()))
    return best


def diameter_pair(ps: PointSet) -> tuple[int, int]:
    """Indices (i, j), i < j, of a farthest pair; ties to the lexicographically
    smallest pair."""
    if ps.n == 1:
        return (0, 0)
    dists = squareform(pdist(ps.coords))
    flat = np.argmax(dists)  # first occurrence wins, i.e. smallest (i, j)
    i, j = divmod(int(flat), ps.n)
    return (i, j) if i < j else (j, i)


def discrete_center(ps: PointSet) -> tuple[int, float]:
    """Input point minimizing the max distance to the set, with that radius.

    Ties break toward the smallest index.
    """
    if ps.n == 1:
        return 0, 0.0
    if ps.n <= CACHE_LIMIT:
        ecc = squareform(pdist(ps.coords)).max(axis=1)
    else:
        ecc = np.empty(ps.n)
        step = CACHE_LIMIT
        for lo in range(0, ps.n, step):
            ecc[lo : lo + step] = cdist(ps.coords[lo : lo + step], ps.coords).max(axis=1)
    c = int(np.argmin(ecc))
    return c, float(ecc[c])
