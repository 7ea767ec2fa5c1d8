"""Synthetic two-class datasets, seeded train/test splits, and CSV persistence.

Both generators place points on a deterministic angle grid first and add
Gaussian coordinate noise afterwards, so the zero-noise geometry is exact
and reproducibility reduces to the seed of the noise generator (numpy's
PCG64, via ``numpy.random.default_rng``).
"""

import math
import os
from dataclasses import dataclass

import numpy as np

__all__ = [
    "LabeledPoint",
    "Dataset",
    "SplitDataset",
    "make_moons",
    "make_circles",
    "split",
    "read_csv",
    "write_csv",
]

CSV_HEADER = "x1,x2,y"


@dataclass(frozen=True)
class LabeledPoint:
    """One observation: a covariate vector and a binary label."""

    x: np.ndarray
    y: int


@dataclass(frozen=True)
class Dataset:
    """An ordered, immutable collection of labeled points.

    ``x`` has shape (n, d) and ``y`` shape (n,) with values in {0, 1}.
    Row order is meaningful and preserved by CSV round-trips.
    """

    x: np.ndarray
    y: np.ndarray
    name: str = ""
    seed: int = 0

    def __post_init__(self):
        x = np.array(self.x, dtype=float)
        y = np.array(self.y)
        if x.ndim != 2:
            raise ValueError("x must be 2-dimensional with shape (n, d)")
        if y.shape != (x.shape[0],):
            raise ValueError("y must hold one label per row of x")
        if not np.all(np.isfinite(x)):
            raise ValueError("covariates must be finite")
        if y.size and not np.isin(y, (0, 1)).all():
            raise ValueError("labels must be 0 or 1")
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "y", y.astype(np.int64))
        self.x.setflags(write=False)
        self.y.setflags(write=False)

    def __len__(self) -> int:
        return self.x.shape[0]

    def __iter__(self):
        for xi, yi in zip(self.x, self.y):
            yield LabeledPoint(xi, int(yi))

    def class_counts(self) -> tuple[int, int]:
        return int(np.sum(self.y == 0)), int(np.sum(self.y == 1))


@dataclass(frozen=True)
class SplitDataset:
    """A train/test partition of a dataset (disjoint by index, exhaustive)."""

    train: Dataset
    test: Dataset
    train_fraction: float


def _check_count(n: int) -> None:
    if n < 4 or n % 2 != 0:
        raise ValueError(f"n must be an even integer >= 4, got {n}")


def make_moons(n: int, noise_sigma: float, seed: int = 0) -> Dataset:
    """Two interleaving half-circles with isotropic Gaussian noise.

    Class 0 lies on the upper unit half-circle (cos t, sin t); class 1 on
    the offset lower half-circle (1 - cos t, 0.5 - sin t). Angles form a
    uniform grid over [0, pi] inclusive, n/2 points per class. Noise of
    standard deviation ``noise_sigma`` is added to every coordinate.
    """
    _check_count(n)
    if not (math.isfinite(noise_sigma) and noise_sigma >= 0):
        raise ValueError("noise_sigma must be finite and >= 0")
    half = n // 2
    theta = np.linspace(0.0, np.pi, half)
    outer = np.column_stack([np.cos(theta), np.sin(theta)])
    inner = np.column_stack([1.0 - np.cos(theta), 0.5 - np.sin(theta)])
    x = np.vstack([outer, inner])
    x = x + noise_sigma * np.random.default_rng(seed).standard_normal((n, 2))
    y = np.repeat([0, 1], half)
    return Dataset(x, y, name="moons", seed=seed)


def make_circles(
    n: int,
    noise_sigma: float,
    inner_radius_factor: float = 0.5,
    seed: int = 0,
) -> Dataset:
    """Two concentric rings with isotropic Gaussian noise.

    Class 0 lies on the unit circle, class 1 on a circle scaled by
    ``inner_radius_factor``. Angles form a uniform grid over [0, 2*pi),
    shared by both rings, n/2 points per class.
    """
    _check_count(n)
    if not (math.isfinite(noise_sigma) and noise_sigma >= 0):
        raise ValueError("noise_sigma must be finite and >= 0")
    if not 0.0 < inner_radius_factor < 1.0:
        raise ValueError(
            f"inner_radius_factor must lie in (0, 1), got {inner_radius_factor}"
        )
    half = n // 2
    theta = np.linspace(0.0, 2.0 * np.pi, half, endpoint=False)
    outer = np.column_stack([np.cos(theta), np.sin(theta)])
    inner = inner_radius_factor * outer
    x = np.vstack([outer, inner])
    x = x + noise_sigma * np.random.default_rng(seed).standard_normal((n, 2))
    y = np.repeat([0, 1], half)
    return Dataset(x, y, name="circles", seed=seed)


def split(d: Dataset, train_fraction: float, seed: int = 0) -> SplitDataset:
    """Seeded uniform permutation followed by a prefix split.

    Raises if the training part ends up single-class (no model could be
    fitted on it).
    """
    if not 0.0 < train_fraction < 1.0:
        raise ValueError("train_fraction must lie in (0, 1)")
    n = len(d)
    if n < 2:
        raise ValueError("need at least 2 points to split")
    n_train = int(round(train_fraction * n))
    n_train = min(max(n_train, 1), n - 1)
    perm = np.random.default_rng(seed).permutation(n)
    tr, te = perm[:n_train], perm[n_train:]
    train = Dataset(d.x[tr], d.y[tr], name=d.name, seed=d.seed)
    test = Dataset(d.x[te], d.y[te], name=d.name, seed=d.seed)
    if len(set(train.y.tolist())) < 2:
        raise ValueError(
            "training split contains a single class; no classifier can be "
            "fitted on it (try another seed or fraction)"
        )
    return SplitDataset(train=train, test=test, train_fraction=train_fraction)


def write_csv(d: Dataset, path) -> None:
    """Write ``x1,x2,y`` rows with 17 significant digits (lossless for float64)."""
    if d.x.shape[1] != 2:
        raise ValueError("CSV format holds exactly two covariates per row")
    with open(path, "w", newline="\n") as fh:
        fh.write(CSV_HEADER + "\n")
        for xi, yi in zip(d.x, d.y):
            fh.write(f"{xi[0]:.17g},{xi[1]:.17g},{int(yi)}\n")


def read_csv(path) -> Dataset:
    """Read a dataset written by :func:`write_csv`.

    Malformed rows, non-numeric coordinates, and non-binary labels raise
    ``ValueError`` naming the offending line number.
    """
    with open(path, "r") as fh:
        lines = fh.read().splitlines()
    xs: list[tuple[float, float]] = []
    ys: list[int] = []
    saw_header = False
    for lineno, line in enumerate(lines, start=1):
        stripped = line.strip()
        if stripped.startswith("#"):
            continue
        if not saw_header:
            if stripped != CSV_HEADER:
                raise ValueError(
                    f"{path}: line {lineno}: expected header '{CSV_HEADER}'"
                )
            saw_header = True
            continue
        parts = stripped.split(",")
        if len(parts) != 3:
            raise ValueError(
                f"{path}: line {lineno}: malformed row, expected 3 fields"
            )
        try:
            x1, x2 = float(parts[0]), float(parts[1])
        except ValueError:
            raise ValueError(
                f"{path}: line {lineno}: non-numeric coordinate"
            ) from None
        if not (math.isfinite(x1) and math.isfinite(x2)):
            raise ValueError(f"{path}: line {lineno}: non-finite coordinate")
        try:
            ylab = float(parts[2])
        except ValueError:
            raise ValueError(
                f"{path}: line {lineno}: label must be 0 or 1"
            ) from None
        if ylab not in (0.0, 1.0):
            raise ValueError(f"{path}: line {lineno}: label must be 0 or 1")
        xs.append((x1, x2))
        ys.append(int(ylab))
    if not xs:
        raise ValueError(f"{path}: no data rows")
    name = os.path.splitext(os.path.basename(str(path)))[0]
    return Dataset(np.array(xs), np.array(ys), name=name)
