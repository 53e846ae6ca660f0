"""Point sets in [0,1]^d: Halton sequences, seeded uniforms, explicit points.

The Halton sequence uses the first d primes as bases (no scrambling, no
leaping) and starts at index 1 by default, which skips the degenerate
all-zeros point at index 0.  The pseudo-random generator is numpy's
PCG64, which is documented, seedable, and bit-stable across platforms;
determinism per (dim, n, seed) is the contract.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass

import numpy as np

from ._kernels import radical_inverse_sequence

__all__ = [
    "PointSet",
    "radical_inverse",
    "halton",
    "pseudo_random",
    "explicit",
    "load_csv",
    "PRIMES",
]


def _first_primes(count: int) -> tuple:
    primes = []
    candidate = 2
    while len(primes) < count:
        if all(candidate % p for p in primes):
            primes.append(candidate)
        candidate += 1
    return tuple(primes)


PRIMES = _first_primes(100)


@dataclass(frozen=True)
class PointSet:
    """An ordered, immutable set of n points in [0,1)^d with provenance."""

    points: np.ndarray  # shape (n, dim), C-contiguous float64
    provenance: str  # "halton(start=k)", "pseudo-random(seed=s)", "explicit"

    def __post_init__(self):
        pts = np.ascontiguousarray(self.points, dtype=np.float64)
        if pts.ndim != 2 or pts.shape[0] < 1 or pts.shape[1] < 1:
            raise ValueError("points must be a nonempty (n, dim) array")
        if np.any(pts < 0.0) or np.any(pts >= 1.0):
            raise ValueError("all coordinates must lie in [0, 1)")
        pts.setflags(write=False)
        object.__setattr__(self, "points", pts)

    @property
    def n(self) -> int:
        return self.points.shape[0]

    @property
    def dim(self) -> int:
        return self.points.shape[1]

    def prefix(self, n: int) -> "PointSet":
        """First n points (sequence-extension friendly)."""
        if not (1 <= n <= self.n):
            raise ValueError(f"prefix length {n} out of range 1..{self.n}")
        return PointSet(self.points[:n], self.provenance)

    def save_csv(self, path) -> None:
        """Write one point per row, header u1..ud, 17 significant digits."""
        with open(path, "w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow([f"u{j + 1}" for j in range(self.dim)])
            for row in self.points:
                writer.writerow([f"{x:.17g}" for x in row])


def radical_inverse(base: int, index: int) -> float:
    """Reflect the base-b digits of index about the radix point."""
    if base < 2:
        raise ValueError(f"base must be >= 2, got {base}")
    if index < 1:
        raise ValueError(f"index must be >= 1, got {index}")
    return float(radical_inverse_sequence(base, index, 1)[0])


def halton(dim: int, n: int, start_index: int = 1) -> PointSet:
    """First n Halton points from start_index, bases = first dim primes."""
    if dim < 1 or n < 1:
        raise ValueError("dim and n must be positive")
    if start_index < 1:
        raise ValueError(f"start_index must be >= 1, got {start_index}")
    if dim > len(PRIMES):
        raise ValueError(
            f"dim={dim} exceeds the built-in prime table ({len(PRIMES)} primes)"
        )
    cols = [radical_inverse_sequence(PRIMES[j], start_index, n) for j in range(dim)]
    return PointSet(np.column_stack(cols), f"halton(start={start_index})")


def pseudo_random(dim: int, n: int, seed: int) -> PointSet:
    """n IID-uniform points from PCG64(seed); bit-identical across runs."""
    if dim < 1 or n < 1:
        raise ValueError("dim and n must be positive")
    rng = np.random.Generator(np.random.PCG64(seed))
    return PointSet(rng.random((n, dim)), f"pseudo-random(seed={seed})")


def explicit(points) -> PointSet:
    """Wrap user-supplied points; a flat array is treated as 1-d points."""
    pts = np.asarray(points, dtype=np.float64)
    if pts.ndim == 1:
        pts = pts.reshape(-1, 1)
    return PointSet(pts, "explicit")


def load_csv(path) -> PointSet:
    """Read a point-set CSV written by save_csv (header u1..ud)."""
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader)
        if not header or header[0] != "u1":
            raise ValueError(f"{path}: expected header u1,...,ud, got {header!r}")
        rows = [[float(x) for x in row] for row in reader if row]
    if not rows:
        raise ValueError(f"{path}: no points")
    return explicit(np.array(rows))
