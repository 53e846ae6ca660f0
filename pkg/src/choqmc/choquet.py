"""Choquet integral estimators and independent oracles.

The central object is the sorted telescoping estimator over a point set
{u_i} in [0,1]^d: with values v_(1) <= ... <= v_(n) of f at the points,

    estimate = v_(1) + sum_{i=2..n} (v_(i) - v_(i-1)) * psi((n-i+1)/n).

Only the leading term is signed; the increments are nonnegative, so
negative integrand values need no special casing.  Ties contribute zero
increments, making the result independent of how the sort breaks them.

Cross-validation routes:

* ``choquet_discrete``: the same telescoping sum evaluated exactly on a
  discrete distribution with arbitrary weights (upper-tail probabilities
  replace (n-i+1)/n).
* ``choquet_by_survival``: layer-cake quadrature of psi(P(X > x)).
* ``avar_dual``: the Rockafellar-Uryasev dual for the expected-shortfall
  distortion, min_y [E(X - y)_+ + lam*y] / lam, scanned over the support
  (exact for discrete distributions: the minimum is attained at the
  upper lam-quantile, which is a support point).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional, Tuple

import numpy as np

from .distortion import Distortion
from .integrand import Integrand
from .pointset import PointSet, pseudo_random

__all__ = [
    "ChoquetEstimate",
    "DiscreteDistribution",
    "telescoping_value",
    "estimate_from_values",
    "qmc_estimate",
    "mc_estimate",
    "choquet_discrete",
    "choquet_by_survival",
    "avar_dual",
]


@dataclass(frozen=True)
class ChoquetEstimate:
    value: float
    n: int
    method: str  # "qmc", "mc", "discrete-exact"
    min_value: float
    max_value: float
    seed: Optional[int] = None


@dataclass(frozen=True)
class DiscreteDistribution:
    """Atoms (value, probability) with positive weights summing to 1."""

    values: np.ndarray
    probabilities: np.ndarray

    def __post_init__(self):
        v = np.asarray(self.values, dtype=np.float64)
        p = np.asarray(self.probabilities, dtype=np.float64)
        if v.ndim != 1 or v.shape != p.shape or v.size < 1:
            raise ValueError("values and probabilities must be equal-length 1-d")
        if np.any(p <= 0.0):
            raise ValueError("probabilities must be positive")
        if abs(p.sum() - 1.0) > 1e-12:
            raise ValueError(f"probabilities sum to {p.sum()!r}, expected 1")
        object.__setattr__(self, "values", v)
        object.__setattr__(self, "probabilities", p)

    @classmethod
    def uniform(cls, values) -> "DiscreteDistribution":
        v = np.asarray(values, dtype=np.float64)
        return cls(v, np.full(v.size, 1.0 / v.size))


def telescoping_value(values: np.ndarray, tail_probs: np.ndarray,
                      psi: Distortion) -> float:
    """v_(1) + sum_i (v_(i) - v_(i-1)) * psi(T_i) over sorted values.

    tail_probs[i-1] is the upper-tail probability T_i = P(rank >= i) for
    i = 2..n.  Accumulates in index order for bitwise determinism.
    """
    v = np.asarray(values, dtype=np.float64)
    if v.size == 1:
        return float(v[0])
    weights = np.asarray(psi(tail_probs), dtype=np.float64)
    return float(v[0] + np.dot(np.diff(v), weights))


def estimate_from_values(values: np.ndarray, psi: Distortion, method: str,
                          seed: Optional[int] = None) -> ChoquetEstimate:
    v = np.sort(np.asarray(values, dtype=np.float64), kind="stable")
    n = v.size
    tails = np.arange(n - 1, 0, -1, dtype=np.float64) / n  # (n-i+1)/n, i=2..n
    value = telescoping_value(v, tails, psi)
    return ChoquetEstimate(
        value=value, n=n, method=method,
        min_value=float(v[0]), max_value=float(v[-1]), seed=seed,
    )


def qmc_estimate(f: Integrand, points: PointSet, psi: Distortion) -> ChoquetEstimate:
    """Sorted telescoping estimator of the Choquet integral over a point set."""
    if points.dim != f.dim:
        raise ValueError(f"point set dim={points.dim} != integrand dim={f.dim}")
    return estimate_from_values(f.evaluate(points.points), psi, "qmc")


def mc_estimate(f: Integrand, dim: int, n: int, seed: int,
                psi: Distortion) -> ChoquetEstimate:
    """Same estimator over n seeded pseudo-random uniforms."""
    points = pseudo_random(dim, n, seed)
    est = estimate_from_values(f.evaluate(points.points), psi, "mc", seed=seed)
    return est


def choquet_discrete(dist: DiscreteDistribution, psi: Distortion) -> ChoquetEstimate:
    """Exact Choquet integral of a discrete distribution.

    Sorts atoms ascending; the weight on the i-th increment is
    psi(T_i) with T_i the probability of the upper tail from rank i.
    With uniform weights 1/n this reproduces the point-set estimator.
    """
    order = np.argsort(dist.values, kind="stable")
    v = dist.values[order]
    p = dist.probabilities[order]
    # T_i = sum_{k>=i} p_(k) for i = 2..n, computed as suffix sums
    tails = np.minimum(np.cumsum(p[::-1])[::-1][1:], 1.0)
    value = telescoping_value(v, tails, psi)
    return ChoquetEstimate(
        value=value, n=v.size, method="discrete-exact",
        min_value=float(v[0]), max_value=float(v[-1]),
    )


def choquet_by_survival(survival: Callable[[np.ndarray], np.ndarray],
                        value_range: Tuple[float, float], psi: Distortion,
                        n_nodes: int = 10**5) -> float:
    """Layer-cake oracle: midpoint quadrature of the distorted survival.

    Integrates psi(S(x)) over (max(0, lo), hi) and psi(S(x)) - 1 over
    (lo, min(0, hi)).  The midpoint rule is robust to the kink psi
    introduces where S crosses an AVaR level.
    """
    lo, hi = float(value_range[0]), float(value_range[1])
    if n_nodes < 2:
        raise ValueError("n_nodes must be >= 2")
    if hi <= lo:
        raise ValueError(f"empty range ({lo}, {hi})")

    def segment(a: float, b: float, shift: float) -> float:
        if b <= a:
            return 0.0
        h = (b - a) / n_nodes
        x = a + h * (np.arange(n_nodes) + 0.5)
        s = np.asarray(survival(x), dtype=np.float64)
        if np.any((s < 0.0) | (s > 1.0)):
            bad = int(np.argmax((s < 0.0) | (s > 1.0)))
            raise ValueError(
                f"survival function returned {s[bad]!r} at x={x[bad]!r}, "
                "expected a value in [0, 1]"
            )
        return float(np.sum(np.asarray(psi(s)) + shift) * h)

    return segment(max(0.0, lo), hi, 0.0) + segment(lo, min(0.0, hi), -1.0)


def avar_dual(dist: DiscreteDistribution, lam: float) -> float:
    """Dual representation of expected shortfall at level lam.

    min over candidate y in the support of (E(X - y)_+ + lam*y) / lam.
    """
    if not (0.0 < lam <= 1.0):
        raise ValueError(f"lambda must be in (0, 1], got {lam}")
    v = dist.values
    p = dist.probabilities
    excess = np.clip(v[None, :] - v[:, None], 0.0, None)  # (y, atom)
    objective = (excess @ p) / lam + v
    return float(np.min(objective))
