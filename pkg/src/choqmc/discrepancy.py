"""Star discrepancy of point sets in [0,1]^d.

Three routes:

* ``star_discrepancy_1d``: the closed form for d=1 over sorted points.
* ``star_discrepancy_exact``: exact enumeration of critical boxes whose
  corner coordinates come from the point coordinates plus 1, evaluating
  both the open- and closed-box one-sided limits (the supremum over
  half-open anchored boxes is attained in the closure).  Cost is roughly
  n * prod_j(m_j + 1), so a work budget guards against runaway inputs.
* ``star_discrepancy_lower_bound``: the same enumeration on a uniform
  grid per dimension; always a valid lower bound on the true D*.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._kernels import max_local_discrepancy
from .pointset import PointSet

__all__ = [
    "DiscrepancyResult",
    "BudgetExceededError",
    "star_discrepancy_1d",
    "star_discrepancy_exact",
    "star_discrepancy_lower_bound",
    "DEFAULT_BUDGET",
]

DEFAULT_BUDGET = 10**8


@dataclass(frozen=True)
class DiscrepancyResult:
    value: float
    mode: str  # "exact" or "lower-bound"
    n: int
    dim: int


class BudgetExceededError(RuntimeError):
    """Exact enumeration would exceed the work budget."""

    def __init__(self, estimated_steps: int, budget: int):
        self.estimated_steps = estimated_steps
        self.budget = budget
        super().__init__(
            f"exact star-discrepancy enumeration needs ~{estimated_steps:.3g} "
            f"steps (budget {budget:.3g}); use star_discrepancy_lower_bound"
        )


def star_discrepancy_1d(points: PointSet) -> DiscrepancyResult:
    """Exact D* in one dimension: 1/(2n) + max_i |x_(i) - (2i-1)/(2n)|."""
    if points.dim != 1:
        raise ValueError(f"star_discrepancy_1d requires dim=1, got dim={points.dim}")
    x = np.sort(points.points[:, 0])
    n = points.n
    centers = (2.0 * np.arange(1, n + 1) - 1.0) / (2.0 * n)
    value = 1.0 / (2.0 * n) + float(np.max(np.abs(x - centers)))
    return DiscrepancyResult(value=value, mode="exact", n=n, dim=1)


def _critical_grids(points: PointSet) -> list:
    return [
        np.unique(np.concatenate([points.points[:, j], [1.0]]))
        for j in range(points.dim)
    ]


def star_discrepancy_exact(
    points: PointSet, budget: int = DEFAULT_BUDGET
) -> DiscrepancyResult:
    """Exact D* by critical-box enumeration (any d, small n)."""
    grids = _critical_grids(points)
    steps = points.n * int(np.prod([len(g) for g in grids], dtype=np.float64))
    if steps > budget:
        raise BudgetExceededError(steps, budget)
    value = max_local_discrepancy(points.points, grids)
    return DiscrepancyResult(value=value, mode="exact", n=points.n, dim=points.dim)


def star_discrepancy_lower_bound(
    points: PointSet, grid_per_dim: int
) -> DiscrepancyResult:
    """Lower bound on D* from boxes with corners on a uniform grid.

    Both one-sided counts are taken at each grid corner, which snaps the
    effective box to the nearest point coordinates; every evaluated
    quantity is a limit of true local discrepancies, so the maximum never
    exceeds D*.  Refining the grid (g -> k*g) never decreases the bound.
    """
    if grid_per_dim < 2:
        raise ValueError(f"grid_per_dim must be >= 2, got {grid_per_dim}")
    g = np.arange(1, grid_per_dim + 1, dtype=np.float64) / grid_per_dim
    value = max_local_discrepancy(points.points, [g] * points.dim)
    return DiscrepancyResult(
        value=value, mode="lower-bound", n=points.n, dim=points.dim
    )
