"""Pure-numpy implementations of the hot kernels.

Used when the compiled extension is unavailable (or forced via
``CHOQMC_PURE_PYTHON=1``).  Semantics must match ``_native.pyx`` exactly;
``tests/test_kernels.py`` cross-checks the two backends.
"""

from __future__ import annotations

import numpy as np

BACKEND = "fallback"


def radical_inverse_sequence(base: int, start: int, count: int) -> np.ndarray:
    """Radical inverses of indices start, start+1, ..., start+count-1.

    The radical inverse reflects the base-b digits of the index about the
    radix point: index = sum_k d_k b^k maps to sum_k d_k b^(-k-1).
    """
    idx = np.arange(start, start + count, dtype=np.uint64)
    out = np.zeros(count, dtype=np.float64)
    scale = 1.0 / base
    while np.any(idx > 0):
        out += (idx % base) * scale
        idx //= base
        scale /= base
    return out


def max_local_discrepancy(points: np.ndarray, grids: list) -> float:
    """Max local discrepancy over anchored boxes with corners in the grids.

    For every corner xi in the Cartesian product of the per-dimension
    candidate arrays, evaluates both one-sided limits of the empirical
    deviation of the box [0, xi):

      open:    vol(xi) - #{x : x_j < xi_j for all j} / n
      closed:  #{x : x_j <= xi_j for all j} / n - vol(xi)

    and returns the maximum.  With grids equal to the per-dimension point
    coordinates plus {1} this is the exact star discrepancy; with coarser
    grids it is a lower bound.
    """
    pts = np.ascontiguousarray(points, dtype=np.float64)
    n, d = pts.shape

    def expand(j0, open0, closed0, vol0):
        # open/closed: (m, n) 0/1 masks; vol: (m,) box volumes so far
        open_cnt, closed_cnt, vol = open0, closed0, vol0
        for j in range(j0, d):
            g = np.asarray(grids[j], dtype=np.float64)
            lt = (pts[:, j][None, :] < g[:, None]).astype(np.uint8)
            le = (pts[:, j][None, :] <= g[:, None]).astype(np.uint8)
            open_cnt = (open_cnt[:, None, :] * lt[None, :, :]).reshape(-1, n)
            closed_cnt = (closed_cnt[:, None, :] * le[None, :, :]).reshape(-1, n)
            vol = (vol[:, None] * g[None, :]).reshape(-1)
        open_frac = open_cnt.sum(axis=1) / n
        closed_frac = closed_cnt.sum(axis=1) / n
        return max(np.max(vol - open_frac), np.max(closed_frac - vol))

    ones = np.ones((1, n), dtype=np.uint8)
    unit = np.ones(1, dtype=np.float64)
    if d == 1:
        return float(expand(0, ones, ones, unit))
    # slab over dim 0 to cap peak memory at prod(m_1..m_{d-1}) * n bytes
    best = -np.inf
    g0 = np.asarray(grids[0], dtype=np.float64)
    for xi in g0:
        lt0 = (pts[:, 0] < xi).astype(np.uint8)[None, :]
        le0 = (pts[:, 0] <= xi).astype(np.uint8)[None, :]
        best = max(best, expand(1, lt0, le0, np.array([xi])))
    return float(best)
