# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the hot kernels.

API and semantics mirror ``_fallback.py``; keep the two in sync.
"""

import numpy as np

BACKEND = "native"


def radical_inverse_sequence(base: int, start: int, count: int):
    """Radical inverses of indices start, ..., start+count-1 in the base."""
    cdef long long b = base
    cdef long long i, idx
    cdef double inv, scale
    out = np.empty(count, dtype=np.float64)
    cdef double[::1] o = out
    for i in range(count):
        idx = start + i
        inv = 0.0
        scale = 1.0 / b
        while idx > 0:
            inv += (idx % b) * scale
            idx //= b
            scale /= b
        o[i] = inv
    return out


cdef class _BoxScan:
    # recursive scan over the corner tree: at depth j only the points
    # inside the box prefix [0, xi_0] x ... x [0, xi_{j-1}] remain
    # candidates, so deep subtrees touch few points.
    cdef const double[:, ::1] pts
    cdef const double[::1] grid_flat
    cdef long long[::1] grid_off, grid_len
    cdef long long[:, ::1] cand       # (d+1, n) candidate point indices
    cdef unsigned char[:, ::1] strict  # parallel all-strict-so-far flags
    cdef double[::1] tail_max          # prod of max grid values from dim j on
    cdef Py_ssize_t n, d
    cdef double best

    def __init__(self, pts, grid_flat, grid_off, grid_len, tail_max):
        self.pts = pts
        self.grid_flat = grid_flat
        self.grid_off = grid_off
        self.grid_len = grid_len
        self.tail_max = tail_max
        self.n = pts.shape[0]
        self.d = pts.shape[1]
        cand = np.empty((self.d + 1, self.n), dtype=np.int64)
        cand[0] = np.arange(self.n)
        self.cand = cand
        strict = np.ones((self.d + 1, self.n), dtype=np.uint8)
        self.strict = strict
        self.best = -1.0

    cdef void scan(self, Py_ssize_t j, Py_ssize_t n_cand, double vol):
        cdef Py_ssize_t k, i, kept, n_open
        cdef double xi, x, value
        cdef long long p
        if n_cand == 0:
            # empty box prefix: the subtree maximum is the largest volume
            value = vol * self.tail_max[j]
            if value > self.best:
                self.best = value
            return
        if j == self.d:
            n_open = 0
            for i in range(n_cand):
                n_open += self.strict[j, i]
            value = vol - (<double>n_open) / self.n
            if value > self.best:
                self.best = value
            value = (<double>n_cand) / self.n - vol
            if value > self.best:
                self.best = value
            return
        for k in range(self.grid_len[j]):
            xi = self.grid_flat[self.grid_off[j] + k]
            kept = 0
            for i in range(n_cand):
                p = self.cand[j, i]
                x = self.pts[p, j]
                if x <= xi:
                    self.cand[j + 1, kept] = p
                    self.strict[j + 1, kept] = self.strict[j, i] and x < xi
                    kept += 1
            self.scan(j + 1, kept, vol * xi)


def max_local_discrepancy(points, grids):
    """Max local discrepancy over anchored boxes with corners in the grids.

    Same definition as the fallback: for each corner in the Cartesian
    product of the candidate arrays, both the open-box and closed-box
    one-sided deviations are evaluated and the maximum returned.
    """
    pts = np.ascontiguousarray(points, dtype=np.float64)
    glist = [np.ascontiguousarray(g, dtype=np.float64) for g in grids]
    sizes = np.array([len(g) for g in glist], dtype=np.int64)
    offs = np.zeros(len(glist) + 1, dtype=np.int64)
    offs[1:] = np.cumsum(sizes)
    maxes = np.array([g[-1] for g in glist], dtype=np.float64)
    tail_max = np.ones(len(glist) + 1, dtype=np.float64)
    tail_max[:-1] = np.cumprod(maxes[::-1])[::-1]
    scan = _BoxScan(pts, np.concatenate(glist), offs[:-1].copy(), sizes, tail_max)
    scan.scan(0, pts.shape[0], 1.0)
    return scan.best
