"""Cross-checks between the compiled and pure-numpy kernel backends."""

import numpy as np
import pytest

from choqmc._kernels import BACKEND, _fallback

try:
    from choqmc._kernels import _native
except ImportError:
    _native = None

needs_native = pytest.mark.skipif(_native is None, reason="extension not built")


def test_a_backend_was_selected():
    assert BACKEND in ("native", "fallback")


@needs_native
def test_radical_inverse_sequences_agree():
    for base in (2, 3, 5, 13):
        for start in (1, 7, 1000):
            a = _native.radical_inverse_sequence(base, start, 64)
            b = _fallback.radical_inverse_sequence(base, start, 64)
            np.testing.assert_array_equal(a, b)


@needs_native
def test_max_local_discrepancy_agrees():
    rng = np.random.default_rng(31)
    for d in (1, 2, 3):
        for _ in range(10):
            n = int(rng.integers(1, 20))
            pts = rng.random((n, d))
            grids = [
                np.unique(np.concatenate([pts[:, j], [1.0]])) for j in range(d)
            ]
            a = _native.max_local_discrepancy(pts, grids)
            b = _fallback.max_local_discrepancy(pts, grids)
            assert a == pytest.approx(b, abs=1e-15)


@needs_native
def test_uniform_grid_agreement():
    rng = np.random.default_rng(32)
    pts = rng.random((40, 3))
    g = np.arange(1, 9) / 8.0
    a = _native.max_local_discrepancy(pts, [g] * 3)
    b = _fallback.max_local_discrepancy(pts, [g] * 3)
    assert a == pytest.approx(b, abs=1e-15)
