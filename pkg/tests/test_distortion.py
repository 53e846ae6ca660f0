import math

import numpy as np
import pytest

from choqmc.distortion import (
    AVaR,
    Identity,
    PiecewiseLinear,
    Power,
    parse_distortion,
)

ALL_KINDS = [
    AVaR(0.05),
    AVaR(0.5),
    Power(0.5),
    Power(1.0),
    Identity(),
    PiecewiseLinear([(0.2, 0.5), (0.6, 0.9)]),
]


def test_eval_examples():
    assert AVaR(0.05)(0.025) == 0.5
    assert AVaR(0.05)(0.5) == 1.0
    assert Identity()(0.37) == 0.37
    assert Power(0.5)(0.25) == 0.5


def test_right_derivative_examples():
    assert AVaR(0.05).right_derivative(0.0) == 20.0  # 1/lambda
    assert Power(0.5).right_derivative(0.0) == math.inf
    assert Identity().right_derivative(0.9) == 1.0
    assert AVaR(0.05).right_derivative(0.05) == 0.0


def test_has_finite_zero_derivative():
    assert AVaR(0.05).has_finite_zero_derivative()
    assert not Power(0.5).has_finite_zero_derivative()
    assert Identity().has_finite_zero_derivative()


@pytest.mark.parametrize("psi", ALL_KINDS, ids=repr)
def test_anchors_exact(psi):
    assert psi(0.0) == 0.0
    assert psi(1.0) == 1.0


@pytest.mark.parametrize("psi", ALL_KINDS, ids=repr)
def test_monotone_and_concave_on_grid(psi):
    t = np.linspace(0.0, 1.0, 501)
    y = np.asarray(psi(t))
    assert np.all(np.diff(y) >= -1e-15)
    # concavity: midpoint above chord on all grid pairs
    mid = np.asarray(psi((t[:-2] + t[2:]) / 2.0))
    assert np.all(mid >= (y[:-2] + y[2:]) / 2.0 - 1e-12)


@pytest.mark.parametrize("psi", ALL_KINDS, ids=repr)
def test_right_derivative_nonincreasing(psi):
    grid = np.linspace(0.0, 1.0, 1000, endpoint=False)
    d = [psi.right_derivative(float(t)) for t in grid]
    assert all(a >= b - 1e-12 for a, b in zip(d, d[1:]))


@pytest.mark.parametrize("psi", ALL_KINDS, ids=repr)
def test_finite_difference_consistency(psi):
    # grid avoiding the kinks of the piecewise kinds
    for t in (0.013, 0.137, 0.411, 0.733):
        d = psi.right_derivative(t)
        for h in (1e-4, 1e-6):
            fd = (psi(t + h) - psi(t)) / h
            # O(h) with a curvature-driven constant (largest for power near 0)
            assert fd == pytest.approx(d, abs=200 * h)


def test_avar_saturation():
    psi = AVaR(0.3)
    for t in np.linspace(0.3, 1.0, 50):
        assert psi(float(t)) == 1.0


def test_domain_errors():
    with pytest.raises(ValueError):
        AVaR(0.05)(1.5)
    with pytest.raises(ValueError):
        Identity()(-0.1)
    with pytest.raises(ValueError):
        Identity().right_derivative(1.0)
    with pytest.raises(ValueError):
        AVaR(0.0)
    with pytest.raises(ValueError):
        Power(1.5)


def test_piecewise_linear_rejects_bad_knots():
    with pytest.raises(ValueError):
        PiecewiseLinear([(0.5, 0.2)])  # convex kink: slopes 0.4 then 1.6
    with pytest.raises(ValueError):
        PiecewiseLinear([(0.3, 0.9), (0.2, 0.95)])  # unordered abscissae
    with pytest.raises(ValueError):
        PiecewiseLinear([(0.3, 0.9), (0.6, 0.8)])  # decreasing ordinates


def test_piecewise_linear_interpolation_and_slope():
    psi = PiecewiseLinear([(0.5, 0.8)])
    assert psi(0.25) == pytest.approx(0.4)
    assert psi(0.75) == pytest.approx(0.9)
    assert psi.right_derivative(0.1) == pytest.approx(1.6)
    assert psi.right_derivative(0.5) == pytest.approx(0.4)  # segment to the right


def test_parse_distortion():
    assert isinstance(parse_distortion("identity"), Identity)
    assert parse_distortion("avar:0.05").lam == 0.05
    assert parse_distortion("power:0.5").a == 0.5
    pwl = parse_distortion("pwl:0.5,0.8")
    assert pwl(0.5) == pytest.approx(0.8)
    with pytest.raises(ValueError):
        parse_distortion("wang:1.0")
    with pytest.raises(ValueError):
        parse_distortion("avar")
