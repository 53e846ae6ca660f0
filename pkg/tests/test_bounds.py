import math

import numpy as np
import pytest

from choqmc.bounds import (
    BRANCH_FINITE_DERIVATIVE,
    BRANCH_GENERAL,
    BRANCH_NO_CERTIFICATE,
    empirical_modulus_lower,
    modulus,
    theorem1_bound,
)
from choqmc.choquet import qmc_estimate
from choqmc.discrepancy import (
    DiscrepancyResult,
    star_discrepancy_1d,
    star_discrepancy_lower_bound,
)
from choqmc.distortion import AVaR, Power
from choqmc.integrand import Integrand, builtin
from choqmc.pointset import halton


def test_modulus_model():
    f = builtin("linear-1d")
    assert modulus(f, 0.05) == pytest.approx(0.05)
    assert modulus(f, 0.0) == 0.0
    capped = Integrand(dim=1, fn=lambda p: p[:, 0],
                       lipschitz_constant=3.0, sup_norm_bound=1.0)
    assert modulus(capped, 10.0) == 2.0  # oscillation cap 2M
    bare = Integrand(dim=1, fn=lambda p: p[:, 0])
    assert modulus(bare, 0.1) is None
    with pytest.raises(ValueError):
        modulus(f, -1.0)


def test_empirical_modulus_lower():
    f = builtin("linear-1d")
    value = empirical_modulus_lower(f, 0.1, samples=2000, seed=4)
    assert 0.0 < value <= 0.1
    const = Integrand(dim=2, fn=lambda p: np.full(p.shape[0], 2.0))
    assert empirical_modulus_lower(const, 0.5, samples=100, seed=4) == 0.0


def test_empirical_modulus_validates_paper_example_constant():
    f = builtin("paper-example")
    t = 0.01
    value = empirical_modulus_lower(f, t, samples=10**4, seed=5)
    assert value <= f.lipschitz_constant * t


def _disc(value, mode="exact", n=100, dim=1):
    return DiscrepancyResult(value=value, mode=mode, n=n, dim=dim)


def _points_placeholder(dim, n):
    return halton(dim, n)


def test_finite_derivative_branch_values():
    # dim=5, M=1, psi'(0)=20, rho=0.01 -> 4*20*0.01 = 0.8
    f = Integrand(dim=5, fn=lambda p: p[:, 0], lipschitz_constant=1.0,
                  sup_norm_bound=1.0)
    points = halton(5, 10)
    disc = _disc(0.01**5, n=10, dim=5)  # D*^(1/5) = 0.01
    b = theorem1_bound(f, points, AVaR(0.05), disc)
    assert b.branch == BRANCH_FINITE_DERIVATIVE
    assert b.constant == 4.0
    assert b.value == pytest.approx(0.8)


def test_dim1_constant_is_one():
    f = builtin("linear-1d")
    points = halton(1, 10)
    b = theorem1_bound(f, points, AVaR(0.05), _disc(1e-4, n=10))
    assert b.constant == 1.0
    assert b.value == pytest.approx(0.002)


def test_general_branch_value():
    # psi = Power(0.5): infinite derivative at 0 -> (2M + 4) * sqrt(rho)
    f = Integrand(dim=2, fn=lambda p: p[:, 0], lipschitz_constant=1.0,
                  sup_norm_bound=1.0)
    points = halton(2, 10)
    disc = _disc(0.04**2, n=10, dim=2)  # rho = L * D*^(1/2) = 0.04
    b = theorem1_bound(f, points, Power(0.5), disc)
    assert b.branch == BRANCH_GENERAL
    assert b.value == pytest.approx((2 + 4) * math.sqrt(0.04))


def test_no_certificate_cases():
    f = builtin("linear-1d")
    points = halton(1, 16)
    lower = star_discrepancy_lower_bound(points, 8)
    b = theorem1_bound(f, points, AVaR(0.05), lower)
    assert b.branch == BRANCH_NO_CERTIFICATE and b.value is None
    assert "lower bound" in b.reason

    bare = Integrand(dim=1, fn=lambda p: p[:, 0])
    exact = star_discrepancy_1d(points)
    b = theorem1_bound(bare, points, AVaR(0.05), exact)
    assert b.branch == BRANCH_NO_CERTIFICATE

    # general branch needs rho < 1
    rough = Integrand(dim=1, fn=lambda p: p[:, 0], lipschitz_constant=100.0,
                      sup_norm_bound=None)
    b = theorem1_bound(rough, points, Power(0.5), exact)
    assert b.branch == BRANCH_NO_CERTIFICATE

    # mismatched discrepancy result
    with pytest.raises(ValueError):
        theorem1_bound(f, points, AVaR(0.05), _disc(0.1, n=99))


def test_bound_validity_on_analytic_case():
    # true Choquet value of f(u)=u under AVaR(lam) is 1 - lam/2
    f = builtin("linear-1d")
    for lam in (0.05, 0.25, 0.5):
        psi = AVaR(lam)
        truth = 1 - lam / 2
        for k in range(4, 15):
            points = halton(1, 2**k)
            est = qmc_estimate(f, points, psi)
            b = theorem1_bound(f, points, psi, star_discrepancy_1d(points))
            assert b.branch == BRANCH_FINITE_DERIVATIVE
            assert abs(est.value - truth) <= b.value


def test_error_and_bound_rate():
    f = builtin("linear-1d")
    psi = AVaR(0.05)
    ns, errs, bnds = [], [], []
    for k in range(4, 15):
        points = halton(1, 2**k)
        est = qmc_estimate(f, points, psi)
        b = theorem1_bound(f, points, psi, star_discrepancy_1d(points))
        err = abs(est.value - 0.975)
        if err > 0:
            ns.append(2**k)
            errs.append(err)
            bnds.append(b.value)
    assert np.all(np.diff(errs) < 0) and np.all(np.diff(bnds) < 0)
    for series in (errs, bnds):
        slope = np.polyfit(np.log(ns), np.log(series), 1)[0]
        assert abs(slope + 1.0) <= 0.3  # near O(1/n), log factor ignored


def test_branch_preference_for_avar():
    # when psi'(0) < inf the finite-derivative branch is selected and,
    # for the avar family with M >= 0, it is never looser than general
    f = Integrand(dim=1, fn=lambda p: p[:, 0], lipschitz_constant=1.0,
                  sup_norm_bound=1.0)
    points = halton(1, 64)
    disc = star_discrepancy_1d(points)
    for lam in (0.05, 0.3, 0.9):
        psi = AVaR(lam)
        b = theorem1_bound(f, points, psi, disc)
        assert b.branch == BRANCH_FINITE_DERIVATIVE
        general = (2 * f.sup_norm_bound + b.constant) * psi(b.rho)
        assert b.value <= general + 1e-15
