"""Error certificates for the sorted telescoping estimator.

The certified bound on |true Choquet integral - estimate| is built from
the integrand's modulus of continuity rho evaluated at D*^(1/d):

* finite-derivative branch (psi'_+(0) < inf):
      C * psi'_+(0) * rho
* general branch (needs rho < 1 and a sup-norm bound M):
      (2*M + C) * psi(rho)

with C = 4, improved to C = 1 when d = 1.  The finite-derivative branch
is preferred when available.  A certificate is only issued when the
discrepancy is exact: a lower bound on D* would underestimate rho and
produce an invalid certificate.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .discrepancy import DiscrepancyResult
from .distortion import Distortion
from .integrand import Integrand
from .pointset import PointSet

__all__ = ["ErrorBound", "modulus", "empirical_modulus_lower", "theorem1_bound"]

BRANCH_FINITE_DERIVATIVE = "finite-derivative"
BRANCH_GENERAL = "general-psi"
BRANCH_NO_CERTIFICATE = "no-certificate"


@dataclass(frozen=True)
class ErrorBound:
    value: Optional[float]  # None iff no certificate
    branch: str
    rho: Optional[float]
    discrepancy: DiscrepancyResult
    constant: float  # 4, or 1 when dim == 1
    reason: Optional[str] = None

    def certified(self) -> bool:
        return self.branch != BRANCH_NO_CERTIFICATE


def modulus(f: Integrand, t: float) -> Optional[float]:
    """Modulus-of-continuity model min(L*t, 2*M); None when no L is known."""
    if t < 0.0:
        raise ValueError(f"t must be nonnegative, got {t}")
    if f.lipschitz_constant is None:
        return None
    value = f.lipschitz_constant * t
    if f.sup_norm_bound is not None:
        value = min(value, 2.0 * f.sup_norm_bound)
    return value


def empirical_modulus_lower(f: Integrand, t: float, samples: int,
                            seed: int) -> float:
    """Sampled lower bound on rho(f; t): max |f(x) - f(y)| over pairs
    at max-norm distance <= t.  Flags Lipschitz constants that are
    provably too small (empirical value above L*t)."""
    if t <= 0.0:
        raise ValueError(f"t must be positive, got {t}")
    if samples < 1:
        raise ValueError("samples must be >= 1")
    rng = np.random.Generator(np.random.PCG64(seed))
    x = rng.random((samples, f.dim))
    delta = rng.uniform(-t, t, size=(samples, f.dim))
    y = np.clip(x + delta, 0.0, np.nextafter(1.0, 0.0))
    return float(np.max(np.abs(f.evaluate(x) - f.evaluate(y))))


def _no_certificate(disc: DiscrepancyResult, constant: float, reason: str,
                    rho: Optional[float] = None) -> ErrorBound:
    return ErrorBound(value=None, branch=BRANCH_NO_CERTIFICATE, rho=rho,
                      discrepancy=disc, constant=constant, reason=reason)


def theorem1_bound(f: Integrand, points: PointSet, psi: Distortion,
                   discrepancy: DiscrepancyResult) -> ErrorBound:
    """Certified error bound for the estimator over the given point set."""
    if discrepancy.n != points.n or discrepancy.dim != points.dim:
        raise ValueError("discrepancy result does not match the point set")
    constant = 1.0 if points.dim == 1 else 4.0
    if discrepancy.mode != "exact":
        return _no_certificate(
            discrepancy, constant,
            "discrepancy is a lower bound; a certificate needs the exact D*",
        )
    t = discrepancy.value ** (1.0 / points.dim)
    rho = modulus(f, t)
    if rho is None:
        return _no_certificate(
            discrepancy, constant,
            "integrand has no Lipschitz constant, so no modulus model",
        )
    d0 = psi.right_derivative(0.0)
    if math.isfinite(d0):
        return ErrorBound(value=constant * d0 * rho,
                          branch=BRANCH_FINITE_DERIVATIVE, rho=rho,
                          discrepancy=discrepancy, constant=constant)
    if rho >= 1.0:
        return _no_certificate(
            discrepancy, constant,
            f"general branch needs rho < 1, got rho={rho}", rho=rho,
        )
    if f.sup_norm_bound is None:
        return _no_certificate(
            discrepancy, constant,
            "general branch needs a sup-norm bound on the integrand", rho=rho,
        )
    value = (2.0 * f.sup_norm_bound + constant) * float(psi(rho))
    return ErrorBound(value=value, branch=BRANCH_GENERAL, rho=rho,
                      discrepancy=discrepancy, constant=constant)
