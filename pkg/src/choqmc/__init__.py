"""Quasi-Monte Carlo integration for Choquet integrals.

Computes the sorted telescoping estimator of a Choquet integral with a
concave distortion capacity over low-discrepancy point sets, certifies
the result against the star discrepancy of the points, and
cross-validates with independent oracles (survival-function quadrature
and the expected-shortfall dual).
"""

from ._kernels import BACKEND as kernel_backend
from .bounds import ErrorBound, empirical_modulus_lower, modulus, theorem1_bound
from .choquet import (
    ChoquetEstimate,
    DiscreteDistribution,
    avar_dual,
    choquet_by_survival,
    choquet_discrete,
    mc_estimate,
    qmc_estimate,
)
from .discrepancy import (
    BudgetExceededError,
    DiscrepancyResult,
    star_discrepancy_1d,
    star_discrepancy_exact,
    star_discrepancy_lower_bound,
)
from .distortion import AVaR, Identity, PiecewiseLinear, Power, parse_distortion
from .integrand import Integrand, builtin, from_expression
from .pointset import PointSet, halton, pseudo_random, radical_inverse

__version__ = "0.1.0"

__all__ = [
    "kernel_backend",
    "ErrorBound", "empirical_modulus_lower", "modulus", "theorem1_bound",
    "ChoquetEstimate", "DiscreteDistribution", "avar_dual",
    "choquet_by_survival", "choquet_discrete", "mc_estimate", "qmc_estimate",
    "BudgetExceededError", "DiscrepancyResult", "star_discrepancy_1d",
    "star_discrepancy_exact", "star_discrepancy_lower_bound",
    "AVaR", "Identity", "PiecewiseLinear", "Power", "parse_distortion",
    "Integrand", "builtin", "from_expression",
    "PointSet", "halton", "pseudo_random", "radical_inverse",
]
