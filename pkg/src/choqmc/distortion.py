"""Concave distortion functions on [0,1] and their right derivatives.

A distortion is an increasing concave map psi: [0,1] -> [0,1] with
psi(0) = 0 and psi(1) = 1.  Distorting a probability measure with psi
produces the submodular capacity A -> psi(P(A)) that the Choquet
estimators in :mod:`choqmc.choquet` integrate against.

All distortions here are immutable after construction and safe to share
across threads.  Evaluation accepts scalars or numpy arrays.
"""

from __future__ import annotations

import math

import numpy as np

__all__ = [
    "Distortion",
    "AVaR",
    "Power",
    "Identity",
    "PiecewiseLinear",
    "parse_distortion",
]


def _check_unit_interval(t, allow_one: bool = True) -> None:
    arr = np.asarray(t, dtype=float)
    hi_ok = arr <= 1.0 if allow_one else arr < 1.0
    if not np.all((arr >= 0.0) & hi_ok):
        hi = "1" if allow_one else "1)"
        raise ValueError(f"argument must lie in [0, {hi}], got {t!r}")


class Distortion:
    """Base class. Subclasses implement __call__ and right_derivative."""

    name = "distortion"

    def __call__(self, t):
        """Evaluate psi(t) for t in [0,1] (scalar or array)."""
        raise NotImplementedError

    def right_derivative(self, t: float) -> float:
        """One-sided derivative psi'_+(t) for t in [0,1); may be math.inf."""
        raise NotImplementedError

    def has_finite_zero_derivative(self) -> bool:
        """True iff psi'_+(0) < infinity (selects the sharper error bound)."""
        return math.isfinite(self.right_derivative(0.0))

    def __repr__(self) -> str:
        return f"{type(self).__name__}()"


class AVaR(Distortion):
    """psi(t) = min(t, lam) / lam, the average-value-at-risk distortion.

    The Choquet integral against this distortion is the mean of the worst
    lam-fraction of outcomes (expected shortfall at level lam).
    """

    name = "avar"

    def __init__(self, lam: float):
        if not (0.0 < lam <= 1.0):
            raise ValueError(f"avar level must be in (0, 1], got {lam}")
        self.lam = float(lam)

    def __call__(self, t):
        _check_unit_interval(t)
        return np.minimum(t, self.lam) / self.lam if np.ndim(t) else (
            min(float(t), self.lam) / self.lam
        )

    def right_derivative(self, t: float) -> float:
        _check_unit_interval(t, allow_one=False)
        return 1.0 / self.lam if t < self.lam else 0.0

    def __repr__(self) -> str:
        return f"AVaR(lam={self.lam})"


class Power(Distortion):
    """psi(t) = t**a with 0 < a <= 1; psi'_+(0) = inf for a < 1."""

    name = "power"

    def __init__(self, a: float):
        if not (0.0 < a <= 1.0):
            raise ValueError(f"power exponent must be in (0, 1], got {a}")
        self.a = float(a)

    def __call__(self, t):
        _check_unit_interval(t)
        return np.power(t, self.a) if np.ndim(t) else float(t) ** self.a

    def right_derivative(self, t: float) -> float:
        _check_unit_interval(t, allow_one=False)
        if t == 0.0:
            return 1.0 if self.a == 1.0 else math.inf
        return self.a * t ** (self.a - 1.0)

    def __repr__(self) -> str:
        return f"Power(a={self.a})"


class Identity(Distortion):
    """psi(t) = t; the Choquet integral degenerates to the plain mean."""

    name = "identity"

    def __call__(self, t):
        _check_unit_interval(t)
        return np.asarray(t, dtype=float) if np.ndim(t) else float(t)

    def right_derivative(self, t: float) -> float:
        _check_unit_interval(t, allow_one=False)
        return 1.0


class PiecewiseLinear(Distortion):
    """Concave piecewise-linear distortion through user-supplied knots.

    Knots are (t, psi(t)) pairs strictly inside (0,1)x[0,1]; the anchors
    (0,0) and (1,1) are implied.  Construction rejects knots that break
    monotonicity or concavity (nonincreasing consecutive slopes) instead
    of silently repairing them.
    """

    name = "pwl"

    def __init__(self, knots):
        pts = [(0.0, 0.0)] + [(float(t), float(y)) for t, y in knots] + [(1.0, 1.0)]
        ts = np.array([p[0] for p in pts])
        ys = np.array([p[1] for p in pts])
        if np.any(np.diff(ts) <= 0.0):
            raise ValueError("knot abscissae must be strictly increasing in (0, 1)")
        if np.any(np.diff(ys) < 0.0):
            raise ValueError("knot ordinates must be nondecreasing")
        slopes = np.diff(ys) / np.diff(ts)
        if np.any(np.diff(slopes) > 1e-12):
            raise ValueError("knots are not concave (slopes must be nonincreasing)")
        self._ts = ts
        self._ys = ys
        self._slopes = slopes

    def __call__(self, t):
        _check_unit_interval(t)
        out = np.interp(np.asarray(t, dtype=float), self._ts, self._ys)
        return out if np.ndim(t) else float(out)

    def right_derivative(self, t: float) -> float:
        _check_unit_interval(t, allow_one=False)
        # segment strictly to the right of t: knots at t use the next slope
        idx = int(np.searchsorted(self._ts, t, side="right")) - 1
        return float(self._slopes[idx])

    def __repr__(self) -> str:
        interior = list(zip(self._ts[1:-1].tolist(), self._ys[1:-1].tolist()))
        return f"PiecewiseLinear(knots={interior})"


def parse_distortion(spec: str) -> Distortion:
    """Parse the CLI syntax: avar:L, power:A, identity, pwl:t1,y1;t2,y2;..."""
    spec = spec.strip()
    if spec == "identity":
        return Identity()
    kind, sep, arg = spec.partition(":")
    if not sep:
        raise ValueError(f"unrecognized distortion spec {spec!r}")
    if kind == "avar":
        return AVaR(float(arg))
    if kind == "power":
        return Power(float(arg))
    if kind == "pwl":
        knots = []
        for pair in arg.split(";"):
            t, _, y = pair.partition(",")
            if not _:
                raise ValueError(f"bad pwl knot {pair!r}, expected 't,y'")
            knots.append((float(t), float(y)))
        return PiecewiseLinear(knots)
    raise ValueError(f"unrecognized distortion kind {kind!r}")
