"""Integrands f: [0,1]^d -> R with regularity metadata.

The Lipschitz constant (max norm) and sup-norm bound feed the error
certificates; they are optional and, when absent, the bound module
reports "no certificate" instead of inventing a modulus.

Built-ins:

* ``linear-1d``: f(u) = u, L = 1, M = 1.
* ``paper-example``: f(u) = exp(-(u1*u2*u3 + sin(u3*u4*u5))) on [0,1]^5.
  The exponent's partials are bounded by 1 except d/du3 <= 2, and
  |f| <= e, so summing per-coordinate bounds gives the max-norm Lipschitz
  constant L = 6e and the (conservative) sup bound M = e.  Derivation in
  docs/integrands.md.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from . import expressions

__all__ = ["Integrand", "builtin", "from_expression", "from_spec", "BUILTIN_NAMES"]


@dataclass(frozen=True)
class Integrand:
    """A d-dimensional integrand with optional regularity metadata."""

    dim: int
    fn: Callable[[np.ndarray], np.ndarray]  # maps (m, dim) -> (m,)
    lipschitz_constant: Optional[float] = None
    sup_norm_bound: Optional[float] = None
    name: str = "anonymous"

    def evaluate(self, points: np.ndarray) -> np.ndarray:
        """Evaluate at an (m, dim) array; rejects NaN/inf results."""
        pts = np.atleast_2d(np.asarray(points, dtype=np.float64))
        if pts.shape[1] != self.dim:
            raise ValueError(
                f"integrand {self.name!r} has dim={self.dim}, "
                f"got points of dim={pts.shape[1]}"
            )
        values = np.asarray(self.fn(pts), dtype=np.float64)
        if values.shape != (pts.shape[0],):
            raise ValueError(
                f"integrand {self.name!r} returned shape {values.shape}, "
                f"expected ({pts.shape[0]},)"
            )
        if not np.all(np.isfinite(values)):
            idx = int(np.argmax(~np.isfinite(values)))
            raise expressions.EvaluationError(
                f"integrand {self.name!r} returned a non-finite value at "
                f"point index {idx}: {pts[idx]}"
            )
        return values

    def __call__(self, u) -> float:
        return float(self.evaluate(np.atleast_2d(u))[0])


def _paper_example_fn(pts: np.ndarray) -> np.ndarray:
    return np.exp(-(pts[:, 0] * pts[:, 1] * pts[:, 2]
                    + np.sin(pts[:, 2] * pts[:, 3] * pts[:, 4])))


_BUILTINS = {
    "linear-1d": Integrand(
        dim=1,
        fn=lambda pts: pts[:, 0].copy(),
        lipschitz_constant=1.0,
        sup_norm_bound=1.0,
        name="linear-1d",
    ),
    "paper-example": Integrand(
        dim=5,
        fn=_paper_example_fn,
        lipschitz_constant=6.0 * math.e,
        sup_norm_bound=math.e,
        name="paper-example",
    ),
}

BUILTIN_NAMES = tuple(sorted(_BUILTINS))


def builtin(name: str) -> Integrand:
    """Look up a built-in integrand by name."""
    try:
        return _BUILTINS[name]
    except KeyError:
        raise ValueError(
            f"unknown builtin {name!r}; available: {', '.join(BUILTIN_NAMES)}"
        ) from None


def from_expression(text: str, dim: int,
                    lipschitz_constant: Optional[float] = None,
                    sup_norm_bound: Optional[float] = None) -> Integrand:
    """Build an integrand from expression text over u1..u<dim>."""
    ast = expressions.parse_expression(text, dim)
    return Integrand(
        dim=dim,
        fn=lambda pts: expressions.evaluate(ast, pts),
        lipschitz_constant=lipschitz_constant,
        sup_norm_bound=sup_norm_bound,
        name=f"expr:{text}",
    )


def from_spec(spec: str, dim: int, **metadata) -> Integrand:
    """Parse the CLI syntax: 'builtin:<name>' or 'expr:<text>'."""
    kind, sep, rest = spec.partition(":")
    if not sep:
        raise ValueError(f"function spec {spec!r} must be builtin:NAME or expr:TEXT")
    if kind == "builtin":
        f = builtin(rest)
        if f.dim != dim:
            raise ValueError(f"builtin {rest!r} has dim={f.dim}, requested dim={dim}")
        return f
    if kind == "expr":
        return from_expression(rest, dim, **metadata)
    raise ValueError(f"unknown function spec kind {kind!r}")
