"""Command-line front end.

Subcommands:

* ``integrate``   one estimate (QMC over Halton or seeded MC), JSON out.
* ``compare``     the convergence experiment: QMC vs MC over an n sweep,
                  CSV out with header n,qmc,mc,seed.
* ``discrepancy`` star discrepancy of a generated or CSV point set, JSON.
* ``bound``       certified error bound for an estimate, JSON.

Exit codes: 0 success, 1 computation error, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import bounds, choquet, discrepancy as disc_mod
from .distortion import parse_distortion
from .integrand import from_spec
from .pointset import halton, load_csv, pseudo_random

__all__ = ["main"]


def _fmt(x: float) -> str:
    return f"{x:.17g}"


def _emit(obj) -> None:
    json.dump(obj, sys.stdout, indent=2)
    sys.stdout.write("\n")


def _point_source(args, dim: int):
    """Resolve a point set from --csv or a generator flag set."""
    if getattr(args, "csv", None):
        points = load_csv(args.csv)
        if points.dim != dim and dim:
            raise ValueError(f"CSV has dim={points.dim}, expected {dim}")
        return points
    if getattr(args, "random", False):
        return pseudo_random(dim, args.n, args.seed)
    return halton(dim, args.n, args.start_index)


def cmd_integrate(args) -> None:
    psi = parse_distortion(args.psi)
    f = from_spec(args.function, args.dim)
    if args.method == "qmc":
        est = choquet.qmc_estimate(f, halton(args.dim, args.n, args.start_index), psi)
    else:
        est = choquet.mc_estimate(f, args.dim, args.n, args.seed, psi)
    out = {
        "value": est.value,
        "n": est.n,
        "method": est.method,
        "min_value": est.min_value,
        "max_value": est.max_value,
    }
    if est.seed is not None:
        out["seed"] = est.seed
    if args.with_bound:
        if args.method != "qmc":
            raise ValueError("--with-bound applies to --method qmc only")
        points = halton(args.dim, args.n, args.start_index)
        if args.dim == 1:
            disc = disc_mod.star_discrepancy_1d(points)
        else:
            disc = disc_mod.star_discrepancy_exact(points, budget=args.budget)
        out["bound"] = _bound_dict(bounds.theorem1_bound(f, points, psi, disc))
    _emit(out)


def cmd_compare(args) -> None:
    psi = parse_distortion(args.psi)
    f = from_spec(args.function, args.dim)
    if args.n_start > args.n_end or args.n_step < 1:
        raise ValueError("need n_start <= n_end and n_step >= 1")
    sweep = list(range(args.n_start, args.n_end + 1, args.n_step))
    # one long stream per method; each n reuses the prefix (sequence property)
    halton_full = halton(args.dim, args.n_end, args.start_index)
    mc_full = pseudo_random(args.dim, args.n_end, args.seed)
    qmc_vals = f.evaluate(halton_full.points)
    mc_vals = f.evaluate(mc_full.points)
    rows = []
    for n in sweep:
        q = choquet.estimate_from_values(qmc_vals[:n], psi, "qmc")
        m = choquet.estimate_from_values(mc_vals[:n], psi, "mc", seed=args.seed)
        rows.append((n, q.value, m.value))
        print(f"n={n} qmc={q.value:.8f} mc={m.value:.8f}", file=sys.stderr)
    out = open(args.out, "w") if args.out else sys.stdout
    try:
        out.write("n,qmc,mc,seed\n")
        for n, q, m in rows:
            out.write(f"{n},{_fmt(q)},{_fmt(m)},{args.seed}\n")
    finally:
        if args.out:
            out.close()


def cmd_discrepancy(args) -> None:
    points = _point_source(args, args.dim)
    if args.mode == "lower":
        result = disc_mod.star_discrepancy_lower_bound(points, args.grid)
    elif points.dim == 1:
        result = disc_mod.star_discrepancy_1d(points)
    else:
        try:
            result = disc_mod.star_discrepancy_exact(points, budget=args.budget)
        except disc_mod.BudgetExceededError:
            if args.mode == "exact":
                raise
            result = disc_mod.star_discrepancy_lower_bound(points, args.grid)
    _emit({"value": result.value, "mode": result.mode,
           "n": result.n, "dim": result.dim})


def _bound_dict(b: bounds.ErrorBound) -> dict:
    out = {
        "value": b.value,
        "branch": b.branch,
        "rho": b.rho,
        "constant": b.constant,
        "discrepancy": {
            "value": b.discrepancy.value,
            "mode": b.discrepancy.mode,
            "n": b.discrepancy.n,
            "dim": b.discrepancy.dim,
        },
    }
    if b.reason is not None:
        out["reason"] = b.reason
    return out


def cmd_bound(args) -> None:
    psi = parse_distortion(args.psi)
    f = from_spec(args.function, args.dim)
    points = _point_source(args, args.dim)
    if args.mode == "lower":
        disc = disc_mod.star_discrepancy_lower_bound(points, args.grid)
    elif points.dim == 1:
        disc = disc_mod.star_discrepancy_1d(points)
    else:
        disc = disc_mod.star_discrepancy_exact(points, budget=args.budget)
    _emit(_bound_dict(bounds.theorem1_bound(f, points, psi, disc)))


def _add_point_source_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--csv", help="read points from a CSV file (header u1..ud)")
    p.add_argument("--halton", action="store_true",
                   help="generate Halton points (default)")
    p.add_argument("--random", action="store_true",
                   help="generate seeded pseudo-random points")
    p.add_argument("--n", type=int, default=1024)
    p.add_argument("--dim", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--start-index", type=int, default=1)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="choqmc",
        description="Quasi-Monte Carlo integration for Choquet integrals "
                    "with distortion capacities",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("integrate", help="compute one Choquet estimate")
    p.add_argument("--function", required=True,
                   help="builtin:NAME or expr:TEXT over u1..ud")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--psi", required=True,
                   help="avar:L | power:A | identity | pwl:t,y;...")
    p.add_argument("--method", choices=["qmc", "mc"], default="qmc")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--start-index", type=int, default=1)
    p.add_argument("--with-bound", action="store_true",
                   help="attach a certified error bound (qmc only)")
    p.add_argument("--budget", type=int, default=disc_mod.DEFAULT_BUDGET)
    p.set_defaults(func=cmd_integrate)

    p = sub.add_parser("compare", help="QMC vs MC convergence sweep to CSV")
    p.add_argument("--function", default="builtin:paper-example")
    p.add_argument("--dim", type=int, default=5)
    p.add_argument("--psi", default="avar:0.05")
    p.add_argument("--n-start", type=int, default=10**4)
    p.add_argument("--n-end", type=int, default=10**5)
    p.add_argument("--n-step", type=int, default=10**4)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--start-index", type=int, default=1)
    p.add_argument("--out", help="output CSV path (default: stdout)")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("discrepancy", help="star discrepancy of a point set")
    _add_point_source_flags(p)
    p.add_argument("--mode", choices=["auto", "exact", "lower"], default="auto")
    p.add_argument("--grid", type=int, default=32,
                   help="grid resolution for the lower bound")
    p.add_argument("--budget", type=int, default=disc_mod.DEFAULT_BUDGET)
    p.set_defaults(func=cmd_discrepancy)

    p = sub.add_parser("bound", help="certified error bound for an estimate")
    p.add_argument("--function", required=True)
    p.add_argument("--psi", required=True)
    _add_point_source_flags(p)
    p.add_argument("--mode", choices=["auto", "exact", "lower"], default="auto")
    p.add_argument("--grid", type=int, default=32)
    p.add_argument("--budget", type=int, default=disc_mod.DEFAULT_BUDGET)
    p.set_defaults(func=cmd_bound)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        args.func(args)
    except (ValueError, OSError, RuntimeError) as exc:
        print(f"choqmc: error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
