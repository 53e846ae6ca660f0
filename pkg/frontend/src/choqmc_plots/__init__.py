"""Renders the QMC-vs-MC convergence chart from a compare CSV."""

from .render import ChartSpec, read_compare_csv, render

__all__ = ["ChartSpec", "read_compare_csv", "render"]
