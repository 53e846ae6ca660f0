"""Line chart of estimator values over the sample-size sweep.

Input is a compare CSV with header ``n,qmc,mc,seed``; output is a chart
with the quasi-Monte Carlo series solid and the Monte Carlo series
dashed, matching the convention used throughout. Raw estimator values
are plotted with no smoothing or error bars.
"""

from __future__ import annotations

import argparse
import csv
import sys
from dataclasses import dataclass

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

EXPECTED_HEADER = ["n", "qmc", "mc", "seed"]


@dataclass(frozen=True)
class ChartSpec:
    input_csv: str
    output_image: str
    title: str = "Choquet integral estimates: QMC vs MC"
    y_label: str = "estimate"


class CompareCsvError(ValueError):
    pass


def read_compare_csv(path: str):
    """Parse and validate a compare CSV; returns (n, qmc, mc) lists."""
    try:
        with open(path, newline="") as fh:
            rows = list(csv.reader(fh))
    except OSError as exc:
        raise CompareCsvError(f"cannot read {path}: {exc}") from exc
    if not rows or rows[0] != EXPECTED_HEADER:
        raise CompareCsvError(
            f"{path}: expected header {','.join(EXPECTED_HEADER)}, "
            f"got {rows[0] if rows else 'an empty file'}"
        )
    data = [r for r in rows[1:] if r]
    if len(data) < 2:
        raise CompareCsvError(f"{path}: need at least 2 data rows, got {len(data)}")
    try:
        ns = [int(r[0]) for r in data]
        qmc = [float(r[1]) for r in data]
        mc = [float(r[2]) for r in data]
    except (ValueError, IndexError) as exc:
        raise CompareCsvError(f"{path}: malformed data row: {exc}") from exc
    return ns, qmc, mc


def render(spec: ChartSpec) -> None:
    """Write the two-series chart to spec.output_image (format by extension)."""
    ns, qmc, mc = read_compare_csv(spec.input_csv)
    fig, ax = plt.subplots(figsize=(8, 5))
    ax.plot(ns, qmc, linestyle="-", color="black", label="quasi-Monte Carlo")
    ax.plot(ns, mc, linestyle="--", color="black", label="Monte Carlo")
    ax.set_xlabel("n")
    ax.set_ylabel(spec.y_label)
    ax.set_title(spec.title)
    ax.legend()
    lo = min(min(qmc), min(mc))
    hi = max(max(qmc), max(mc))
    pad = (hi - lo) * 0.05 or max(abs(hi), 1.0) * 0.05  # non-degenerate axis
    ax.set_ylim(lo - pad, hi + pad)
    fig.tight_layout()
    fig.savefig(spec.output_image)
    plt.close(fig)


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="plot_compare",
        description="render a choqmc compare CSV as a convergence chart",
    )
    parser.add_argument("input_csv")
    parser.add_argument("output_image")
    parser.add_argument("--title", default=ChartSpec.title)
    parser.add_argument("--y-label", default=ChartSpec.y_label)
    args = parser.parse_args(argv)
    try:
        render(ChartSpec(args.input_csv, args.output_image,
                         title=args.title, y_label=args.y_label))
    except CompareCsvError as exc:
        print(f"plot_compare: error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
