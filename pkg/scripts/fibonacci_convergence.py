#!/usr/bin/env python3
"""Watch the join-Fibonacci iteration converge to the golden mean.

Starting from two zero-dimensional spheres, the clique-number ratios of
consecutive steps form the classical Fibonacci ratios; this prints the
exact ratios alongside their distance to the golden mean.  All arithmetic
is exact; floats appear only in the printed columns.
"""

import argparse
from fractions import Fraction

from graphring import fibonacci_report, golden_ratio_proxy, sphere0
from graphring.exprlang import eval_text


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--steps", type=int, default=14)
    parser.add_argument("--start0", default="S0", help="expression for G0")
    parser.add_argument("--start1", default="S0", help="expression for G1")
    args = parser.parse_args()

    g0 = eval_text(args.start0) if args.start0 != "S0" else sphere0()
    g1 = eval_text(args.start1) if args.start1 != "S0" else sphere0()
    report = fibonacci_report(g0, g1, args.steps)
    phi = golden_ratio_proxy()

    print(f"{'step':>4} {'vertices':>8} {'clique':>7} {'ds-dim':>6} {'ratio':>10} {'|ratio - phi|':>14}")
    for step in report.steps:
        if step.ratio is None:
            gap = ""
            ratio = ""
        else:
            ratio = str(step.ratio)
            gap = "%.3e" % float(abs(step.ratio - phi))
        dim = "" if step.ds_dimension is None else str(step.ds_dimension)
        print(f"{step.index:>4} {step.vertex_count:>8} {step.clique_number:>7} {dim:>6} {ratio:>10} {gap:>14}")


if __name__ == "__main__":
    main()
