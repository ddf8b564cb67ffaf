#!/usr/bin/env python3
"""Census of multiplicative primality over the small-graph catalog.

Very little is known about multiplicative primes in the graph ring beyond
their abundance; this walks every isomorphism class up to a chosen order
and tallies the verdicts of the exhaustive factor search.
"""

import argparse
from collections import Counter

from graphring import encode_graph6
from graphring.primes import graphs_of_order, is_multiplicative_prime


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-order", type=int, default=6)
    parser.add_argument(
        "--show-composites", action="store_true", help="print each composite with factors"
    )
    args = parser.parse_args()

    for order in range(1, args.max_order + 1):
        tally: Counter[str] = Counter()
        composites = []
        for g in graphs_of_order(order):
            verdict = is_multiplicative_prime(g)
            key = "unit" if verdict.is_unit else verdict.status
            tally[key] += 1
            if verdict.status == "composite":
                composites.append((g, verdict.factor_pairs))
        summary = ", ".join("%s %d" % (k, v) for k, v in sorted(tally.items()))
        print("order %d (%d classes): %s" % (order, sum(tally.values()), summary))
        if args.show_composites:
            for g, pairs in composites:
                shown = "; ".join(
                    "%s * %s" % (encode_graph6(a), encode_graph6(b)) for a, b in pairs
                )
                print("   %s = %s" % (encode_graph6(g), shown))


if __name__ == "__main__":
    main()
