#!/usr/bin/env python3
"""Sweep the fixed-point logarithmic digit path against the exact one.

For each base in a range, walks a^0 .. a^k_max with the exact incremental
extractor and compares every term with the 128-bit fixed-point answer,
reporting timing, ambiguity counts, and any certified mismatch (there must
be none).
"""

import argparse
import time

from benford_radix.digits import leading_digit_int
from benford_radix.sequences import (
    SequenceSpec,
    iter_leading_digits,
    leading_digit_power_fast,
)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("-a", type=int, default=2, help="power sequence base")
    parser.add_argument("--k-max", type=int, default=10 ** 4)
    parser.add_argument("--bases", default="2..16", help="<lo>..<hi>")
    args = parser.parse_args()
    lo, hi = (int(x) for x in args.bases.split(".."))

    grand_total = grand_ambiguous = 0
    start = time.perf_counter()
    for base in range(lo, hi + 1):
        total = ambiguous = mismatches = 0
        exact_iter = iter_leading_digits(
            SequenceSpec.powers(args.a, args.k_max + 1), base
        )
        for k, exact in enumerate(exact_iter):
            fast = leading_digit_power_fast(args.a, k, base)
            total += 1
            if not fast.certain:
                ambiguous += 1
                if leading_digit_int(args.a ** k, base) != exact:
                    mismatches += 1
            elif fast.digit != exact:
                mismatches += 1
        grand_total += total
        grand_ambiguous += ambiguous
        print(f"base {base:>2}: {total} exponents, {ambiguous} ambiguous, "
              f"{mismatches} mismatches")
        assert mismatches == 0
    elapsed = time.perf_counter() - start
    print(f"\n{grand_total} pairs checked in {elapsed:.2f} s; "
          f"ambiguity rate {100 * grand_ambiguous / grand_total:.4f}%")


if __name__ == "__main__":
    main()
