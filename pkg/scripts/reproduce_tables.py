#!/usr/bin/env python3
"""Print the two bundled reference comparisons using the library directly.

Equivalent to `benford-radix table1` followed by `benford-radix table2 -n 13`.
"""

import argparse

from benford_radix.cli import main as cli_main


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("-n", type=int, default=13, help="cross-base sample size")
    args = parser.parse_args()

    print("== first-digit law vs the 1938 reference column ==")
    cli_main(["table1"])
    print()
    print(f"== leading-1 frequency of the doubling sequence, N = {args.n} ==")
    cli_main(["table2", "-n", str(args.n)])


if __name__ == "__main__":
    main()
