#!/usr/bin/env python3
"""Reproduce both family count tables and diff them against the reported values.

The default range stops at n = 8; --full extends to the complete reported
columns (n = 10).  Exit status is the number of discrepancies that are NOT
corroborated by the recurrence and closed form, so known misprints in the
reported tables do not fail the run.
"""
import argparse
import sys

from tautilt.verify import reproduce_tables


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--full", action="store_true", help="run the n = 10 columns")
    parser.add_argument("--nA", type=int, default=None)
    parser.add_argument("--nD", type=int, default=None)
    args = parser.parse_args()
    n_a = args.nA if args.nA is not None else (10 if args.full else 8)
    n_d = args.nD if args.nD is not None else (10 if args.full else 8)
    result = reproduce_tables(n_a, n_d)
    print(result.render(), end="")
    sys.exit(result.hard_failures)


if __name__ == "__main__":
    main()
