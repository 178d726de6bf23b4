#!/usr/bin/env python3
"""Write a family algebra to a file usable by the tautilt CLI.

Example:
    python scripts/gen_family.py --kind A2 --n 5 --out a5.json
"""
import argparse
from pathlib import Path

from tautilt.algebra import serialize_algebra
from tautilt.families import family
from tautilt.util import write_text_atomic


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--kind", choices=["A2", "D2"], required=True,
                        help="linear (A2) or fork (D2) radical-square-zero family")
    parser.add_argument("--n", type=int, required=True, help="number of vertices")
    parser.add_argument("--out", type=Path, required=True)
    args = parser.parse_args()
    algebra = family(args.kind, args.n)
    write_text_atomic(args.out, serialize_algebra(algebra))
    print(f"wrote {args.out} (dim {algebra.dimension})")


if __name__ == "__main__":
    main()
