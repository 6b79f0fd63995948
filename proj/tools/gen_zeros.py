#!/usr/bin/env python3
"""Write the first N nontrivial zeta zero ordinates, one per line.

Usage: gen_zeros.py COUNT OUTFILE

Ordinates are printed with 9 decimals, matching the common public
ordinate-list layout. A sample of values is cross-checked against
multiprecision evaluation before writing.
"""
import sys

import mpmath


def main():
    count = int(sys.argv[1])
    out = sys.argv[2]
    zeros = [float(mpmath.fp.zetazero(n).imag) for n in range(1, count + 1)]
    mpmath.mp.dps = 25
    for n in sorted({1, 2, 100, count // 2, count}):
        exact = mpmath.zetazero(n).imag
        if abs(zeros[n - 1] - float(exact)) > 1e-8:
            raise SystemExit(f"zero {n} disagrees: {zeros[n - 1]} vs {exact}")
    for a, b in zip(zeros, zeros[1:]):
        if not b > a:
            raise SystemExit("ordinates not strictly ascending")
    with open(out, "w") as f:
        for z in zeros:
            f.write(f"{z:.9f}\n")


if __name__ == "__main__":
    main()
