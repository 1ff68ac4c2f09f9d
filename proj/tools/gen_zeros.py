#!/usr/bin/env python3
"""Write the first N ordinates of nontrivial zeta zeros, one per line.

Usage: gen_zeros.py N > zeros.txt   (requires mpmath)
"""
import sys

import mpmath


def main() -> int:
    count = int(sys.argv[1]) if len(sys.argv) > 1 else 2000
    mpmath.mp.dps = 25
    print(f"# first {count} ordinates gamma of zeta zeros rho = 1/2 + i*gamma (mpmath.zetazero)")
    for n in range(1, count + 1):
        print(mpmath.nstr(mpmath.zetazero(n).imag, 15, strip_zeros=False))
    return 0


if __name__ == "__main__":
    sys.exit(main())
