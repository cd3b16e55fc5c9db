#!/usr/bin/env python3
"""Generate a table of zeta-zero ordinates in the one-per-line ASCII format.

Each ordinate is located with mpmath's double-precision zero finder and a
random sample is cross-checked against the multi-precision finder. Output
uses 9 decimals, matching the layout of the public zeros1 table.

    python3 scripts/generate_zeros.py 10000 data/zeros_10k.txt
"""
import random
import sys

import mpmath


def main():
    count = int(sys.argv[1])
    out = sys.argv[2]
    fp = mpmath.fp
    ords = []
    for n in range(1, count + 1):
        ords.append(fp.zetazero(n).imag)
        if n % 1000 == 0:
            print(f"{n} zeros", file=sys.stderr, flush=True)
    for a, b in zip(ords, ords[1:]):
        assert a < b, (a, b)
    mpmath.mp.dps = 20
    rng = random.Random(7)
    sample = sorted(set([1, 2, count] + rng.sample(range(1, count + 1), min(40, count))))
    worst = 0.0
    for n in sample:
        exact = float(mpmath.zetazero(n).imag)
        worst = max(worst, abs(exact - ords[n - 1]))
    print(f"max deviation on {len(sample)} sampled zeros: {worst:.3e}", file=sys.stderr)
    assert worst < 1e-8
    with open(out, "w") as f:
        for g in ords:
            f.write(f"{g:.9f}\n")


if __name__ == "__main__":
    main()
