"""Sample triangle counts and tabulate the two-torus invariants.

Checks sigma^2 + 4 tau = Delta, shift invariance and the mod-2 list on random
integer data, and prints the distribution of Delta mod 4.
"""
import argparse
from collections import Counter
from fractions import Fraction

import numpy as np

from widevar.torus2 import TriangleCounts, mod2_report, sigma_tau_from_counts, sigma_tau_shift, triangle_discriminant


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--samples", type=int, default=100_000)
    ap.add_argument("--bound", type=int, default=50)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    rng = np.random.default_rng(args.seed)
    mod4 = Counter()
    failures = Counter()
    for _ in range(args.samples):
        c = TriangleCounts(*(int(x) for x in rng.integers(-args.bound, args.bound + 1, 4)))
        d = triangle_discriminant(c)
        st = sigma_tau_from_counts(c)
        mod4[d % 4] += 1
        r = Fraction(int(rng.integers(-20, 21)), int(rng.integers(1, 8)))
        if sigma_tau_shift(st, r).discriminant != d:
            failures["shift"] += 1
        for ch in mod2_report(d, c, st.tau):
            if not ch.passed:
                failures[ch.name] += 1
    print(f"{args.samples} samples, counts in [-{args.bound}, {args.bound}]")
    print("Delta mod 4:", {k: mod4[k] for k in range(4)})
    print("failures:", dict(failures) or "none")
    return 1 if failures or mod4[2] or mod4[3] else 0


if __name__ == "__main__":
    raise SystemExit(main())
