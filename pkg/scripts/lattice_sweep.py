"""Sweep exact h, L and T over the small and random corpora.

Prints, for each ordered pair of kinds compared by the lattices, how often
the inequality is strict, tight, or broken.
"""
import argparse
import collections
import time

from drstree.core import ALL_KINDS, ProblemKind
from drstree.corpus import random_systems, small_systems
from drstree.oracle import exact_measures

K = ProblemKind
PAIRS = [(K.ESR, K.EAD), (K.EAD, K.EAR), (K.SR, K.AD), (K.AD, K.AR), (K.SR, K.ESR), (K.AD, K.EAD), (K.AR, K.EAR)]


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--random", type=int, default=200, help="number of random systems")
    ap.add_argument("--seed", type=int, default=20240611)
    args = ap.parse_args()

    corpus = list(small_systems()) + random_systems(
        args.random, seed=args.seed, max_attrs=5, max_values=3, max_rules=5, max_len=3)
    start = time.perf_counter()
    tally = collections.Counter()
    n_bound = 0
    for s in corpus:
        m = {k: exact_measures(s, k) for k in ALL_KINDS}
        for key in "hLT":
            for lo, hi in PAIRS:
                a, b = m[lo][key], m[hi][key]
                tally[key, lo, hi, "<" if a < b else "=" if a == b else ">"] += 1
        n_bound += m[K.EAR]["h"] > s.n

    print(f"{len(corpus)} systems in {time.perf_counter() - start:.1f}s")
    print(f"{'measure':8}{'pair':14}{'strict':>8}{'equal':>8}{'broken':>8}")
    for key in "hLT":
        for lo, hi in PAIRS:
            row = [tally[key, lo, hi, c] for c in "<=>"]
            print(f"{key:8}{f'{lo}<={hi}':14}{row[0]:8}{row[1]:8}{row[2]:8}")
    print(f"h_EAR > n(S): {n_bound}")


if __name__ == "__main__":
    main()
