"""How close the path simulators come to their depth guarantees.

For every corpus system and kind, compares the deepest simulated path with
the guarantee and with the exact optimum depth.
"""
import argparse
import collections

from drstree.core import ALL_KINDS, tuples
from drstree.corpus import random_systems, small_systems
from drstree.oracle import min_depth
from drstree.pathsim import query_bound, simulate


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--random", type=int, default=200)
    ap.add_argument("--seed", type=int, default=20240611)
    args = ap.parse_args()
    corpus = list(small_systems()) + random_systems(
        args.random, seed=args.seed, max_attrs=5, max_values=3, max_rules=5, max_len=3)

    rows = collections.defaultdict(lambda: [0, 0, 0, 0.0, 0])
    for s in corpus:
        if s.n == 0:
            continue
        for kind in ALL_KINDS:
            deepest = max(simulate(s, t, kind).queried for t in tuples(s, kind.extended))
            bound = query_bound(s, kind)
            h = min_depth(s, kind)[0]
            row = rows[kind]
            row[0] += 1
            row[1] += deepest == h
            row[2] += deepest == bound
            row[3] = max(row[3], deepest / h if h else 0.0)
            row[4] += deepest > bound
    print(f"{'kind':6}{'systems':>9}{'optimal':>9}{'at bound':>10}{'max ratio':>11}{'over':>6}")
    for kind in ALL_KINDS:
        n, opt, at, ratio, over = rows[kind]
        print(f"{kind.value:6}{n:9}{opt:9}{at:10}{ratio:11.2f}{over:6}")


if __name__ == "__main__":
    main()
