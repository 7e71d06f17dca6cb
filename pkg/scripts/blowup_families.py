"""Exact optima of the witness families next to their exponential targets,
plus encoding size and gadget-chain node counts for larger parameters."""
import argparse
import math

from drstree.constructions import build_dag_chain, build_dagw_chain, chain_node_count, gen_family
from drstree.core import Limits, ProblemKind, TooLargeError
from drstree.oracle import min_distinct_terminals, min_nodes
from drstree.textio import size_of

K = ProblemKind
EXACT = [
    ("l9", dict(k=2, d=2), min_nodes, K.SR, "L_SR", lambda n: 2 ** n),
    ("l10", dict(d=2), min_nodes, K.ESR, "L_ESR", lambda n: 2 ** n),
    ("l11a", dict(d=1), min_distinct_terminals, K.EAD, "T_EAD", lambda n: 2 ** (n + 1)),
    ("l11b", dict(k=2, d=1), min_distinct_terminals, K.AD, "T_AD", lambda n: 2 ** n),
]


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=3, help="largest n for exact search")
    ap.add_argument("--size-n", type=int, default=8, help="largest n for size and chain counts")
    args = ap.parse_args()
    limits = Limits(max_size_attrs=12, max_depth_attrs=12, max_depth_values=4)

    print("exact optima")
    print(f"{'family':8}{'n':>3}{'measure':>8}{'value':>8}{'target':>8}")
    for which, kw, search, kind, name, target in EXACT:
        for n in range(1, args.max_n + 1):
            s = gen_family(which, n=n, **kw)
            try:
                value = search(s, kind, limits)[0]
            except TooLargeError:
                value = "cap"
            print(f"{which:8}{n:3}{name:>8}{value!s:>8}{target(n):8}")

    print("\nencoding size and chain nodes")
    print(f"{'family':8}{'n':>3}{'|S|':>5}{'d':>3}{'size':>7}{'bound':>9}{'chain':>7}{'SR':>7}")
    for which, kw, *_ in EXACT:
        for n in range(1, args.size_n + 1):
            s = gen_family(which, n=n, **kw)
            m = len(s) * s.d
            bound = 10 * m * (math.log2(m) + 1)
            nodes = len(build_dagw_chain(s, K.AR).nodes)
            assert nodes == chain_node_count(s) == len(build_dag_chain(s, K.ESR).nodes)
            sr_nodes = len(build_dag_chain(s, K.SR).nodes)
            print(f"{which:8}{n:3}{len(s):5}{s.d:3}{size_of(s):7}{bound:9.0f}{nodes:7}{sr_nodes:7}")


if __name__ == "__main__":
    main()
