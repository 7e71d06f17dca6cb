"""Slow reference implementations written straight from the definitions.

Nothing here imports the search or measure code under test; only the data
types are shared.  Labels range over every subset of S and every attribute
of A(S) may be queried, so these are exponential and meant for tiny systems.
"""
from __future__ import annotations

import itertools
from functools import lru_cache

from drstree.core import STAR, ProblemKind, RuleSystem

INF = float("inf")


def consistent(eqs) -> bool:
    seen = {}
    for a, v in eqs:
        if seen.setdefault(a, v) != v:
            return False
    return True


def solves_at(system: RuleSystem, kxi: frozenset, label: frozenset, kind: ProblemKind) -> bool:
    """Solving conditions for one complete path with consistent K(xi)."""
    rules = list(system)
    if any(not rules[i].K <= kxi for i in label):
        return False
    others = [r for i, r in enumerate(rules) if i not in label]
    base = kind.base
    if base is ProblemKind.AR:
        return all(not consistent(r.K | kxi) for r in others)
    if base is ProblemKind.AD:
        dz = {rules[i].rhs for i in label}
        return all(not consistent(r.K | kxi) for r in others if r.rhs not in dz)
    if not label:
        return all(not consistent(r.K | kxi) for r in rules)
    return True


def tree_solves(tree, system: RuleSystem, kind: ProblemKind) -> bool:
    from drstree.trees import Terminal

    if tree.flavor != kind.flavor:
        return False

    def rec(node, eqs):
        if isinstance(node, Terminal):
            return not consistent(eqs) or solves_at(system, frozenset(eqs), node.label, kind)
        return all(rec(child, eqs + [(node.attr, v)]) for v, child in node.edges.items())

    return rec(tree.root, [])


def labels(system: RuleSystem):
    idx = range(len(system))
    return [frozenset(c) for n in range(len(system) + 1) for c in itertools.combinations(idx, n)]


def optimum(system: RuleSystem, kind: ProblemKind, families: bool = False):
    """(h, L) by exhaustive recursion; with ``families`` also T."""
    attrs = system.attributes
    doms = {a: system.domain(a, kind.extended) for a in attrs}
    all_labels = labels(system)

    @lru_cache(maxsize=None)
    def valid(key):
        kxi = frozenset(key)
        return [z for z in all_labels if solves_at(system, kxi, z, kind)]

    @lru_cache(maxsize=None)
    def best(key):
        ok = valid(key)
        h, L = (0, 1) if ok else (INF, INF)
        assigned = {a for a, _ in key}
        for a in attrs:
            if a in assigned:
                continue
            subs = [best(tuple(sorted(key + ((a, v),), key=lambda e: e[0]))) for v in doms[a]]
            h = min(h, 1 + max(s[0] for s in subs))
            L = min(L, 1 + sum(s[1] for s in subs))
        return h, L

    @lru_cache(maxsize=None)
    def fams(key):
        out = {frozenset([z]) for z in valid(key)}
        assigned = {a for a, _ in key}
        for a in attrs:
            if a in assigned:
                continue
            acc = {frozenset()}
            for v in doms[a]:
                sub = fams(tuple(sorted(key + ((a, v),), key=lambda e: e[0])))
                acc = {f | g for f in acc for g in sub}
            out |= acc
        return frozenset(out)

    h, L = best(())
    if not families:
        return h, L
    return h, L, min(len(f) for f in fams(()))


def min_cover_size(system: RuleSystem) -> int:
    edges = [r.attrs for r in system if r.attrs]
    nodes = system.attributes
    for size in range(len(nodes) + 1):
        for combo in itertools.combinations(nodes, size):
            if all(e & set(combo) for e in edges):
                return size
    raise AssertionError


def restrict_ref(system: RuleSystem, alpha: dict) -> list:
    """S_alpha as a list of (K, rhs) pairs, deduplicated."""
    out = []
    for r in system:
        if consistent(list(r.K) + list(alpha.items())):
            item = (frozenset(e for e in r.K if e[0] not in alpha), r.rhs)
            if item not in out:
                out.append(item)
    return out


def cover_of(pairs) -> int:
    edges = [frozenset(a for a, _ in k) for k, _ in pairs]
    edges = [e for e in edges if e]
    nodes = sorted(set().union(*edges)) if edges else []
    for size in range(len(nodes) + 1):
        for combo in itertools.combinations(nodes, size):
            if all(e & set(combo) for e in edges):
                return size
    raise AssertionError


def i_sub(pairs, flavor: str):
    zero = [p for p in pairs if not p[0]]
    if not zero:
        return pairs
    if flavor == "SR":
        return zero
    d0 = {rhs for _, rhs in zero}
    return [p for p in pairs if not p[0] or p[1] not in d0]


def plus(pairs):
    if not pairs:
        return []
    d = max(len(k) for k, _ in pairs)
    return [p for p in pairs if len(p[0]) == d] if d > 0 else []


def beta_c_ref(system: RuleSystem, kind: ProblemKind) -> tuple[int, int]:
    """(beta_C, beta_C+) by enumerating every alpha over A(S) explicitly."""
    attrs = system.attributes
    best = best_plus = 0
    for mask in itertools.product((False, True), repeat=len(attrs)):
        chosen = [a for a, m in zip(attrs, mask) if m]
        for vals in itertools.product(*(system.domain(a, kind.extended) for a in chosen)):
            pairs = restrict_ref(system, dict(zip(chosen, vals)))
            if kind in (ProblemKind.EAD, ProblemKind.ESR):
                pairs = i_sub(pairs, kind.base.value)
            best = max(best, cover_of(pairs))
            best_plus = max(best_plus, cover_of(plus(pairs)))
    return best, best_plus


def realizable_ref(system: RuleSystem, values: dict) -> frozenset[int]:
    return frozenset(
        i for i, r in enumerate(system) if all(values[a] == v and v is not STAR for a, v in r.K)
    )
