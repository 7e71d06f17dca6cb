"""Ground truth: direct solutions, validators and exact optimal-tree search.

The searches work over partial assignments ``alpha`` (the equation system
K(xi) of a path prefix).  A prefix can be closed by a terminal when some
label satisfies the solving conditions for that K(xi); otherwise an
attribute not yet on the path is queried.  Only attributes occurring in a
rule still consistent with ``alpha`` are queried: any other query leaves
every child equivalent to the parent and can be contracted away.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, replace
from typing import Iterable

from .core import (
    DEFAULT_LIMITS,
    Limits,
    ProblemKind,
    RuleSystem,
    TooLargeError,
    ValueTuple,
    check_tuple,
    decisions_of,
    is_consistent,
    realizable,
    tuples,
)
from .systems import consistent_with
from .trees import DecisionGraph, DecisionTree, Terminal, Working

AR, AD, SR = ProblemKind.AR, ProblemKind.AD, ProblemKind.SR


@dataclass(frozen=True)
class SolutionSpec:
    kind: ProblemKind
    realizable: frozenset[int]
    decisions: frozenset[int]
    canonical: frozenset[int]


def _canonical(system: RuleSystem, real: Iterable[int], kind: ProblemKind) -> frozenset[int]:
    real = sorted(real)
    base = kind.base
    if base is AR:
        return frozenset(real)
    if base is SR:
        return frozenset(real[:1])
    first: dict[int, int] = {}
    for i in real:
        first.setdefault(system[i].rhs, i)
    return frozenset(first.values())


def solve_direct(system: RuleSystem, t: ValueTuple, kind: ProblemKind) -> SolutionSpec:
    """The realizable set for ``t`` and the kind's canonical answer.

    Canonical answers: AD keeps the lowest-index realizable rule per
    decision, SR the lowest-index realizable rule (or nothing).
    """
    check_tuple(system, t, kind.extended)
    real = realizable(system, t)
    return SolutionSpec(kind, real, decisions_of(system, real), _canonical(system, real, kind))


def validate_solution(system: RuleSystem, t: ValueTuple, kind: ProblemKind, answer: Iterable[int]) -> bool:
    z = frozenset(answer)
    real = realizable(system, t)
    if not z <= real:
        return False
    base = kind.base
    if base is AR:
        return z == real
    if base is AD:
        return decisions_of(system, real) <= decisions_of(system, z)
    return bool(z) or not real


def _label_ok(system: RuleSystem, alpha: dict, label: frozenset[int], kind: ProblemKind) -> bool:
    for i in label:
        if not all(alpha.get(a) == v for a, v in system[i].conditions):
            return False
    base = kind.base
    if base is AR:
        others = (r for i, r in enumerate(system) if i not in label)
        return not any(consistent_with(r, alpha) for r in others)
    if base is AD:
        dz = decisions_of(system, label)
        return not any(
            consistent_with(r, alpha) for i, r in enumerate(system) if i not in label and r.rhs not in dz
        )
    if not label:
        return not any(consistent_with(r, alpha) for r in system)
    return True


def validate_tree(tree: DecisionTree, system: RuleSystem, kind: ProblemKind) -> bool:
    """Check the solving conditions on every complete path with consistent K(xi)."""
    if tree.flavor != kind.flavor:
        return False
    for path in tree.complete_paths():
        if not is_consistent(path.steps):
            continue
        if not _label_ok(system, dict(path.steps), path.label, kind):
            return False
    return True


def validate_graph(graph: DecisionGraph, system: RuleSystem, kind: ProblemKind, limits: Limits = DEFAULT_LIMITS) -> bool:
    """Run ``graph`` on every tuple of V(S) / EV(S) and check each answer."""
    if graph.flavor != kind.flavor:
        return False
    count = system.tuple_count(kind.extended)
    if count > limits.max_enum:
        raise TooLargeError(f"{count} tuples exceed cap {limits.max_enum}")
    return all(
        validate_solution(system, t, kind, graph.evaluate(t)) for t in tuples(system, kind.extended)
    )


class _Search:
    def __init__(self, system: RuleSystem, kind: ProblemKind):
        self.system = system
        self.kind = kind
        self.conds = [r.conditions for r in system]
        self.rhs = [r.rhs for r in system]
        self.domains = {a: system.domain(a, kind.extended) for a in system.attributes}
        self._cands: dict[tuple, list[frozenset[int]]] = {}

    def classify(self, alpha: dict):
        cons, real = [], []
        for i, conds in enumerate(self.conds):
            ok, full = True, True
            for a, v in conds:
                w = alpha.get(a)
                if w is None:
                    full = False
                elif w != v:
                    ok = False
                    break
            if ok:
                cons.append(i)
                if full:
                    real.append(i)
        return cons, real

    def candidates(self, key: tuple) -> list[frozenset[int]]:
        """Valid terminal labels at ``key``, canonical one first.

        AD labels are restricted to one rule per decision and SR labels to
        singletons; any solving tree can be relabeled this way without
        adding distinct labels.
        """
        hit = self._cands.get(key)
        if hit is not None:
            return hit
        cons, real = self.classify(dict(key))
        base = self.kind.base
        out: list[frozenset[int]] = []
        if base is AR:
            if len(cons) == len(real):
                out = [frozenset(real)]
        elif base is AD:
            if {self.rhs[i] for i in cons} <= {self.rhs[i] for i in real}:
                by_dec: dict[int, list[int]] = {}
                for i in real:
                    by_dec.setdefault(self.rhs[i], []).append(i)
                out = [frozenset(c) for c in itertools.product(*by_dec.values())]
        else:
            if not cons:
                out = [frozenset()]
            elif real:
                out = [frozenset([i]) for i in real]
        self._cands[key] = out
        return out

    def relevant(self, key: tuple) -> list[int]:
        alpha = dict(key)
        cons, _ = self.classify(alpha)
        return sorted({a for i in cons for a, _ in self.conds[i] if a not in alpha})

    @staticmethod
    def child(key: tuple, a: int, v) -> tuple:
        return tuple(sorted(key + ((a, v),), key=lambda kv: kv[0]))

    def build(self, key: tuple, choose) -> DecisionTree:
        """Materialize a tree; ``choose(key)`` returns a label or an attribute."""

        def rec(key):
            c = choose(key)
            if isinstance(c, frozenset):
                return Terminal(c)
            return Working(c, {v: rec(self.child(key, c, v)) for v in self.domains[c]})

        return DecisionTree(rec(key), self.system, self.kind.flavor)


def _check_caps(system: RuleSystem, max_attrs: int, max_values: int | None = None) -> None:
    if system.n > max_attrs:
        raise TooLargeError(f"n(S)={system.n} exceeds search cap {max_attrs}")
    if max_values is not None and system.k > max_values:
        raise TooLargeError(f"k(S)={system.k} exceeds search cap {max_values}")


def min_depth(system: RuleSystem, kind: ProblemKind, limits: Limits = DEFAULT_LIMITS) -> tuple[int, DecisionTree]:
    """Exact h_C(S) with a witness tree of that depth."""
    _check_caps(system, limits.max_depth_attrs, limits.max_depth_values)
    s = _Search(system, kind)
    memo: dict[tuple, tuple[int, object]] = {}

    def depth(key):
        hit = memo.get(key)
        if hit is not None:
            return hit[0]
        cands = s.candidates(key)
        if cands:
            memo[key] = (0, cands[0])
            return 0
        best, arg = math.inf, None
        for a in s.relevant(key):
            worst = 0
            for v in s.domains[a]:
                worst = max(worst, 1 + depth(s.child(key, a, v)))
                if worst >= best:
                    break
            if worst < best:
                best, arg = worst, a
        memo[key] = (best, arg)
        return best

    h = depth(())
    return h, s.build((), lambda k: memo[k][1])


def min_nodes(system: RuleSystem, kind: ProblemKind, limits: Limits = DEFAULT_LIMITS) -> tuple[int, DecisionTree]:
    """Exact L_C(S) with a witness tree of that size."""
    _check_caps(system, limits.max_size_attrs)
    s = _Search(system, kind)
    memo: dict[tuple, tuple[int, object]] = {}

    def size(key):
        hit = memo.get(key)
        if hit is not None:
            return hit[0]
        cands = s.candidates(key)
        if cands:
            memo[key] = (1, cands[0])
            return 1
        best, arg = math.inf, None
        for a in s.relevant(key):
            total = 1
            for v in s.domains[a]:
                total += size(s.child(key, a, v))
                if total >= best:
                    break
            if total < best:
                best, arg = total, a
        memo[key] = (best, arg)
        return best

    L = size(())
    return L, s.build((), lambda k: memo[k][1])


def _minimal(family: Iterable[frozenset]) -> list[frozenset]:
    out: list[frozenset] = []
    for g in sorted(set(family), key=len):
        if not any(h <= g for h in out):
            out.append(g)
    return out


def min_distinct_terminals(system: RuleSystem, kind: ProblemKind, limits: Limits = DEFAULT_LIMITS) -> tuple[int, DecisionTree]:
    """Exact T_C(S) with a witness tree using that many distinct labels.

    Distinct-label counts do not add up over subtrees, so each prefix keeps
    the antichain of inclusion-minimal label families that suffice to finish
    it; families larger than a known upper bound are dropped.
    """
    _check_caps(system, limits.max_size_attrs)
    s = _Search(system, kind)
    _, upper_tree = min_depth(system, kind, replace(
        limits,
        max_depth_attrs=max(limits.max_depth_attrs, system.n),
        max_depth_values=max(limits.max_depth_values, system.k),
    ))
    bound = len({n.label for n in upper_tree.nodes if isinstance(n, Terminal)})
    memo: dict[tuple, list[frozenset]] = {}

    def families(key):
        hit = memo.get(key)
        if hit is not None:
            return hit
        found = [frozenset([lab]) for lab in s.candidates(key)]
        for a in s.relevant(key):
            prod = [frozenset()]
            for v in s.domains[a]:
                sub = families(s.child(key, a, v))
                prod = _minimal(g | h for g in prod for h in sub if len(g | h) <= bound)
                if len(prod) > limits.max_antichain:
                    raise TooLargeError(f"label-family antichain exceeds cap {limits.max_antichain}")
                if not prod:
                    break
            found.extend(prod)
        memo[key] = _minimal(found)
        return memo[key]

    top = families(())
    best = min(top, key=lambda g: (len(g), sorted(sorted(lab) for lab in g)))

    def choose(key):
        for lab in s.candidates(key):
            if lab in best:
                return lab
        for a in s.relevant(key):
            if all(
                any(g <= best for g in families(s.child(key, a, v))) for v in s.domains[a]
            ):
                return a
        raise AssertionError("witness reconstruction failed")

    return len(best), s.build((), choose)


def exact_measures(system: RuleSystem, kind: ProblemKind, limits: Limits = DEFAULT_LIMITS) -> dict[str, int]:
    """h, L and T for one kind; convenience for sweeps."""
    return {
        "h": min_depth(system, kind, limits)[0],
        "L": min_nodes(system, kind, limits)[0],
        "T": min_distinct_terminals(system, kind, limits)[0],
    }

