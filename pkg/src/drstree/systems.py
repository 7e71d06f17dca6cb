"""Transformations and cover measures of rule systems."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping

from .core import (
    DEFAULT_LIMITS,
    DrsError,
    Equation,
    Limits,
    ProblemKind,
    Rule,
    RuleSystem,
    TooLargeError,
    Value,
    is_consistent,
    tuples,
)

Alpha = Mapping[int, Value]


def as_alpha(alpha: Alpha | Iterable[tuple[int, Value]]) -> dict[int, Value]:
    """Normalize an equation system to an attribute->value map.

    Raises on inconsistent input.
    """
    if isinstance(alpha, Mapping):
        return dict(alpha)
    eqs = list(alpha)
    if not is_consistent(eqs):
        raise DrsError("inconsistent equation system: " + ", ".join(str(Equation(*e)) for e in eqs))
    return dict(eqs)


def consistent_with(rule: Rule, alpha: Alpha) -> bool:
    return all(alpha.get(a, v) == v for a, v in rule.conditions)


def restrict_rule(rule: Rule, alpha: Alpha) -> Rule:
    """r_alpha: drop the conditions already fixed by ``alpha``."""
    return Rule([c for c in rule.conditions if c.attr not in alpha], rule.rhs)


def surviving(system: RuleSystem, alpha: Alpha) -> list[int]:
    """Indices of rules whose K(r) is consistent with ``alpha``."""
    return [i for i, r in enumerate(system) if consistent_with(r, alpha)]


def restrict(system: RuleSystem, alpha) -> RuleSystem:
    """S_alpha; possibly the empty system."""
    alpha = as_alpha(alpha)
    return RuleSystem.from_unique(
        restrict_rule(r, alpha) for r in system if consistent_with(r, alpha)
    )


def _reduce(system: RuleSystem, same_rhs: bool) -> RuleSystem:
    keep = []
    for r in system:
        dominated = any(
            o.K < r.K and (not same_rhs or o.rhs == r.rhs) for o in system
        )
        if not dominated:
            keep.append(r)
    return RuleSystem(keep, _allow_empty=system.is_empty)


def reduce_sr(system: RuleSystem) -> RuleSystem:
    """R_SR(S): drop every rule whose condition set strictly contains another's."""
    return _reduce(system, same_rhs=False)


def reduce_ad(system: RuleSystem) -> RuleSystem:
    """R_AD(S): like :func:`reduce_sr` but only against rules with the same decision."""
    return _reduce(system, same_rhs=True)


def _flavor_name(flavor) -> str:
    if isinstance(flavor, ProblemKind):
        flavor = flavor.base.value
    flavor = str(flavor).upper()
    if flavor not in ("SR", "AD"):
        raise DrsError(f"flavor must be SR or AD, got {flavor}")
    return flavor


def subsystem_i(system: RuleSystem, flavor) -> RuleSystem:
    """I_SR(S) or I_AD(S). ``flavor`` may also be ESR/EAD (same subsystems)."""
    flavor = _flavor_name(flavor)
    empty_rules = [r for r in system if len(r) == 0]
    if not empty_rules:
        return system
    if flavor == "SR":
        return RuleSystem(empty_rules, _allow_empty=True)
    d0 = {r.rhs for r in empty_rules}
    return RuleSystem(
        [r for r in system if len(r) == 0 or r.rhs not in d0], _allow_empty=True
    )


def subsystem_i_indices(system: RuleSystem, flavor) -> list[int]:
    """Indices (into ``system``) of the rules kept by :func:`subsystem_i`."""
    kept = set(subsystem_i(system, flavor))
    return [i for i, r in enumerate(system) if r in kept]


def s_plus(system: RuleSystem) -> RuleSystem:
    """S+: the rules of maximal length d(S)."""
    if system.n == 0:
        raise DrsError("S+ needs n(S) > 0")
    return RuleSystem([r for r in system if len(r) == system.d])


def all_empty_left(system: RuleSystem) -> bool:
    return all(len(r) == 0 for r in system)


def is_complete(system: RuleSystem, limits: Limits = DEFAULT_LIMITS) -> bool:
    if system.n == 0:
        return True
    if system.tuple_count(False) > limits.max_enum:
        raise TooLargeError(f"|V(S)| = {system.tuple_count(False)} exceeds cap {limits.max_enum}")
    for t in tuples(system):
        if not any(consistent_with(r, dict(t.items)) for r in system):
            return False
    return True


def is_reduced(system: RuleSystem) -> bool:
    n = system.n
    if any(a > n for a in system.attributes):
        return False
    if any(s > len(system.decisions) for s in system.decisions):
        return False
    k = system.k
    if any(v > k for a in system.attributes for v in system.values(a)):
        return False
    return system.d >= 1


@dataclass(frozen=True)
class Hypergraph:
    nodes: frozenset[int]
    edges: tuple[frozenset[int], ...]

    @classmethod
    def of(cls, system: RuleSystem) -> Hypergraph:
        return cls(frozenset(system.attributes), tuple(r.attrs for r in system))

    def is_cover(self, cover: Iterable[int]) -> bool:
        cover = set(cover)
        return cover <= self.nodes and all(e & cover for e in self.edges if e)


def node_cover_exact(graph: Hypergraph, limits: Limits = DEFAULT_LIMITS) -> frozenset[int]:
    """A minimum node cover, found by trying subsets in increasing size."""
    edges = {e for e in graph.edges if e}
    if not edges:
        return frozenset()
    # minimal edges suffice: a superset edge is hit whenever a subset edge is
    edges = [e for e in edges if not any(o < e for o in edges)]
    nodes = sorted(set().union(*edges))
    if len(nodes) > limits.max_cover_nodes:
        raise TooLargeError(f"{len(nodes)} cover nodes exceed cap {limits.max_cover_nodes}")
    bit = {a: 1 << i for i, a in enumerate(nodes)}
    masks = [sum(bit[a] for a in e) for e in edges]
    for size in range(1, len(nodes) + 1):
        for combo in itertools.combinations(range(len(nodes)), size):
            m = 0
            for i in combo:
                m |= 1 << i
            if all(e & m for e in masks):
                return frozenset(nodes[i] for i in combo)
    raise AssertionError("unreachable: all nodes always form a cover")


def beta(system: RuleSystem, limits: Limits = DEFAULT_LIMITS) -> int:
    """beta(S); 0 for the empty system."""
    if system.is_empty:
        return 0
    return len(node_cover_exact(Hypergraph.of(system), limits))


def beta_plus(system: RuleSystem, limits: Limits = DEFAULT_LIMITS) -> int:
    """beta(S+), taken as 0 when S is empty or has only empty left-hand sides."""
    if system.is_empty or system.n == 0:
        return 0
    return beta(s_plus(system), limits)


def greedy_cover(splus: RuleSystem) -> frozenset[int]:
    """Factor-d node cover of G(S+): take whole rules, lowest index first."""
    if splus.is_empty:
        return frozenset()
    d = splus.d
    if any(len(r) != d for r in splus):
        raise DrsError("all rules of S+ must have the same length")
    if d == 0:
        raise DrsError("S+ contains a rule of length 0")
    cover: set[int] = set()
    for r in splus:
        if not (r.attrs & cover):
            cover |= r.attrs
    return frozenset(cover)


def equation_systems(system: RuleSystem, extended: bool, limits: Limits = DEFAULT_LIMITS) -> Iterator[dict[int, Value]]:
    """All consistent alpha over A(S) with values from V_S (or EV_S), including {}."""
    attrs = system.attributes
    count = 1
    for a in attrs:
        count *= len(system.domain(a, extended)) + 1
    if count > limits.max_enum:
        raise TooLargeError(f"{count} equation systems exceed cap {limits.max_enum}")
    choices = [(None,) + system.domain(a, extended) for a in attrs]
    for combo in itertools.product(*choices):
        yield {a: v for a, v in zip(attrs, combo) if v is not None}


@dataclass(frozen=True)
class CoverMeasures:
    beta: int
    beta_plus: int
    beta_C: int
    beta_C_plus: int
    kind: ProblemKind


def beta_measures(system: RuleSystem, kind: ProblemKind, limits: Limits = DEFAULT_LIMITS) -> CoverMeasures:
    """Exact beta, beta+, beta_C and beta_C+ by enumerating E_C(S)."""
    if system.n == 0:
        raise DrsError("beta measures need n(S) > 0")
    use_i = kind in (ProblemKind.EAD, ProblemKind.ESR)
    seen: dict[frozenset, tuple[int, int]] = {}
    best, best_plus = 0, 0
    for alpha in equation_systems(system, kind.extended, limits):
        sa = restrict(system, alpha)
        if use_i:
            sa = subsystem_i(sa, kind)
        key = frozenset(sa.rules)
        if key not in seen:
            seen[key] = (beta(sa, limits), beta_plus(sa, limits))
        b, bp = seen[key]
        best = max(best, b)
        best_plus = max(best_plus, bp)
    return CoverMeasures(
        beta=beta(system, limits),
        beta_plus=beta_plus(system, limits),
        beta_C=best,
        beta_C_plus=best_plus,
        kind=kind,
    )
