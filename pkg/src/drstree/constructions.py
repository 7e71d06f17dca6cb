"""Polynomial-time tree and graph builders, and the lower-bound families."""
from __future__ import annotations

from .core import STAR, DrsError, ProblemKind, Rule, RuleSystem
from .trees import (
    DecisionGraph,
    DecisionGraphWithWriting,
    DecisionTree,
    Sink,
    Terminal,
    Working,
    Writing,
)


def _length0(system: RuleSystem) -> int | None:
    return next((i for i, r in enumerate(system) if len(r) == 0), None)


def build_path_tree_k1(system: RuleSystem, kind=ProblemKind.AR) -> DecisionTree:
    """Single-path o-tree for a system with one value per attribute.

    The path reads every attribute in index order and ends in a terminal
    holding all rules, which is realizable-exact since V(S) has one tuple.
    """
    kind = ProblemKind.coerce(kind)
    if kind not in (ProblemKind.SR, ProblemKind.AD, ProblemKind.AR):
        raise DrsError(f"path construction solves SR, AD or AR, not {kind}")
    if system.n == 0:
        raise DrsError("path construction needs n(S) > 0")
    if system.k != 1:
        raise DrsError(f"path construction needs k(S) = 1, got {system.k}")
    node = Terminal(frozenset(range(len(system))))
    for a in reversed(system.attributes):
        (v,) = system.values(a)
        node = Working(a, {v: node})
    return DecisionTree(node, system, "o")


def _rule_for(system: RuleSystem, a: int, v: int) -> int:
    for i, r in enumerate(system):
        if len(r) == 1 and r.conditions[0] == (a, v):
            return i
    raise AssertionError(f"no rule with left-hand side a{a}={v}")


def build_tree_d1(system: RuleSystem, kind=ProblemKind.SR) -> DecisionTree:
    """Tree for SR or ESR when every rule has at most one condition."""
    kind = ProblemKind.coerce(kind)
    if kind not in (ProblemKind.SR, ProblemKind.ESR):
        raise DrsError(f"d(S)=1 construction solves SR or ESR, not {kind}")
    if system.d > 1:
        raise DrsError(f"d(S)=1 construction needs d(S) <= 1, got {system.d}")
    zero = _length0(system)
    if zero is not None:
        return DecisionTree(Terminal(frozenset([zero])), system, kind.flavor)
    attrs = system.attributes
    if kind is ProblemKind.SR:
        a = attrs[0]
        root = Working(a, {v: Terminal(frozenset([_rule_for(system, a, v)])) for v in system.values(a)})
        return DecisionTree(root, system, "o")
    # star spine: follow * through every attribute, branching to the
    # matching one-condition rule on each numeric value
    node = Terminal(frozenset())
    for a in reversed(attrs):
        edges = {v: Terminal(frozenset([_rule_for(system, a, v)])) for v in system.values(a)}
        edges[STAR] = node
        node = Working(a, edges)
    return DecisionTree(node, system, "e")


def _gadget(system: RuleSystem, r: int, extended: bool, hit, miss):
    """Working nodes testing rule ``r`` in order; success goes to ``hit``,
    any other value to ``miss``.  Returns the root."""
    rule = system[r]
    node = hit
    for a, v in reversed(rule.conditions):
        node = Working(a, {w: (node if w == v else miss) for w in system.domain(a, extended)})
    return node


def build_rule_gadget(system: RuleSystem, r: int, kind) -> DecisionGraph:
    """The m+2 node graph deciding whether rule ``r`` is realizable."""
    kind = ProblemKind.coerce(kind)
    if len(system[r]) == 0:
        raise DrsError("rule gadget needs a rule with at least one condition")
    root = _gadget(system, r, kind.extended, Terminal(frozenset([r])), Terminal(frozenset()))
    return DecisionGraph(root, system, kind.flavor)


def build_dag_chain(system: RuleSystem, kind=ProblemKind.SR) -> DecisionGraph:
    """Rule gadgets chained in rule order, each miss falling into the next."""
    kind = ProblemKind.coerce(kind)
    if kind.base is not ProblemKind.SR:
        raise DrsError(f"chained gadgets solve SR or ESR, not {kind}")
    zero = _length0(system)
    if zero is not None:
        return DecisionGraph(Terminal(frozenset([zero])), system, kind.flavor)
    node = Terminal(frozenset())
    for r in reversed(range(len(system))):
        node = _gadget(system, r, kind.extended, Terminal(frozenset([r])), node)
    return DecisionGraph(node, system, kind.flavor)


def build_writing_gadget(system: RuleSystem, r: int, kind) -> DecisionGraphWithWriting:
    """Like the rule gadget, but a match writes ``r`` before reaching ``W``."""
    kind = ProblemKind.coerce(kind)
    sink = Sink()
    root = _gadget(system, r, kind.extended, Writing(r, sink), sink)
    return DecisionGraphWithWriting(root, system, kind.flavor)


def build_dagw_chain(system: RuleSystem, kind=ProblemKind.AR) -> DecisionGraphWithWriting:
    """Writing gadgets for every rule in sequence; W ends as the realizable set."""
    kind = ProblemKind.coerce(kind)
    node = Sink()
    for r in reversed(range(len(system))):
        node = _gadget(system, r, kind.extended, Writing(r, node), node)
    return DecisionGraphWithWriting(node, system, kind.flavor)


def chain_node_count(system: RuleSystem) -> int:
    """Node count of the writing chain, and of the ESR chain when no rule is
    empty.  For SR it is only an upper bound: a miss branch on an attribute
    with a single value has no entering edge and is left out."""
    return sum(len(r) + 1 for r in system) + 1


def _zeros(attrs, rhs: int, value: int = 0) -> Rule:
    return Rule([(a, value) for a in attrs], rhs)


def gen_family(which: str, n: int = 1, k: int = 2, d: int = 2) -> RuleSystem:
    """Witness systems whose optimal trees grow exponentially in ``n``.

    ``l9``: pairs of rules on (a_{2i-1}, a_{2i}) with values 0 and 1, extra
    values on (a1, a2) up to k-1 and a d-long tail, all with decision 0.
    ``l10``: only the zero pairs plus the tail.
    ``l11a``: (a_i=0)->i for i <= n and a d-long tail deciding n+1.
    ``l11b``: (a_i=0)->2i-1 and (a_i=1)->2i, a tail deciding 0 and extra
    values on a1 up to k-1.
    """
    which = which.lower()
    if n < 1:
        raise DrsError("family parameter n must be at least 1")
    rules: list[Rule] = []
    if which == "l9":
        if d < 2 or k < 2:
            raise DrsError("l9 needs d >= 2 and k >= 2")
        for i in range(1, n + 1):
            rules.append(_zeros((2 * i - 1, 2 * i), 0, 0))
            rules.append(_zeros((2 * i - 1, 2 * i), 0, 1))
        rules += [_zeros((1, 2), 0, j) for j in range(2, k)]
        rules.append(_zeros(range(2 * n + 1, 2 * n + d + 1), 0))
    elif which == "l10":
        if d < 2:
            raise DrsError("l10 needs d >= 2")
        rules = [_zeros((2 * i - 1, 2 * i), 0) for i in range(1, n + 1)]
        rules.append(_zeros(range(2 * n + 1, 2 * n + d + 1), 0))
    elif which == "l11a":
        if d < 1:
            raise DrsError("l11a needs d >= 1")
        rules = [Rule([(i, 0)], i) for i in range(1, n + 1)]
        rules.append(_zeros(range(n + 1, n + d + 1), n + 1))
    elif which == "l11b":
        if d < 1 or k < 2:
            raise DrsError("l11b needs d >= 1 and k >= 2")
        for i in range(1, n + 1):
            rules.append(Rule([(i, 0)], 2 * i - 1))
            rules.append(Rule([(i, 1)], 2 * i))
        rules.append(_zeros(range(n + 1, n + d + 1), 0))
        rules += [Rule([(1, j)], 0) for j in range(2, k)]
    else:
        raise DrsError(f"unknown family {which!r}; choose l9, l10, l11a or l11b")
    return RuleSystem(rules)


FAMILIES = ("l9", "l10", "l11a", "l11b")
