"""Decision trees, acyclic decision graphs and graphs with writing.

Nodes are plain mutable objects compared by identity; a graph is a root plus
the system it was built over.  Terminal labels hold rule indices into that
system.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Union

from .core import (
    STAR,
    DrsError,
    Equation,
    RuleSystem,
    Value,
    ValueTuple,
    value_key,
)


@dataclass(eq=False)
class Terminal:
    label: frozenset[int]


@dataclass(eq=False)
class Working:
    attr: int
    edges: dict[Value, "Node"] = field(default_factory=dict)

    def __post_init__(self):
        self.edges = dict(sorted(self.edges.items(), key=lambda kv: value_key(kv[0])))


@dataclass(eq=False)
class Writing:
    rule: int
    next: "Node"


@dataclass(eq=False)
class Sink:
    """The single ``W`` terminal of a graph with writing."""


Node = Union[Terminal, Working, Writing, Sink]


class EvaluationError(DrsError):
    pass


def successors(node: Node) -> list[Node]:
    if isinstance(node, Working):
        return list(node.edges.values())
    if isinstance(node, Writing):
        return [node.next]
    return []


def walk(root: Node) -> list[Node]:
    """Distinct nodes reachable from ``root`` in deterministic preorder."""
    out, seen, stack = [], set(), [root]
    while stack:
        node = stack.pop()
        if id(node) in seen:
            continue
        seen.add(id(node))
        out.append(node)
        stack.extend(reversed(successors(node)))
    return out


def postorder(root: Node) -> list[Node]:
    """Distinct reachable nodes, every node after all of its successors."""
    out, done, stack = [], set(), [(root, False)]
    while stack:
        node, expanded = stack.pop()
        if id(node) in done:
            continue
        if expanded:
            done.add(id(node))
            out.append(node)
            continue
        stack.append((node, True))
        stack.extend((c, False) for c in reversed(successors(node)) if id(c) not in done)
    return out


class DecisionGraph:
    """A rooted acyclic decision graph over a rule system."""

    allowed = (Working, Terminal)

    def __init__(self, root: Node, system: RuleSystem, flavor: str):
        if flavor not in ("o", "e"):
            raise DrsError(f"flavor must be 'o' or 'e', got {flavor!r}")
        self.root = root
        self.system = system
        self.flavor = flavor
        self.nodes = walk(root)
        self._check()

    @property
    def extended(self) -> bool:
        return self.flavor == "e"

    def _check(self) -> None:
        attrs = set(self.system.attributes)
        for node in self.nodes:
            if not isinstance(node, self.allowed):
                raise DrsError(f"{type(node).__name__} node not allowed in {type(self).__name__}")
            if isinstance(node, Working):
                if node.attr not in attrs:
                    raise DrsError(f"working node queries a{node.attr} outside A(S)")
                want = set(self.system.domain(node.attr, self.extended))
                if set(node.edges) != want:
                    raise DrsError(
                        f"node a{node.attr} has edges {sorted(map(str, node.edges))}, "
                        f"expected {sorted(map(str, want))}"
                    )
            if isinstance(node, Terminal):
                bad = [i for i in node.label if not 0 <= i < len(self.system)]
                if bad:
                    raise DrsError(f"terminal label refers to unknown rules {bad}")
        self._check_acyclic()

    def _check_acyclic(self) -> None:
        state: dict[int, int] = {}
        stack = [(self.root, iter(successors(self.root)))]
        state[id(self.root)] = 1
        while stack:
            node, it = stack[-1]
            nxt = next(it, None)
            if nxt is None:
                state[id(node)] = 2
                stack.pop()
                continue
            s = state.get(id(nxt), 0)
            if s == 1:
                raise DrsError("decision graph contains a directed cycle")
            if s == 0:
                state[id(nxt)] = 1
                stack.append((nxt, iter(successors(nxt))))

    def step(self, node: Working, t: ValueTuple) -> Node:
        v = t.get(node.attr)
        if v is None:
            raise EvaluationError(f"tuple has no value for a{node.attr}")
        if v in node.edges:
            return node.edges[v]
        if self.extended:
            return node.edges[STAR]
        raise EvaluationError(f"no edge for a{node.attr}={v} in an o-flavor graph")

    def evaluate(self, t: ValueTuple) -> frozenset[int]:
        node = self.root
        while isinstance(node, Working):
            node = self.step(node, t)
        return node.label


class DecisionTree(DecisionGraph):
    """A decision graph in which every node has at most one parent."""

    def _check(self) -> None:
        super()._check()
        seen: set[int] = set()
        for node in self.nodes:
            for child in successors(node):
                if id(child) in seen or child is self.root:
                    raise DrsError("node with more than one entering edge in a decision tree")
                seen.add(id(child))

    def complete_paths(self) -> Iterator[CompletePath]:
        def rec(node, steps):
            if isinstance(node, Terminal):
                yield CompletePath(tuple(steps), node.label)
                return
            for v, child in node.edges.items():
                steps.append(Equation(node.attr, v))
                yield from rec(child, steps)
                steps.pop()

        yield from rec(self.root, [])

    def evaluate_path(self, t: ValueTuple) -> tuple[CompletePath, frozenset[int]]:
        node, steps = self.root, []
        while isinstance(node, Working):
            nxt = self.step(node, t)
            v = next(k for k, c in node.edges.items() if c is nxt)
            steps.append(Equation(node.attr, v))
            node = nxt
        return CompletePath(tuple(steps), node.label), node.label


class DecisionGraphWithWriting(DecisionGraph):
    """Acyclic graph whose writing nodes add rules to W on the way to the sink."""

    allowed = (Working, Writing, Sink)

    def _check(self) -> None:
        super()._check()
        sinks = [n for n in self.nodes if isinstance(n, Sink)]
        if len(sinks) != 1:
            raise DrsError(f"graph with writing needs exactly one terminal, found {len(sinks)}")
        for node in self.nodes:
            if isinstance(node, Writing) and not 0 <= node.rule < len(self.system):
                raise DrsError(f"writing node refers to unknown rule {node.rule}")

    def evaluate(self, t: ValueTuple) -> frozenset[int]:
        written: set[int] = set()
        node = self.root
        while not isinstance(node, Sink):
            if isinstance(node, Writing):
                written.add(node.rule)
                node = node.next
            else:
                node = self.step(node, t)
        return frozenset(written)


@dataclass(frozen=True)
class CompletePath:
    steps: tuple[Equation, ...]
    label: frozenset[int]

    @property
    def equations(self) -> frozenset[Equation]:
        """K(xi)."""
        return frozenset(self.steps)

    @property
    def attributes(self) -> frozenset[int]:
        return frozenset(e.attr for e in self.steps)

    @property
    def depth(self) -> int:
        return len(self.steps)


def eval_tree(tree: DecisionTree, t: ValueTuple) -> tuple[CompletePath, frozenset[int]]:
    return tree.evaluate_path(t)


def eval_graph(graph: DecisionGraph, t: ValueTuple) -> frozenset[int]:
    return graph.evaluate(t)


def eval_graph_writing(graph: DecisionGraphWithWriting, t: ValueTuple) -> frozenset[int]:
    return graph.evaluate(t)


@dataclass(frozen=True)
class TreeMetrics:
    h: int
    L: int
    T: int


def metrics(graph: DecisionGraph) -> TreeMetrics:
    """Depth (working nodes on the longest root-terminal path), node count and
    number of distinct terminal labels."""
    depth: dict[int, int] = {}
    for node in postorder(graph.root):
        below = max((depth[id(c)] for c in successors(node)), default=0)
        depth[id(node)] = below + (1 if isinstance(node, Working) else 0)
    labels = {n.label for n in graph.nodes if isinstance(n, Terminal)}
    sinks = sum(isinstance(n, Sink) for n in graph.nodes)
    return TreeMetrics(h=depth[id(graph.root)], L=len(graph.nodes), T=len(labels) + sinks)


def prune_star(tree: DecisionTree) -> DecisionTree:
    """o(Gamma): drop every node reached through an edge labeled ``*``."""
    if tree.flavor != "e":
        raise DrsError("prune_star expects an e-flavor tree")

    def copy(node):
        if isinstance(node, Terminal):
            return Terminal(node.label)
        return Working(node.attr, {v: copy(c) for v, c in node.edges.items() if v is not STAR})

    return DecisionTree(copy(tree.root), tree.system, "o")
