"""Text formats: the ``.drs`` rule-system syntax, encoded size, and DOT.

Default ``.drs`` syntax, one rule per ``;``::

    (a1=0)&(a2=1)->3;
    ->5;

Whitespace is ignored and ``#`` starts a comment.  The encoding used for
size measurement writes ``∧`` and ``→`` (one symbol each) with every number
in binary and no whitespace; :func:`parse` accepts both spellings.
"""
from __future__ import annotations

import re

from .core import STAR, DrsError, Rule, RuleSystem, format_value
from .trees import (
    DecisionGraph,
    DecisionGraphWithWriting,
    DecisionTree,
    Sink,
    Terminal,
    Working,
    Writing,
)

AND_SYMBOL, ARROW_SYMBOL = "∧", "→"


class ParseError(DrsError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{line}:{column}: {message}")
        self.line = line
        self.column = column


class _Scanner:
    def __init__(self, text: str, binary: bool):
        self.text = text
        self.pos = 0
        self.binary = binary

    def where(self, pos: int | None = None) -> tuple[int, int]:
        pos = self.pos if pos is None else pos
        line = self.text.count("\n", 0, pos) + 1
        col = pos - (self.text.rfind("\n", 0, pos) + 1) + 1
        return line, col

    def error(self, msg: str, pos: int | None = None) -> ParseError:
        return ParseError(msg, *self.where(pos))

    def skip(self) -> None:
        t = self.text
        while self.pos < len(t):
            if t[self.pos].isspace():
                self.pos += 1
            elif t[self.pos] == "#":
                nl = t.find("\n", self.pos)
                self.pos = len(t) if nl < 0 else nl
            else:
                break

    def peek(self, *options: str) -> str | None:
        self.skip()
        for o in options:
            if self.text.startswith(o, self.pos):
                return o
        return None

    def expect(self, *options: str) -> str:
        got = self.peek(*options)
        if got is None:
            found = self.text[self.pos:self.pos + 1] or "end of input"
            raise self.error(f"expected {' or '.join(repr(o) for o in options)}, found {found!r}")
        self.pos += len(got)
        return got

    def number(self) -> int:
        self.skip()
        digits = "01" if self.binary else "0123456789"
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos] in digits:
            self.pos += 1
        if start == self.pos:
            kind = "binary number" if self.binary else "number"
            raise self.error(f"expected a {kind}")
        return int(self.text[start:self.pos], 2 if self.binary else 10)

    def at_end(self) -> bool:
        self.skip()
        return self.pos >= len(self.text)


def _parse_rule(sc: _Scanner) -> Rule:
    start = sc.pos
    conds: list[tuple[int, int]] = []
    seen: set[int] = set()
    if sc.peek("("):
        while True:
            cpos = sc.pos
            sc.expect("(")
            sc.expect("a")
            attr = sc.number()
            sc.expect("=")
            val = sc.number()
            sc.expect(")")
            if attr in seen:
                raise sc.error(f"attribute a{attr} repeated in one rule", cpos)
            seen.add(attr)
            conds.append((attr, val))
            if not sc.peek("&", AND_SYMBOL):
                break
            sc.expect("&", AND_SYMBOL)
    sc.expect("->", ARROW_SYMBOL)
    rhs = sc.number()
    try:
        return Rule(conds, rhs)
    except DrsError as exc:
        raise sc.error(str(exc), start) from None


def parse(text: str, binary: bool = False) -> RuleSystem:
    """Parse a rule system; numbers are binary when ``binary`` is set."""
    sc = _Scanner(text, binary)
    rules: list[Rule] = []
    seen: set[Rule] = set()
    while not sc.at_end():
        start = sc.pos
        rule = _parse_rule(sc)
        if rule in seen:
            raise sc.error(f"duplicate rule {rule}", start)
        seen.add(rule)
        rules.append(rule)
        if sc.at_end():
            break
        sc.expect(";")
    if not rules:
        raise ParseError("a rule system must contain at least one rule", *sc.where())
    return RuleSystem(rules)


def parse_rule(text: str) -> Rule:
    sc = _Scanner(text, False)
    rule = _parse_rule(sc)
    if sc.peek(";"):
        sc.expect(";")
    if not sc.at_end():
        raise sc.error("trailing input after rule")
    return rule


def format_rule(rule: Rule, binary: bool = False) -> str:
    num = (lambda x: format(x, "b")) if binary else str
    conj = AND_SYMBOL if binary else "&"
    arrow = ARROW_SYMBOL if binary else "->"
    lhs = conj.join(f"(a{num(a)}={num(v)})" for a, v in rule.conditions)
    return f"{lhs}{arrow}{num(rule.rhs)};"


def serialize(system: RuleSystem, binary: bool = False) -> str:
    """One rule per line, or with ``binary`` the single binary-encoded word."""
    if binary:
        return "".join(format_rule(r, True) for r in system)
    return "".join(format_rule(r) + "\n" for r in system)


def size_of(system: RuleSystem) -> int:
    """Length of the binary word encoding of ``system`` (each ``;`` counted)."""
    return len(serialize(system, binary=True))


def rule_ref(i: int) -> str:
    """Display name of rule index ``i`` (``r1`` is the first rule)."""
    return f"r{i + 1}"


def format_label(label) -> str:
    return "{" + ", ".join(rule_ref(i) for i in sorted(label)) + "}"


def _artifact_name(graph: DecisionGraph) -> str:
    if isinstance(graph, DecisionGraphWithWriting):
        return "writing"
    if isinstance(graph, DecisionTree):
        return "tree"
    return "graph"


def export_dot(graph: DecisionGraph) -> str:
    ids = {id(n): f"n{i}" for i, n in enumerate(graph.nodes)}
    lines = [
        "digraph drstree {",
        f'  graph [artifact="{_artifact_name(graph)}", flavor="{graph.flavor}"];',
    ]
    for node in graph.nodes:
        nid = ids[id(node)]
        if isinstance(node, Working):
            lines.append(f'  {nid} [shape=ellipse, label="a{node.attr}"];')
        elif isinstance(node, Terminal):
            lines.append(f'  {nid} [shape=box, label="{format_label(node.label)}"];')
        elif isinstance(node, Writing):
            lines.append(f'  {nid} [shape=diamond, label="write {rule_ref(node.rule)}"];')
        else:
            lines.append(f'  {nid} [shape=doublecircle, label="W"];')
    for node in graph.nodes:
        nid = ids[id(node)]
        if isinstance(node, Working):
            for v, child in node.edges.items():
                lines.append(f'  {nid} -> {ids[id(child)]} [label="{format_value(v)}"];')
        elif isinstance(node, Writing):
            lines.append(f"  {nid} -> {ids[id(node.next)]};")
    lines.append("}")
    return "\n".join(lines) + "\n"


_ATTR = re.compile(r'(\w+)\s*=\s*(?:"([^"]*)"|([^,\s\]]+))')
_NODE = re.compile(r"^\s*(\w+)\s*\[(.*)\]\s*;?\s*$")
_EDGE = re.compile(r"^\s*(\w+)\s*->\s*(\w+)\s*(?:\[(.*)\])?\s*;?\s*$")
_GRAPH = re.compile(r"^\s*graph\s*\[(.*)\]\s*;?\s*$")
_REF = re.compile(r"r(\d+)")


def _attrs(text: str) -> dict[str, str]:
    return {m.group(1): m.group(2) if m.group(2) is not None else m.group(3) for m in _ATTR.finditer(text)}


def load_dot(text: str, system: RuleSystem) -> DecisionGraph:
    """Rebuild an artifact written by :func:`export_dot`."""
    meta: dict[str, str] = {}
    specs: dict[str, dict[str, str]] = {}
    edges: list[tuple[str, str, str | None]] = []
    for lineno, line in enumerate(text.splitlines(), 1):
        s = line.strip()
        if not s or s.startswith(("digraph", "}", "//", "node [", "edge [")):
            continue
        if m := _GRAPH.match(s):
            meta.update(_attrs(m.group(1)))
        elif m := _EDGE.match(s):
            edges.append((m.group(1), m.group(2), _attrs(m.group(3) or "").get("label")))
        elif m := _NODE.match(s):
            specs[m.group(1)] = _attrs(m.group(2))
        else:
            raise ParseError(f"unrecognized DOT line {s!r}", lineno, 1)

    nodes = {}
    for nid, a in specs.items():
        shape, label = a.get("shape"), a.get("label", "")
        if shape == "ellipse":
            nodes[nid] = Working(int(label.lstrip("a")))
        elif shape == "box":
            nodes[nid] = Terminal(frozenset(int(x) - 1 for x in _REF.findall(label)))
        elif shape == "diamond":
            nodes[nid] = Writing(int(_REF.search(label).group(1)) - 1, None)
        elif shape == "doublecircle":
            nodes[nid] = Sink()
        else:
            raise DrsError(f"node {nid}: unknown shape {shape!r}")
    targets = set()
    for src, dst, label in edges:
        if src not in nodes or dst not in nodes:
            raise DrsError(f"edge {src} -> {dst} refers to an undeclared node")
        targets.add(dst)
        node = nodes[src]
        if isinstance(node, Working):
            if label != "*" and not (label or "").isdigit():
                raise DrsError(f"edge {src} -> {dst} needs a value label, got {label!r}")
            value = STAR if label == "*" else int(label)
            if value in node.edges:
                raise DrsError(f"node {src} has two edges labeled {label}")
            node.edges[value] = nodes[dst]
        elif isinstance(node, Writing):
            if node.next is not None:
                raise DrsError(f"writing node {src} has more than one leaving edge")
            node.next = nodes[dst]
        else:
            raise DrsError(f"terminal node {src} has a leaving edge")
    for node in nodes.values():
        if isinstance(node, Working):
            node.__post_init__()
        elif isinstance(node, Writing) and node.next is None:
            raise DrsError("writing node without a leaving edge")
    roots = [nid for nid in specs if nid not in targets]
    if len(roots) != 1:
        raise DrsError(f"expected exactly one root, found {len(roots)}")
    root = nodes[roots[0]]
    cls = {"tree": DecisionTree, "graph": DecisionGraph, "writing": DecisionGraphWithWriting}
    kind = meta.get("artifact", "tree")
    if kind not in cls:
        raise DrsError(f"unknown artifact type {kind!r}")
    graph = cls[kind](root, system, meta.get("flavor", "o"))
    if len(graph.nodes) != len(nodes):
        raise DrsError("DOT file contains nodes unreachable from the root")
    return graph


__all__ = [
    "ParseError",
    "parse",
    "parse_rule",
    "serialize",
    "format_rule",
    "size_of",
    "export_dot",
    "load_dot",
    "rule_ref",
    "format_label",
]
