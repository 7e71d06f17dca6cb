"""Rules, rule systems, equations and value tuples.

Attributes are plain nonnegative ints (``3`` stands for ``a3``).  Values are
nonnegative ints or the out-of-domain marker :data:`STAR`.
"""
from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Mapping, NamedTuple, Sequence, Union


class DrsError(Exception):
    """Base class for errors raised by this package."""


class TooLargeError(DrsError):
    """An exhaustive operation would exceed its configured cap."""


class _Star:
    __slots__ = ()

    def __repr__(self) -> str:
        return "*"

    def __reduce__(self):
        return "STAR"


STAR = _Star()

Value = Union[int, _Star]


def value_key(v: Value) -> tuple[int, int]:
    """Sort key placing numbers first (ascending) and ``*`` last."""
    return (1, 0) if v is STAR else (0, v)


def format_value(v: Value) -> str:
    return "*" if v is STAR else str(v)


@dataclass(frozen=True)
class Limits:
    """Caps guarding the exponential operations."""

    max_cover_nodes: int = 12
    max_enum: int = 10**6
    max_depth_attrs: int = 8
    max_depth_values: int = 3
    max_size_attrs: int = 6
    max_antichain: int = 20000


DEFAULT_LIMITS = Limits()


class ProblemKind(enum.Enum):
    AR = "AR"
    EAR = "EAR"
    AD = "AD"
    EAD = "EAD"
    SR = "SR"
    ESR = "ESR"

    @property
    def extended(self) -> bool:
        return self.value.startswith("E")

    @property
    def base(self) -> ProblemKind:
        """The kind with the ``E`` prefix dropped."""
        return ProblemKind(self.value[1:]) if self.extended else self

    @property
    def flavor(self) -> str:
        return "e" if self.extended else "o"

    def with_flavor(self, extended: bool) -> ProblemKind:
        return ProblemKind("E" + self.base.value) if extended else self.base

    @classmethod
    def parse(cls, text: str) -> ProblemKind:
        try:
            return cls(text.strip().upper())
        except ValueError:
            raise DrsError(f"unknown problem kind {text!r}") from None

    @classmethod
    def coerce(cls, kind) -> ProblemKind:
        return kind if isinstance(kind, cls) else cls.parse(str(kind))

    def __str__(self) -> str:
        return self.value


ALL_KINDS = tuple(ProblemKind)


class Equation(NamedTuple):
    attr: int
    value: Value

    def __str__(self) -> str:
        return f"a{self.attr}={format_value(self.value)}"


def is_consistent(eqs: Iterable[tuple[int, Value]]) -> bool:
    """False iff two equations give one attribute different values."""
    seen: dict[int, Value] = {}
    for a, v in eqs:
        if a in seen and seen[a] != v:
            return False
        seen[a] = v
    return True


class Rule:
    """A decision rule ``(a_i1=d1) & ... & (a_im=dm) -> rhs``.

    Condition order is kept for display and for the gadget constructions;
    equality only looks at the condition set and the right-hand side.
    """

    def __init__(self, conditions: Iterable[tuple[int, int]], rhs: int):
        conds = tuple(Equation(int(a), v) for a, v in conditions)
        attrs = [c.attr for c in conds]
        if len(set(attrs)) != len(attrs):
            raise DrsError(f"rule repeats an attribute: {attrs}")
        for c in conds:
            if c.attr < 0:
                raise DrsError(f"negative attribute index {c.attr}")
            if c.value is STAR or not isinstance(c.value, int) or c.value < 0:
                raise DrsError(f"rule condition value must be a natural number, got {c.value!r}")
        if not isinstance(rhs, int) or rhs < 0:
            raise DrsError(f"right-hand side must be a natural number, got {rhs!r}")
        self.conditions = conds
        self.rhs = rhs
        self._key = (frozenset(conds), rhs)

    @classmethod
    def of(cls, rhs: int, **conds: int) -> Rule:
        """``Rule.of(2, a1=0, a3=1)`` builds ``(a1=0)&(a3=1)->2``."""
        return cls(((int(k[1:]), v) for k, v in conds.items()), rhs)

    @property
    def K(self) -> frozenset[Equation]:
        return self._key[0]

    @cached_property
    def attrs(self) -> frozenset[int]:
        return frozenset(c.attr for c in self.conditions)

    def __len__(self) -> int:
        return len(self.conditions)

    def __eq__(self, other) -> bool:
        return isinstance(other, Rule) and self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    def __repr__(self) -> str:
        return f"Rule({self})"

    def __str__(self) -> str:
        lhs = "&".join(f"({c})" for c in self.conditions)
        return f"{lhs}->{self.rhs}"


def rules_equal(r1: Rule, r2: Rule) -> bool:
    return r1.K == r2.K and r1.rhs == r2.rhs


class RuleSystem:
    """An ordered, duplicate-free collection of rules.

    A proper system is nonempty; :meth:`empty` gives the distinguished empty
    system that restriction can produce.
    """

    def __init__(self, rules: Iterable[Rule], *, _allow_empty: bool = False):
        rules = tuple(rules)
        if not rules and not _allow_empty:
            raise DrsError("a rule system must contain at least one rule")
        seen = set()
        for r in rules:
            if r in seen:
                raise DrsError(f"duplicate rule {r}")
            seen.add(r)
        self.rules = rules

    @classmethod
    def empty(cls) -> RuleSystem:
        return cls((), _allow_empty=True)

    @classmethod
    def from_unique(cls, rules: Iterable[Rule]) -> RuleSystem:
        """Build a possibly empty system, dropping repeated rules (first kept)."""
        out, seen = [], set()
        for r in rules:
            if r not in seen:
                seen.add(r)
                out.append(r)
        return cls(out, _allow_empty=True)

    @property
    def is_empty(self) -> bool:
        return not self.rules

    def __len__(self) -> int:
        return len(self.rules)

    def __iter__(self) -> Iterator[Rule]:
        return iter(self.rules)

    def __getitem__(self, i: int) -> Rule:
        return self.rules[i]

    def __eq__(self, other) -> bool:
        return isinstance(other, RuleSystem) and self.rules == other.rules

    def __hash__(self) -> int:
        return hash(self.rules)

    def same_rules(self, other: RuleSystem) -> bool:
        """Set equality, ignoring order."""
        return set(self.rules) == set(other.rules)

    def __repr__(self) -> str:
        return "RuleSystem([" + "; ".join(str(r) for r in self.rules) + "])"

    def index(self, rule: Rule) -> int:
        return self.rules.index(rule)

    @cached_property
    def attributes(self) -> tuple[int, ...]:
        """A(S) in ascending index order."""
        return tuple(sorted({a for r in self.rules for a in r.attrs}))

    @property
    def n(self) -> int:
        return len(self.attributes)

    @cached_property
    def d(self) -> int:
        return max((len(r) for r in self.rules), default=0)

    @cached_property
    def decisions(self) -> frozenset[int]:
        return frozenset(r.rhs for r in self.rules)

    @cached_property
    def _values(self) -> dict[int, tuple[int, ...]]:
        vals: dict[int, set[int]] = {a: set() for a in self.attributes}
        for r in self.rules:
            for a, v in r.conditions:
                vals[a].add(v)
        return {a: tuple(sorted(vs)) for a, vs in vals.items()}

    def values(self, attr: int) -> tuple[int, ...]:
        """V_S(attr), ascending."""
        return self._values[attr]

    def evalues(self, attr: int) -> tuple[Value, ...]:
        """EV_S(attr): V_S(attr) followed by ``*``."""
        return self._values[attr] + (STAR,)

    def domain(self, attr: int, extended: bool) -> tuple[Value, ...]:
        return self.evalues(attr) if extended else self.values(attr)

    @cached_property
    def k(self) -> int:
        return max((len(v) for v in self._values.values()), default=0)

    def tuple_count(self, extended: bool) -> int:
        out = 1
        for a in self.attributes:
            out *= len(self.domain(a, extended))
        return out


@dataclass(frozen=True)
class ValueTuple:
    """An assignment of a value to every attribute of a system."""

    items: tuple[tuple[int, Value], ...]
    _map: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "_map", dict(self.items))

    @classmethod
    def of(cls, mapping: Mapping[int, Value]) -> ValueTuple:
        return cls(tuple(sorted(mapping.items())))

    @classmethod
    def from_sequence(cls, system: RuleSystem, values: Sequence[Value]) -> ValueTuple:
        """Positional values over A(S) in ascending attribute order."""
        attrs = system.attributes
        if len(values) != len(attrs):
            raise DrsError(f"expected {len(attrs)} values, got {len(values)}")
        return cls(tuple(zip(attrs, values)))

    @property
    def attributes(self) -> tuple[int, ...]:
        return tuple(a for a, _ in self.items)

    @property
    def extended(self) -> bool:
        return any(v is STAR for _, v in self.items)

    def __getitem__(self, attr: int) -> Value:
        return self._map[attr]

    def get(self, attr: int, default=None):
        return self._map.get(attr, default)

    def equations(self) -> frozenset[Equation]:
        """K(S, t)."""
        return frozenset(Equation(a, v) for a, v in self.items)

    def values(self) -> tuple[Value, ...]:
        return tuple(v for _, v in self.items)

    def __str__(self) -> str:
        return "(" + ",".join(format_value(v) for _, v in self.items) + ")"


def check_tuple(system: RuleSystem, t: ValueTuple, extended: bool) -> None:
    """Raise unless ``t`` lies in V(S) (or EV(S) when ``extended``)."""
    if t.attributes != system.attributes:
        raise DrsError(f"tuple over {t.attributes} does not match A(S)={system.attributes}")
    for a, v in t.items:
        if v not in system.domain(a, extended):
            space = "EV" if extended else "V"
            raise DrsError(f"value {format_value(v)} of a{a} is outside {space}_S(a{a})")


def tuples(system: RuleSystem, extended: bool = False) -> Iterator[ValueTuple]:
    """Enumerate V(S), or EV(S) when ``extended``, in lexicographic order."""
    attrs = system.attributes
    doms = [system.domain(a, extended) for a in attrs]
    for combo in itertools.product(*doms):
        yield ValueTuple(tuple(zip(attrs, combo)))


def is_realizable(rule: Rule, t: ValueTuple) -> bool:
    return all(t.get(a) == v for a, v in rule.conditions)


def realizable(system: RuleSystem, t: ValueTuple) -> frozenset[int]:
    """Indices of the rules of ``system`` realizable for ``t``."""
    return frozenset(i for i, r in enumerate(system) if is_realizable(r, t))


def decisions_of(system: RuleSystem, indices: Iterable[int]) -> frozenset[int]:
    return frozenset(system[i].rhs for i in indices)


@dataclass(frozen=True)
class Stats:
    n: int
    d: int
    k: int
    D: frozenset[int]
    A: tuple[int, ...]
    V: dict[int, tuple[int, ...]]
    EV: dict[int, tuple[Value, ...]]
    size: int


def stats(system: RuleSystem) -> Stats:
    return Stats(
        n=system.n,
        d=system.d,
        k=system.k,
        D=system.decisions,
        A=system.attributes,
        V={a: system.values(a) for a in system.attributes},
        EV={a: system.evalues(a) for a in system.attributes},
        size=len(system),
    )
