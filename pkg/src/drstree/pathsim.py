"""Computation paths of implicit decision trees, produced one tuple at a time.

Each simulator proceeds in rounds.  A round takes the greedy node cover of
the longest rules still alive, reads the tuple's values for those
attributes (in ascending order), and restricts the system by what it read.
The sequence of queries depends only on the values already read, so the
runs over all tuples trace out a single decision tree.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .core import (
    DEFAULT_LIMITS,
    STAR,
    DrsError,
    Equation,
    Limits,
    ProblemKind,
    RuleSystem,
    ValueTuple,
    check_tuple,
)
from .systems import (
    all_empty_left,
    beta_measures,
    consistent_with,
    greedy_cover,
    reduce_ad,
    reduce_sr,
    restrict,
    s_plus,
    subsystem_i,
)


@dataclass(frozen=True)
class Round:
    cover: tuple[int, ...]
    equations: tuple[Equation, ...]


@dataclass
class PathTrace:
    kind: ProblemKind
    rounds: list[Round] = field(default_factory=list)
    result: frozenset[int] = frozenset()

    @property
    def queries(self) -> list[Equation]:
        """Every (attribute, value seen) pair in query order."""
        return [e for r in self.rounds for e in r.equations]

    @property
    def queried(self) -> int:
        return sum(len(r.cover) for r in self.rounds)


def _read(trace: PathTrace, cover, alpha: dict, value_of) -> None:
    cover = tuple(sorted(cover))
    eqs = tuple(Equation(a, value_of(a)) for a in cover)
    alpha.update(eqs)
    trace.rounds.append(Round(cover, eqs))


def simulate_ar(system: RuleSystem, t: ValueTuple, kind=ProblemKind.AR) -> PathTrace:
    """Rounds over the maximal-length rules of S restricted by what was read."""
    kind = ProblemKind.coerce(kind)
    if kind not in (ProblemKind.AR, ProblemKind.EAR):
        raise DrsError(f"simulate_ar handles AR and EAR, not {kind}")
    if system.n == 0:
        raise DrsError("simulation needs n(S) > 0")
    check_tuple(system, t, kind.extended)
    trace = PathTrace(kind)
    alpha: dict = {}
    current = system
    while True:
        if len(trace.rounds) >= system.d:
            raise AssertionError("round count exceeded d(S)")
        _read(trace, greedy_cover(s_plus(current)), alpha, t.__getitem__)
        current = restrict(system, alpha)
        if current.is_empty or all_empty_left(current):
            break
    trace.result = frozenset(i for i, r in enumerate(system) if consistent_with(r, alpha))
    return trace


def simulate_ad_sr(system: RuleSystem, t: ValueTuple, kind=ProblemKind.AD) -> PathTrace:
    """AD and SR are answered by the AR simulator; its answer solves both."""
    kind = ProblemKind.coerce(kind)
    if kind not in (ProblemKind.AD, ProblemKind.SR):
        raise DrsError(f"simulate_ad_sr handles AD and SR, not {kind}")
    trace = simulate_ar(system, t, ProblemKind.AR)
    trace.kind = kind
    return trace


def preprocess(system: RuleSystem, kind: ProblemKind) -> RuleSystem:
    """S' for the ESR/EAD simulator: R_SR(S) or R_AD(S)."""
    return reduce_ad(system) if kind is ProblemKind.EAD else reduce_sr(system)


def simulate_esr_ead(system: RuleSystem, t: ValueTuple, kind=ProblemKind.ESR) -> PathTrace:
    """Rounds over I_C of the reduced system; values S' never uses read as ``*``.

    Result indices refer to the original system.
    """
    kind = ProblemKind.coerce(kind)
    if kind not in (ProblemKind.ESR, ProblemKind.EAD):
        raise DrsError(f"simulate_esr_ead handles ESR and EAD, not {kind}")
    if system.n == 0:
        raise DrsError("simulation needs n(S) > 0")
    check_tuple(system, t, True)
    reduced = preprocess(system, kind)
    index = {r: system.index(r) for r in reduced}
    trace = PathTrace(kind)

    def seen(a):
        v = t[a]
        return v if v in reduced.values(a) else STAR

    alpha: dict = {}
    current = subsystem_i(reduced, kind)
    if all_empty_left(current):
        trace.result = frozenset(index[r] for r in current)
        return trace
    limit = current.d
    read: set[int] = set()
    while True:
        if len(trace.rounds) >= limit:
            raise AssertionError("round count exceeded d(I_C(S'))")
        cover = greedy_cover(s_plus(current))
        read |= cover
        _read(trace, cover, alpha, seen)
        current = subsystem_i(restrict(reduced, alpha), kind)
        if current.is_empty or all_empty_left(current):
            break
    trace.result = frozenset(
        index[r] for r in reduced if r.attrs <= read and consistent_with(r, alpha)
    )
    return trace


def simulate(system: RuleSystem, t: ValueTuple, kind) -> PathTrace:
    """Dispatch to the simulator for ``kind``."""
    kind = ProblemKind.coerce(kind)
    if kind in (ProblemKind.AR, ProblemKind.EAR):
        return simulate_ar(system, t, kind)
    if kind in (ProblemKind.AD, ProblemKind.SR):
        return simulate_ad_sr(system, t, kind)
    return simulate_esr_ead(system, t, kind)


def query_bound(system: RuleSystem, kind, limits: Limits = DEFAULT_LIMITS) -> int:
    """Depth guarantee of the simulated tree.

    d(S)^2 * beta_C+(S) for AR, EAR, AD and SR; d(I_C(S'))^2 * beta_C+(S')
    for ESR and EAD.  Exponential: enumerates the restrictions of S.
    """
    kind = ProblemKind.coerce(kind)
    if kind in (ProblemKind.ESR, ProblemKind.EAD):
        reduced = preprocess(system, kind)
        d = subsystem_i(reduced, kind).d
        if reduced.n == 0 or d == 0:
            return 0
        return d * d * beta_measures(reduced, kind, limits).beta_C_plus
    if system.n == 0:
        return 0
    return system.d ** 2 * beta_measures(system, kind, limits).beta_C_plus
