import copy
import pickle

import pytest
from hypothesis import given, strategies as st

from drstree.core import (
    STAR,
    DrsError,
    ProblemKind,
    Rule,
    RuleSystem,
    ValueTuple,
    check_tuple,
    is_consistent,
    is_realizable,
    realizable,
    rules_equal,
    stats,
    tuples,
    value_key,
)
from drstree.constructions import gen_family
from drstree.textio import parse

from strategies import systems


def test_example_statistics():
    s = parse("(a1=0)->1; (a1=1)&(a2=0)->2; (a1=2)&(a3=0)&(a4=0)->3")
    st_ = stats(s)
    assert (st_.n, st_.d, st_.k) == (4, 3, 3)
    assert st_.D == {1, 2, 3}
    assert st_.V[1] == (0, 1, 2)
    assert st_.EV[1] == (0, 1, 2, STAR)


def test_only_empty_left_rule():
    s = parse("->5")
    assert (s.n, s.d, s.k) == (0, 0, 0)
    assert s.decisions == {5}
    assert list(tuples(s)) == [ValueTuple(())]


def test_family_statistics():
    s = gen_family("l9", n=2, k=2, d=2)
    assert (s.n, s.k, s.d, len(s)) == (6, 2, 2, 5)


def test_realizability():
    t = ValueTuple.of({1: 1, 2: 1, 3: 1})
    assert is_realizable(Rule.of(2, a1=1, a3=1), t)
    assert not is_realizable(Rule.of(1, a1=0, a2=1), t)
    assert is_realizable(Rule([], 4), t)


def test_star_never_matches():
    t = ValueTuple.of({1: STAR, 2: 0})
    assert not is_realizable(Rule.of(0, a1=0), t)
    assert is_realizable(Rule.of(0, a2=0), t)


def test_rules_equal_ignores_condition_order():
    assert rules_equal(Rule.of(1, a1=0, a2=1), Rule.of(1, a2=1, a1=0))
    assert not rules_equal(Rule.of(1, a1=0), Rule.of(2, a1=0))
    assert not rules_equal(Rule.of(1, a1=0), Rule.of(1, a1=0, a2=1))


@pytest.mark.parametrize("conds,rhs", [
    ([(1, 0), (1, 1)], 0),
    ([(1, -1)], 0),
    ([(1, STAR)], 0),
    ([(1, 0)], -2),
])
def test_bad_rules_rejected(conds, rhs):
    with pytest.raises(DrsError):
        Rule(conds, rhs)


def test_duplicates_and_empty_rejected():
    with pytest.raises(DrsError):
        RuleSystem([Rule.of(1, a1=0, a2=1), Rule.of(1, a2=1, a1=0)])
    with pytest.raises(DrsError):
        RuleSystem([])
    assert RuleSystem.empty().is_empty


def test_star_is_a_singleton():
    assert copy.deepcopy(STAR) is STAR
    assert pickle.loads(pickle.dumps(STAR)) is STAR
    assert value_key(STAR) > value_key(10**9)


def test_problem_kinds():
    assert ProblemKind.parse(" ead ") is ProblemKind.EAD
    assert ProblemKind.EAD.base is ProblemKind.AD
    assert ProblemKind.SR.with_flavor(True) is ProblemKind.ESR
    assert ProblemKind.ESR.flavor == "e" and ProblemKind.AR.flavor == "o"
    with pytest.raises(DrsError):
        ProblemKind.parse("XR")


def test_check_tuple():
    s = parse("(a1=0)&(a2=1)->1")
    check_tuple(s, ValueTuple.of({1: 0, 2: 1}), False)
    with pytest.raises(DrsError):
        check_tuple(s, ValueTuple.of({1: STAR, 2: 1}), False)
    check_tuple(s, ValueTuple.of({1: STAR, 2: 1}), True)
    with pytest.raises(DrsError):
        check_tuple(s, ValueTuple.of({1: 0}), False)


@given(systems())
def test_k_and_extended_domains(s):
    assert s.k == max((len(s.values(a)) for a in s.attributes), default=0)
    for a in s.attributes:
        assert len(s.evalues(a)) == len(s.values(a)) + 1


@given(systems(), st.randoms(use_true_random=False))
def test_stats_invariant_under_permutation(s, rnd):
    rs = list(s)
    rnd.shuffle(rs)
    shuffled = []
    for r in rs:
        conds = list(r.conditions)
        rnd.shuffle(conds)
        shuffled.append(Rule(conds, r.rhs))
    assert stats(RuleSystem(shuffled)) == stats(s)


@given(systems(), st.booleans())
def test_realizable_matches_consistency(s, extended):
    for t in tuples(s, extended):
        for i, r in enumerate(s):
            expect = is_consistent(list(r.K) + list(t.items)) and r.attrs <= set(t.attributes)
            assert (i in realizable(s, t)) == expect


@given(systems())
def test_tuple_count(s):
    assert s.tuple_count(False) == len(list(tuples(s)))
    assert s.tuple_count(True) == len(list(tuples(s, True)))
