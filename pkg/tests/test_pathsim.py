import pytest
from hypothesis import assume, given, settings, strategies as st

from drstree.core import ALL_KINDS, STAR, DrsError, ProblemKind, ValueTuple, tuples
from drstree.constructions import gen_family
from drstree.oracle import min_depth, solve_direct, validate_solution
from drstree.pathsim import (
    preprocess,
    query_bound,
    simulate,
    simulate_ad_sr,
    simulate_ar,
    simulate_esr_ead,
)
from drstree.systems import subsystem_i
from drstree.textio import parse

from strategies import systems

AR, EAR, AD, EAD, SR, ESR = (ProblemKind[k] for k in ("AR", "EAR", "AD", "EAD", "SR", "ESR"))
EX3 = "(a1=0)->1; (a1=0)&(a2=1)->1; (a1=0)&(a2=1)&(a3=2)->2"


def test_all_rules_found_on_example():
    s = parse(EX3)
    t = ValueTuple.of({1: 0, 2: 1, 3: 2})
    trace = simulate_ar(s, t)
    assert trace.result == solve_direct(s, t, AR).realizable == {0, 1, 2}
    assert trace.queried <= query_bound(s, AR)
    assert [r.cover for r in trace.rounds] == [(1, 2, 3)]


def test_first_round_can_end_everything():
    s = parse("(a1=0)&(a2=0)->1")
    trace = simulate_ar(s, ValueTuple.of({1: 0, 2: 0}))
    assert len(trace.rounds) == 1 and trace.result == {0}
    s = parse("(a1=0)&(a2=0)->1; (a1=1)->2")
    trace = simulate_ar(s, ValueTuple.of({1: 1, 2: 0}))
    assert len(trace.rounds) == 1 and trace.result == {1}


def test_ad_and_sr_reuse_ar_answer():
    s = parse(EX3)
    t = ValueTuple.of({1: 0, 2: 1, 3: 2})
    assert validate_solution(s, t, AD, simulate_ad_sr(s, t, AD).result)
    s = parse("(a1=0)&(a2=0)->1; (a1=1)&(a2=1)->2")
    trace = simulate_ad_sr(s, ValueTuple.of({1: 0, 2: 1}), SR)
    assert trace.result == frozenset() and trace.kind is SR


def test_reduced_system_drives_extended_run():
    s = parse("(a1=0)&(a2=1)&(a3=2)->1; (a1=0)&(a2=1)->2; (a1=0)->2")
    assert preprocess(s, ESR).same_rules(parse("(a1=0)->2"))
    for t in tuples(s, True):
        trace = simulate_esr_ead(s, t, ESR)
        assert [e.attr for e in trace.queries] == [1]
        assert validate_solution(s, t, ESR, trace.result)
    trace = simulate_esr_ead(s, ValueTuple.of({1: 0, 2: 1, 3: 2}), ESR)
    assert trace.result == {2}


def test_values_unused_after_reduction_read_as_star():
    s = parse("(a1=0)&(a2=3)->1; (a1=0)->1; (a2=1)->2")
    t = ValueTuple.of({1: 0, 2: 3})
    trace = simulate_esr_ead(s, t, EAD)
    assert "a2=*" in [str(e) for e in trace.queries]
    assert trace.result == {1}
    assert validate_solution(s, t, EAD, trace.result)


def test_early_exit_on_length_zero_rules():
    s = parse("(a1=0)->1; ->1")
    for kind in (ESR, EAD):
        trace = simulate_esr_ead(s, ValueTuple.of({1: 0}), kind)
        assert trace.queried == 0 and trace.result == {1}


def test_family_every_tuple():
    s = gen_family("l9", n=2, k=2, d=2)
    for t in tuples(s):
        assert simulate_ar(s, t).result == solve_direct(s, t, AR).realizable
    s = gen_family("l11a", n=2, d=1)
    for t in tuples(s, True):
        assert validate_solution(s, t, EAD, simulate_esr_ead(s, t, EAD).result)


def test_wrong_kind_or_empty_attributes():
    s = parse("(a1=0)->1")
    t = ValueTuple.of({1: 0})
    with pytest.raises(DrsError):
        simulate_ar(s, t, AD)
    with pytest.raises(DrsError):
        simulate_ad_sr(s, t, AR)
    with pytest.raises(DrsError):
        simulate_esr_ead(s, t, SR)
    with pytest.raises(DrsError):
        simulate(parse("->1"), ValueTuple(()), AR)
    with pytest.raises(DrsError):
        simulate_ar(s, ValueTuple.of({1: STAR}), AR)


def test_bound_for_system_without_attributes():
    assert query_bound(parse("->1"), AR) == 0
    assert query_bound(parse("->1; (a1=0)->1"), EAD) == 0


@settings(max_examples=80, deadline=None)
@given(systems(), st.sampled_from(ALL_KINDS))
def test_sound_and_bounded(s, kind):
    assume(s.n > 0)
    bound = query_bound(s, kind)
    h = min_depth(s, kind)[0]
    for t in tuples(s, kind.extended):
        trace = simulate(s, t, kind)
        assert validate_solution(s, t, kind, trace.result)
        assert trace.queried <= bound
        if kind not in (AD, SR):
            assert trace.queried <= h ** 3


@settings(max_examples=60, deadline=None)
@given(systems(), st.sampled_from(ALL_KINDS))
def test_round_count_strictly_bounded(s, kind):
    assume(s.n > 0)
    limit = s.d if kind in (AR, EAR, AD, SR) else subsystem_i(preprocess(s, kind), kind).d
    for t in tuples(s, kind.extended):
        assert len(simulate(s, t, kind).rounds) <= limit


@settings(max_examples=60, deadline=None)
@given(systems(), st.sampled_from(ALL_KINDS), st.data())
def test_shared_prefix_means_shared_queries(s, kind, data):
    assume(s.n > 0)
    ts = list(tuples(s, kind.extended))
    t1, t2 = data.draw(st.sampled_from(ts)), data.draw(st.sampled_from(ts))
    q1, q2 = simulate(s, t1, kind).queries, simulate(s, t2, kind).queries
    for e1, e2 in zip(q1, q2):
        assert e1.attr == e2.attr
        if e1.value != e2.value:
            break
    else:
        assert len(q1) == len(q2)
