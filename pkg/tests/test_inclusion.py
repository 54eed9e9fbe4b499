import itertools
import math
import random

import pytest
from hypothesis import given, strategies as st

from oracles import forall_exists, spike_value
from skolemcount import (BudgetError, DomainError, GsspInstance, SpikeSumLrs,
                         build_inclusion_pair, decide_inclusion, spike_eval, value_set)
from skolemcount.corpora import random_gssp
from skolemcount.inclusion import inclusion_witness


def test_build_examples():
    u, v = build_inclusion_pair(GsspInstance([1], [1], 1))
    assert u.spikes == ((2, 1),) and u.offset == 0
    assert [spike_eval(v, n) for n in range(4)] == [0, 1, 0, 1]
    u, v = build_inclusion_pair(GsspInstance([], [], 0))
    assert spike_eval(u, 5) == 0 and spike_eval(v, 5) == 0
    u, v = build_inclusion_pair(GsspInstance([1, 2], [3, 4], 5))
    assert u.spikes == ((2, 1), (3, 2))
    assert spike_eval(v, 0) == 5 - 7 == -2


def test_value_set_examples():
    assert value_set(SpikeSumLrs(((2, 1),), 0)) == {0, 1}
    assert value_set(SpikeSumLrs((), -5)) == {5}
    assert value_set(SpikeSumLrs(((2, 1), (3, 2)), 0)) == {0, 1, 2, 3}


@pytest.mark.parametrize("a, b, t, expected", [
    ([1], [1], 1, True),
    ([2], [1], 1, False),
    ([], [], 0, True),
])
def test_decide_examples(a, b, t, expected):
    assert forall_exists(a, b, t) is expected
    assert decide_inclusion(GsspInstance(a, b, t)) is expected


def test_witness():
    assert inclusion_witness(GsspInstance([2], [1], 1)) == (1,)
    assert inclusion_witness(GsspInstance([1], [1], 1)) is None


def test_validation_and_budget():
    with pytest.raises(DomainError):
        GsspInstance([1, 2], [1], 0)
    with pytest.raises(BudgetError):
        value_set(SpikeSumLrs(((2, 1), (3, 1)), 0), budget=1)


@given(st.integers(0, 2**32))
def test_decide_matches_forall_exists(seed):
    g = random_gssp(random.Random(seed), max_m=7)
    assert decide_inclusion(g) == forall_exists(g.a, g.b, g.t)
    witness = inclusion_witness(g)
    assert (witness is None) == decide_inclusion(g)


@given(st.integers(0, 2**32))
def test_value_set_is_attained(seed):
    rng = random.Random(seed)
    g = random_gssp(rng, max_m=4, entry_range=6)
    for s in build_inclusion_pair(g):
        period = math.prod(s.periods)
        sampled = {spike_value(s.spikes, s.offset, n) for n in range(period)}
        assert value_set(s) == sampled


@given(st.integers(0, 2**32))
def test_adding_a_zero_spike_keeps_inclusion(seed):
    g = random_gssp(random.Random(seed), max_m=5)
    u, v = build_inclusion_pair(g)
    # a zero-valued spike on a fresh prime leaves v's value set unchanged
    bigger = SpikeSumLrs(v.spikes + ((97, 0),), v.offset)
    assert value_set(bigger) == value_set(v)
    if value_set(u) <= value_set(v):
        assert value_set(u) <= value_set(bigger)
