import random

import pytest
from hypothesis import given, strategies as st
from sklearn.base import clone

from oracles import spike_zeros, subset_count
from skolemcount import (DomainError, PrimeSearchConfig, SspInstance, SubsetSumZeroCounter,
                         build_reduction, check_lemma_3_1, count_zeros_bruteforce,
                         count_zeros_closed_form, crt_pipeline, spike_to_lrs)
from skolemcount.corpora import random_reduction, random_ssp


def test_build_examples():
    r = build_reduction(SspInstance([1, 2], 3), 3, [5, 11])
    assert r.gadget.spikes == ((5, 1), (11, 2)) and r.gadget.offset == 3
    assert r.big_bound == 55
    r = build_reduction(SspInstance([], 0), 3, [])
    assert r.gadget.spikes == () and r.big_bound == 1
    assert spike_to_lrs(r.gadget).head(3) == [0, 0, 0]
    r = build_reduction(SspInstance([7], 7), 5, [17])
    assert r.gadget.spikes == ((17, 7),) and r.gadget.offset == 7 and r.big_bound == 17


def test_build_default_primes():
    r = build_reduction(SspInstance([4, 5, 6], 9), 3)
    assert r.primes == (5, 11, 17)


@pytest.mark.parametrize("q, primes", [
    (3, [5, 13]),  # 13 = 1 mod 3
    (3, [5, 5]),  # not distinct
    (4, [6, 10]),  # q not prime
    (3, [5]),  # wrong count
    (3, [5, 2]),  # 2 is not odd
])
def test_build_rejects(q, primes):
    with pytest.raises(DomainError):
        build_reduction(SspInstance([1, 2], 3), q, primes)


@pytest.mark.parametrize("values, target, primes, expected", [
    ([1, 2], 3, [5, 11], 1),
    ([1, 1], 1, [5, 11], 14),
    ([1], 2, [5], 0),
])
def test_closed_form_examples(values, target, primes, expected):
    spikes = tuple(zip(primes, values))
    bound = 1
    for p in primes:
        bound *= p
    assert len(spike_zeros(spikes, target, bound)) == expected
    r = build_reduction(SspInstance(values, target), 3, primes)
    assert count_zeros_closed_form(r) == expected


def test_closed_form_zero_indices_example():
    zeros = spike_zeros(((5, 1), (11, 1)), 1, 55)
    assert zeros == sorted(set(range(5, 55, 5)) ^ set(range(11, 55, 11)))


@pytest.mark.parametrize("values, target, q, primes, expected", [
    ([1, 2], 3, 3, [5, 11], (1, 1, True)),
    ([1, 1], 1, 3, [5, 11], (2, 14, True)),
    ([], 5, 3, [], (0, 0, True)),
])
def test_lemma_examples(values, target, q, primes, expected):
    res = check_lemma_3_1(build_reduction(SspInstance(values, target), q, primes))
    assert tuple(res) == expected


@pytest.mark.parametrize("values, target", [([1, 2], 3), ([3, 3, 3], 6), ([1], 0)])
def test_pipeline_examples(values, target):
    expected = subset_count(values, target)
    assert crt_pipeline(SspInstance(values, target)) == expected


def test_pipeline_edge_cases():
    assert crt_pipeline(SspInstance([0] * 10, 0)) == 2**10
    assert crt_pipeline(SspInstance([], 0)) == 1
    assert crt_pipeline(SspInstance([], 4)) == 0


def test_zero_at_origin_iff_total_sum():
    for values, target in [([1, 2, 3], 6), ([1, 2, 3], 5)]:
        r = build_reduction(SspInstance(values, target), 5)
        zero_at_0 = spike_to_lrs(r.gadget).head(1)[0] == 0
        assert zero_at_0 == (sum(values) == target)


@given(st.integers(0, 2**32))
def test_closed_form_matches_bruteforce(seed):
    r = random_reduction(random.Random(seed), max_m=3, max_big_bound=30_000)
    u = spike_to_lrs(r.gadget)
    brute = count_zeros_bruteforce(u, r.big_bound)
    assert brute == len(spike_zeros(r.gadget.spikes, r.gadget.offset, r.big_bound))
    assert count_zeros_closed_form(r) == brute


@given(st.integers(0, 2**32))
def test_lemma_congruence_random(seed):
    r = random_reduction(random.Random(seed), max_m=12, prime_limit=2000)
    res = check_lemma_3_1(r)
    assert res.congruent
    assert res.count_w == subset_count(r.ssp.values, r.ssp.target)


@given(st.integers(0, 2**32))
def test_pipeline_random(seed):
    inst = random_ssp(random.Random(seed), max_m=12)
    assert crt_pipeline(inst) == subset_count(inst.values, inst.target)


class TestSubsetSumZeroCounter:
    def test_fit_attributes(self):
        counter = SubsetSumZeroCounter().fit({"values": [3, 3, 3], "target": 6})
        assert counter.count_ == 3
        qs = [q for q, _ in counter.witness_.residues]
        assert qs == list(counter.table_.q[:len(qs)])
        prod = 1
        for q in qs:
            prod *= q
        assert prod > 2**3
        for r, z in zip(counter.instances_, counter.zero_counts_):
            assert z == count_zeros_closed_form(r)

    def test_params(self):
        counter = SubsetSumZeroCounter(floor_bound=500)
        params = counter.get_params()
        assert params["floor_bound"] == 500 and params["allow_extension"] is True
        assert clone(counter).get_params() == params

    def test_predict_many(self):
        insts = [SspInstance([1, 2], 3), SspInstance([1, 1], 1), SspInstance([2], 1)]
        assert SubsetSumZeroCounter().predict(insts) == [1, 2, 0]

    def test_config_matches_function(self):
        cfg = PrimeSearchConfig(floor_bound=100)
        inst = SspInstance([2, -2, 4, 0], 2)
        assert crt_pipeline(inst, cfg) == subset_count(inst.values, inst.target)
