import math
import random

import pytest
from hypothesis import given, strategies as st

from oracles import crt_bruteforce, is_prime_trial, totient_count
from skolemcount import (CrtWitness, DomainError, InsufficientPrimesError,
                         PrimeSearchConfig, crt_combine, factorint, find_ap_primes,
                         is_prime, totient)
from skolemcount.numtheory import ap_bound, divisors, progression_primes, scan_limit


def test_is_prime_examples():
    assert is_prime(2)
    assert 561 == 3 * 11 * 17 and not is_prime_trial(561)
    assert not is_prime(561)
    assert is_prime_trial(2**31 - 1)
    assert is_prime(2**31 - 1)


def test_is_prime_against_trial_division():
    sieve = [True] * 1_000_001
    sieve[0] = sieve[1] = False
    for i in range(2, 1001):
        if sieve[i]:
            sieve[i * i::i] = [False] * len(range(i * i, 1_000_001, i))
    # the sieve agrees with trial division on a sample, then checks every n
    assert all(sieve[n] == is_prime_trial(n) for n in range(0, 1_000_001, 997))
    assert all(is_prime(n) == sieve[n] for n in range(1_000_001))


@pytest.mark.parametrize("n, expected", [
    (2**61 - 1, True),  # Mersenne prime
    (3825123056546413051, False),  # strong pseudoprime to bases 2..23
    (318665857834031151167461, False),  # strong pseudoprime to bases 2..37
    (2**89 - 1, True),
    ((2**61 - 1) * (2**31 - 1), False),
])
def test_is_prime_large(n, expected):
    assert is_prime(n) is expected


def test_totient_examples():
    assert totient(1) == 1
    assert totient_count(55) == 40 and totient(55) == 40
    assert totient(101) == 100
    with pytest.raises(DomainError):
        totient(0)


@given(st.integers(1, 3000))
def test_totient_against_count(n):
    assert totient(n) == totient_count(n)


def test_factorint_uses_rho_beyond_trial_bound():
    n = (2**31 - 1) * 1000003 * 1000033
    assert factorint(n, trial_bound=100) == {1000003: 1, 1000033: 1, 2**31 - 1: 1}
    assert factorint(-12) == {2: 2, 3: 1}
    assert divisors(12) == [1, 2, 3, 4, 6, 12]


def test_crt_examples():
    assert crt_bruteforce([(3, 2), (5, 1)]) == 11
    assert crt_combine([(3, 2), (5, 1)]) == 11
    assert crt_combine([(97, 0)]) == 0
    assert crt_combine([(3, 1), (5, 1), (7, 1)]) == 1
    assert crt_combine([]) == 0


def test_crt_rejects_bad_witness():
    with pytest.raises(DomainError):
        CrtWitness(((6, 1), (4, 1)))
    with pytest.raises(DomainError):
        CrtWitness(((5, 7),))


@given(st.lists(st.sampled_from([2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31]),
                min_size=1, max_size=6, unique=True), st.data())
def test_crt_roundtrip(moduli, data):
    x = data.draw(st.integers(0, math.prod(moduli) - 1))
    assert crt_combine([(m, x % m) for m in moduli]) == x


def test_progression_row_for_q7():
    brute = [j for j in range(9, 200, 7) if is_prime_trial(j)][:3]
    assert brute == [23, 37, 79]
    assert progression_primes(7, 3)[0] == [23, 37, 79]
    table = find_ap_primes(3)
    assert table.q[0] == 7 and table.p[0] == (23, 37, 79)


def test_find_ap_primes_n1():
    table = find_ap_primes(1)
    assert len(table.q) == 1 and len(table.p[0]) == 1
    q, p = table.q[0], table.p[0][0]
    assert q >= math.ceil(ap_bound(1) / 2) and q % 2 == 1
    # smallest odd prime q = 3; first prime 2 + 3t with t >= 1 is 5
    assert (q, p) == (3, 5)


@pytest.mark.parametrize("n", range(1, 13))
def test_find_ap_primes_invariants(n):
    table = find_ap_primes(n)
    table.check()
    assert table.n == n
    for q, row in zip(table.q, table.p):
        assert all(is_prime_trial(p) and p % q == 2 and p % 2 for p in row)
        assert q >= ap_bound(n) / 2


def test_insufficient_primes_without_extension():
    # n = 1 has B = 0, so the floor alone sets the scan limit; 5 and 7 exceed 4
    cfg = PrimeSearchConfig(floor_bound=4, allow_extension=False)
    with pytest.raises(InsufficientPrimesError) as info:
        find_ap_primes(1, cfg)
    assert info.value.failed_q == (3, 5)
    extended = find_ap_primes(1, PrimeSearchConfig(floor_bound=4))
    assert extended.extended
    extended.check()


def test_prime_search_config_validation():
    with pytest.raises(DomainError):
        PrimeSearchConfig(eta=0.5)
    with pytest.raises(DomainError):
        PrimeSearchConfig(eta=0)
    assert scan_limit(12, PrimeSearchConfig()) == int(ap_bound(12) ** 4)
