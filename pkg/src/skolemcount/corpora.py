"""Seeded random instance generators used by ``verify`` and the test suite."""

import random
from typing import List

from .inclusion import GsspInstance
from .lrs import Lrs, check_random_state, lrs_from_char_poly
from .numtheory import is_prime
from .omega import _totient_small
from .poly import cyclotomic
from .reduction import ReductionInstance, build_reduction
from .subset_sum import SspInstance


def random_lrs(rng, max_order: int = 6, coef_range: int = 3, init_range: int = 5) -> Lrs:
    rng = check_random_state(rng)
    k = rng.randint(1, max_order)
    coeffs = [rng.randint(-coef_range, coef_range) for _ in range(k)]
    if coeffs[0] == 0:
        coeffs[0] = rng.choice((-1, 1))
    return Lrs(coeffs, [rng.randint(-init_range, init_range) for _ in range(k)])


def random_cyclotomic_factors(rng, max_order: int = 8, max_index: int = 12):
    """Random ((d, e), ...) with sum e * phi(d) in [1, max_order], d <= max_index."""
    rng = check_random_state(rng)
    target = rng.randint(1, max_order)
    counts = {}
    degree = 0
    while degree < target:
        options = [d for d in range(1, max_index + 1)
                   if _totient_small(d) <= target - degree]
        d = rng.choice(options)
        counts[d] = counts.get(d, 0) + 1
        degree += _totient_small(d)
    return tuple(sorted(counts.items()))


def random_omega_lrs(rng, max_order: int = 8, max_index: int = 12) -> Lrs:
    """Product of cyclotomic characteristic polynomials with small initial values.

    A quarter of the instances have a single nonzero initial value, which
    makes whole residue classes vanish more often.
    """
    rng = check_random_state(rng)
    factors = random_cyclotomic_factors(rng, max_order, max_index)
    chi = None
    for d, e in factors:
        for _ in range(e):
            chi = cyclotomic(d) if chi is None else chi * cyclotomic(d)
    k = chi.degree
    if rng.random() < 0.25:
        init = [0] * k
        init[rng.randrange(k)] = rng.choice((-2, -1, 1, 2))
    else:
        init = [rng.randint(-3, 3) for _ in range(k)]
    return lrs_from_char_poly(chi, init)


def progression_prime_pool(q: int, limit: int) -> List[int]:
    """Primes 2 + q t <= limit with t >= 1."""
    return [j for j in range(2 + q, limit + 1, q) if j % 2 and is_prime(j)]


def random_ssp(rng, max_m: int = 10, value_range: int = 20, min_m: int = 1) -> SspInstance:
    """Values in [-value_range, value_range]; target is a planted subset sum 70% of the time."""
    rng = check_random_state(rng)
    m = rng.randint(min_m, max_m)
    values = [rng.randint(-value_range, value_range) for _ in range(m)]
    if rng.random() < 0.7:
        target = sum(v for v in values if rng.random() < 0.5)
    else:
        target = rng.randint(-value_range * 2, value_range * 2)
    return SspInstance(values, target)


def random_reduction(rng, max_m: int = 6, value_range: int = 20, qs=(3, 5, 7, 11),
                     prime_limit: int = 500, max_big_bound=None) -> ReductionInstance:
    """Valid reduction instance with progression primes below ``prime_limit``.

    With ``max_big_bound`` set, the prime choice is redrawn until the product
    of the primes is at most that value.
    """
    rng = check_random_state(rng)
    while True:
        ssp = random_ssp(rng, max_m, value_range)
        q = rng.choice(qs)
        pool = progression_prime_pool(q, prime_limit)
        if len(pool) < ssp.m:
            continue
        for _ in range(100):
            primes = rng.sample(pool, ssp.m)
            prod = 1
            for p in primes:
                prod *= p
            if max_big_bound is None or prod <= max_big_bound:
                return build_reduction(ssp, q, primes)


def random_gssp(rng, max_m: int = 8, entry_range: int = 10) -> GsspInstance:
    """Random instance; t is a planted a.x + b.y 60% of the time."""
    rng = check_random_state(rng)
    m = rng.randint(0, max_m)
    a = [rng.randint(-entry_range, entry_range) for _ in range(m)]
    b = [rng.randint(-entry_range, entry_range) for _ in range(m)]
    if rng.random() < 0.6:
        t = sum(v for v in a + b if rng.random() < 0.5)
    else:
        t = rng.randint(-2 * entry_range, 2 * entry_range)
    return GsspInstance(a, b, t)
