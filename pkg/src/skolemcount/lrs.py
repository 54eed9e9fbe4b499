"""Integer linear recurrence sequences.

An :class:`Lrs` of order k satisfies

    u[n] = a[k-1] u[n-1] + ... + a[0] u[n-k]        (n >= k)

with ``coeffs = (a[0], ..., a[k-1])`` and ``init = (u[0], ..., u[k-1])``.
Minimality of the order is not checked.
"""

import enum
import random
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, List, Optional, Sequence, Tuple

from ._config import get_budgets
from .exceptions import BudgetError, DomainError

try:
    from gmpy2 import mpz
except ImportError:  # pragma: no cover
    mpz = None
from .numtheory import is_prime
from .poly import IntPoly, poly_product

Matrix = List[List[int]]


@dataclass(frozen=True)
class Lrs:
    coeffs: Tuple[int, ...]
    init: Tuple[int, ...]

    def __post_init__(self):
        coeffs = tuple(int(a) for a in self.coeffs)
        init = tuple(int(v) for v in self.init)
        if len(coeffs) < 1:
            raise DomainError("an LRS needs order at least 1")
        if len(coeffs) != len(init):
            raise DomainError(
                f"{len(coeffs)} coefficients but {len(init)} initial values")
        if coeffs[0] == 0:
            raise DomainError("a_0 must be nonzero")
        object.__setattr__(self, "coeffs", coeffs)
        object.__setattr__(self, "init", init)

    @property
    def order(self) -> int:
        return len(self.coeffs)

    @cached_property
    def _lags(self) -> Tuple[Tuple[int, int], ...]:
        # (lag, a): u[n] = sum a * u[n - lag]
        k = self.order
        return tuple((k - j, a) for j, a in enumerate(self.coeffs) if a)

    def terms(self) -> Iterator[int]:
        """Iterate u[0], u[1], ... by direct use of the recurrence."""
        yield from self.init
        k = self.order
        buf = list(self.init)
        lags = self._lags
        dense = len(lags) * 2 > k
        coeffs = self.coeffs
        while True:
            if dense:
                tail = buf[-k:]
                val = 0
                for a, x in zip(coeffs, tail):
                    val += a * x
            else:
                n = len(buf)
                val = 0
                for lag, a in lags:
                    val += a * buf[n - lag]
            buf.append(val)
            if len(buf) > 4 * k + 64:
                del buf[:-k]
            yield val

    def head(self, count: int) -> List[int]:
        """The first ``count`` terms."""
        out = []
        if count <= 0:
            return out
        for v in self.terms():
            out.append(v)
            if len(out) == count:
                break
        return out

    def __repr__(self):
        return f"Lrs(coeffs={list(self.coeffs)}, init={list(self.init)})"


@dataclass(frozen=True)
class SpikeSumLrs:
    """``s[n] = sum(value for period, value in spikes if n % period == 0) - offset``.

    Periods must be distinct primes. Every period divides 0, so
    ``s[0] = sum(values) - offset``.
    """

    spikes: Tuple[Tuple[int, int], ...] = ()
    offset: int = 0

    def __post_init__(self):
        spikes = tuple((int(p), int(s)) for p, s in self.spikes)
        periods = [p for p, _ in spikes]
        if len(set(periods)) != len(periods):
            raise DomainError(f"spike periods must be distinct: {periods}")
        for p in periods:
            if not is_prime(p):
                raise DomainError(f"spike period {p} is not prime")
        object.__setattr__(self, "spikes", spikes)
        object.__setattr__(self, "offset", int(self.offset))

    @property
    def periods(self) -> Tuple[int, ...]:
        return tuple(p for p, _ in self.spikes)

    @property
    def values(self) -> Tuple[int, ...]:
        return tuple(s for _, s in self.spikes)

    @property
    def order(self) -> int:
        """Order of the explicit recurrence produced by :func:`spike_to_lrs`."""
        return 1 + sum(self.periods)


# -- evaluation -----------------------------------------------------------

def companion_matrix(u: Lrs) -> Matrix:
    """Matrix M with M (u[n], ..., u[n+k-1])^T = (u[n+1], ..., u[n+k])^T."""
    k = u.order
    rows = [[1 if j == i + 1 else 0 for j in range(k)] for i in range(k - 1)]
    rows.append(list(u.coeffs))
    return rows


def _width(a: Matrix) -> int:
    return max(abs(v).bit_length() for row in a for v in row)


def _matmul(a: Matrix, b: Matrix, mod: Optional[int], bit_budget: int) -> Matrix:
    bt = list(zip(*b))
    if mod is None:
        # entries of the product are sums of k products
        predicted = _width(a) + _width(b) + len(bt).bit_length()
        if predicted > bit_budget:
            raise BudgetError(
                f"intermediate integers of up to {predicted} bits would exceed "
                f"the {bit_budget}-bit budget")
        return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]
    return [[sum(x * y for x, y in zip(row, col)) % mod for col in bt] for row in a]


def _matpow_vec(u: Lrs, n: int, mod: Optional[int], bit_budget: int) -> int:
    """First entry of M^n applied to the initial vector."""
    result = None
    base = companion_matrix(u)
    if mod is not None:
        base = [[v % mod for v in row] for row in base]
    elif mpz is not None:
        base = [[mpz(v) for v in row] for row in base]
    e = n
    while e:
        if e & 1:
            result = base if result is None else _matmul(result, base, mod, bit_budget)
        e >>= 1
        if e:
            base = _matmul(base, base, mod, bit_budget)
    row = result[0]
    val = sum(x * y for x, y in zip(row, u.init))
    return int(val % mod) if mod is not None else int(val)


def _check_index(n) -> int:
    if isinstance(n, bool) or int(n) != n or n < 0:
        raise DomainError(f"index must be a non-negative integer, got {n!r}")
    return int(n)


def eval(u: Lrs, n: int, bit_budget: Optional[int] = None) -> int:  # noqa: A001
    """u[n] by binary powering of the companion matrix, exactly."""
    n = _check_index(n)
    if n < u.order:
        return u.init[n]
    if bit_budget is None:
        bit_budget = get_budgets().bit_budget
    return _matpow_vec(u, n, None, bit_budget)


def eval_mod(u: Lrs, n: int, m: int) -> int:
    """u[n] mod m, with every intermediate product reduced mod m."""
    n = _check_index(n)
    if isinstance(m, bool) or int(m) != m or m < 2:
        raise DomainError(f"modulus must be an integer >= 2, got {m!r}")
    m = int(m)
    if n < u.order:
        return u.init[n] % m
    return _matpow_vec(u, n, m, 0)


class ZeroTest(str, enum.Enum):
    DEFINITELY_NONZERO = "definitely-nonzero"
    PROBABLY_ZERO = "probably-zero"


ZERO_TEST_PRIME_RANGE = (1 << 61, 1 << 62)


def check_random_state(seed) -> random.Random:
    """Normalize ``None``, an int seed or a ``random.Random`` to a Random."""
    if isinstance(seed, random.Random):
        return seed
    if seed is None:
        return random.Random()
    if isinstance(seed, int) and not isinstance(seed, bool):
        return random.Random(seed)
    raise DomainError(f"cannot use {seed!r} as a random seed")


def random_prime(rng: random.Random, lo: int = ZERO_TEST_PRIME_RANGE[0],
                 hi: int = ZERO_TEST_PRIME_RANGE[1]) -> int:
    """Uniform prime in [lo, hi) by rejection sampling."""
    while True:
        c = rng.randrange(lo, hi) | 1
        if c < hi and is_prime(c):
            return c


def zero_test_randomized(u: Lrs, n: int, trials: int = 10, seed=None) -> ZeroTest:
    """One-sided randomized test of ``u[n] == 0``.

    u[n] is reduced modulo ``trials`` random primes from [2^61, 2^62). A
    nonzero residue proves u[n] != 0. A nonzero u[n] of b bits is divisible
    by at most b/61 of these primes, so for moderate b a wrong
    PROBABLY_ZERO answer is vanishingly unlikely.
    """
    n = _check_index(n)
    if trials < 1:
        raise DomainError("trials must be at least 1")
    rng = check_random_state(seed)
    for _ in range(trials):
        if eval_mod(u, n, random_prime(rng)):
            return ZeroTest.DEFINITELY_NONZERO
    return ZeroTest.PROBABLY_ZERO


# -- constructions --------------------------------------------------------

def char_poly(u: Lrs) -> IntPoly:
    """x^k - a[k-1] x^(k-1) - ... - a[0]."""
    return IntPoly(tuple(-a for a in u.coeffs) + (1,))


def lrs_from_char_poly(chi: IntPoly, init: Sequence[int]) -> Lrs:
    if chi.is_zero or chi.leading != 1:
        raise DomainError("characteristic polynomial must be monic")
    return Lrs(tuple(-c for c in chi.coeffs[:-1]), tuple(init))


def lrs_add(u: Lrs, v: Lrs) -> Lrs:
    """Pointwise sum, with characteristic polynomial chi_u * chi_v.

    The result has order ``u.order + v.order`` even when a smaller
    recurrence exists.
    """
    chi = char_poly(u) * char_poly(v)
    k = chi.degree
    init = [x + y for x, y in zip(u.head(k), v.head(k))]
    return lrs_from_char_poly(chi, init)


def constant_lrs(c: int) -> Lrs:
    return Lrs((1,), (c,))


def spike_eval(s: SpikeSumLrs, n: int) -> int:
    n = _check_index(n)
    return sum(v for p, v in s.spikes if n % p == 0) - s.offset


def spike_char_poly(s: SpikeSumLrs) -> IntPoly:
    """(x - 1) * prod (x^p - 1)."""
    return poly_product([IntPoly.x_pow_minus_one(1)]
                        + [IntPoly.x_pow_minus_one(p) for p in s.periods])


def spike_to_lrs(s: SpikeSumLrs, order_budget: Optional[int] = None) -> Lrs:
    """Materialize a spike sum as an explicit recurrence of order 1 + sum(periods)."""
    if order_budget is None:
        order_budget = get_budgets().order_budget
    if s.order > order_budget:
        raise BudgetError(
            f"explicit recurrence would have order {s.order} > budget {order_budget}")
    chi = spike_char_poly(s)
    return lrs_from_char_poly(chi, [spike_eval(s, n) for n in range(chi.degree)])
