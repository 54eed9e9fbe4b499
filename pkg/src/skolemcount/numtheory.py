"""Primality, factorization, Chinese remaindering and primes in the
progressions ``{2 + q t}``.
"""

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache, reduce
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple, Union

from ._config import get_budgets
from .exceptions import BudgetError, DomainError, InsufficientPrimesError

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53,
                 59, 61, 67, 71, 73, 79, 83, 89, 97)

# Deterministic for every n < 2^64 (Sinclair's seven-base set).
_BASES_64 = (2, 325, 9375, 28178, 450775, 9780504, 1795265022)
# The first 13 primes are deterministic below 3.3e24; past that the test is
# a strong-probable-prime test with these 20 bases.
_BASES_BIG = _SMALL_PRIMES[:20]


def _is_strong_probable_prime(n: int, a: int, d: int, s: int) -> bool:
    a %= n
    if a == 0:
        return True
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def is_prime(n: int) -> bool:
    """Strong-pseudoprime primality test.

    Exact for all ``n < 2**64`` and, with the extended base set, for
    ``n < 3.3e24``. Larger inputs are checked against 20 prime bases; a
    composite passing all of them is not known to exist but not ruled out.
    """
    n = int(n)
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    if n < 97 * 97:
        return True
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    bases = _BASES_64 if n < 1 << 64 else _BASES_BIG
    return all(_is_strong_probable_prime(n, a, d, s) for a in bases)


def next_prime(n: int) -> int:
    """Smallest prime >= n."""
    n = max(2, int(n))
    while not is_prime(n):
        n += 1
    return n


def first_primes(count: int) -> List[int]:
    out, p = [], 2
    while len(out) < count:
        out.append(p)
        p = next_prime(p + 1)
    return out


def _pollard_brent(n: int, budget: int, c: int = 1) -> int:
    """A nontrivial factor of the composite ``n``; raises BudgetError."""
    if n % 2 == 0:
        return 2
    spent = 0
    while True:
        y, r, q, g = 2, 1, 1, 1
        x = ys = y
        f = lambda v: (v * v + c) % n  # noqa: E731
        while g == 1:
            x = y
            for _ in range(r):
                y = f(y)
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(128, r - k)):
                    y = f(y)
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += 128
            r *= 2
            spent += r
            if spent > budget:
                raise BudgetError(f"factorization of {n} exceeded the rho budget")
        if g == n:
            g = 1
            while g == 1:
                ys = f(ys)
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g
        c += 1


def factorint(n: int, trial_bound: Optional[int] = None,
              rho_budget: Optional[int] = None) -> Dict[int, int]:
    """Prime factorization of ``|n|`` as ``{prime: exponent}``.

    Trial division up to ``trial_bound`` and Brent's rho for the remaining
    cofactor. ``factorint(0)`` is a DomainError, ``factorint(1) == {}``.
    """
    budgets = get_budgets()
    trial_bound = budgets.trial_division_bound if trial_bound is None else trial_bound
    rho_budget = budgets.rho_budget if rho_budget is None else rho_budget
    n = abs(int(n))
    if n == 0:
        raise DomainError("cannot factor 0")
    out: Dict[int, int] = {}

    def add(p, e=1):
        out[p] = out.get(p, 0) + e

    for p in (2, 3):
        while n % p == 0:
            add(p)
            n //= p
    p, step = 5, 2
    while p <= trial_bound and p * p <= n:
        while n % p == 0:
            add(p)
            n //= p
        p += step
        step = 6 - step
    if n == 1:
        return dict(sorted(out.items()))
    stack = [n]
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            add(m)
            continue
        root = math.isqrt(m)
        if root * root == m:
            stack.extend((root, root))
            continue
        g = _pollard_brent(m, rho_budget)
        stack.extend((g, m // g))
    return dict(sorted(out.items()))


def divisors(n: int) -> List[int]:
    """Positive divisors of ``|n|`` in increasing order."""
    divs = [1]
    for p, e in factorint(n).items():
        divs = [d * p ** k for d in divs for k in range(e + 1)]
    return sorted(divs)


def totient(n: int) -> int:
    if n < 1:
        raise DomainError(f"totient is defined for positive integers, got {n}")
    out = n
    for p in factorint(n):
        out -= out // p
    return out


# -- Chinese remaindering -------------------------------------------------

@dataclass(frozen=True)
class CrtWitness:
    """Congruences ``x = residue (mod modulus)`` with pairwise coprime moduli."""

    residues: Tuple[Tuple[int, int], ...] = ()

    def __post_init__(self):
        pairs = tuple((int(m), int(r)) for m, r in self.residues)
        for m, r in pairs:
            if m < 1:
                raise DomainError(f"modulus must be positive, got {m}")
            if not 0 <= r < m:
                raise DomainError(f"residue {r} not in [0, {m})")
        for i, (mi, _) in enumerate(pairs):
            for mj, _ in pairs[i + 1:]:
                if math.gcd(mi, mj) != 1:
                    raise DomainError(f"moduli {mi} and {mj} are not coprime")
        object.__setattr__(self, "residues", pairs)

    @property
    def modulus(self) -> int:
        return reduce(lambda a, b: a * b, (m for m, _ in self.residues), 1)


def crt_combine(witness: Union[CrtWitness, Iterable[Tuple[int, int]]]) -> int:
    """The unique ``x`` in ``[0, prod(moduli))`` meeting every congruence."""
    if not isinstance(witness, CrtWitness):
        witness = CrtWitness(tuple(witness))
    x, big = 0, 1
    for m, r in witness.residues:
        # lift x (mod big) to the solution mod big*m
        t = (r - x) * pow(big, -1, m) % m if m > 1 else 0
        x += big * t
        big *= m
    return x


# -- primes in arithmetic progressions ------------------------------------

@dataclass(frozen=True)
class PrimeSearchConfig:
    eta: Fraction = Fraction(1, 4)
    floor_bound: int = 10_000
    allow_extension: bool = True

    def __post_init__(self):
        eta = Fraction(self.eta)
        if not 0 < eta <= Fraction(2, 7):
            raise DomainError(f"eta must lie in (0, 2/7], got {eta}")
        if self.floor_bound < 1:
            raise DomainError("floor_bound must be positive")
        object.__setattr__(self, "eta", eta)


@dataclass(frozen=True)
class ApPrimeTable:
    """Rows ``p[i]`` of primes congruent to 2 modulo the odd prime ``q[i]``."""

    q: Tuple[int, ...]
    p: Tuple[Tuple[int, ...], ...]
    bound: float = 0.0  # B = 3 n ln^2 n
    scan_limit: int = 0  # the largest j that was allowed in the final scan
    extended: bool = False
    discarded: Tuple[int, ...] = field(default=())

    @property
    def n(self) -> int:
        return len(self.q)

    def check(self) -> None:
        """Re-verify primality, congruences and distinctness from scratch."""
        if len(set(self.q)) != len(self.q):
            raise DomainError("q values are not distinct")
        if len(self.p) != len(self.q):
            raise DomainError("row count differs from the number of q values")
        for q, row in zip(self.q, self.p):
            if q == 2 or not is_prime(q):
                raise DomainError(f"q={q} is not an odd prime")
            if len(row) != len(self.q):
                raise DomainError(f"row for q={q} has {len(row)} entries")
            if any(b <= a for a, b in zip(row, row[1:])):
                raise DomainError(f"row for q={q} is not strictly increasing")
            for p in row:
                if p == 2 or not is_prime(p):
                    raise DomainError(f"{p} is not an odd prime")
                if p % q != 2:
                    raise DomainError(f"{p} is not 2 mod {q}")


def ap_bound(n: int) -> float:
    """B = 3 n (ln n)^2."""
    return 3 * n * math.log(n) ** 2


def scan_limit(n: int, cfg: PrimeSearchConfig) -> int:
    """floor(max(B^(1/eta), floor_bound))."""
    b = ap_bound(n)
    power = b ** (1 / float(cfg.eta)) if b > 0 else 0.0
    return max(int(math.floor(power)), cfg.floor_bound)


def odd_primes_from(start) -> Iterator[int]:
    p = next_prime(max(3, math.ceil(start)))
    while True:
        yield p
        p = next_prime(p + 1)


def progression_primes(q: int, count: int, limit: Optional[int] = None,
                       start: int = 1) -> Tuple[List[int], int]:
    """Primes ``2 + q t`` for ``t >= start``, at most ``count`` of them.

    Stops early when ``2 + q t`` exceeds ``limit``. Returns the primes found
    and the next unscanned ``t``. For odd ``q`` only odd ``t`` can give an
    odd value, so even ``t`` are skipped.
    """
    found = []
    t = start
    if q % 2 == 1 and t % 2 == 0:
        t += 1
    step = 2 if q % 2 == 1 else 1
    while len(found) < count:
        j = 2 + q * t
        if limit is not None and j > limit:
            break
        if is_prime(j):
            found.append(j)
        t += step
    return found, t


@lru_cache(maxsize=64)
def find_ap_primes(n: int, cfg: PrimeSearchConfig = PrimeSearchConfig()) -> ApPrimeTable:
    """n odd primes q_i, each with n odd primes p_ij = 2 (mod q_i).

    Candidates are the first n+1 odd primes at least B/2, B = 3 n ln^2 n.
    Each row scans ``2 + q t`` up to ``max(B^(1/eta), floor_bound)``; rows
    that do not fill are dropped. If fewer than n rows fill, the scan limit
    doubles until they do (or InsufficientPrimesError without extension).
    """
    if n < 1:
        raise DomainError(f"n must be positive, got {n}")
    b = ap_bound(n)
    limit = scan_limit(n, cfg)
    candidates = []
    for q in odd_primes_from(b / 2):
        candidates.append(q)
        if len(candidates) == n + 1:
            break
    rows: Dict[int, List[int]] = {}
    next_t: Dict[int, int] = {}
    for q in candidates:
        rows[q], next_t[q] = progression_primes(q, n, limit)
    failed = tuple(q for q in candidates if len(rows[q]) < n)
    extended = False
    while sum(len(rows[q]) == n for q in candidates) < n:
        if not cfg.allow_extension:
            raise InsufficientPrimesError(
                f"only {len(candidates) - len(failed)} of {n} rows filled below "
                f"{limit}; failed q: {list(failed)}", failed_q=failed)
        extended = True
        limit *= 2
        for q in candidates:
            if len(rows[q]) < n:
                more, next_t[q] = progression_primes(q, n - len(rows[q]), limit, next_t[q])
                rows[q].extend(more)
    chosen = [q for q in candidates if len(rows[q]) == n][:n]
    return ApPrimeTable(
        q=tuple(chosen),
        p=tuple(tuple(rows[q]) for q in chosen),
        bound=b,
        scan_limit=limit,
        extended=extended,
        discarded=failed,
    )
