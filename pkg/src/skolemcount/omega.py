"""Zero analysis of recurrences whose characteristic roots are roots of unity.

For such a sequence of order k, with L the lcm of the orders of its roots,
every residue class ``n = r (mod L)`` is described by one polynomial:
``u[n] = P_r(n)`` with ``deg P_r < k``. The P_r are recovered by exact
interpolation from sampled terms, after which zero tests, zero counts and
the Skolem-Mahler-Lech decomposition are polynomial-root problems.
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import List, Optional, Sequence, Tuple

import numpy as np
from sklearn.base import BaseEstimator
from sklearn.utils.validation import check_is_fitted

from . import _kernels
from ._config import get_budgets
from .exceptions import BudgetError, DomainError, NotOmegaError, VerificationError
from .lrs import Lrs, char_poly, eval as lrs_eval
from .numtheory import divisors, factorint, is_prime
from .poly import IntPoly, cyclotomic
from .validation import check_bound, check_index, check_lrs

RationalPoly = Tuple[Fraction, ...]

_EULER_GAMMA = 0.5772156649015329


@dataclass(frozen=True)
class OmegaCertificate:
    """chi_u = prod Phi_d^e over ``factors = ((d, e), ...)``; period = lcm(d)."""

    factors: Tuple[Tuple[int, int], ...]
    period: int

    def polynomial(self) -> IntPoly:
        out = IntPoly((1,))
        for d, e in self.factors:
            for _ in range(e):
                out = out * cyclotomic(d)
        return out

    @property
    def degree(self) -> int:
        return sum(e * _totient_small(d) for d, e in self.factors)


@dataclass(frozen=True)
class ResiduePolynomials:
    """``polys[r]`` (lowest degree first) gives u[n] for every n = r mod period."""

    period: int
    polys: Tuple[RationalPoly, ...]

    def __call__(self, n: int) -> Fraction:
        return _rpoly_eval(self.polys[n % self.period], n)


@dataclass(frozen=True)
class ZeroSetStructure:
    """Zero set as full progressions ``n = r (mod modulus)`` plus sporadic zeros."""

    progressions: Tuple[Tuple[int, int], ...]
    sporadic: Tuple[int, ...]

    def __contains__(self, n: int) -> bool:
        return n in set(self.sporadic) or any(n % m == r for r, m in self.progressions)

    def count_below(self, bound: int) -> int:
        total = sum(_class_count(r, m, bound) for r, m in self.progressions)
        return total + sum(1 for z in self.sporadic if z < bound)

    def zeros_below(self, bound: int) -> List[int]:
        out = set(z for z in self.sporadic if z < bound)
        for r, m in self.progressions:
            out.update(range(r, bound, m))
        return sorted(out)


def _class_count(r: int, modulus: int, bound: int) -> int:
    """|{0 <= n < bound : n = r mod modulus}| for 0 <= r < modulus."""
    return 0 if bound <= r else (bound - 1 - r) // modulus + 1


@lru_cache(maxsize=None)
def _totient_small(d: int) -> int:
    out = d
    for p in factorint(d):
        out -= out // p
    return out


def _max_cyclotomic_index(k: int) -> int:
    """Every d with phi(d) <= k is at most this value.

    Uses phi(d) > d / (e^gamma ln ln d + 2.50637 / ln ln d) for d >= 3.
    """
    d = 30
    while True:
        ll = math.log(math.log(d))
        if d / (math.exp(_EULER_GAMMA) * ll + 2.50637 / ll) > k:
            # the lower bound is increasing from here on
            return d
        d *= 2


@lru_cache(maxsize=None)
def _primitive_root_of_order(d: int) -> Tuple[int, int]:
    """A prime P = 1 (mod d), P > 2^31, and an element of exact order d mod P."""
    t = ((1 << 31) // d) + 1
    while not is_prime(d * t + 1):
        t += 1
    p = d * t + 1
    primes_of_d = list(factorint(d)) if d > 1 else []
    g = 2
    while True:
        w = pow(g, (p - 1) // d, p)
        if all(pow(w, d // r, p) != 1 for r in primes_of_d):
            return p, w
        g += 1


def _maybe_divisible_by_cyclotomic(chi: IntPoly, d: int) -> bool:
    """False only if Phi_d certainly does not divide chi."""
    if d <= 2:
        return True
    p, w = _primitive_root_of_order(d)
    acc = 0
    for c in reversed(chi.coeffs):
        acc = (acc * w + c) % p
    return acc == 0


def certify_omega(u) -> Optional[OmegaCertificate]:
    """Factor chi_u into cyclotomic polynomials, or None if that is impossible."""
    u = check_lrs(u)
    chi = char_poly(u)
    k = u.order
    # every product of cyclotomics has constant term +-1
    if abs(chi[0]) != 1:
        return None
    factors = []
    rest = chi
    for d in range(1, _max_cyclotomic_index(k) + 1):
        if rest.degree == 0:
            break
        phi = _totient_small(d)
        if phi > rest.degree or not _maybe_divisible_by_cyclotomic(rest, d):
            continue
        cyc = cyclotomic(d)
        e = 0
        while rest.degree >= phi:
            quot, rem = rest.divmod_monic(cyc)
            if not rem.is_zero:
                break
            rest, e = quot, e + 1
        if e:
            factors.append((d, e))
    if rest.degree != 0:
        return None
    period = 1
    for d, _ in factors:
        period = period * d // math.gcd(period, d)
    return OmegaCertificate(tuple(factors), period)


def require_omega(u) -> OmegaCertificate:
    cert = certify_omega(u)
    if cert is None:
        raise NotOmegaError("characteristic polynomial is not a product of cyclotomic polynomials")
    return cert


# -- rational polynomials -------------------------------------------------

def _rpoly_eval(poly: RationalPoly, x) -> Fraction:
    acc = Fraction(0)
    for c in reversed(poly):
        acc = acc * x + c
    return acc


def interpolate(xs: Sequence[int], ys: Sequence[int]) -> RationalPoly:
    """Coefficients (lowest first) of the unique polynomial of degree < len(xs)."""
    n = len(xs)
    coef = [Fraction(y) for y in ys]
    # Newton divided differences
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    out = [Fraction(0)] * n
    # expand the Newton form by Horner's rule on the nodes
    for i in range(n - 1, -1, -1):
        # out = out * (x - xs[i]) + coef[i]
        shifted = [Fraction(0)] + out[:-1]
        out = [s - xs[i] * o for s, o in zip(shifted, out)]
        out[0] += coef[i]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def integer_roots(poly: RationalPoly, nonnegative: bool = False) -> List[int]:
    """All integer roots of a nonzero rational polynomial, sorted."""
    if not any(poly):
        raise DomainError("the zero polynomial has every integer as a root")
    den = 1
    for c in poly:
        den = den * c.denominator // math.gcd(den, c.denominator)
    ints = [int(c * den) for c in poly]
    roots = set()
    low = 0
    while ints[low] == 0:
        low += 1
    if low:
        roots.add(0)
    ints = ints[low:]
    ipoly = IntPoly(ints)
    if ipoly.degree >= 1:
        for d in divisors(ints[0]):
            for cand in ((d,) if nonnegative else (d, -d)):
                if ipoly(cand) == 0:
                    roots.add(cand)
    return sorted(roots)


# -- the fitted model -----------------------------------------------------

def _sample_terms(u: Lrs, indices: Sequence[int]) -> List[int]:
    top = max(indices) + 1
    if top <= get_budgets().oracle_budget:
        prefix = u.head(top)
        return [prefix[i] for i in indices]
    return [lrs_eval(u, i) for i in indices]


class OmegaZeroModel(BaseEstimator):
    """Residue-class polynomial model of a root-of-unity recurrence.

    ``fit`` certifies the recurrence and interpolates one polynomial per
    residue class; ``predict`` then answers "is u[n] zero?" exactly in time
    polynomial in log n.

    Parameters
    ----------
    extra_checks : int
        Number of additional sample points per residue class used to verify
        each interpolated polynomial.
    """

    def __init__(self, extra_checks: int = 2):
        self.extra_checks = extra_checks

    def fit(self, X, y=None):
        u = check_lrs(X)
        cert = require_omega(u)
        k, period = u.order, cert.period
        per_class = k + self.extra_checks
        if period * per_class > get_budgets().oracle_budget:
            raise BudgetError(
                f"period {period} needs {period * per_class} samples, over the oracle budget")
        indices = [r + j * period for r in range(period) for j in range(per_class)]
        samples = _sample_terms(u, indices)
        polys = []
        for r in range(period):
            xs = indices[r * per_class:(r + 1) * per_class]
            ys = samples[r * per_class:(r + 1) * per_class]
            poly = interpolate(xs[:k], ys[:k])
            for x, yv in zip(xs[k:], ys[k:]):
                if _rpoly_eval(poly, x) != yv:
                    raise VerificationError(
                        f"residue class {r} mod {period}: interpolant disagrees at n={x}")
            polys.append(poly)
        self.lrs_ = u
        self.certificate_ = cert
        self.period_ = period
        self.residue_polynomials_ = ResiduePolynomials(period, tuple(polys))
        return self

    def predict(self, X):
        """1 where u[n] == 0, else 0, for each index n in X."""
        check_is_fitted(self, "residue_polynomials_")
        rp = self.residue_polynomials_
        return np.array([int(rp(check_index(n)) == 0) for n in X], dtype=np.int8)

    def zero_set_structure(self) -> ZeroSetStructure:
        check_is_fitted(self, "residue_polynomials_")
        period = self.period_
        progressions, sporadic = [], []
        for r, poly in enumerate(self.residue_polynomials_.polys):
            if not poly:
                progressions.append((r, period))
            else:
                sporadic.extend(z for z in integer_roots(poly, nonnegative=True)
                                if z % period == r)
        return ZeroSetStructure(tuple(progressions), tuple(sorted(sporadic)))

    def count_zeros(self, bound: int, inclusive: bool = False) -> int:
        """Zeros in [0, bound), or [0, bound] when ``inclusive``."""
        bound = check_bound(bound) + (1 if inclusive else 0)
        check_is_fitted(self, "residue_polynomials_")
        period = self.period_
        total = 0
        for r, poly in enumerate(self.residue_polynomials_.polys):
            if not poly:
                total += _class_count(r, period, bound)
            else:
                total += sum(1 for z in integer_roots(poly, nonnegative=True)
                             if z < bound and z % period == r)
        return total


@lru_cache(maxsize=256)
def _fitted(u: Lrs) -> OmegaZeroModel:
    return OmegaZeroModel().fit(u)


def residue_polynomials(u, cert: Optional[OmegaCertificate] = None) -> ResiduePolynomials:
    u = check_lrs(u)
    model = _fitted(u)
    if cert is not None and cert != model.certificate_:
        raise DomainError("certificate does not match the recurrence")
    return model.residue_polynomials_


def f_omega(u, n: int) -> int:
    """1 if u[n] == 0 else 0."""
    return int(_fitted(check_lrs(u)).predict([n])[0])


def count_zeros_omega(u, bound: int, inclusive: bool = False) -> int:
    return _fitted(check_lrs(u)).count_zeros(bound, inclusive=inclusive)


def zero_set_structure(u) -> ZeroSetStructure:
    return _fitted(check_lrs(u)).zero_set_structure()


# -- brute-force oracle ---------------------------------------------------

def _check_oracle_bound(bound: int, oracle_budget: Optional[int]) -> int:
    bound = check_bound(bound)
    budget = get_budgets().oracle_budget if oracle_budget is None else oracle_budget
    if bound > budget:
        raise BudgetError(f"bound {bound} exceeds the brute-force budget {budget}")
    return bound


def count_zeros_bruteforce(u, bound: int, oracle_budget: Optional[int] = None) -> int:
    """Count zeros in [0, bound) by running the recurrence term by term.

    Works for any recurrence. Runs on machine integers while the terms
    provably fit, then continues with Python integers.
    """
    u = check_lrs(u)
    bound = _check_oracle_bound(bound, oracle_budget)
    k = u.order
    count = sum(1 for v in u.init[:bound] if v == 0)
    if bound <= k:
        return count
    lags = [lag for lag, _ in u._lags]
    coefs = [a for _, a in u._lags]
    fast = _kernels.count_zeros_int64(lags, coefs, u.init, bound)
    if fast is None:
        start, state = k, u.init
    else:
        start, more, buf = fast
        count += more
        if start == bound:
            return count
        state = tuple(int(buf[n % k]) for n in range(start - k, start))
    # resume from index `start` with the k preceding terms as initial values
    tail = Lrs(u.coeffs, state).terms()
    for _ in range(k):
        next(tail)
    for _, v in zip(range(start, bound), tail):
        if v == 0:
            count += 1
    return count


def zeros_bruteforce(u, bound: int, oracle_budget: Optional[int] = None) -> List[int]:
    """Sorted zero indices in [0, bound), by iteration."""
    u = check_lrs(u)
    bound = _check_oracle_bound(bound, oracle_budget)
    return [n for n, v in zip(range(bound), u.terms()) if v == 0]
