import math
import random
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st
from sklearn.base import clone
from sklearn.exceptions import NotFittedError

from oracles import iterate_lrs, poly_mul
from skolemcount import (BudgetError, IntPoly, Lrs, NotOmegaError, OmegaZeroModel,
                         certify_omega, constant_lrs, count_zeros_bruteforce,
                         count_zeros_omega, cyclotomic, f_omega, residue_polynomials,
                         zero_set_structure)
from skolemcount.corpora import random_omega_lrs
from skolemcount.omega import integer_roots, interpolate, zeros_bruteforce

FIB = Lrs((1, 1), (0, 1))
ALTERNATING = Lrs((1, 0), (0, 1))  # 0, 1, 0, 1, ...
LINEAR = Lrs((-1, 2), (-3, -2))  # n - 3


def brute_zeros(u, bound):
    return [n for n, v in enumerate(iterate_lrs(u.coeffs, u.init, bound)) if v == 0]


def test_cyclotomic_small():
    assert cyclotomic(1) == IntPoly((-1, 1))
    assert cyclotomic(2) == IntPoly((1, 1))
    assert cyclotomic(4) == IntPoly((1, 0, 1))
    assert cyclotomic(6) == IntPoly((1, -1, 1))
    assert cyclotomic(12) == IntPoly((1, 0, -1, 0, 1))


def test_certify_examples():
    assert certify_omega(FIB) is None
    # x^4 - 1 = (x - 1)(x + 1)(x^2 + 1)
    assert poly_mul(poly_mul([-1, 1], [1, 1]), [1, 0, 1]) == [-1, 0, 0, 0, 1]
    cert = certify_omega(Lrs((1, 0, 0, 0), (0, 0, 0, 0)))
    assert cert.factors == ((1, 1), (2, 1), (4, 1)) and cert.period == 4
    cert = certify_omega(constant_lrs(5))
    assert cert.factors == ((1, 1),) and cert.period == 1


def test_certify_multiplicities_and_rejections():
    # (x - 1)^2 (x^2 + x + 1)
    chi = cyclotomic(1) * cyclotomic(1) * cyclotomic(3)
    u = Lrs(tuple(-c for c in chi.coeffs[:-1]), (1, 2, 3, 4))
    cert = certify_omega(u)
    assert cert.factors == ((1, 2), (3, 1)) and cert.polynomial() == chi
    assert cert.degree == 4
    assert certify_omega(Lrs((2,), (1,))) is None  # root 2
    assert certify_omega(Lrs((-1, 1), (0, 1))) is not None  # Phi_6
    assert certify_omega(Lrs((-1, 3), (0, 1))) is None  # x^2 - 3x + 1
    with pytest.raises(NotOmegaError):
        count_zeros_omega(FIB, 10)


def test_residue_polynomial_examples():
    rp = residue_polynomials(ALTERNATING)
    assert rp.period == 2 and rp.polys == ((), (Fraction(1),))
    rp = residue_polynomials(LINEAR)
    assert iterate_lrs([-1, 2], [-3, -2], 6) == [-3, -2, -1, 0, 1, 2]
    assert rp.period == 1 and rp.polys == ((Fraction(-3), Fraction(1)),)
    rp = residue_polynomials(constant_lrs(7))
    assert rp.period == 1 and rp.polys == ((Fraction(7),),)


def test_f_omega_examples():
    assert f_omega(ALTERNATING, 2**40) == 1
    assert f_omega(ALTERNATING, 2**40 + 1) == 0
    assert f_omega(LINEAR, 3) == 1
    assert f_omega(LINEAR, 10**12) == 0


def test_count_zeros_examples():
    assert brute_zeros(ALTERNATING, 11) == [0, 2, 4, 6, 8, 10]
    assert count_zeros_omega(ALTERNATING, 11) == 6
    assert count_zeros_omega(LINEAR, 10) == 1
    assert count_zeros_omega(LINEAR, 3) == 0
    assert count_zeros_omega(LINEAR, 3, inclusive=True) == 1
    assert count_zeros_omega(ALTERNATING, 10**30) == 5 * 10**29


def test_zero_set_structure_examples():
    z = zero_set_structure(ALTERNATING)
    assert z.progressions == ((0, 2),) and z.sporadic == ()
    assert z.zeros_below(101) == brute_zeros(ALTERNATING, 101)
    z = zero_set_structure(LINEAR)
    assert z.progressions == () and z.sporadic == (3,)
    z = zero_set_structure(constant_lrs(0))
    assert z.progressions == ((0, 1),) and z.sporadic == ()


def test_bruteforce_examples():
    assert count_zeros_bruteforce(FIB, 10) == 1
    assert count_zeros_bruteforce(constant_lrs(0), 5) == 5
    assert count_zeros_bruteforce(ALTERNATING, 11) == 6
    with pytest.raises(BudgetError):
        count_zeros_bruteforce(FIB, 100, oracle_budget=50)


def test_bruteforce_switches_to_big_integers():
    # 2^n overflows int64 after 63 terms; zeros appear only in (n - 70) * 2^n
    u = Lrs((-4, 4), (-70, -138))
    terms = iterate_lrs(u.coeffs, u.init, 200)
    assert terms.index(0) == 70
    assert count_zeros_bruteforce(u, 200) == 1
    assert count_zeros_bruteforce(FIB, 500) == 1


def test_integer_roots():
    # 2 (x - 3)(x + 5)(x - 1/2) = 2x^3 + 3x^2 - 32x + 15
    poly = tuple(Fraction(c) for c in (15, -32, 3, 2))
    assert integer_roots(poly) == [-5, 3]
    assert integer_roots(poly, nonnegative=True) == [3]
    assert integer_roots((Fraction(0), Fraction(1, 3))) == [0]


@given(st.lists(st.integers(-50, 50), min_size=1, max_size=6), st.integers(-5, 5),
       st.integers(1, 7))
def test_interpolate_recovers_polynomial(coeffs, start, step):
    xs = [start + step * i for i in range(len(coeffs))]
    ys = [sum(c * x**i for i, c in enumerate(coeffs)) for x in xs]
    poly = interpolate(xs, ys)
    expected = list(coeffs)
    while expected and expected[-1] == 0:
        expected.pop()
    assert list(poly) == expected


@given(st.integers(0, 2**32))
def test_residue_polynomials_reproduce_terms(seed):
    u = random_omega_lrs(random.Random(seed))
    rp = residue_polynomials(u)
    k, period = u.order, rp.period
    # classes are indexed by m in {0, ..., k^(3k)}
    assert period <= k ** (3 * k) + 1
    top = 3 * k * period
    terms = iterate_lrs(u.coeffs, u.init, top + 1)
    assert all(rp(n) == terms[n] for n in range(top + 1))


@given(st.integers(0, 2**32), st.integers(0, 3000))
def test_count_matches_bruteforce(seed, bound):
    u = random_omega_lrs(random.Random(seed))
    assert count_zeros_omega(u, bound) == len(brute_zeros(u, bound))


@given(st.integers(0, 2**32))
def test_structure_reconstructs_zero_set(seed):
    u = random_omega_lrs(random.Random(seed))
    z = zero_set_structure(u)
    bound = max(2000, 3 * certify_omega(u).period)
    assert z.zeros_below(bound) == brute_zeros(u, bound)
    assert z.count_below(bound) == len(z.zeros_below(bound))
    assert not any(n % m == r for n in z.sporadic for r, m in z.progressions)


@given(st.integers(0, 2**32))
def test_f_omega_matches_single_index_count(seed):
    rng = random.Random(seed)
    u = random_omega_lrs(rng)
    terms = iterate_lrs(u.coeffs, u.init, 400)
    for n in rng.sample(range(400), 20):
        assert f_omega(u, n) == (terms[n] == 0)


class TestOmegaZeroModel:
    def test_fit_predict(self):
        model = OmegaZeroModel().fit({"coeffs": ["1", "0"], "init": ["0", "1"]})
        assert model.period_ == 2
        np.testing.assert_array_equal(model.predict([0, 1, 2, 10**20 + 1]), [1, 0, 1, 0])
        assert model.count_zeros(11) == 6
        assert model.zero_set_structure().progressions == ((0, 2),)

    def test_params_and_clone(self):
        model = OmegaZeroModel(extra_checks=3)
        assert model.get_params() == {"extra_checks": 3}
        assert clone(model).set_params(extra_checks=1).extra_checks == 1

    def test_unfitted(self):
        with pytest.raises(NotFittedError):
            OmegaZeroModel().predict([1])

    def test_not_omega(self):
        with pytest.raises(NotOmegaError):
            OmegaZeroModel().fit(FIB)
