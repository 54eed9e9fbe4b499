"""Oracle-equivalence suites behind ``skolemcount verify``.

Every suite compares an implementation against an independent route
(iteration, enumeration, trial division, ...) on a seeded random corpus.
"""

import itertools
import math
import random
from dataclasses import dataclass, field
from typing import Callable, Dict, List

from . import corpora
from .inclusion import build_inclusion_pair, decide_inclusion, value_set
from .lrs import (SpikeSumLrs, ZeroTest, eval as lrs_eval, eval_mod, lrs_add,
                  spike_eval, spike_to_lrs, zero_test_randomized)
from .numtheory import crt_combine, find_ap_primes, is_prime, PrimeSearchConfig
from .omega import (count_zeros_bruteforce, count_zeros_omega, residue_polynomials,
                    zero_set_structure, zeros_bruteforce, certify_omega)
from .reduction import check_lemma_3_1, count_zeros_closed_form, crt_pipeline
from .subset_sum import count_ssp, count_ssp_enumerate, decide_ssp


@dataclass
class SuiteResult:
    name: str
    passed: int = 0
    total: int = 0
    failures: List[str] = field(default_factory=list)

    def record(self, ok: bool, detail: str = ""):
        self.total += 1
        if ok:
            self.passed += 1
        elif len(self.failures) < 5:
            self.failures.append(detail)

    @property
    def ok(self) -> bool:
        return self.passed == self.total


SUITES: Dict[str, Callable] = {}


def suite(fn):
    SUITES[fn.__name__] = fn
    return fn


@suite
def eval_vs_iteration(rng, scale):
    res = SuiteResult("eval_vs_iteration")
    for _ in range(20 * scale):
        u = corpora.random_lrs(rng)
        head = u.head(301)
        for n in rng.sample(range(301), 5):
            res.record(lrs_eval(u, n) == head[n], f"{u} n={n}")
    return res


@suite
def eval_mod_consistency(rng, scale):
    res = SuiteResult("eval_mod_consistency")
    for _ in range(20 * scale):
        u = corpora.random_lrs(rng)
        n, m = rng.randrange(500), rng.randint(2, 10**6)
        res.record(eval_mod(u, n, m) == lrs_eval(u, n) % m, f"{u} n={n} m={m}")
    return res


@suite
def lrs_add_pointwise(rng, scale):
    res = SuiteResult("lrs_add_pointwise")
    for _ in range(10 * scale):
        u, v = corpora.random_lrs(rng), corpora.random_lrs(rng)
        w = lrs_add(u, v)
        ok = all(x == y + z for x, y, z in zip(w.head(201), u.head(201), v.head(201)))
        res.record(ok, f"{u} + {v}")
    return res


@suite
def spike_lrs_materialization(rng, scale):
    res = SuiteResult("spike_lrs_materialization")
    for _ in range(5 * scale):
        periods = rng.sample([2, 3, 5, 7, 11, 13], rng.randint(0, 3))
        s = SpikeSumLrs(tuple((p, rng.randint(-5, 5)) for p in periods), rng.randint(-5, 5))
        head = spike_to_lrs(s).head(301)
        res.record(all(head[n] == spike_eval(s, n) for n in range(301)), str(s))
    return res


@suite
def zero_test_soundness(rng, scale):
    res = SuiteResult("zero_test_soundness")
    for _ in range(10 * scale):
        u = corpora.random_omega_lrs(rng) if rng.random() < 0.5 else corpora.random_lrs(rng)
        head = u.head(100)
        for n in rng.sample(range(100), 5):
            verdict = zero_test_randomized(u, n, trials=3, seed=rng)
            if head[n] == 0:
                res.record(verdict is ZeroTest.PROBABLY_ZERO, f"{u} n={n}")
            else:
                res.record(verdict is ZeroTest.DEFINITELY_NONZERO, f"{u} n={n}")
    return res


@suite
def primality_vs_trial_division(rng, scale):
    res = SuiteResult("primality_vs_trial_division")
    limit = 2000 * scale

    def slow(n):
        return n >= 2 and all(n % d for d in range(2, math.isqrt(n) + 1))

    for n in range(limit):
        res.record(is_prime(n) == slow(n), str(n))
    return res


@suite
def crt_roundtrip(rng, scale):
    res = SuiteResult("crt_roundtrip")
    pool = [3, 4, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37]
    for _ in range(50 * scale):
        mods = []
        for m in rng.sample(pool, rng.randint(1, 5)):
            if all(math.gcd(m, x) == 1 for x in mods):
                mods.append(m)
        x = rng.randrange(math.prod(mods))
        res.record(crt_combine([(m, x % m) for m in mods]) == x, f"{x} {mods}")
    return res


@suite
def ap_prime_tables(rng, scale):
    res = SuiteResult("ap_prime_tables")
    cfg = PrimeSearchConfig()
    for n in range(1, 4 + 2 * scale):
        table = find_ap_primes(n, cfg)
        try:
            table.check()
            ok = table.n == n
        except Exception:  # noqa: BLE001
            ok = False
        res.record(ok, f"n={n}")
    return res


@suite
def omega_residue_polynomials(rng, scale):
    res = SuiteResult("omega_residue_polynomials")
    for _ in range(10 * scale):
        u = corpora.random_omega_lrs(rng)
        rp = residue_polynomials(u)
        top = 3 * u.order * rp.period
        head = u.head(top + 1)
        res.record(all(rp(n) == head[n] for n in range(top + 1)), str(u))
    return res


@suite
def omega_count_vs_bruteforce(rng, scale):
    res = SuiteResult("omega_count_vs_bruteforce")
    for _ in range(10 * scale):
        u = corpora.random_omega_lrs(rng)
        bound = rng.randint(0, 3000)
        res.record(count_zeros_omega(u, bound) == count_zeros_bruteforce(u, bound),
                   f"{u} B={bound}")
    return res


@suite
def zero_structure_reconstruction(rng, scale):
    res = SuiteResult("zero_structure_reconstruction")
    for _ in range(10 * scale):
        u = corpora.random_omega_lrs(rng)
        period = certify_omega(u).period
        bound = max(2000, 3 * period)
        z = zero_set_structure(u)
        res.record(z.zeros_below(bound) == zeros_bruteforce(u, bound), str(u))
    return res


@suite
def ssp_counting(rng, scale):
    res = SuiteResult("ssp_counting")
    for _ in range(20 * scale):
        inst = corpora.random_ssp(rng, max_m=12, min_m=0)
        c = count_ssp(inst)
        ok = (c == count_ssp_enumerate(inst) == count_ssp(inst.negated())
              and decide_ssp(inst) == (c > 0))
        res.record(ok, str(inst))
    return res


@suite
def lemma_congruence(rng, scale):
    res = SuiteResult("lemma_congruence")
    for _ in range(20 * scale):
        r = corpora.random_reduction(rng)
        res.record(check_lemma_3_1(r).congruent, f"{r.ssp} q={r.q} primes={r.primes}")
    return res


@suite
def closed_form_vs_bruteforce(rng, scale):
    res = SuiteResult("closed_form_vs_bruteforce")
    for _ in range(4 * scale):
        r = corpora.random_reduction(rng, max_m=3, max_big_bound=10**5)
        brute = count_zeros_bruteforce(spike_to_lrs(r.gadget), r.big_bound)
        res.record(brute == count_zeros_closed_form(r), f"{r.ssp} primes={r.primes}")
    return res


@suite
def crt_pipeline_vs_count(rng, scale):
    res = SuiteResult("crt_pipeline_vs_count")
    for _ in range(4 * scale):
        inst = corpora.random_ssp(rng, max_m=8)
        res.record(crt_pipeline(inst) == count_ssp(inst), str(inst))
    return res


@suite
def inclusion_vs_forall_exists(rng, scale):
    res = SuiteResult("inclusion_vs_forall_exists")
    for _ in range(20 * scale):
        g = corpora.random_gssp(rng, max_m=6)
        cube = list(itertools.product((0, 1), repeat=g.m))
        dot = lambda w, x: sum(a * b for a, b in zip(w, x))  # noqa: E731
        direct = all(any(dot(g.a, x) + dot(g.b, y) == g.t for y in cube) for x in cube)
        u, v = build_inclusion_pair(g)
        ok = (decide_inclusion(g) == direct
              and value_set(u) == {dot(g.a, x) for x in cube}
              and value_set(v) == {g.t - dot(g.b, y) for y in cube})
        res.record(ok, str(g))
    return res


def run_verify(seed: int = 0, scale: int = 1, names=None) -> List[SuiteResult]:
    results = []
    for name, fn in SUITES.items():
        if names and name not in names:
            continue
        # one generator per suite so suites stay reproducible in isolation
        results.append(fn(random.Random(f"{seed}:{name}"), scale))
    return results
