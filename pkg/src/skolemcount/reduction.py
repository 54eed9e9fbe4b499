"""Counting subset-sum solutions through zeros of spike-sum recurrences.

For an odd prime q and distinct primes p_i = 2 (mod q), the gadget

    g[n] = sum(s_i for i if p_i | n) - b

vanishes at n exactly when D = {i : p_i | n} is a solution. Over
0 <= n < B = prod p_i, a solution D is hit by phi(B / prod_{i in D} p_i) =
prod_{i not in D} (p_i - 1) indices, and every p_i - 1 is 1 mod q. So the
zero count and the solution count agree mod q, and repeating over enough
q recovers the solution count by Chinese remaindering.
"""

import logging
import math
from collections import defaultdict
from dataclasses import dataclass
from typing import Dict, NamedTuple, Optional, Sequence, Tuple

from sklearn.base import BaseEstimator, clone

from ._config import get_budgets
from .exceptions import BudgetError, DomainError
from .lrs import SpikeSumLrs
from .numtheory import (ApPrimeTable, CrtWitness, PrimeSearchConfig, crt_combine,
                        find_ap_primes, is_prime, progression_primes)
from .subset_sum import SspInstance, count_ssp
from .validation import check_ssp

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ReductionInstance:
    ssp: SspInstance
    q: int
    primes: Tuple[int, ...]
    gadget: SpikeSumLrs
    big_bound: int


def build_reduction(ssp, q: int, primes: Optional[Sequence[int]] = None) -> ReductionInstance:
    """Assemble the gadget for ``ssp`` from primes congruent to 2 mod ``q``.

    When ``primes`` is omitted the smallest m primes ``2 + q t`` (t >= 1)
    are used.
    """
    ssp = check_ssp(ssp)
    q = int(q)
    if q == 2 or not is_prime(q):
        raise DomainError(f"q={q} must be an odd prime")
    if primes is None:
        primes, _ = progression_primes(q, ssp.m)
    primes = tuple(int(p) for p in primes)
    if len(primes) != ssp.m:
        raise DomainError(f"need {ssp.m} primes, got {len(primes)}")
    if len(set(primes)) != len(primes):
        raise DomainError(f"primes are not distinct: {list(primes)}")
    for p in primes:
        if p == 2 or not is_prime(p):
            raise DomainError(f"{p} is not an odd prime")
        if p % q != 2:
            raise DomainError(f"{p} is not congruent to 2 mod {q}")
    gadget = SpikeSumLrs(tuple(zip(primes, ssp.values)), ssp.target)
    return ReductionInstance(ssp, q, primes, gadget, math.prod(primes))


def _weighted_half(values, weights) -> Dict[int, int]:
    """partial sum over D -> sum over D of prod_{i not in D} weights[i]."""
    table = {0: 1}
    for v, w in zip(values, weights):
        nxt = defaultdict(int)
        for s, acc in table.items():
            nxt[s + v] += acc  # i in D
            nxt[s] += acc * w  # i not in D
        table = nxt
    return table


def count_zeros_closed_form(r: ReductionInstance, budget: Optional[int] = None) -> int:
    """|{0 <= n < B : g[n] = 0}| = sum over solutions D of prod_{i not in D} (p_i - 1)."""
    budget = get_budgets().ssp_budget if budget is None else budget
    m = r.ssp.m
    if m > budget:
        raise BudgetError(f"closed-form count with m={m} exceeds the budget of {budget}")
    values = r.ssp.values
    weights = [p - 1 for p in r.primes]
    half = m // 2
    left = _weighted_half(values[:half], weights[:half])
    right = _weighted_half(values[half:], weights[half:])
    b = r.ssp.target
    return sum(w * right.get(b - s, 0) for s, w in left.items())


class LemmaCheck(NamedTuple):
    count_w: int
    count_z: int
    congruent: bool


def check_lemma_3_1(r: ReductionInstance) -> LemmaCheck:
    """Compare |W(S, b)| and |Z_B| modulo q, each computed on its own."""
    w = count_ssp(r.ssp)
    z = count_zeros_closed_form(r)
    ok = (w - z) % r.q == 0
    if not ok:
        logger.error("congruence violated: |W|=%d, |Z|=%d, q=%d, primes=%s",
                     w, z, r.q, list(r.primes))
    return LemmaCheck(w, z, ok)


def select_rows(table: ApPrimeTable, m: int) -> int:
    """Length of the shortest prefix of rows whose q product exceeds 2^m."""
    prod = 1
    for i, q in enumerate(table.q):
        prod *= q
        if prod > 1 << m:
            return i + 1
    raise DomainError(f"product of all q does not exceed 2^{m}")


class SubsetSumZeroCounter(BaseEstimator):
    """Count subset-sum solutions from gadget zero counts and CRT.

    ``fit(ssp)`` finds the prime table, builds one gadget per selected q,
    counts its zeros below B and recombines the residues. The result is in
    ``count_``; the per-q data are in ``instances_``, ``zero_counts_`` and
    ``witness_``.
    """

    def __init__(self, eta=PrimeSearchConfig.eta, floor_bound: int = 10_000,
                 allow_extension: bool = True):
        self.eta = eta
        self.floor_bound = floor_bound
        self.allow_extension = allow_extension

    def _config(self) -> PrimeSearchConfig:
        return PrimeSearchConfig(self.eta, self.floor_bound, self.allow_extension)

    def fit(self, X, y=None):
        ssp = check_ssp(X)
        m = ssp.m
        table = find_ap_primes(max(m, 1), self._config())
        rows = select_rows(table, m)
        instances = tuple(build_reduction(ssp, q, row[:m])
                          for q, row in zip(table.q[:rows], table.p[:rows]))
        zero_counts = tuple(count_zeros_closed_form(r) for r in instances)
        witness = CrtWitness(tuple((r.q, z % r.q) for r, z in zip(instances, zero_counts)))
        self.table_ = table
        self.instances_ = instances
        self.zero_counts_ = zero_counts
        self.witness_ = witness
        self.count_ = crt_combine(witness)
        return self

    def predict(self, X):
        """Solution counts for a sequence of instances."""
        return [clone(self).fit(inst).count_ for inst in X]


def crt_pipeline(ssp, cfg: PrimeSearchConfig = PrimeSearchConfig()) -> int:
    counter = SubsetSumZeroCounter(cfg.eta, cfg.floor_bound, cfg.allow_extension)
    return counter.fit(ssp).count_
