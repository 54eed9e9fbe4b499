"""Value-set inclusion for spike-sum recurrences built from a GSSP instance.

u[n] = sum(a_i for i if p_i | n) and v[n] = t - sum(b_i for i if p_i | n),
with p_i the i-th prime. Every divisor pattern D is realized by some n, so
the value sets are {a.x} and {t - b.y} over 0/1 vectors, and inclusion of
the first in the second is "for all x there is y with a.x + b.y = t".
"""

import itertools
from dataclasses import dataclass
from typing import Optional, Set, Tuple

from ._config import get_budgets
from .exceptions import BudgetError, DomainError
from .lrs import SpikeSumLrs
from .numtheory import first_primes
from .subset_sum import subset_sums
from .validation import check_gssp, check_spike_sum


@dataclass(frozen=True)
class GsspInstance:
    a: Tuple[int, ...] = ()
    b: Tuple[int, ...] = ()
    t: int = 0

    def __post_init__(self):
        a = tuple(int(v) for v in self.a)
        b = tuple(int(v) for v in self.b)
        if len(a) != len(b):
            raise DomainError(f"a has length {len(a)} but b has length {len(b)}")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "t", int(self.t))

    @property
    def m(self) -> int:
        return len(self.a)


def build_inclusion_pair(g) -> Tuple[SpikeSumLrs, SpikeSumLrs]:
    g = check_gssp(g)
    primes = first_primes(g.m)
    u = SpikeSumLrs(tuple(zip(primes, g.a)), 0)
    v = SpikeSumLrs(tuple(zip(primes, (-x for x in g.b))), -g.t)
    return u, v


def value_set(s, budget: Optional[int] = None) -> Set[int]:
    """All values taken by a spike sum, one per subset of its spikes."""
    s = check_spike_sum(s)
    budget = get_budgets().enum_budget if budget is None else budget
    if len(s.spikes) > budget:
        raise BudgetError(f"{len(s.spikes)} spikes exceed the enumeration budget {budget}")
    return {x - s.offset for x in subset_sums(s.values)}


def inclusion_witness(g, budget: Optional[int] = None) -> Optional[Tuple[int, ...]]:
    """First 0/1 vector x (lexicographic) with a.x outside the value set of v, or None."""
    g = check_gssp(g)
    _, v = build_inclusion_pair(g)
    targets = value_set(v, budget)
    for x in itertools.product((0, 1), repeat=g.m):
        if sum(ai * xi for ai, xi in zip(g.a, x)) not in targets:
            return x
    return None


def decide_inclusion(g, budget: Optional[int] = None) -> bool:
    """Whether every value of u also occurs in v."""
    u, v = build_inclusion_pair(g)
    return value_set(u, budget) <= value_set(v, budget)
