"""Subset sum: deciding and counting index subsets with a given sum.

Values form an indexed list, so equal values at different positions give
different subsets: ``count_ssp(SspInstance((1, 1), 1)) == 2``.
"""

from collections import Counter
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from ._config import get_budgets
from .exceptions import BudgetError


@dataclass(frozen=True)
class SspInstance:
    values: Tuple[int, ...] = ()
    target: int = 0

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(int(v) for v in self.values))
        object.__setattr__(self, "target", int(self.target))

    @property
    def m(self) -> int:
        return len(self.values)

    def negated(self) -> "SspInstance":
        return SspInstance(tuple(-v for v in self.values), -self.target)


def subset_sums(values: Sequence[int]) -> List[int]:
    """Sums of all 2^len(values) index subsets (with multiplicity)."""
    sums = [0]
    for v in values:
        sums += [s + v for s in sums]
    return sums


def _check_size(m: int, budget: int, what: str):
    if m > budget:
        raise BudgetError(f"{what} with m={m} exceeds the budget of {budget}")


def count_ssp_enumerate(inst: SspInstance, budget: Optional[int] = None) -> int:
    """Plain enumeration of all 2^m subsets."""
    budget = get_budgets().ssp_plain_budget if budget is None else budget
    _check_size(inst.m, budget, "plain enumeration")
    return subset_sums(inst.values).count(inst.target)


def count_ssp(inst: SspInstance, budget: Optional[int] = None) -> int:
    """|W(S, b)|, by meet in the middle over the two halves of the index list."""
    budget = get_budgets().ssp_budget if budget is None else budget
    _check_size(inst.m, budget, "meet-in-the-middle count")
    half = inst.m // 2
    left = Counter(subset_sums(inst.values[:half]))
    right = Counter(subset_sums(inst.values[half:]))
    b = inst.target
    if len(left) > len(right):
        left, right = right, left
    return sum(c * right.get(b - s, 0) for s, c in left.items())


def decide_ssp(inst: SspInstance, budget: Optional[int] = None) -> bool:
    budget = get_budgets().ssp_budget if budget is None else budget
    _check_size(inst.m, budget, "meet-in-the-middle decision")
    half = inst.m // 2
    right = set(subset_sums(inst.values[half:]))
    b = inst.target
    return any(b - s in right for s in subset_sums(inst.values[:half]))
