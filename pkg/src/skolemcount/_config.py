"""Resource budgets, overridable through environment variables."""

import os
from dataclasses import dataclass, fields

ENV_PREFIX = "SKOLEMCOUNT_"


@dataclass(frozen=True)
class Budgets:
    # max bit length of any intermediate integer in exact LRS evaluation
    bit_budget: int = 1 << 26
    # max order of an explicitly materialized recurrence (spike_to_lrs)
    order_budget: int = 100_000
    # max number of terms iterated by the brute-force zero counter
    oracle_budget: int = 10_000_000
    # subset-sum sizes: meet-in-the-middle and plain enumeration
    ssp_budget: int = 40
    ssp_plain_budget: int = 24
    # spike count for value-set enumeration
    enum_budget: int = 24
    # trial-division bound and rho iteration cap for factorization
    trial_division_bound: int = 1_000_000
    rho_budget: int = 2_000_000

    @classmethod
    def from_env(cls, environ=None):
        environ = os.environ if environ is None else environ
        kwargs = {}
        for f in fields(cls):
            raw = environ.get(ENV_PREFIX + f.name.upper())
            if raw is not None:
                kwargs[f.name] = int(raw)
        return cls(**kwargs)


_budgets = Budgets.from_env()


def get_budgets() -> Budgets:
    return _budgets


def set_budgets(budgets: Budgets) -> Budgets:
    """Install new process-wide defaults; returns the previous ones."""
    global _budgets
    previous, _budgets = _budgets, budgets
    return previous
