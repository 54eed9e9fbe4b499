"""Exact tools for integer linear recurrence sequences: evaluation, zero
counting for root-of-unity recurrences, and the subset-sum and inclusion
reductions built from spike-sum recurrences.
"""

from .exceptions import (BudgetError, DomainError, InsufficientPrimesError,
                         NotOmegaError, SkolemCountError, VerificationError)
from .inclusion import (GsspInstance, build_inclusion_pair, decide_inclusion,
                        inclusion_witness, value_set)
from .lrs import (Lrs, SpikeSumLrs, ZeroTest, char_poly, constant_lrs, eval,
                  eval_mod, lrs_add, spike_eval, spike_to_lrs, zero_test_randomized)
from .numtheory import (ApPrimeTable, CrtWitness, PrimeSearchConfig, crt_combine,
                        factorint, find_ap_primes, is_prime, totient)
from .omega import (OmegaCertificate, OmegaZeroModel, ResiduePolynomials,
                    ZeroSetStructure, certify_omega, count_zeros_bruteforce,
                    count_zeros_omega, f_omega, residue_polynomials, zero_set_structure)
from .poly import IntPoly, cyclotomic
from .reduction import (ReductionInstance, SubsetSumZeroCounter, build_reduction,
                        check_lemma_3_1, count_zeros_closed_form, crt_pipeline)
from .subset_sum import SspInstance, count_ssp, count_ssp_enumerate, decide_ssp

__version__ = "0.1.0"
