"""Command-line interface: ``skolemcount <subcommand> [INPUT] [options]``.

INPUT is a path to a JSON file, ``-`` for standard input, or omitted when
``--json`` supplies the document inline. Results go to standard output (or
``--output``) as one JSON document. Exit status: 0 on success, 1 on a domain
error (bad input, failed check), 2 when a resource budget is exceeded.
"""

import argparse
import dataclasses
import json
import logging
import sys
from fractions import Fraction

from . import serialization as ser
from ._config import get_budgets, set_budgets
from .exceptions import BudgetError, DomainError, SkolemCountError
from .inclusion import decide_inclusion, inclusion_witness
from .lrs import eval as lrs_eval, eval_mod, lrs_add, spike_to_lrs, zero_test_randomized
from .numtheory import PrimeSearchConfig, find_ap_primes
from .omega import (certify_omega, count_zeros_bruteforce, count_zeros_omega,
                    residue_polynomials, zero_set_structure)
from .reduction import build_reduction, check_lemma_3_1, SubsetSumZeroCounter
from .selfcheck import SUITES, run_verify
from .subset_sum import count_ssp, decide_ssp
from .validation import (check_bound, check_gssp, check_index, check_int,
                         check_lrs, check_spike_sum, check_ssp)

EXIT_OK, EXIT_DOMAIN, EXIT_BUDGET = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_DOMAIN, f"{self.prog}: error: {message}\n")


def _eta(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}")


def _int(text: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")


def _int_csv(text: str):
    return [_int(t) for t in text.split(",") if t.strip()]


# -- handlers -------------------------------------------------------------

def _cmd_eval(doc, args):
    return {"value": str(lrs_eval(check_lrs(doc), check_index(args.n)))}


def _cmd_eval_mod(doc, args):
    return {"value": str(eval_mod(check_lrs(doc), check_index(args.n), args.m))}


def _cmd_zero_test(doc, args):
    verdict = zero_test_randomized(check_lrs(doc), check_index(args.n),
                                   trials=args.trials, seed=args.seed)
    return {"result": verdict.value}


def _cmd_lrs_add(doc, args):
    if not isinstance(doc, dict) or "u" not in doc or "v" not in doc:
        raise DomainError('lrs-add expects {"u": <Lrs>, "v": <Lrs>}')
    return ser.lrs_to_json(lrs_add(check_lrs(doc["u"]), check_lrs(doc["v"])))


def _cmd_spike_to_lrs(doc, args):
    return ser.lrs_to_json(spike_to_lrs(check_spike_sum(doc)))


def _cmd_certify_omega(doc, args):
    return ser.certificate_to_json(certify_omega(check_lrs(doc)))


def _cmd_count_zeros(doc, args):
    u = check_lrs(doc)
    bound = check_bound(args.bound)
    if args.bruteforce:
        count = count_zeros_bruteforce(u, bound + (1 if args.inclusive else 0))
    else:
        count = count_zeros_omega(u, bound, inclusive=args.inclusive)
    return {"count": str(count)}


def _cmd_zero_structure(doc, args):
    u = check_lrs(doc)
    out = ser.zero_structure_to_json(zero_set_structure(u))
    if args.polys:
        out["residue_polynomials"] = ser.residue_polys_to_json(residue_polynomials(u))
    return out


def _cmd_ssp_count(doc, args):
    return {"count": str(count_ssp(check_ssp(doc)))}


def _cmd_ssp_decide(doc, args):
    return {"decision": decide_ssp(check_ssp(doc))}


def _prime_config(args) -> PrimeSearchConfig:
    return PrimeSearchConfig(args.eta, args.floor, not args.no_extension)


def _cmd_find_primes(doc, args):
    if args.n < 1:
        raise DomainError("--n must be positive")
    return ser.ap_table_to_json(find_ap_primes(args.n, _prime_config(args)))


def _reduction(doc, args):
    return build_reduction(check_ssp(doc), args.q, args.primes)


def _cmd_reduce_ssp(doc, args):
    return ser.reduction_to_json(_reduction(doc, args))


def _cmd_check_lemma31(doc, args):
    r = _reduction(doc, args)
    res = check_lemma_3_1(r)
    out = {"q": str(r.q), "count_W": str(res.count_w), "count_Z": str(res.count_z),
           "congruent": res.congruent}
    if not res.congruent:
        raise _CheckFailed(out)
    return out


def _cmd_crt_count(doc, args):
    counter = SubsetSumZeroCounter(args.eta, args.floor, not args.no_extension)
    counter.fit(check_ssp(doc))
    out = {"count": str(counter.count_)}
    if args.details:
        out["residues"] = [[str(q), str(r)] for q, r in counter.witness_.residues]
        out["zero_counts"] = [str(z) for z in counter.zero_counts_]
    return out


def _cmd_check_inclusion(doc, args):
    g = check_gssp(doc)
    included = decide_inclusion(g)
    out = {"included": included}
    if not included:
        out["witness"] = list(inclusion_witness(g))
    return out


def _cmd_verify(doc, args):
    results = run_verify(seed=args.seed, scale=args.scale, names=args.suite)
    failed = sum(not r.ok for r in results)
    out = {
        "seed": args.seed,
        "suites": [{"name": r.name, "passed": r.passed, "total": r.total,
                    "ok": r.ok, "failures": r.failures} for r in results],
        "suites_passed": len(results) - failed,
        "suites_failed": failed,
    }
    if failed:
        raise _CheckFailed(out)
    return out


class _CheckFailed(Exception):
    """A self-check reported failure; carries the JSON result to print."""

    def __init__(self, result):
        super().__init__("check failed")
        self.result = result


# name -> (handler, needs input document)
COMMANDS = {
    "eval": (_cmd_eval, True),
    "eval-mod": (_cmd_eval_mod, True),
    "zero-test": (_cmd_zero_test, True),
    "lrs-add": (_cmd_lrs_add, True),
    "spike-to-lrs": (_cmd_spike_to_lrs, True),
    "certify-omega": (_cmd_certify_omega, True),
    "count-zeros": (_cmd_count_zeros, True),
    "zero-structure": (_cmd_zero_structure, True),
    "ssp-count": (_cmd_ssp_count, True),
    "ssp-decide": (_cmd_ssp_decide, True),
    "find-primes": (_cmd_find_primes, False),
    "reduce-ssp": (_cmd_reduce_ssp, True),
    "check-lemma31": (_cmd_check_lemma31, True),
    "crt-count": (_cmd_crt_count, True),
    "check-inclusion": (_cmd_check_inclusion, True),
    "verify": (_cmd_verify, False),
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("input", nargs="?", help="JSON file, or - for stdin")
    common.add_argument("--json", dest="inline", metavar="DOC", help="inline JSON input")
    common.add_argument("-o", "--output", help="write the result here instead of stdout")
    common.add_argument("--seed", type=_int, default=0, help="seed for all randomness")
    common.add_argument("--bit-budget", type=_int)
    common.add_argument("--order-budget", type=_int)
    common.add_argument("--oracle-budget", type=_int)
    common.add_argument("--ssp-budget", type=_int)
    common.add_argument("-v", "--verbose", action="store_true")

    primes = argparse.ArgumentParser(add_help=False)
    primes.add_argument("--eta", type=_eta, default=Fraction(1, 4))
    primes.add_argument("--floor", type=_int, default=10_000)
    primes.add_argument("--no-extension", action="store_true",
                        help="fail instead of widening the prime scan")

    reduce_ = argparse.ArgumentParser(add_help=False)
    reduce_.add_argument("--q", type=_int, required=True)
    reduce_.add_argument("--primes", type=_int_csv,
                         help="comma-separated primes = 2 mod q (default: the smallest m)")

    parser = _Parser(prog="skolemcount", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", metavar="SUBCOMMAND", parser_class=_Parser)
    sub.required = True

    def add(name, help_, *parents):
        return sub.add_parser(name, help=help_, parents=[common, *parents])

    p = add("eval", "exact term u[n]")
    p.add_argument("--n", required=True, type=_int)
    p = add("eval-mod", "term u[n] modulo m")
    p.add_argument("--n", required=True, type=_int)
    p.add_argument("--m", required=True, type=_int)
    p = add("zero-test", "randomized test of u[n] == 0")
    p.add_argument("--n", required=True, type=_int)
    p.add_argument("--trials", type=_int, default=10)
    add("lrs-add", 'pointwise sum of {"u": ..., "v": ...}')
    add("spike-to-lrs", "explicit recurrence for a spike sum")
    add("certify-omega", "factor the characteristic polynomial into cyclotomics")
    p = add("count-zeros", "zeros of a root-of-unity recurrence below a bound")
    p.add_argument("--bound", required=True, type=_int)
    p.add_argument("--inclusive", action="store_true", help="count 0 <= n <= bound")
    p.add_argument("--bruteforce", action="store_true",
                   help="iterate the recurrence instead (any LRS, small bounds)")
    p = add("zero-structure", "zero set as progressions plus sporadic zeros")
    p.add_argument("--polys", action="store_true", help="include the residue polynomials")
    add("ssp-count", "number of subset-sum solutions")
    add("ssp-decide", "whether a subset-sum solution exists")
    p = add("find-primes", "odd primes q_i with primes = 2 mod q_i", primes)
    p.add_argument("--n", required=True, type=_int)
    add("reduce-ssp", "gadget spike sum for one q", reduce_)
    add("check-lemma31", "solution count vs gadget zero count mod q", reduce_)
    p = add("crt-count", "solution count via gadget zero counts and CRT", primes)
    p.add_argument("--details", action="store_true", help="include per-q residues")
    add("check-inclusion", "value-set inclusion for a GSSP instance")
    p = add("verify", "run the oracle-equivalence self-checks")
    p.add_argument("--scale", type=_int, default=1)
    p.add_argument("--suite", action="append", choices=sorted(SUITES))
    return parser


def _read_document(args, needed: bool):
    if args.inline is not None:
        text, source = args.inline, "--json"
    elif args.input == "-":
        text, source = sys.stdin.read(), "<stdin>"
    elif args.input:
        with open(args.input, encoding="utf-8") as fh:
            text, source = fh.read(), args.input
    elif needed:
        raise DomainError("no input: give a JSON file, '-' or --json")
    else:
        return None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise DomainError(
            f"parse error in {source} at line {exc.lineno} column {exc.colno}: {exc.msg}")


def _apply_budgets(args):
    overrides = {name: getattr(args, name) for name in
                 ("bit_budget", "order_budget", "oracle_budget", "ssp_budget")
                 if getattr(args, name) is not None}
    if overrides:
        set_budgets(dataclasses.replace(get_budgets(), **overrides))


def _emit(result, args):
    text = json.dumps(result, separators=(", ", ": ")) + "\n"
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    handler, needs_input = COMMANDS[args.command]
    previous = get_budgets()
    try:
        _apply_budgets(args)
        doc = _read_document(args, needs_input)
        _emit(handler(doc, args), args)
        return EXIT_OK
    except _CheckFailed as exc:
        _emit(exc.result, args)
        return EXIT_DOMAIN
    except BudgetError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (DomainError, SkolemCountError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    finally:
        set_budgets(previous)


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
