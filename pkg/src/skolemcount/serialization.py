"""JSON encoding. Every integer is written as a decimal string."""

from fractions import Fraction


def _s(x) -> str:
    return str(int(x))


def _frac(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def lrs_to_json(u) -> dict:
    return {"coeffs": [_s(a) for a in u.coeffs], "init": [_s(v) for v in u.init]}


def spike_sum_to_json(s) -> dict:
    return {"spikes": [[_s(p), _s(v)] for p, v in s.spikes], "offset": _s(s.offset)}


def ap_table_to_json(table) -> dict:
    return {
        "q": [_s(q) for q in table.q],
        "p": [[_s(p) for p in row] for row in table.p],
        "B": repr(table.bound),
        "scan_limit": _s(table.scan_limit),
        "extended": table.extended,
        "discarded": [_s(q) for q in table.discarded],
    }


def certificate_to_json(cert) -> dict:
    if cert is None:
        return {"omega": False}
    return {"omega": True,
            "factors": [[_s(d), _s(e)] for d, e in cert.factors],
            "period": _s(cert.period)}


def residue_polys_to_json(rp) -> dict:
    return {"period": _s(rp.period),
            "polys": [[_frac(c) for c in poly] for poly in rp.polys]}


def zero_structure_to_json(z) -> dict:
    return {"progressions": [[_s(r), _s(m)] for r, m in z.progressions],
            "sporadic": [_s(n) for n in z.sporadic]}


def reduction_to_json(r) -> dict:
    return {"q": _s(r.q), "primes": [_s(p) for p in r.primes],
            "gadget": spike_sum_to_json(r.gadget), "B": _s(r.big_bound)}
