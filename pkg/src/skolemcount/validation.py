"""Input validation helpers.

Each ``check_*`` accepts either the domain object itself or its plain
JSON-shaped form (dicts and lists, integers possibly as decimal strings) and
returns the validated domain object. Invalid input raises DomainError.
"""

from typing import Any

from .exceptions import DomainError


def _to_int(value: Any, what: str) -> int:
    if isinstance(value, bool):
        raise _domain(f"{what}: expected an integer, got a boolean")
    if isinstance(value, int):
        return value
    if isinstance(value, str):
        try:
            return int(value.strip())
        except ValueError:
            pass
    # integral numpy scalars and the like
    try:
        if int(value) == value:
            return int(value)
    except (TypeError, ValueError):
        pass
    raise _domain(f"{what}: expected an integer, got {value!r}")


def _domain(message):
    return DomainError(message)


def _int_list(value: Any, what: str):
    if isinstance(value, (str, bytes)) or not hasattr(value, "__iter__"):
        raise _domain(f"{what}: expected a list of integers")
    return tuple(_to_int(v, f"{what}[{i}]") for i, v in enumerate(value))


def _get(obj: dict, key: str, what: str):
    if not isinstance(obj, dict):
        raise _domain(f"{what}: expected a JSON object")
    if key not in obj:
        raise _domain(f"{what}: missing field {key!r}")
    return obj[key]


def check_index(n: Any) -> int:
    n = _to_int(n, "index")
    if n < 0:
        raise _domain(f"index must be non-negative, got {n}")
    return n


def check_bound(bound: Any) -> int:
    bound = _to_int(bound, "bound")
    if bound < 0:
        raise _domain(f"bound must be non-negative, got {bound}")
    return bound


def check_lrs(obj: Any):
    from .lrs import Lrs
    if isinstance(obj, Lrs):
        return obj
    if isinstance(obj, dict):
        return Lrs(_int_list(_get(obj, "coeffs", "Lrs"), "coeffs"),
                   _int_list(_get(obj, "init", "Lrs"), "init"))
    if isinstance(obj, (tuple, list)) and len(obj) == 2:
        return Lrs(_int_list(obj[0], "coeffs"), _int_list(obj[1], "init"))
    raise _domain(f"cannot interpret {type(obj).__name__} as an LRS")


def check_spike_sum(obj: Any):
    from .lrs import SpikeSumLrs
    if isinstance(obj, SpikeSumLrs):
        return obj
    spikes = _get(obj, "spikes", "SpikeSumLrs")
    pairs = []
    for i, pair in enumerate(spikes):
        pair = _int_list(pair, f"spikes[{i}]")
        if len(pair) != 2:
            raise _domain(f"spikes[{i}]: expected [period, value]")
        pairs.append(pair)
    return SpikeSumLrs(tuple(pairs), _to_int(obj.get("offset", 0), "offset"))


def check_ssp(obj: Any):
    from .subset_sum import SspInstance
    if isinstance(obj, SspInstance):
        return obj
    return SspInstance(_int_list(_get(obj, "values", "SspInstance"), "values"),
                       _to_int(_get(obj, "target", "SspInstance"), "target"))


def check_gssp(obj: Any):
    from .inclusion import GsspInstance
    if isinstance(obj, GsspInstance):
        return obj
    return GsspInstance(_int_list(_get(obj, "a", "GsspInstance"), "a"),
                        _int_list(_get(obj, "b", "GsspInstance"), "b"),
                        _to_int(_get(obj, "t", "GsspInstance"), "t"))


def check_int_list(value: Any, what: str = "value"):
    return _int_list(value, what)


def check_int(value: Any, what: str = "value") -> int:
    return _to_int(value, what)
