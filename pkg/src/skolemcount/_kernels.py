"""Machine-integer fast path for term-by-term iteration.

The kernel only runs while every term provably fits in int64: with M the
largest absolute term seen so far and A the sum of |coefficients|, the next
term is bounded by A * M, so iteration hands back to Python integers as soon
as M exceeds (2^63 - 1) // A.
"""

import numpy as np

try:
    from numba import njit
except ImportError:  # pragma: no cover
    njit = None

INT64_MAX = (1 << 63) - 1


def _zero_count_py(lags, coefs, buf, start, stop, limit):
    k = buf.shape[0]
    count = 0
    maxabs = int(np.abs(buf).max()) if k else 0
    for n in range(start, stop):
        if maxabs > limit:
            return n, count
        v = 0
        for i in range(lags.shape[0]):
            v += coefs[i] * buf[(n - lags[i]) % k]
        buf[n % k] = v
        if v == 0:
            count += 1
        av = abs(v)
        if av > maxabs:
            maxabs = av
    return stop, count


_zero_count = njit(cache=True, nogil=True)(_zero_count_py) if njit else None


def count_zeros_int64(lags, coefs, init, stop):
    """Count zeros among terms ``len(init) .. stop-1``.

    Returns ``(reached, count, buf)`` where ``reached`` is the first index not
    processed (``stop`` on success) and ``buf`` is the ring buffer holding
    terms ``reached - k .. reached - 1`` at positions ``n % k``. Returns None
    if the coefficients or initial values are too large for int64.
    """
    if _zero_count is None:
        return None
    k = len(init)
    weight = sum(abs(a) for a in coefs)
    if weight == 0 or weight > INT64_MAX or max(abs(v) for v in init) > INT64_MAX:
        return None
    limit = INT64_MAX // weight
    buf = np.empty(k, dtype=np.int64)
    for n, v in enumerate(init):
        buf[n % k] = v
    reached, count = _zero_count(
        np.asarray(lags, dtype=np.int64), np.asarray(coefs, dtype=np.int64),
        buf, k, stop, limit)
    return reached, count, buf
