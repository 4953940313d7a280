"""Pure numpy sampling kernels; the fallback when the compiled module is missing.

Draw ``ctr`` of stream ``(seed, stream)`` is
``mix64(key + GAMMA * (ctr + 1)) >> 11`` scaled to ``[0, 1)``, where
``key = mix64(mix64(seed) ^ (stream * STREAM_GAMMA + GAMMA))`` and ``mix64``
is the SplitMix64 finalizer.  All arithmetic wraps modulo ``2**64``.
"""

import numpy as np

_U64 = np.uint64
GAMMA = _U64(0x9E3779B97F4A7C15)
STREAM_GAMMA = _U64(0xD1B54A32D192ED03)
_M1 = _U64(0xBF58476D1CE4E5B9)
_M2 = _U64(0x94D049BB133111EB)
_TWO_M53 = 1.0 / 9007199254740992.0

CHUNK = 1 << 16


def _mix64(z):
    z = (z ^ (z >> _U64(30))) * _M1
    z = (z ^ (z >> _U64(27))) * _M2
    return z ^ (z >> _U64(31))


def stream_key(seed, stream):
    with np.errstate(over="ignore"):
        s = np.array([seed], dtype=np.uint64)
        t = np.array([stream], dtype=np.uint64)
        return int(_mix64(_mix64(s) ^ (t * STREAM_GAMMA + GAMMA))[0])


def _uniform_at(key, ctrs):
    with np.errstate(over="ignore"):
        z = _mix64(_U64(key) + GAMMA * (ctrs + _U64(1)))
    return (z >> _U64(11)).astype(np.float64) * _TWO_M53


def uniforms(seed, stream, start, count):
    key = stream_key(seed, stream)
    return _uniform_at(key, np.arange(start, start + count, dtype=np.uint64))


def _chunks(start, count):
    for s in range(start, start + count, CHUNK):
        yield s, min(CHUNK, start + count - s)


def first_hits(seed, stream, start, count, probs):
    probs = np.asarray(probs, dtype=np.float64)
    n = probs.shape[0]
    out = np.zeros(n + 1, dtype=np.int64)
    if n == 0:
        out[0] = count
        return out
    key = stream_key(seed, stream)
    for s, c in _chunks(start, count):
        idx = np.arange(s, s + c, dtype=np.uint64)[:, None] * _U64(n) + np.arange(n, dtype=np.uint64)
        hit = _uniform_at(key, idx) < probs
        any_hit = hit.any(axis=1)
        first = np.where(any_hit, hit.argmax(axis=1), n)
        out += np.bincount(first, minlength=n + 1)
    return out


def strip_hits(seed, stream, start, count, lo, hi):
    lo = np.asarray(lo, dtype=np.float64)
    hi = np.asarray(hi, dtype=np.float64)
    if lo.shape[0] == 0:
        return 0
    key = stream_key(seed, stream)
    hits = 0
    for s, c in _chunks(start, count):
        u = _uniform_at(key, _U64(2) * np.arange(s, s + c, dtype=np.uint64))
        a = np.searchsorted(lo, u, side="right")
        ok = a > 0
        hits += int(np.count_nonzero(ok & (u < hi[np.maximum(a - 1, 0)])))
    return hits


def rect_hits(seed, stream, start, count, x_lo, x_hi, y_lo, y_hi):
    x_lo, x_hi, y_lo, y_hi = (np.asarray(a, dtype=np.float64) for a in (x_lo, x_hi, y_lo, y_hi))
    key = stream_key(seed, stream)
    hits = 0
    for s, c in _chunks(start, count):
        base = _U64(2) * np.arange(s, s + c, dtype=np.uint64)
        u = _uniform_at(key, base)[:, None]
        v = _uniform_at(key, base + _U64(1))[:, None]
        inside = (x_lo <= u) & (u < x_hi) & (y_lo <= v) & (v < y_hi)
        hits += int(np.count_nonzero(inside.any(axis=1)))
    return hits
