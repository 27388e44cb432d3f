"""Search kernels: a numba path and a pure-numpy fallback.

``LFUZZY_BACKEND`` selects the path:

* ``numpy``: always the vectorized numpy scan;
* ``numba``: always the jitted scan (fails if numba is missing);
* ``auto`` (default): numba for searches of at least ``JIT_THRESHOLD`` tuples,
  numpy below that, where compilation would cost more than it saves.

Both paths report the first violating tuple in enumeration order, so the
choice never changes a verdict or a witness.
"""

from __future__ import annotations

import os
import types
from functools import lru_cache

import numpy as np

from . import encoded
from .public import NAMESPACE as PUBLIC_NAMESPACE

try:
    import numba
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None

# about 1 s of compilation per predicate buys back ~150 ns per tuple
JIT_THRESHOLD = 8_000_000
CHUNK = 1 << 16


def backend_for(size: int) -> str:
    choice = os.environ.get("LFUZZY_BACKEND", "auto").strip().lower()
    if choice not in ("auto", "numpy", "numba"):
        raise ValueError(f"LFUZZY_BACKEND must be auto, numpy or numba, not {choice!r}")
    if choice == "numba" and numba is None:
        raise RuntimeError("LFUZZY_BACKEND=numba but numba is not importable")
    if choice == "auto":
        return "numba" if numba is not None and size >= JIT_THRESHOLD else "numpy"
    return choice


def rebind(func, namespace: dict):
    return types.FunctionType(func.__code__, namespace, func.__name__)


def public_predicate(pred):
    return rebind(pred, PUBLIC_NAMESPACE)


# -- numba ------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _numba_namespace() -> dict:
    ns: dict = {"np": np}
    for name in encoded.HELPERS:
        ns[name] = numba.njit(rebind(getattr(encoded, name), ns))
    return ns


@lru_cache(maxsize=None)
def _jit_predicate(pred):
    return numba.njit(rebind(pred, _numba_namespace()))


@lru_cache(maxsize=None)
def _kernels():
    @numba.njit(nogil=True)
    def scan_range(pred, start, stop, dims, codes, k):
        for flat in range(start, stop):
            r = flat
            t = r % dims[4]
            r //= dims[4]
            d = codes[r % dims[3]]
            r //= dims[3]
            c = codes[r % dims[2]]
            r //= dims[2]
            b = codes[r % dims[1]]
            r //= dims[1]
            a = codes[r]
            if not pred(a, b, c, d, t, k):
                return flat
        return -1

    @numba.njit(nogil=True)
    def scan_samples(pred, sets, thetas, start, stop, k):
        for i in range(start, stop):
            if not pred(sets[i, 0], sets[i, 1], sets[i, 2], sets[i, 3], thetas[i], k):
                return i
        return -1

    return scan_range, scan_samples


# -- numpy ------------------------------------------------------------------------


def _first_false(ok, size) -> int:
    ok = np.broadcast_to(np.asarray(ok, dtype=bool), (size,))
    bad = np.flatnonzero(~ok)
    return int(bad[0]) if bad.size else -1


def _numpy_range(pred, start, stop, dims, codes, k) -> int:
    for lo in range(start, stop, CHUNK):
        hi = min(stop, lo + CHUNK)
        flat = np.arange(lo, hi, dtype=np.int64)
        ia, ib, ic, id_, t = np.unravel_index(flat, tuple(int(x) for x in dims))
        ok = pred(codes[ia], codes[ib], codes[ic], codes[id_], t.astype(np.int64), k)
        hit = _first_false(ok, hi - lo)
        if hit >= 0:
            return lo + hit
    return -1


def _numpy_samples(pred, sets, thetas, start, stop, k) -> int:
    for lo in range(start, stop, CHUNK):
        hi = min(stop, lo + CHUNK)
        s = sets[lo:hi]
        ok = pred(s[:, 0], s[:, 1], s[:, 2], s[:, 3], thetas[lo:hi], k)
        hit = _first_false(ok, hi - lo)
        if hit >= 0:
            return lo + hit
    return -1


# -- entry points -------------------------------------------------------------------


def first_violation_range(pred, start, stop, dims, codes, k, backend: str) -> int:
    """First flat index in ``[start, stop)`` whose tuple violates ``pred``, else -1."""
    if backend == "numba":
        scan_range, _ = _kernels()
        return int(scan_range(_jit_predicate(pred), start, stop, np.asarray(dims, dtype=np.int64), codes, k))
    return _numpy_range(pred, start, stop, dims, codes, k)


def first_violation_samples(pred, sets, thetas, start, stop, k, backend: str) -> int:
    if backend == "numba":
        _, scan_samples = _kernels()
        return int(scan_samples(_jit_predicate(pred), sets, thetas, start, stop, k))
    return _numpy_samples(pred, sets, thetas, start, stop, k)
