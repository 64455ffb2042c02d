"""Batched exact rank computation for enumerated Weyl groups.

This is the one hot loop of the package: the census needs rank(w - I)
for every group element.  Two interchangeable implementations exist:

* a numba @njit kernel (parallel over the batch), the default when numba
  imports cleanly;
* a vectorized pure-numpy fallback.

Select explicitly with the PERIKIT_BACKEND environment variable set to
"numba" or "numpy".  PERIKIT_THREADS caps the numba thread count.  Both
paths run fraction-free (Bareiss) elimination in int64; inputs whose
Hadamard bound could overflow int64 are routed to an arbitrary-precision
Python path instead (never hit by the built-in root systems).
"""

from __future__ import annotations

import math
import os

import numpy as np

_INT64_SAFE = 2 ** 62

_numba_kernel = None
_numba_failed = False


def _env_backend() -> str | None:
    val = os.environ.get("PERIKIT_BACKEND", "").strip().lower()
    if val in ("numba", "numpy"):
        return val
    if val:
        raise ValueError(
            f"PERIKIT_BACKEND must be 'numba' or 'numpy', not {val!r}"
        )
    return None


def _load_numba_kernel():
    """Compile the @njit kernel once; returns None when numba is missing."""
    global _numba_kernel, _numba_failed
    if _numba_kernel is not None or _numba_failed:
        return _numba_kernel
    try:
        import numba
        from numba import njit, prange
    except ImportError:
        _numba_failed = True
        return None

    threads = os.environ.get("PERIKIT_THREADS", "").strip()
    if threads.isdigit() and int(threads) >= 1:
        numba.set_num_threads(
            min(int(threads), numba.config.NUMBA_NUM_THREADS)
        )

    @njit(cache=True, parallel=True)
    def ranks_kernel(mats):
        count, n, _ = mats.shape
        out = np.empty(count, np.int64)
        for b in prange(count):
            m = mats[b].copy()
            rk = 0
            prev = np.int64(1)
            row = 0
            for col in range(n):
                piv = -1
                for i in range(row, n):
                    if m[i, col] != 0:
                        piv = i
                        break
                if piv == -1:
                    continue
                if piv != row:
                    for j in range(n):
                        tmp = m[row, j]
                        m[row, j] = m[piv, j]
                        m[piv, j] = tmp
                pv = m[row, col]
                for i in range(row + 1, n):
                    mic = m[i, col]
                    for j in range(col + 1, n):
                        m[i, j] = (m[i, j] * pv - mic * m[row, j]) // prev
                    m[i, col] = 0
                prev = pv
                row += 1
                rk += 1
                if row == n:
                    break
            out[b] = rk
        return out

    _numba_kernel = ranks_kernel
    return _numba_kernel


def resolve_backend(backend: str | None = None) -> str:
    """Effective backend name: explicit argument > env var > auto."""
    if backend is None:
        backend = _env_backend()
    if backend == "numpy":
        return "numpy"
    if backend == "numba":
        if _load_numba_kernel() is None:
            raise RuntimeError("numba backend requested but numba is unavailable")
        return "numba"
    return "numba" if _load_numba_kernel() is not None else "numpy"


def _ranks_numpy(mats: np.ndarray) -> np.ndarray:
    """Vectorized fraction-free elimination over the whole batch."""
    m = mats.astype(np.int64, copy=True)
    count, n, _ = m.shape
    ranks = np.zeros(count, dtype=np.int64)
    prev = np.ones(count, dtype=np.int64)
    row = np.zeros(count, dtype=np.int64)
    idx = np.arange(n)
    for col in range(n):
        cand = (m[:, :, col] != 0) & (idx[None, :] >= row[:, None])
        has = cand.any(axis=1)
        if not has.any():
            continue
        b = np.nonzero(has)[0]
        sub = m[b]
        r = row[b]
        p = cand[b].argmax(axis=1)
        bi = np.arange(len(b))
        pivot_rows = sub[bi, p, :].copy()
        sub[bi, p, :] = sub[bi, r, :]
        sub[bi, r, :] = pivot_rows
        pivval = sub[bi, r, col]
        colv = sub[:, :, col]
        upd = sub * pivval[:, None, None] - colv[:, :, None] * pivot_rows[:, None, :]
        upd //= prev[b][:, None, None]
        below = idx[None, :] > r[:, None]
        sub = np.where(below[:, :, None], upd, sub)
        sub[:, :, col] = np.where(below, 0, sub[:, :, col])
        m[b] = sub
        prev[b] = pivval
        row[b] = r + 1
        ranks[b] += 1
    return ranks


def _ranks_python(mats: np.ndarray) -> np.ndarray:
    from ..intlinalg import IntMatrix, rank

    out = np.empty(len(mats), dtype=np.int64)
    for i, m in enumerate(mats):
        out[i] = rank(IntMatrix(m.tolist()))
    return out


def int64_hadamard_safe(mats: np.ndarray) -> bool:
    """Conservative overflow guard for the int64 Bareiss paths."""
    if mats.size == 0:
        return True
    n = mats.shape[-1]
    maxabs = int(np.abs(mats).max())
    if maxabs == 0:
        return True
    bound = (maxabs * math.sqrt(n)) ** n
    return 2.0 * bound * bound < float(_INT64_SAFE)


def batch_ranks(mats: np.ndarray, backend: str | None = None) -> np.ndarray:
    """Exact ranks of a batch of integer matrices, shape (N, n, n)."""
    mats = np.ascontiguousarray(mats, dtype=np.int64)
    if len(mats) == 0:
        return np.zeros(0, dtype=np.int64)
    if not int64_hadamard_safe(mats):
        return _ranks_python(mats)
    name = resolve_backend(backend)
    if name == "numba":
        return _load_numba_kernel()(mats)
    return _ranks_numpy(mats)
