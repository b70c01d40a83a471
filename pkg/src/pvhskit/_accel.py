"""Hot integer kernels: multiset convolution, duplicate merging, Freudenthal.

Every kernel has two implementations with identical results.  The numba one
is used when numba imports and ``PVHSKIT_DISABLE_NUMBA`` is unset (or "0");
otherwise the pure-numpy/python fallback runs.  ``use_numba(False)`` switches
at runtime, which the benchmark and the equivalence tests rely on.

Weights travel through the kernels as packed int64 keys: each coordinate is
shifted by a per-call offset and combined with mixed-radix strides, so that
packing is additive (key(a) + key(b) == key(a + b) for offsets split between
the two operands).
"""

from __future__ import annotations

import os

import numpy as np

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    HAVE_NUMBA = False

_ENV_FLAG = "PVHSKIT_DISABLE_NUMBA"
_enabled = HAVE_NUMBA and os.environ.get(_ENV_FLAG, "0") in ("", "0")

MAX_KEY = 2**62
DENSE_LIMIT = 1 << 22


def numba_active() -> bool:
    return _enabled


def use_numba(flag: bool) -> bool:
    """Select the numba path (if available); returns the previous setting."""
    global _enabled
    previous = _enabled
    _enabled = bool(flag) and HAVE_NUMBA
    return previous


# ---------------------------------------------------------------------------
# packing


def make_strides(lo: np.ndarray, hi: np.ndarray) -> np.ndarray:
    """Mixed-radix strides for coordinates ranging over [lo, hi]."""
    radix = (np.asarray(hi, dtype=np.int64) - np.asarray(lo, dtype=np.int64) + 1).tolist()
    strides = []
    total = 1
    for r in reversed(radix):
        strides.append(total)
        total *= int(r)
    if total >= MAX_KEY:
        raise OverflowError("weight range too wide to pack into int64 keys")
    return np.array(strides[::-1], dtype=np.int64)


def pack(rows: np.ndarray, lo: np.ndarray, strides: np.ndarray) -> np.ndarray:
    return ((rows - lo) * strides).sum(axis=1).astype(np.int64)


def unpack(keys: np.ndarray, lo: np.ndarray, strides: np.ndarray) -> np.ndarray:
    out = np.empty((keys.shape[0], strides.shape[0]), dtype=np.int64)
    rest = keys.copy()
    for i, s in enumerate(strides.tolist()):
        out[:, i] = rest // s
        rest = rest - out[:, i] * s
    return out + lo


# ---------------------------------------------------------------------------
# reduce / convolve


def _reduce_np(keys, mults):
    if keys.shape[0] == 0:
        return keys.astype(np.int64), mults.astype(np.int64)
    order = np.argsort(keys, kind="stable")
    k = keys[order]
    m = mults[order]
    starts = np.flatnonzero(np.concatenate(([True], k[1:] != k[:-1])))
    uk = k[starts]
    um = np.add.reduceat(m, starts)
    keep = um != 0
    return uk[keep], um[keep]


def _convolve_np(ka, ma, kb, mb):
    keys = np.add.outer(ka, kb).ravel()
    mults = np.multiply.outer(ma, mb).ravel()
    return _reduce_np(keys, mults)


if HAVE_NUMBA:

    @njit(cache=True, nogil=True)
    def _reduce_dense_nb(keys, mults, base, span):
        acc = np.zeros(span, dtype=np.int64)
        for i in range(keys.shape[0]):
            acc[keys[i] - base] += mults[i]
        count = 0
        for v in range(span):
            if acc[v] != 0:
                count += 1
        out_k = np.empty(count, dtype=np.int64)
        out_m = np.empty(count, dtype=np.int64)
        t = 0
        for v in range(span):
            if acc[v] != 0:
                out_k[t] = v + base
                out_m[t] = acc[v]
                t += 1
        return out_k, out_m

    @njit(cache=True, nogil=True)
    def _reduce_nb(keys, mults):
        n = keys.shape[0]
        if n == 0:
            return keys[:0].copy(), mults[:0].copy()
        lo = keys.min()
        span = keys.max() - lo + 1
        # a dense accumulator beats sorting when the key range is small
        if span <= DENSE_LIMIT and span <= 8 * n:
            return _reduce_dense_nb(keys, mults, lo, span)
        order = np.argsort(keys)
        out_k = np.empty(n, dtype=np.int64)
        out_m = np.empty(n, dtype=np.int64)
        count = 0
        i = 0
        while i < n:
            key = keys[order[i]]
            acc = 0
            while i < n and keys[order[i]] == key:
                acc += mults[order[i]]
                i += 1
            if acc != 0:
                out_k[count] = key
                out_m[count] = acc
                count += 1
        return out_k[:count].copy(), out_m[:count].copy()

    @njit(cache=True, nogil=True)
    def _convolve_nb(ka, ma, kb, mb):
        na = ka.shape[0]
        nb = kb.shape[0]
        keys = np.empty(na * nb, dtype=np.int64)
        mults = np.empty(na * nb, dtype=np.int64)
        t = 0
        for i in range(na):
            for j in range(nb):
                keys[t] = ka[i] + kb[j]
                mults[t] = ma[i] * mb[j]
                t += 1
        return _reduce_nb(keys, mults)


def reduce_keys(keys: np.ndarray, mults: np.ndarray):
    """Sum multiplicities of equal keys; drop zeros; keys come back sorted."""
    keys = np.ascontiguousarray(keys, dtype=np.int64)
    mults = np.ascontiguousarray(mults, dtype=np.int64)
    if _enabled:
        return _reduce_nb(keys, mults)
    return _reduce_np(keys, mults)


def convolve_keys(ka, ma, kb, mb):
    """Multiset product of two packed weight multisets."""
    ka = np.ascontiguousarray(ka, dtype=np.int64)
    kb = np.ascontiguousarray(kb, dtype=np.int64)
    ma = np.ascontiguousarray(ma, dtype=np.int64)
    mb = np.ascontiguousarray(mb, dtype=np.int64)
    if _enabled:
        return _convolve_nb(ka, ma, kb, mb)
    return _convolve_np(ka, ma, kb, mb)


# ---------------------------------------------------------------------------
# Freudenthal recursion
#
# weights: (n, r) all weights of the irreducible, sorted by non-increasing
#   height so that every mu + j*alpha is processed before mu.
# roots:   (P, r) positive roots in fundamental-weight coordinates.
# gram:    (r, r) integer matrix with x.gram.y == scale * (x, y).
# lam_rho_sq: scale * (lambda + rho, lambda + rho).


def _freudenthal_py(weights, keys, lo, strides, hi, roots, gram, lam_rho_sq):
    n, r = weights.shape
    index = {int(k): i for i, k in enumerate(keys.tolist())}
    mult = np.zeros(n, dtype=np.int64)
    if n == 0:
        return mult
    mult[0] = 1
    root_list = [np.asarray(a) for a in roots]
    root_keys = [int(((a) * strides).sum()) for a in root_list]
    g_alpha = [gram @ a for a in root_list]
    rho = np.ones(r, dtype=np.int64)
    for t in range(1, n):
        mu = weights[t]
        mu_key = int(keys[t])
        num = 0
        for a, ak, ga in zip(root_list, root_keys, g_alpha):
            nu = mu + a
            nu_key = mu_key + ak
            while True:
                if np.any(nu > hi) or np.any(nu < lo):
                    break
                i = index.get(nu_key)
                if i is None:
                    break
                num += int(mult[i]) * int(nu @ ga)
                nu = nu + a
                nu_key += ak
        mr = mu + rho
        denom = lam_rho_sq - int(mr @ gram @ mr)
        if denom <= 0 or (2 * num) % denom:
            raise ArithmeticError("Freudenthal recursion lost integrality")
        mult[t] = 2 * num // denom
    return mult


if HAVE_NUMBA:

    @njit(cache=True, nogil=True)
    def _freudenthal_nb(weights, keys, lo, strides, hi, roots, gram, lam_rho_sq):
        n, r = weights.shape
        mult = np.zeros(n, dtype=np.int64)
        if n == 0:
            return mult
        mult[0] = 1
        order = np.argsort(keys)
        sorted_keys = keys[order]
        P = roots.shape[0]
        root_keys = np.zeros(P, dtype=np.int64)
        g_alpha = np.zeros((P, r), dtype=np.int64)
        for p in range(P):
            for c in range(r):
                root_keys[p] += roots[p, c] * strides[c]
                for d in range(r):
                    g_alpha[p, c] += gram[c, d] * roots[p, d]
        nu = np.empty(r, dtype=np.int64)
        for t in range(1, n):
            num = 0
            for p in range(P):
                for c in range(r):
                    nu[c] = weights[t, c] + roots[p, c]
                nu_key = keys[t] + root_keys[p]
                while True:
                    out = False
                    for c in range(r):
                        if nu[c] > hi[c] or nu[c] < lo[c]:
                            out = True
                    if out:
                        break
                    pos = np.searchsorted(sorted_keys, nu_key)
                    if pos >= n or sorted_keys[pos] != nu_key:
                        break
                    s = 0
                    for c in range(r):
                        s += nu[c] * g_alpha[p, c]
                    num += mult[order[pos]] * s
                    for c in range(r):
                        nu[c] += roots[p, c]
                    nu_key += root_keys[p]
            q = 0
            for c in range(r):
                for d in range(r):
                    q += (weights[t, c] + 1) * gram[c, d] * (weights[t, d] + 1)
            denom = lam_rho_sq - q
            if denom <= 0 or (2 * num) % denom != 0:
                return mult[:0]
            mult[t] = 2 * num // denom
        return mult


def freudenthal(weights, keys, lo, strides, hi, roots, gram, lam_rho_sq) -> np.ndarray:
    args = (
        np.ascontiguousarray(weights, dtype=np.int64),
        np.ascontiguousarray(keys, dtype=np.int64),
        np.ascontiguousarray(lo, dtype=np.int64),
        np.ascontiguousarray(strides, dtype=np.int64),
        np.ascontiguousarray(hi, dtype=np.int64),
        np.ascontiguousarray(roots, dtype=np.int64),
        np.ascontiguousarray(gram, dtype=np.int64),
        int(lam_rho_sq),
    )
    if _enabled:
        out = _freudenthal_nb(*args)
        if out.shape[0] != args[0].shape[0]:
            raise ArithmeticError("Freudenthal recursion lost integrality")
        return out
    return _freudenthal_py(*args)
