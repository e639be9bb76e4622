# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels over bit vectors packed into 64-bit words.

Same signatures and results as ``seqcorr._purepy``.
"""

import numpy as np

from libc.stdint cimport int64_t, uint8_t, uint64_t

cdef extern from *:
    """
    static inline int sc_popcount(unsigned long long x) { return __builtin_popcountll(x); }
    static inline int sc_ctz(unsigned long long x) { return __builtin_ctzll(x); }
    """
    int sc_popcount(unsigned long long x) nogil
    int sc_ctz(unsigned long long x) nogil

NAME = "cython"


def _pack(bits, Py_ssize_t nwords):
    packed = np.packbits(np.asarray(bits, dtype=np.uint8), bitorder="little")
    buf = np.zeros(nwords * 8, dtype=np.uint8)
    buf[: packed.size] = packed
    return buf.view("<u8").astype(np.uint64, copy=False)


cdef inline uint64_t _rot_word(const uint64_t[::1] tt, Py_ssize_t q, int r, Py_ssize_t w) noexcept nogil:
    # word w of the n-bit window starting at bit 64*q + r of the doubled vector
    if r == 0:
        return tt[q + w]
    return (tt[q + w] >> r) | (tt[q + w + 1] << (64 - r))


cdef inline uint64_t _top_mask(Py_ssize_t n) noexcept nogil:
    cdef int rem = n % 64
    if rem == 0:
        return <uint64_t>0xFFFFFFFFFFFFFFFF
    return (<uint64_t>1 << rem) - 1


def _prepare(s, t, lags):
    cdef Py_ssize_t n = len(s)
    cdef Py_ssize_t nw = (n + 63) // 64
    S = _pack(s, nw)
    TT = _pack(np.concatenate([t, t]), 2 * nw + 2)
    L = np.ascontiguousarray(np.asarray(lags, dtype=np.int64) % n)
    return n, nw, S, TT, L


def arith_profile(s, t, lags):
    n, nw, S_, TT_, L_ = _prepare(s, t, lags)
    cdef const uint64_t[::1] S = S_
    cdef const uint64_t[::1] TT = TT_
    cdef const int64_t[::1] L = L_
    out_ = np.empty(L.shape[0], dtype=np.int64)
    cdef int64_t[::1] out = out_
    cdef Py_ssize_t N = n, NW = nw, j, w, q, first
    cdef int r
    cdef uint64_t top = _top_mask(N), a, b, d, borrow
    cdef int64_t wt, tz
    with nogil:
        for j in range(L.shape[0]):
            q = L[j] >> 6
            r = L[j] & 63
            borrow = 0
            wt = 0
            first = -1
            tz = 0
            for w in range(NW):
                a = S[w]
                b = _rot_word(TT, q, r, w)
                if w == NW - 1:
                    b &= top
                d = a - b - borrow
                borrow = 1 if (a < b or (a == b and borrow)) else 0
                if w == NW - 1:
                    d &= top
                wt += sc_popcount(d)
                if first < 0 and d != 0:
                    first = w
                    tz = 64 * w + sc_ctz(d)
            if borrow:
                # S < T: expand 2^N - 1 + S - T = ((S - T) mod 2^N) - 1
                wt += tz - 1
            out[j] = N - 2 * wt
    return out_


def classical_profile(s, t, lags):
    n, nw, S_, TT_, L_ = _prepare(s, t, lags)
    cdef const uint64_t[::1] S = S_
    cdef const uint64_t[::1] TT = TT_
    cdef const int64_t[::1] L = L_
    out_ = np.empty(L.shape[0], dtype=np.int64)
    cdef int64_t[::1] out = out_
    cdef Py_ssize_t N = n, NW = nw, j, w, q
    cdef int r
    cdef uint64_t top = _top_mask(N), b
    cdef int64_t ham
    with nogil:
        for j in range(L.shape[0]):
            q = L[j] >> 6
            r = L[j] & 63
            ham = 0
            for w in range(NW):
                b = _rot_word(TT, q, r, w)
                if w == NW - 1:
                    ham += sc_popcount((S[w] ^ b) & top)
                else:
                    ham += sc_popcount(S[w] ^ b)
            out[j] = N - 2 * ham
    return out_


def pattern_counts(rows, src, offsets):
    rows_ = np.ascontiguousarray(rows, dtype=np.uint8)
    cdef const uint8_t[:, ::1] R = rows_
    cdef Py_ssize_t n = R.shape[1], i, j, pos
    cdef const int64_t[::1] S = np.ascontiguousarray(src, dtype=np.int64)
    cdef const int64_t[::1] O = np.ascontiguousarray(np.asarray(offsets, dtype=np.int64) % n)
    cdef Py_ssize_t width = S.shape[0]
    if width > 30:
        raise ValueError("pattern too long")
    counts_ = np.zeros(1 << width, dtype=np.int64)
    cdef int64_t[::1] counts = counts_
    cdef int64_t code
    with nogil:
        for i in range(n):
            code = 0
            for j in range(width):
                pos = i + O[j]
                if pos >= n:
                    pos -= n
                code = (code << 1) | R[S[j], pos]
            counts[code] += 1
    return counts_
