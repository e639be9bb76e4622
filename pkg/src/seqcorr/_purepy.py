"""Reference kernels in plain Python, used when the compiled core is unavailable.

Bit vectors travel as Python ints (bit i = element i), so subtraction with
borrow and popcount are delegated to CPython's arbitrary-precision routines.
"""

from __future__ import annotations

import numpy as np

NAME = "python"


def pack(bits: np.ndarray) -> int:
    return int.from_bytes(np.packbits(bits, bitorder="little").tobytes(), "little")


def _rotations(t: int, n: int, lags: np.ndarray):
    mask = (1 << n) - 1
    for tau in lags.tolist():
        tau %= n
        # bit i of the result is bit (i + tau) mod n of t
        yield ((t >> tau) | (t << (n - tau))) & mask if tau else t


def arith_profile(s: np.ndarray, t: np.ndarray, lags: np.ndarray) -> np.ndarray:
    n = len(s)
    mask = (1 << n) - 1
    sv = pack(s)
    out = np.empty(len(lags), dtype=np.int64)
    for j, tv in enumerate(_rotations(pack(t), n, lags)):
        d = sv - tv
        if d < 0:
            d += mask
        out[j] = n - 2 * d.bit_count()
    return out


def classical_profile(s: np.ndarray, t: np.ndarray, lags: np.ndarray) -> np.ndarray:
    n = len(s)
    sv = pack(s)
    out = np.empty(len(lags), dtype=np.int64)
    for j, tv in enumerate(_rotations(pack(t), n, lags)):
        out[j] = n - 2 * (sv ^ tv).bit_count()
    return out


def pattern_counts(rows: np.ndarray, src: np.ndarray, offsets: np.ndarray) -> np.ndarray:
    n = rows.shape[1]
    idx = np.arange(n, dtype=np.int64)
    code = np.zeros(n, dtype=np.int64)
    for r, off in zip(src.tolist(), offsets.tolist()):
        code = (code << 1) | rows[r, (idx + off) % n]
    return np.bincount(code, minlength=1 << len(src)).astype(np.int64)
