"""Classical and arithmetic correlation of periodic binary sequences.

The arithmetic value at lag ``tau`` over a common period ``N`` is obtained
from ``D = S(2) - T_tau(2)``, where ``S(2) = sum s_i 2^i`` and ``T_tau(2) =
sum t_{i+tau} 2^i``: take the binary expansion of ``D`` when ``D >= 0`` and of
``2^N - 1 + D`` otherwise, and return ``#zeros - #ones`` of that expansion.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Literal, Optional, Sequence

import numpy as np

from . import _backend
from .algebra import ResidueBits, gcd, lcm, mod_inverse
from .sequences import BinarySequence, expand_to_period

__all__ = [
    "CorrelationProfile",
    "arithmetic_autocorrelation",
    "arithmetic_crosscorrelation",
    "classical_crosscorrelation",
    "common_period",
    "lambdas",
    "omega",
    "omega_lag_multiplier",
    "profile",
    "sequence_to_integer",
]

Kind = Literal["classical", "arithmetic"]
KINDS: tuple[str, ...] = ("classical", "arithmetic")


def common_period(s: BinarySequence, t: BinarySequence) -> int:
    return lcm(s.period, t.period)


def _aligned(s: BinarySequence, t: BinarySequence) -> tuple[np.ndarray, np.ndarray]:
    n = common_period(s, t)
    return expand_to_period(s, n).array, expand_to_period(t, n).array


def sequence_to_integer(s: BinarySequence, tau: int, n: int) -> ResidueBits:
    """Width-n residue whose bit i is ``s[i + tau]``."""
    if n < 1 or n % s.period:
        raise ValueError(f"period {s.period} does not divide {n}")
    idx = (np.arange(n) + tau) % s.period
    packed = np.packbits(s.array[idx], bitorder="little").tobytes()
    return ResidueBits(n, int.from_bytes(packed, "little"))


def classical_crosscorrelation(s: BinarySequence, t: BinarySequence, tau: int) -> int:
    a, b = _aligned(s, t)
    return int(_backend.classical_profile(a, b, np.array([tau], dtype=np.int64))[0])


def arithmetic_crosscorrelation(s: BinarySequence, t: BinarySequence, tau: int) -> int:
    a, b = _aligned(s, t)
    return int(_backend.arith_profile(a, b, np.array([tau], dtype=np.int64))[0])


def arithmetic_autocorrelation(s: BinarySequence, tau: int) -> int:
    return arithmetic_crosscorrelation(s, s, tau)


def classical_autocorrelation(s: BinarySequence, tau: int) -> int:
    return classical_crosscorrelation(s, s, tau)


# ---------- lag-independent residue for coprime periods


def _require_coprime(s: BinarySequence, t: BinarySequence) -> tuple[int, int]:
    p, q = s.period, t.period
    if p < 2 or q < 2:
        raise ValueError("both periods must exceed 1")
    if gcd(p, q) != 1:
        raise ValueError(f"periods {p} and {q} are not coprime")
    return p, q


def lambdas(s: BinarySequence, t: BinarySequence, count: Optional[int] = None) -> list[int]:
    """Signed block differences ``sum_{m<p} (s_m - t_{m+kp}) 2^m`` for k < count.

    ``count`` defaults to the period of t; the values repeat with that period.
    """
    p, q = s.period, t.period
    count = q if count is None else count
    sv = sum(b << m for m, b in enumerate(s))
    out = []
    for k in range(count):
        tv = sum(t[m + k * p] << m for m in range(p))
        out.append(sv - tv)
    return out


def omega(s: BinarySequence, t: BinarySequence) -> ResidueBits:
    """The residue whose weight fixes the arithmetic crosscorrelation.

    For coprime periods p and q, ``pq - 2 * weight(omega(s, t))`` is the
    arithmetic crosscorrelation at every lag.
    """
    p, q = _require_coprime(s, t)
    n = p * q
    modulus = (1 << n) - 1
    raw = sum(lam << (k * p) for k, lam in enumerate(lambdas(s, t)))
    # raw is the signed lag-0 difference; keep the literal sign split so that
    # the degenerate all-ones expansion survives the reduction
    if raw == modulus:
        return ResidueBits(n, modulus)
    return ResidueBits(n, raw % modulus)


def omega_lag_multiplier(p: int, q: int, tau: int) -> int:
    """The x in [0, q) with ``x = tau * p^-1 (mod q)``.

    Rotating the lag-tau expansion left by ``x * p`` bits gives omega.
    """
    if q == 1:
        return 0
    return tau * mod_inverse(p, q) % q


# ---------- profiles


@dataclass(frozen=True)
class CorrelationProfile:
    kind: str
    mode: str
    common_period: int
    values: tuple[int, ...]
    lags: Optional[tuple[int, ...]] = None

    def __post_init__(self) -> None:
        n = self.common_period
        for v in self.values:
            if abs(v) > n or (v - n) % 2:
                raise ValueError(f"value {v} impossible over period {n}")

    def items(self) -> list[tuple[int, int]]:
        lags = self.lags if self.lags is not None else range(len(self.values))
        return list(zip(lags, self.values))

    def is_constant(self) -> bool:
        return len(set(self.values)) <= 1

    def value_set(self) -> set[int]:
        return set(self.values)


def profile(
    s: BinarySequence,
    t: Optional[BinarySequence] = None,
    kind: Kind = "arithmetic",
    lags: Optional[Iterable[int]] = None,
    jobs: int = 1,
) -> CorrelationProfile:
    """Correlation at each lag (all of ``[0, N)`` by default).

    With ``jobs > 1`` the lags are split across threads; the compiled
    kernels release the GIL.
    """
    if kind not in KINDS:
        raise ValueError(f"kind must be one of {KINDS}")
    mode = "auto" if t is None or t is s else "cross"
    t = s if t is None else t
    a, b = _aligned(s, t)
    n = a.size
    lag_arr = np.arange(n, dtype=np.int64) if lags is None else np.fromiter(lags, dtype=np.int64)
    fn = _backend.arith_profile if kind == "arithmetic" else _backend.classical_profile
    if jobs > 1 and lag_arr.size > 1:
        chunks = np.array_split(lag_arr, min(jobs, lag_arr.size))
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            values = np.concatenate(list(pool.map(lambda c: fn(a, b, c), chunks)))
    else:
        values = fn(a, b, lag_arr)
    return CorrelationProfile(
        kind=kind,
        mode=mode,
        common_period=n,
        values=tuple(int(v) for v in values),
        lags=None if lags is None else tuple(int(x) for x in lag_arr),
    )
