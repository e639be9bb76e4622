"""Periodic binary sequences: Legendre, m- and l-sequences plus generic helpers."""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence, Union

import numpy as np

from .algebra import (
    Gf2Poly,
    ResidueBits,
    factorize,
    is_prime,
    is_primitive,
    is_primitive_root,
    legendre_symbol,
    mod_inverse,
)

__all__ = [
    "BinarySequence",
    "NotPrimitiveRootError",
    "SequenceSpec",
    "expand_to_period",
    "is_balanced",
    "l_sequence",
    "legendre_sequence",
    "m_sequence",
    "minimal_period",
    "shift",
]


class NotPrimitiveRootError(ValueError):
    """2 does not generate the units modulo p, so no l-sequence exists."""


class BinarySequence:
    """One period of a periodic binary sequence.

    The period is the declared length of ``bits`` and need not be minimal.
    Integer indexing is cyclic, so ``s[-i] == s[N - i]``.
    """

    __slots__ = ("_bits", "_hash")

    def __init__(self, bits: Union[Iterable[int], np.ndarray, str]):
        if isinstance(bits, str):
            text = bits.strip()
            if set(text) - {"0", "1"}:
                raise ValueError("bit string may only contain '0' and '1'")
            bits = [int(ch) for ch in text]
        arr = np.array(bits if isinstance(bits, np.ndarray) else list(bits), dtype=np.int64)
        if arr.ndim != 1 or arr.size == 0:
            raise ValueError("a sequence needs at least one bit")
        if np.any((arr != 0) & (arr != 1)):
            raise ValueError("bits must be 0 or 1")
        arr = arr.astype(np.uint8)
        arr.flags.writeable = False
        self._bits = arr
        self._hash: Optional[int] = None

    @property
    def period(self) -> int:
        return int(self._bits.size)

    @property
    def array(self) -> np.ndarray:
        """Read-only ``uint8`` view of one period."""
        return self._bits

    @property
    def bits(self) -> tuple[int, ...]:
        return tuple(self._bits.tolist())

    def __len__(self) -> int:
        return self.period

    def __iter__(self) -> Iterator[int]:
        return iter(self._bits.tolist())

    def __getitem__(self, i: int) -> int:
        return int(self._bits[i % self.period])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BinarySequence):
            return NotImplemented
        return self.period == other.period and bool(np.array_equal(self._bits, other._bits))

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._bits.tobytes())
        return self._hash

    def __repr__(self) -> str:
        text = self.to_string()
        if len(text) > 40:
            text = text[:37] + "..."
        return f"BinarySequence('{text}', period={self.period})"

    def to_string(self) -> str:
        return "".join("1" if b else "0" for b in self._bits.tolist())

    def ones(self) -> int:
        return int(self._bits.sum())


def legendre_sequence(p: int) -> BinarySequence:
    """Bit n is 1 iff n is a nonzero quadratic residue modulo p."""
    if p <= 2 or not is_prime(p):
        raise ValueError(f"Legendre sequences need an odd prime, got {p}")
    return BinarySequence([1 if legendre_symbol(n, p) == 1 else 0 for n in range(p)])


def m_sequence(f: Gf2Poly, seed: Optional[Sequence[int]] = None) -> BinarySequence:
    """One period of the LFSR sequence with characteristic polynomial f.

    With ``f = X^n + sum c_j X^j`` the output obeys
    ``s[i+n] = sum c_j s[i+j]`` over GF(2) and starts with ``seed``
    (default: the impulse state ``1, 0, ..., 0``).
    """
    n = f.degree
    if n < 2:
        raise ValueError("m-sequences need a feedback polynomial of degree >= 2")
    if not is_primitive(f):
        raise ValueError(f"{f} is not primitive")
    if seed is None:
        seed = [1] + [0] * (n - 1)
    seed = [int(b) for b in seed]
    if len(seed) != n or any(b not in (0, 1) for b in seed):
        raise ValueError(f"seed must be {n} bits")
    if not any(seed):
        raise ValueError("seed must be nonzero")

    taps = f.mask & ((1 << n) - 1)
    state = sum(b << j for j, b in enumerate(seed))  # bit j holds s[i+j]
    out = np.empty((1 << n) - 1, dtype=np.uint8)
    for i in range(out.size):
        out[i] = state & 1
        fb = (state & taps).bit_count() & 1
        state = (state >> 1) | (fb << (n - 1))
    return BinarySequence(out)


def l_sequence(p: int, a: int = 1) -> BinarySequence:
    """Bit i is the parity of ``a * 2^(-i) mod p``; period p - 1."""
    if p <= 2 or not is_prime(p):
        raise ValueError(f"l-sequences need an odd prime, got {p}")
    if not is_primitive_root(2, p):
        raise NotPrimitiveRootError(f"2 is not a primitive root modulo {p}")
    if a % p == 0:
        raise ValueError("the multiplier must be coprime to p")
    inv2 = mod_inverse(2, p)
    x = a % p
    out = []
    for _ in range(p - 1):
        out.append(x & 1)
        x = x * inv2 % p
    return BinarySequence(out)


def shift(s: BinarySequence, tau: int) -> BinarySequence:
    """Bit i of the result is bit ``(i + tau) mod N`` of s."""
    return BinarySequence(np.roll(s.array, -(tau % s.period)))


def expand_to_period(s: BinarySequence, m: int) -> BinarySequence:
    if m < 1 or m % s.period:
        raise ValueError(f"{m} is not a multiple of the period {s.period}")
    if m == s.period:
        return s
    return BinarySequence(np.tile(s.array, m // s.period))


def is_balanced(s: BinarySequence) -> bool:
    ones = s.ones()
    zeros = s.period - ones
    if s.period % 2:
        return abs(ones - zeros) == 1
    return ones == zeros


def minimal_period(s: BinarySequence) -> int:
    n = s.period
    divisors = {1}
    for r, e in factorize(n).items():
        divisors |= {d * r**k for d in divisors for k in range(1, e + 1)}
    for d in sorted(divisors):
        if np.array_equal(s.array, np.roll(s.array, -d)):
            return d
    return n


def to_residue(s: BinarySequence) -> ResidueBits:
    return ResidueBits.from_bits(s.bits)


# ---------- sequence specifications

_SPEC_RE = re.compile(r"^\s*(\w+)\s*(?:\((.*)\))?\s*$")


@dataclass(frozen=True)
class SequenceSpec:
    """A reproducible recipe for a sequence, e.g. ``mseq(poly=1011,seed=100)``.

    ``poly`` uses the coefficient string ``c0 c1 ... c_{n-1} 1``.
    """

    kind: str
    p: Optional[int] = None
    a: Optional[int] = None
    poly: Optional[Gf2Poly] = None
    seed: Optional[tuple[int, ...]] = None
    bits: Optional[str] = None

    KINDS = ("legendre", "mseq", "lseq", "literal")

    def __post_init__(self) -> None:
        if self.kind not in self.KINDS:
            raise ValueError(f"unknown sequence kind {self.kind!r}")
        need = {"legendre": ("p",), "mseq": ("poly",), "lseq": ("p",), "literal": ("bits",)}
        for name in need[self.kind]:
            if getattr(self, name) is None:
                raise ValueError(f"{self.kind} needs parameter {name!r}")

    def build(self) -> BinarySequence:
        if self.kind == "legendre":
            return legendre_sequence(self.p)
        if self.kind == "mseq":
            return m_sequence(self.poly, self.seed)
        if self.kind == "lseq":
            return l_sequence(self.p, 1 if self.a is None else self.a)
        return BinarySequence(self.bits)

    def __str__(self) -> str:
        if self.kind == "legendre":
            return f"legendre(p={self.p})"
        if self.kind == "lseq":
            return f"lseq(p={self.p},a={1 if self.a is None else self.a})"
        if self.kind == "mseq":
            seed = self.seed or (1,) + (0,) * (self.poly.degree - 1)
            return f"mseq(poly={self.poly.coeff_string()},seed={''.join(map(str, seed))})"
        return "literal"

    @classmethod
    def parse(cls, text: str) -> "SequenceSpec":
        m = _SPEC_RE.match(text)
        if m is None:
            raise ValueError(f"cannot parse sequence spec {text!r}")
        kind, body = m.group(1), m.group(2) or ""
        params: dict = {}
        for item in filter(None, (x.strip() for x in body.split(","))):
            key, sep, value = item.partition("=")
            if not sep:
                raise ValueError(f"expected key=value in {text!r}")
            key = key.strip()
            value = value.strip()
            if key in ("p", "a"):
                params[key] = int(value)
            elif key == "poly":
                params[key] = Gf2Poly.parse(value) if "x" in value.lower() else Gf2Poly.from_coeff_string(value)
            elif key == "seed":
                params[key] = tuple(int(ch) for ch in value)
            elif key == "bits":
                params[key] = value
            else:
                raise ValueError(f"unknown parameter {key!r} in {text!r}")
        return cls(kind, **params)
