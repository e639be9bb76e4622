"""Number theory, GF(2) polynomials and fixed-width residues modulo 2^N - 1."""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

__all__ = [
    "Gf2Poly",
    "ResidueBits",
    "el3",
    "factorize",
    "gcd",
    "is_prime",
    "is_primitive",
    "is_primitive_root",
    "lcm",
    "legendre_symbol",
    "mod_inverse",
    "multiplicative_order",
    "primitive_polynomials",
    "residue_rotate",
    "residue_subtract",
    "weight",
]


# ---------- integers

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for every n < 3.3e24."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _require_odd_prime(p: int) -> None:
    if p <= 2 or not is_prime(p):
        raise ValueError(f"{p} is not an odd prime")


def gcd(a: int, b: int) -> int:
    if a < 1 or b < 1:
        raise ValueError("gcd expects positive integers")
    return math.gcd(a, b)


def lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


def mod_inverse(a: int, m: int) -> int:
    """Return x in [1, m-1] with a*x = 1 (mod m)."""
    if m < 2:
        raise ValueError("modulus must be at least 2")
    if math.gcd(a, m) != 1:
        raise ValueError(f"{a} is not invertible modulo {m}")
    return pow(a, -1, m)


def legendre_symbol(n: int, p: int) -> int:
    """Legendre symbol (n/p) by Euler's criterion."""
    _require_odd_prime(p)
    r = pow(n % p, (p - 1) // 2, p)
    return -1 if r == p - 1 else r


def factorize(n: int) -> dict[int, int]:
    """Prime factorisation by trial division (desk-scale inputs only)."""
    if n < 1:
        raise ValueError("factorize expects a positive integer")
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def multiplicative_order(a: int, m: int) -> int:
    if math.gcd(a, m) != 1:
        raise ValueError(f"{a} is not a unit modulo {m}")
    phi = m
    for r in factorize(m):
        phi -= phi // r
    order = phi
    for r in factorize(phi):
        while order % r == 0 and pow(a, order // r, m) == 1:
            order //= r
    return order


def is_primitive_root(g: int, p: int) -> bool:
    """True iff g generates the multiplicative group modulo the prime p."""
    if not is_prime(p) or g % p == 0:
        return False
    return multiplicative_order(g % p, p) == p - 1


def el3(p: int) -> int:
    """Greatest even integer strictly below p/3.

    p = 3 is rejected: an l-sequence of period 2 has no side-lobe lags.
    """
    if p < 5 or not is_prime(p):
        raise ValueError(f"el3 needs a prime p >= 5, got {p}")
    e = (p - 1) // 3  # largest integer < p/3 since 3 does not divide p
    return e - (e % 2)


# ---------- GF(2)[X]


def _pmulmod(a: int, b: int, f: int, deg: int) -> int:
    r = 0
    while b:
        if b & 1:
            r ^= a
        b >>= 1
        a <<= 1
        if (a >> deg) & 1:
            a ^= f
    return r


def _ppowmod(a: int, e: int, f: int, deg: int) -> int:
    a = _pmod(a, f)
    r = 1
    while e:
        if e & 1:
            r = _pmulmod(r, a, f, deg)
        a = _pmulmod(a, a, f, deg)
        e >>= 1
    return r


def _pmod(a: int, f: int) -> int:
    df = f.bit_length()
    while a.bit_length() >= df:
        a ^= f << (a.bit_length() - df)
    return a


def _pgcd(a: int, b: int) -> int:
    while b:
        a, b = b, _pmod(a, b)
    return a


_EXPR_TERM = re.compile(r"^(?:(1)|x(?:\^(\d+))?)$")


@dataclass(frozen=True, order=True)
class Gf2Poly:
    """Polynomial over GF(2); bit j of ``mask`` is the coefficient of X^j."""

    mask: int

    def __post_init__(self) -> None:
        if self.mask < 0:
            raise ValueError("polynomial mask must be non-negative")

    @classmethod
    def from_exponents(cls, exponents: Iterable[int]) -> "Gf2Poly":
        mask = 0
        for e in exponents:
            mask ^= 1 << e
        return cls(mask)

    @classmethod
    def from_coefficients(cls, coefficients: Sequence[int]) -> "Gf2Poly":
        """Coefficients listed constant term first."""
        return cls(sum((int(c) & 1) << j for j, c in enumerate(coefficients)))

    @classmethod
    def from_coeff_string(cls, text: str) -> "Gf2Poly":
        """Parse ``c0 c1 ... c_{n-1} 1``, e.g. ``"1011"`` for X^3+X^2+1."""
        text = text.strip()
        if not text or set(text) - {"0", "1"}:
            raise ValueError(f"bad coefficient string {text!r}")
        return cls.from_coefficients([int(ch) for ch in text])

    @classmethod
    def parse(cls, expr: str) -> "Gf2Poly":
        """Parse expressions such as ``"x^3+x^2+1"`` (case and spaces ignored)."""
        terms = expr.replace(" ", "").lower().split("+")
        exps = []
        for term in terms:
            m = _EXPR_TERM.match(term)
            if m is None:
                raise ValueError(f"cannot parse polynomial term {term!r} in {expr!r}")
            exps.append(0 if m.group(1) else int(m.group(2) or 1))
        return cls.from_exponents(exps)

    @property
    def degree(self) -> int:
        return self.mask.bit_length() - 1

    @property
    def coefficients(self) -> tuple[int, ...]:
        return tuple((self.mask >> j) & 1 for j in range(self.degree + 1))

    def coeff_string(self) -> str:
        return "".join(map(str, self.coefficients))

    def __str__(self) -> str:
        parts = []
        for j in range(self.degree, -1, -1):
            if (self.mask >> j) & 1:
                parts.append("1" if j == 0 else "X" if j == 1 else f"X^{j}")
        return "+".join(parts) or "0"

    def reciprocal(self) -> "Gf2Poly":
        d = self.degree
        return Gf2Poly(sum(((self.mask >> j) & 1) << (d - j) for j in range(d + 1)))

    def is_irreducible(self) -> bool:
        """Rabin's test."""
        n = self.degree
        if n < 1:
            return False
        f = self.mask
        x = _pmod(0b10, f)
        for r in factorize(n):
            h = _ppowmod(x, 1 << (n // r), f, n) ^ x
            if _pgcd(f, h) != 1:
                return False
        return _ppowmod(x, 1 << n, f, n) == x


def is_primitive(f: Gf2Poly) -> bool:
    """True iff f is irreducible and X has order 2^deg(f) - 1 modulo f."""
    n = f.degree
    if n < 1:
        raise ValueError("primitivity is undefined for constant polynomials")
    if not f.mask & 1:
        return False  # X divides f
    if not f.is_irreducible():
        return False
    order = (1 << n) - 1
    if order == 1:
        return True  # X + 1: X = 1 generates the trivial group
    for r in factorize(order):
        if _ppowmod(0b10, order // r, f.mask, n) == 1:
            return False
    return True


@lru_cache(maxsize=None)
def primitive_polynomials(n: int) -> tuple[Gf2Poly, ...]:
    """All primitive polynomials of degree n, ordered by mask."""
    if n < 1:
        raise ValueError("degree must be positive")
    lo = 1 << n
    return tuple(
        Gf2Poly(m) for m in range(lo | 1, lo << 1, 2) if is_primitive(Gf2Poly(m))
    )


# ---------- residues modulo 2^N - 1


@dataclass(frozen=True)
class ResidueBits:
    """Integer in [0, 2^width - 1] viewed as ``width`` little-endian bits.

    The value is held in a Python int, which is already a packed
    word array with index 0 least significant.
    """

    width: int
    value: int

    def __post_init__(self) -> None:
        if self.width < 1:
            raise ValueError("width must be positive")
        if not 0 <= self.value < (1 << self.width):
            raise ValueError(f"value {self.value} does not fit in {self.width} bits")

    @classmethod
    def from_bits(cls, bits: Sequence[int]) -> "ResidueBits":
        value = 0
        for i, b in enumerate(bits):
            if b not in (0, 1):
                raise ValueError("bits must be 0 or 1")
            value |= b << i
        return cls(len(bits), value)

    @property
    def bits(self) -> tuple[int, ...]:
        v = self.value
        return tuple((v >> i) & 1 for i in range(self.width))

    @property
    def modulus(self) -> int:
        return (1 << self.width) - 1

    def is_all_ones(self) -> bool:
        return self.value == self.modulus

    def __str__(self) -> str:
        return "".join(map(str, self.bits))


def residue_subtract(a: ResidueBits, b: ResidueBits) -> tuple[ResidueBits, bool]:
    """Subtract with the literal sign split used for arithmetic correlation.

    Returns ``(w, negative)``: ``w = a - b`` when ``a >= b``, otherwise
    ``w = 2^N - 1 + a - b``.
    """
    if a.width != b.width:
        raise ValueError(f"width mismatch: {a.width} != {b.width}")
    d = a.value - b.value
    if d >= 0:
        return ResidueBits(a.width, d), False
    return ResidueBits(a.width, d + a.modulus), True


def weight(w: ResidueBits) -> int:
    return w.value.bit_count()


def residue_rotate(w: ResidueBits, k: int) -> ResidueBits:
    """Multiply by 2^k modulo 2^N - 1, i.e. rotate the bits left by k.

    The all-ones word is a fixed point, so it is returned unchanged.
    """
    n = w.width
    k %= n
    if k == 0:
        return w
    v = ((w.value << k) | (w.value >> (n - k))) & w.modulus
    return ResidueBits(n, v)
