import math

import pytest
from hypothesis import given, strategies as st

from seqcorr.algebra import (
    Gf2Poly,
    ResidueBits,
    el3,
    gcd,
    is_prime,
    is_primitive,
    lcm,
    legendre_symbol,
    mod_inverse,
    primitive_polynomials,
    residue_rotate,
    residue_subtract,
    weight,
)

from oracles import is_irreducible_brute, order_of_x, schoolbook_subtract, squares_mod

SMALL_PRIMES = [3, 5, 7, 11, 13, 17, 19, 23, 29, 31]


@pytest.mark.parametrize("n, p, expected", [(1, 7, 1), (0, 5, 0), (3, 7, -1)])
def test_legendre_symbol_examples(n, p, expected):
    assert legendre_symbol(n, p) == expected


@pytest.mark.parametrize("p", SMALL_PRIMES)
def test_legendre_symbol_matches_square_enumeration(p):
    squares = squares_mod(p)
    for n in range(-p, 2 * p):
        expected = 0 if n % p == 0 else (1 if n % p in squares else -1)
        assert legendre_symbol(n, p) == expected


@pytest.mark.parametrize("p", SMALL_PRIMES)
def test_legendre_symbol_is_multiplicative(p):
    for n in range(1, p):
        for m in range(1, p):
            assert legendre_symbol(n, p) * legendre_symbol(m, p) == legendre_symbol(n * m, p)


@pytest.mark.parametrize("p", [2, 1, 9, 15, -7])
def test_legendre_symbol_rejects_bad_modulus(p):
    with pytest.raises(ValueError):
        legendre_symbol(1, p)


def test_is_prime_examples():
    assert is_prime(7)
    assert not is_prime(1)
    assert not is_prime(32385)
    assert not is_prime(0)


def test_is_prime_agrees_with_trial_division():
    for n in range(2000):
        assert is_prime(n) == (n > 1 and all(n % d for d in range(2, math.isqrt(n) + 1)))
    assert is_prime(2**61 - 1)
    assert not is_prime(3215031751)  # strong pseudoprime to bases 2, 3, 5, 7


def test_gcd_lcm():
    assert gcd(7, 11) == 1
    assert gcd(2**4 - 1, 2**6 - 1) == 3
    assert gcd(9, 9) == 9
    assert lcm(4, 6) == 12
    with pytest.raises(ValueError):
        gcd(0, 3)


def test_gcd_of_mersenne_numbers():
    for a in range(1, 17):
        for b in range(1, 17):
            assert gcd(2**a - 1, 2**b - 1) == 2 ** math.gcd(a, b) - 1


@pytest.mark.parametrize("a, m, expected", [(2, 5, 3), (1, 9, 1), (3, 7, 5)])
def test_mod_inverse(a, m, expected):
    assert mod_inverse(a, m) == expected


def test_mod_inverse_rejects_non_coprime():
    with pytest.raises(ValueError):
        mod_inverse(4, 6)


@pytest.mark.parametrize("p, expected", [(13, 4), (19, 6), (7, 2), (5, 0), (29, 8)])
def test_el3(p, expected):
    assert el3(p) == expected
    assert expected % 2 == 0 and expected < p / 3 and expected + 2 > p / 3


def test_el3_rejects_tiny_primes():
    with pytest.raises(ValueError):
        el3(3)
    with pytest.raises(ValueError):
        el3(9)


def test_poly_parsing():
    f = Gf2Poly.parse("X^3 + x^2 + 1")
    assert f == Gf2Poly.from_coeff_string("1011")
    assert f.degree == 3
    assert str(f) == "X^3+X^2+1"
    assert f.coeff_string() == "1011"
    assert f.reciprocal() == Gf2Poly.parse("x^3+x+1")
    assert Gf2Poly.parse("x+1").mask == 0b11
    with pytest.raises(ValueError):
        Gf2Poly.parse("x^3+y")


@pytest.mark.parametrize(
    "expr, expected",
    [("x^3+x^2+1", True), ("x^2+1", False), ("x^4+x^3+x^2+x+1", False), ("x^8+x^6+x^5+x^4+1", True)],
)
def test_is_primitive_examples(expr, expected):
    assert is_primitive(Gf2Poly.parse(expr)) is expected


def test_is_primitive_rejects_constants():
    with pytest.raises(ValueError):
        is_primitive(Gf2Poly(1))


@pytest.mark.parametrize("n", range(1, 9))
def test_is_primitive_agrees_with_brute_force_order(n):
    for mask in range(1 << n, 1 << (n + 1)):
        f = Gf2Poly(mask)
        brute = is_irreducible_brute(mask) and order_of_x(mask) == (1 << n) - 1
        assert is_primitive(f) == brute, str(f)
        assert f.is_irreducible() == is_irreducible_brute(mask), str(f)


def test_primitive_polynomial_counts():
    # phi(2^n - 1) / n
    assert [len(primitive_polynomials(n)) for n in range(2, 11)] == [1, 2, 2, 6, 6, 18, 16, 48, 60]


# ---------- residues


def _rb(value, width):
    return ResidueBits(width, value)


def test_residue_subtract_examples():
    a = ResidueBits.from_bits([1, 0, 1])  # 5
    b = ResidueBits.from_bits([0, 0, 1])  # 4
    w, neg = residue_subtract(a, b)
    assert (w.bits, neg) == ((1, 0, 0), False)
    w, neg = residue_subtract(a, a)
    assert (w.value, neg) == (0, False)
    w, neg = residue_subtract(b, a)
    assert (w.value, neg) == (6, True)


def test_residue_subtract_width_mismatch():
    with pytest.raises(ValueError):
        residue_subtract(_rb(1, 3), _rb(1, 4))


def test_residue_degenerate_all_ones():
    w, neg = residue_subtract(_rb(7, 3), _rb(0, 3))
    assert w.is_all_ones() and not neg
    assert residue_rotate(w, 2) == w


residues = st.integers(1, 40).flatmap(
    lambda n: st.tuples(st.just(n), st.integers(0, 2**n - 1), st.integers(0, 2**n - 1))
)


@given(residues)
def test_residue_subtract_matches_schoolbook(case):
    n, a, b = case
    ra, rb = _rb(a, n), _rb(b, n)
    w, neg = residue_subtract(ra, rb)
    diff, borrow = schoolbook_subtract(ra.bits, rb.bits)
    assert neg == bool(borrow)
    if borrow:
        # 2^N - 1 + a - b is one less than the wrapped difference
        assert w.value == sum(d << i for i, d in enumerate(diff)) - 1
    else:
        assert list(w.bits) == diff


@given(residues)
def test_subtraction_weights_are_complementary(case):
    n, a, b = case
    if a == b:
        return
    w1, _ = residue_subtract(_rb(a, n), _rb(b, n))
    w2, _ = residue_subtract(_rb(b, n), _rb(a, n))
    assert weight(w1) + weight(w2) == n


@given(residues, st.integers(-100, 100))
def test_rotation_preserves_weight_and_multiplies_by_power_of_two(case, k):
    n, a, _ = case
    w = _rb(a, n)
    r = residue_rotate(w, k)
    assert weight(r) == weight(w)
    if not w.is_all_ones():
        assert r.value == a * pow(2, k % n, 2**n - 1) % (2**n - 1)


def test_rotation_examples():
    w = _rb(5, 3)
    assert residue_rotate(w, 0) == w
    assert residue_rotate(w, 3) == w
    assert residue_rotate(_rb(1, 3), 2).value == 4


def test_weight_examples():
    assert weight(_rb(0, 5)) == 0
    assert weight(_rb(6, 3)) == 2


def test_residue_bits_validation():
    with pytest.raises(ValueError):
        ResidueBits(3, 8)
    with pytest.raises(ValueError):
        ResidueBits.from_bits([0, 2])
    assert ResidueBits.from_bits([0, 1, 1]).value == 6
