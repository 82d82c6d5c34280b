from random import Random

import pytest

from gmdrs.gf import GF, gf2_poly_is_irreducible, is_prime, prime_factors


def test_is_prime_small():
    primes = [2, 3, 5, 7, 11, 13, 17, 101]
    composites = [1, 4, 6, 9, 15, 49, 91]
    assert all(is_prime(p) for p in primes)
    assert not any(is_prime(c) for c in composites)


def test_prime_factors():
    assert prime_factors(12) == [2, 3]
    assert prime_factors(63) == [3, 7]
    assert prime_factors(17) == [17]


def test_prime_field_arithmetic_pinned():
    f = GF(17)
    assert f.mul(13, 5) == 14  # 65 mod 17
    assert f.add(9, 12) == 4
    assert f.sub(3, 9) == 11
    assert f.neg(5) == 12
    assert f.div(1, 13) == f.inv(13)
    assert f.mul(13, f.inv(13)) == 1


def test_pow_negative_exponent():
    f = GF(17)
    assert f.mul(f.pow(3, -2), f.pow(3, 2)) == 1
    f2 = GF(64)
    assert f2.mul(f2.pow(5, -3), f2.pow(5, 3)) == 1


def test_prime_field_exhaustive_inverses():
    for q in (2, 3, 5, 7, 13):
        f = GF(q)
        for a in range(1, q):
            assert f.mul(a, f.inv(a)) == 1


def test_extension_field_tables():
    f = GF(256)
    # generator spans all nonzero elements
    seen = set()
    x = 1
    for _ in range(255):
        seen.add(x)
        x = f.mul(x, f.generator)
    assert len(seen) == 255
    for a in (1, 2, 77, 140, 255):
        assert f.mul(a, f.inv(a)) == 1


def test_extension_field_distributivity_random():
    rng = Random(11)
    f = GF(64)
    for _ in range(500):
        a, b, c = (rng.randrange(64) for _ in range(3))
        assert f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c))


def test_gf2_addition_is_xor():
    f = GF(16)
    assert f.add(0b1010, 0b0110) == 0b1100
    assert f.sub(0b1010, 0b0110) == 0b1100
    assert f.neg(7) == 7


def test_irreducibility_check():
    assert gf2_poly_is_irreducible(0b111)      # x^2+x+1
    assert gf2_poly_is_irreducible(0x11D)      # degree-8 default
    assert not gf2_poly_is_irreducible(0b110)  # x^2+x = x(x+1)
    assert not gf2_poly_is_irreducible(0b101)  # x^2+1 = (x+1)^2


def test_rejects_bad_sizes_and_moduli():
    with pytest.raises(ValueError):
        GF(6)
    with pytest.raises(ValueError):
        GF(12)
    with pytest.raises(ValueError):
        GF(4, modulus=0b110)


def test_element_of_order():
    f = GF(17)
    a = f.element_of_order(16)
    x = a
    for _ in range(15):
        assert x != 1
        x = f.mul(x, a)
    assert x == 1
    b = f.element_of_order(8)
    assert f.pow(b, 8) == 1 and f.pow(b, 4) != 1
    with pytest.raises(ValueError):
        f.element_of_order(5)  # 5 does not divide 16


def test_field_equality():
    assert GF(17) == GF(17)
    assert GF(16) != GF(17)
