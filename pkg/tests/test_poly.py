from random import Random

import pytest

from gmdrs.gf import GF
from gmdrs.poly import NEG_INF, Poly, dft, idft, quotient_prefix


def rand_poly(rng, field, max_deg):
    return Poly(field, [rng.randrange(field.q) for _ in range(max_deg + 1)])


def test_mul_pinned():
    f = GF(7)
    a = Poly(f, [1, 3])
    b = Poly(f, [1, 2])
    assert (a * b).coeffs == (1, 5, 6)


def test_divmod_pinned():
    f = GF(7)
    a = Poly.x_power(f, 4)
    b = Poly(f, [2, 1, 4, 2])
    q, r = divmod(a, b)
    assert q.coeffs == (6, 4)
    assert r.coeffs == (2,)
    assert q * b + r == a


def test_degree_and_zero():
    f = GF(7)
    assert Poly.zero(f).degree == NEG_INF
    assert Poly.zero(f).is_zero
    assert Poly(f, [0, 0, 3, 0]).degree == 2
    assert Poly.one(f).degree == 0


def test_divmod_roundtrip_random():
    rng = Random(5)
    for q in (7, 17, 64):
        f = GF(q)
        for _ in range(300):
            a = rand_poly(rng, f, rng.randrange(0, 12))
            b = rand_poly(rng, f, rng.randrange(0, 8))
            if b.is_zero:
                continue
            qq, rr = divmod(a, b)
            assert qq * b + rr == a
            assert rr.is_zero or rr.degree < b.degree


def test_divide_by_zero():
    f = GF(7)
    with pytest.raises(ZeroDivisionError):
        divmod(Poly.one(f), Poly.zero(f))


def test_quotient_prefix_matches_top_terms():
    rng = Random(9)
    f = GF(17)
    for _ in range(200):
        a = rand_poly(rng, f, rng.randrange(3, 10))
        b = rand_poly(rng, f, rng.randrange(1, 4))
        if b.is_zero or a.degree < b.degree:
            continue
        q, _ = divmod(a, b)
        nterms = rng.randrange(1, q.degree + 2)
        prefix = quotient_prefix(a, b, nterms)
        for i in range(q.degree, q.degree - nterms, -1):
            assert prefix.coeff(i) == q.coeff(i)
        for i in range(q.degree - nterms, -1, -1):
            assert prefix.coeff(i) == 0


def test_evaluate_horner():
    f = GF(7)
    p = Poly(f, [1, 3])  # 1 + 3x
    assert p.evaluate(2) == 0
    assert p.evaluate(0) == 1


def test_normalize_low():
    f = GF(7)
    p = Poly(f, [0, 3, 5]).normalize_low()
    assert p.coeff(1) == 1


def test_shift_and_scale():
    f = GF(17)
    p = Poly(f, [2, 5])
    assert p.shift(2).coeffs == (0, 0, 2, 5)
    assert p.scale(3).coeffs == (6, 15)


def test_dft_idft_roundtrip():
    rng = Random(3)
    for q in (7, 17, 64):
        f = GF(q)
        n = q - 1
        alpha = f.element_of_order(n)
        for _ in range(100):
            word = [rng.randrange(q) for _ in range(n)]
            assert idft(f, alpha, dft(f, alpha, word)) == word


def test_dft_rejects_wrong_order():
    f = GF(17)
    with pytest.raises(ValueError):
        dft(f, 1, [0] * 16)  # order of 1 is not 16


def test_str_readable():
    f = GF(7)
    assert str(Poly(f, [2, 0, 1])) == "2 + x^2"
