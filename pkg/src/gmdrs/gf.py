"""Exact arithmetic in GF(q) for prime q and characteristic-2 extension fields.

Elements are plain ints in [0, q).  A GF instance carries all operations;
prime fields use integer arithmetic mod p, extension fields GF(2^m) use
log/antilog tables built from a verified generator.
"""

from __future__ import annotations

# Default moduli for GF(2^m), m = 1..16: the standard primitive polynomials,
# stored as bitmasks including the x^m term (e.g. 0x11D = x^8+x^4+x^3+x^2+1).
DEFAULT_MODULI = {
    1: 0x3,
    2: 0x7,
    3: 0xB,
    4: 0x13,
    5: 0x25,
    6: 0x43,
    7: 0x89,
    8: 0x11D,
    9: 0x211,
    10: 0x409,
    11: 0x805,
    12: 0x1053,
    13: 0x201B,
    14: 0x4443,
    15: 0x8003,
    16: 0x1100B,
}

MAX_Q = 65536


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of n, ascending."""
    out = []
    i = 2
    while i * i <= n:
        if n % i == 0:
            out.append(i)
            while n % i == 0:
                n //= i
        i += 1
    if n > 1:
        out.append(n)
    return out


def _gf2_deg(a: int) -> int:
    return a.bit_length() - 1


def _gf2_mod(a: int, m: int) -> int:
    dm = _gf2_deg(m)
    while _gf2_deg(a) >= dm and a:
        a ^= m << (_gf2_deg(a) - dm)
    return a


def _gf2_mulmod(a: int, b: int, m: int) -> int:
    acc = 0
    while b:
        if b & 1:
            acc ^= a
        b >>= 1
        a <<= 1
        if _gf2_deg(a) >= _gf2_deg(m):
            a ^= m
    return acc


def gf2_poly_is_irreducible(modulus: int) -> bool:
    """Trial division of a GF(2)[x] polynomial by every lower-degree candidate."""
    m = _gf2_deg(modulus)
    if m < 1:
        return False
    for deg in range(1, m // 2 + 1):
        for f in range(1 << deg, 1 << (deg + 1)):
            if _gf2_mod(modulus, f) == 0:
                return False
    return True


class GF:
    """The field GF(q); q prime or a power of two, 2 <= q <= 65536.

    Immutable after construction: instances are safe to share across threads.
    """

    def __init__(self, q: int, modulus: int | None = None):
        if not 2 <= q <= MAX_Q:
            raise ValueError(f"field size {q} out of supported range [2, {MAX_Q}]")
        if is_prime(q):
            p, m = q, 1
        elif q & (q - 1) == 0:
            p, m = 2, q.bit_length() - 1
        else:
            raise ValueError(f"{q} is not a prime or a power of two")
        self.q = q
        self.p = p
        self.m = m
        if m == 1:
            if modulus is not None:
                raise ValueError("modulus only applies to extension fields")
            self.modulus = None
            self._exp = self._log = None
            self.generator = self._find_prime_generator()
        else:
            if modulus is None:
                modulus = DEFAULT_MODULI[m]
            if _gf2_deg(modulus) != m:
                raise ValueError(f"modulus degree {_gf2_deg(modulus)} != {m}")
            if not gf2_poly_is_irreducible(modulus):
                raise ValueError(f"modulus {modulus:#x} is reducible over GF(2)")
            self.modulus = modulus
            self.generator = self._find_ext_generator()
            self._build_tables()

    # -- construction helpers ------------------------------------------------

    def _order_check(self, a: int, n: int, mul) -> bool:
        """True iff a has multiplicative order exactly n (n | group order)."""
        if self._pow_raw(a, n, mul) != 1:
            return False
        return all(self._pow_raw(a, n // f, mul) != 1 for f in prime_factors(n))

    @staticmethod
    def _pow_raw(a: int, e: int, mul) -> int:
        acc = 1
        base = a
        while e:
            if e & 1:
                acc = mul(acc, base)
            base = mul(base, base)
            e >>= 1
        return acc

    def _find_prime_generator(self) -> int:
        if self.q == 2:
            return 1
        mul = lambda a, b: a * b % self.q
        for g in range(2, self.q):
            if self._order_check(g, self.q - 1, mul):
                return g
        raise AssertionError("no primitive root found")

    def _find_ext_generator(self) -> int:
        mul = lambda a, b: _gf2_mulmod(a, b, self.modulus)
        for g in range(2, self.q):
            if self._order_check(g, self.q - 1, mul):
                return g
        raise AssertionError("no generator found")

    def _build_tables(self):
        exp = [1] * (self.q - 1)
        mul = lambda a, b: _gf2_mulmod(a, b, self.modulus)
        x = 1
        for i in range(1, self.q - 1):
            x = mul(x, self.generator)
            exp[i] = x
        log = [0] * self.q
        for i, v in enumerate(exp):
            log[v] = i
        self._exp = exp
        self._log = log

    # -- arithmetic ----------------------------------------------------------

    def check(self, a: int) -> int:
        if not 0 <= a < self.q:
            raise ValueError(f"{a} is not an element of GF({self.q})")
        return a

    def add(self, a: int, b: int) -> int:
        if self.m == 1:
            return (a + b) % self.q
        return a ^ b

    def sub(self, a: int, b: int) -> int:
        if self.m == 1:
            return (a - b) % self.q
        return a ^ b

    def neg(self, a: int) -> int:
        if self.m == 1:
            return (self.q - a) % self.q
        return a

    def mul(self, a: int, b: int) -> int:
        if self.m == 1:
            return a * b % self.q
        if a == 0 or b == 0:
            return 0
        return self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inversion of zero in GF")
        if self.m == 1:
            return pow(a, self.q - 2, self.q)
        return self._exp[(self.q - 1 - self._log[a]) % (self.q - 1)]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            return self.pow(self.inv(a), -e)
        if self.m == 1:
            return pow(a, e, self.q)
        if a == 0:
            return 0 if e else 1
        return self._exp[self._log[a] * e % (self.q - 1)]

    # -- structure -----------------------------------------------------------

    def element_of_order(self, n: int) -> int:
        """An element of multiplicative order exactly n; n must divide q-1."""
        if n < 1 or (self.q - 1) % n != 0:
            raise ValueError(f"{n} does not divide q-1 = {self.q - 1}")
        a = self.pow(self.generator, (self.q - 1) // n)
        assert self.pow(a, n) == 1
        return a

    def elements(self):
        return range(self.q)

    def __eq__(self, other):
        return (
            isinstance(other, GF)
            and self.q == other.q
            and self.modulus == other.modulus
        )

    def __hash__(self):
        return hash((self.q, self.modulus))

    def __repr__(self):
        if self.m == 1:
            return f"GF({self.q})"
        return f"GF({self.q}, modulus={self.modulus:#x})"
