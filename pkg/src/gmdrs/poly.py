"""Dense polynomials over GF(q), plus the finite-field DFT/IDFT pair.

The zero polynomial has degree NEG_INF, which compares below every integer
and absorbs addition, so degree bookkeeping needs no special cases.
"""

from __future__ import annotations

from .gf import GF

NEG_INF = float("-inf")


class Poly:
    """Immutable dense polynomial; coeffs[i] is the coefficient of x^i.

    Normalized: either empty (zero polynomial) or the last coefficient
    is nonzero.
    """

    __slots__ = ("field", "coeffs")

    def __init__(self, field: GF, coeffs=()):
        coeffs = list(coeffs)
        for c in coeffs:
            field.check(c)
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.field = field
        self.coeffs = tuple(coeffs)

    @classmethod
    def zero(cls, field: GF) -> "Poly":
        return cls(field, ())

    @classmethod
    def one(cls, field: GF) -> "Poly":
        return cls(field, (1,))

    @classmethod
    def x_power(cls, field: GF, k: int) -> "Poly":
        return cls(field, [0] * k + [1])

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def _same_field(self, other: "Poly"):
        if self.field != other.field:
            raise ValueError("polynomials over different fields")

    def __add__(self, other: "Poly") -> "Poly":
        self._same_field(other)
        f = self.field
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(f, [f.add(self.coeff(i), other.coeff(i)) for i in range(n)])

    def __sub__(self, other: "Poly") -> "Poly":
        self._same_field(other)
        f = self.field
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(f, [f.sub(self.coeff(i), other.coeff(i)) for i in range(n)])

    def __neg__(self) -> "Poly":
        f = self.field
        return Poly(f, [f.neg(c) for c in self.coeffs])

    def __mul__(self, other: "Poly") -> "Poly":
        self._same_field(other)
        f = self.field
        if self.is_zero or other.is_zero:
            return Poly.zero(f)
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    out[i + j] = f.add(out[i + j], f.mul(a, b))
        return Poly(f, out)

    def scale(self, c: int) -> "Poly":
        f = self.field
        f.check(c)
        return Poly(f, [f.mul(c, a) for a in self.coeffs])

    def shift(self, k: int) -> "Poly":
        """Multiply by x^k."""
        if self.is_zero:
            return self
        return Poly(self.field, (0,) * k + self.coeffs)

    def __divmod__(self, other: "Poly"):
        self._same_field(other)
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        f = self.field
        rem = list(self.coeffs)
        db = len(other.coeffs) - 1
        lead_inv = f.inv(other.coeffs[-1])
        if len(rem) - 1 < db:
            return Poly.zero(f), self
        quot = [0] * (len(rem) - db)
        for i in range(len(rem) - 1, db - 1, -1):
            c = rem[i]
            if c == 0:
                continue
            qc = f.mul(c, lead_inv)
            quot[i - db] = qc
            for j, b in enumerate(other.coeffs):
                rem[i - db + j] = f.sub(rem[i - db + j], f.mul(qc, b))
        return Poly(f, quot), Poly(f, rem)

    def __floordiv__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[1]

    def truncate(self, n: int) -> "Poly":
        """The polynomial mod x^n."""
        return Poly(self.field, self.coeffs[:n])

    def evaluate(self, x: int) -> int:
        f = self.field
        f.check(x)
        acc = 0
        for c in reversed(self.coeffs):
            acc = f.add(f.mul(acc, x), c)
        return acc

    def normalize_low(self) -> "Poly":
        """Scale so the lowest-order nonzero coefficient becomes 1."""
        if self.is_zero:
            return self
        low = next(c for c in self.coeffs if c)
        return self.scale(self.field.inv(low))

    def __eq__(self, other):
        return (
            isinstance(other, Poly)
            and self.field == other.field
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __str__(self):
        if self.is_zero:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                parts.append(str(c))
            elif i == 1:
                parts.append(f"{c}*x" if c != 1 else "x")
            else:
                parts.append(f"{c}*x^{i}" if c != 1 else f"x^{i}")
        return " + ".join(parts)

    def __repr__(self):
        return f"Poly({self.field!r}, {list(self.coeffs)})"


def quotient_prefix(a: Poly, b: Poly, nterms: int) -> Poly:
    """The nterms highest-order terms of a // b, lower terms zeroed."""
    q, _ = divmod(a, b)
    if q.is_zero:
        return q
    cut = len(q.coeffs) - nterms
    if cut <= 0:
        return q
    return Poly(q.field, (0,) * cut + q.coeffs[cut:])


def _check_order(field: GF, alpha: int, n: int):
    if field.pow(alpha, n) != 1:
        raise ValueError(f"{alpha} does not have order {n}")
    for f in [d for d in range(1, n) if n % d == 0]:
        if field.pow(alpha, f) == 1:
            raise ValueError(f"{alpha} has order {f}, not {n}")


def dft(field: GF, alpha: int, word) -> list[int]:
    """Spectrum of a length-n time word: out[j] = sum_i word[i] * alpha^(i*j)."""
    n = len(word)
    _check_order(field, alpha, n)
    powers = [field.pow(alpha, j) for j in range(n)]
    out = []
    for j in range(n):
        acc = 0
        for i, w in enumerate(word):
            if w:
                acc = field.add(acc, field.mul(w, powers[i * j % n]))
        out.append(acc)
    return out


def idft(field: GF, alpha: int, spectrum) -> list[int]:
    """Time word of a length-n spectrum: out[i] = n^-1 * C(alpha^-i)."""
    n = len(spectrum)
    _check_order(field, alpha, n)
    if n % field.p == 0:
        raise ValueError(f"n = {n} is divisible by the characteristic {field.p}")
    n_inv = field.inv(n % field.p if field.m == 1 else n % 2)
    ainv = field.inv(alpha)
    powers = [field.pow(ainv, j) for j in range(n)]
    out = []
    for i in range(n):
        acc = 0
        for j, c in enumerate(spectrum):
            if c:
                acc = field.add(acc, field.mul(c, powers[i * j % n]))
        out.append(field.mul(n_inv, acc))
    return out
