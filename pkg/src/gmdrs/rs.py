"""RS code parameters, spectral encoder, syndrome, and error reconstruction.

Codewords are defined in the spectral domain: the first d-1 spectral
coefficients of every codeword are zero.  Time-domain words are plain lists
of field elements (ints).  The locator root convention used throughout:
position i is erased or in error iff locator(alpha^-i) == 0.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .gf import GF
from .poly import Poly, dft, idft


@dataclass(frozen=True)
class CodeParams:
    """An RS(n, k, d=n-k+1) code over GF(q) with alpha of order n."""

    field: GF
    n: int
    k: int
    alpha: int = dc_field(default=0)

    def __post_init__(self):
        if not 1 <= self.k < self.n:
            raise ValueError(f"need 1 <= k < n, got n={self.n}, k={self.k}")
        if (self.field.q - 1) % self.n != 0:
            raise ValueError(f"n={self.n} does not divide q-1={self.field.q - 1}")
        if self.alpha == 0:
            object.__setattr__(self, "alpha", self.field.element_of_order(self.n))

    @property
    def d(self) -> int:
        return self.n - self.k + 1

    def locator_of_position(self, i: int) -> int:
        """alpha^-i, the root marking position i."""
        return self.field.pow(self.alpha, -(i % self.n))

    def position_of_locator(self, x: int) -> int | None:
        f = self.field
        for i in range(self.n):
            if f.pow(self.alpha, -i) == x:
                return i
        return None


def encode(code: CodeParams, info) -> list[int]:
    """Spectral encoder: info fills spectral positions d-1 .. n-1."""
    if len(info) != code.k:
        raise ValueError(f"expected {code.k} info symbols, got {len(info)}")
    spectrum = [0] * (code.d - 1) + list(info)
    return idft(code.field, code.alpha, spectrum)


def syndrome(code: CodeParams, received) -> Poly:
    """S(x) with S_j = r(alpha^j) for j = 0..d-2."""
    if len(received) != code.n:
        raise ValueError(f"expected {code.n} symbols, got {len(received)}")
    f = code.field
    rpoly = Poly(f, received)
    return Poly(f, [rpoly.evaluate(f.pow(code.alpha, j)) for j in range(code.d - 1)])


def is_codeword(code: CodeParams, word) -> bool:
    return syndrome(code, word).is_zero


def reconstruct_error(code: CodeParams, locator: Poly, synd: Poly) -> list[int] | None:
    """Time-domain error word from a locator and the known spectral window.

    Extends S into the full error spectrum E through the linear recurrence
    sum_i locator_i * E_{j-i} = 0, then inverts the transform.  Returns None
    when the recurrence or the locator's root set is inconsistent with the
    syndrome (a spurious candidate), never raises for that case.
    """
    f = code.field
    n, d = code.n, code.d
    t = locator.degree
    if locator.is_zero:
        return None
    if t == 0:
        return [0] * n if synd.is_zero else None
    if locator.coeff(0) == 0:
        return None  # x divides the locator; 0 is never a code locator
    lam0_inv = f.inv(locator.coeff(0))
    E = [synd.coeff(j) for j in range(d - 1)] + [0] * (n - d + 1)
    for j in range(d - 1, n):
        acc = 0
        for i in range(1, t + 1):
            li = locator.coeff(i)
            if li:
                acc = f.add(acc, f.mul(li, E[j - i]))
        E[j] = f.neg(f.mul(lam0_inv, acc))
    # wrap-around consistency: the recurrence must hold cyclically everywhere
    for j in range(n):
        acc = 0
        for i in range(t + 1):
            li = locator.coeff(i)
            if li:
                acc = f.add(acc, f.mul(li, E[(j - i) % n]))
        if acc != 0:
            return None
    e = idft(f, code.alpha, E)
    for i, v in enumerate(e):
        if v and locator.evaluate(code.locator_of_position(i)) != 0:
            return None
    return e


# -- frame fixture format ----------------------------------------------------
#
# One frame per line: "info=1,2,3 pos=0,4 val=3,5"; empty error lists are
# written as "-".


def _fmt_ints(xs) -> str:
    return ",".join(str(x) for x in xs) if xs else "-"


def _parse_ints(s: str) -> list[int]:
    return [] if s == "-" else [int(x) for x in s.split(",")]


def format_frame(info, positions, values) -> str:
    return f"info={_fmt_ints(info)} pos={_fmt_ints(positions)} val={_fmt_ints(values)}"


def parse_frame(line: str) -> tuple[list[int], list[int], list[int]]:
    fields = dict(part.split("=", 1) for part in line.split())
    return (
        _parse_ints(fields["info"]),
        _parse_ints(fields["pos"]),
        _parse_ints(fields["val"]),
    )
