"""Instrumented extended Euclidean algorithm on (x^(d-1), S).

Beyond the classical Sugiyama decoder this tracks, per step, which low-order
remainder coefficients are contaminated by the unknown coefficient below the
syndrome window (the s-value), how many coefficients of the next quotient are
still computable (the c-value), and extracts the basis polynomial pair that
spans every deeper locator.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .gf import GF
from .poly import NEG_INF, Poly, quotient_prefix

CLASSICAL_SOLVED = "classical-solved"
EXHAUSTED = "exhausted"
PARTIAL_QUOTIENT = "partial-quotient"


@dataclass
class EeaStep:
    """State after step j: r^(j), u^(j), s^(j), and c^(j+1) once known.

    Coefficients of the remainder at indices <= s_value are contaminated and
    must not drive control decisions; trusted_remainder_degree reports the
    degree of the reliable part.
    """

    index: int
    quotient: Poly | None
    remainder: Poly
    aux: Poly
    s_value: int
    c_value: int | float | None = None

    @property
    def known_floor(self) -> int:
        return self.s_value + 1

    @property
    def trusted_remainder_degree(self):
        deg = self.remainder.degree
        return deg if deg > self.s_value else NEG_INF


@dataclass
class EeaTrace:
    field: GF
    d: int
    steps: list[EeaStep]
    stop_reason: str
    partial_quotient: Poly | None = None

    @property
    def i_B(self) -> int:
        return self.steps[-1].index

    def aux(self, j: int) -> Poly:
        """u^(j); u^(-1) = 0."""
        if j == -1:
            return Poly.zero(self.field)
        return self.steps[j].aux

    def remainder_degree(self, j: int):
        """Stored degree of r^(j); r^(-1) = x^(d-1)."""
        if j == -1:
            return self.d - 1
        return self.steps[j].remainder.degree

    def dump(self) -> str:
        """One line per step: 'j | deg q | deg r | deg u | s | c'."""
        lines = []
        for st in self.steps:
            dq = st.quotient.degree if st.quotient is not None else "-"
            lines.append(
                f"{st.index} | {dq} | {st.remainder.degree} | "
                f"{st.aux.degree} | {st.s_value} | {st.c_value}"
            )
        return "\n".join(lines)


def eea_run(synd: Poly, d: int) -> EeaTrace:
    """Run the EEA as far as the syndrome window permits.

    Stops at the first step where the next quotient is not fully computable:
    CLASSICAL_SOLVED when deg u > deg r was reached (the classical solution
    is on the final step), EXHAUSTED when no quotient coefficient is
    computable, PARTIAL_QUOTIENT when only the top c coefficients are.
    """
    field = synd.field
    if not synd.degree < d - 1:
        raise ValueError("syndrome degree must be below d-1")
    r_prev = Poly.x_power(field, d - 1)
    r_cur = synd
    u_prev = Poly.zero(field)
    u_cur = Poly.one(field)
    s = -1
    steps = [EeaStep(0, None, r_cur, u_cur, s)]
    partial = None
    while True:
        step = steps[-1]
        # stored degree and trusted degree coincide whenever c > 0, and both
        # force a stop when they differ, so the stored one drives control
        rdeg = r_cur.degree
        c = rdeg - s
        step.c_value = c
        classical = u_cur.degree > rdeg
        if c <= 0:
            reason = CLASSICAL_SOLVED if classical else EXHAUSTED
            break
        full_qdeg = r_prev.degree - rdeg
        if c < full_qdeg + 1:
            reason = PARTIAL_QUOTIENT
            partial = quotient_prefix(r_prev, r_cur, int(c))
            break
        q, r_next = divmod(r_prev, r_cur)
        u_next = u_prev - q * u_cur
        s += q.degree
        r_prev, r_cur = r_cur, r_next
        u_prev, u_cur = u_cur, u_next
        steps.append(EeaStep(len(steps), q, r_cur, u_cur, s))
    return EeaTrace(field, d, steps, reason, partial)


def classical_decode(trace: EeaTrace) -> tuple[Poly, Poly] | None:
    """(locator, evaluator) from a classically solved trace, else None.

    The locator is scaled so its lowest-order nonzero coefficient is 1; the
    evaluator carries the same scale factor so the key equation is preserved.
    """
    if trace.stop_reason != CLASSICAL_SOLVED:
        return None
    step = trace.steps[-1]
    lam = step.aux
    omega = -step.remainder
    low = next(c for c in lam.coeffs if c)
    factor = trace.field.inv(low)
    return lam.scale(factor), omega.scale(factor)


@dataclass(frozen=True)
class BasisPair:
    """Basis polynomials spanning locators beyond the classical radius.

    Every deeper locator is a''*delta1 + a*delta2.  g is the layout offset:
    the number of delta1 columns preceding the delta2 column in the
    evaluation matrix (g = projected deg a'' + 1).  t1 measures how far the
    first GMD candidate exceeds the classical radius:
    deg u^(i_B + 1) = floor((d-1)/2) + t1.
    """

    delta1: Poly
    delta2: Poly
    i_B: int
    g: int
    t1: int
    d: int
    next_aux_degree: int
    partial: Poly | None = None


def extract_basis(trace: EeaTrace, past_classical: bool = False) -> BasisPair:
    """Basis pair from a stopped trace.

    On a classically solved trace the caller must request the GMD
    continuation explicitly; i_B is then the last computed step.
    """
    if trace.stop_reason == CLASSICAL_SOLVED and not past_classical:
        raise ValueError("trace solved classically; pass past_classical=True "
                         "to extract a GMD basis anyway")
    d = trace.d
    i_b = trace.i_B
    step = trace.steps[i_b]
    delta1 = step.aux
    u_before = trace.aux(i_b - 1)
    r_prev_deg = trace.remainder_degree(i_b - 1)
    if trace.stop_reason == PARTIAL_QUOTIENT:
        qhat = trace.partial_quotient
        # same sign as the aux recurrence u_next = u_prev - q * u_cur
        delta2 = u_before - qhat * delta1
        full_qdeg = r_prev_deg - step.remainder.degree
        unknown_deg = full_qdeg - int(step.c_value)
    else:
        delta2 = u_before
        # the stored leading coefficient is below the known floor here and
        # cannot be relied on, so guard the degree with the s-value
        full_qdeg = r_prev_deg - max(step.remainder.degree, step.s_value)
        unknown_deg = full_qdeg
    next_aux_degree = int(delta1.degree + full_qdeg)
    return BasisPair(
        delta1=delta1,
        delta2=delta2,
        i_B=i_b,
        g=int(unknown_deg) + 1,
        t1=next_aux_degree - (d - 1) // 2,
        d=d,
        next_aux_degree=next_aux_degree,
        partial=trace.partial_quotient,
    )


def erasure_requirement(basis: BasisPair, t0: int) -> int:
    """Erasures needed for the candidate of degree floor((d-1)/2) + t0."""
    if t0 == 0:
        return 0
    if t0 < basis.t1:
        raise ValueError(
            f"no candidate with t0={t0}: least GMD candidate has t1={basis.t1}"
        )
    return 2 * t0
