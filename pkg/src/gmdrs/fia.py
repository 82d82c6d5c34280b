"""Modified Fundamental Iterative Algorithm over the basis-pair matrix.

The evaluation matrix has one row per erased position (least reliable
first) and columns that interleave shifted copies of the two basis
polynomials.  The column scan reuses connection vectors stored by earlier
columns of the same parity class, so the whole candidate list costs O(d^2)
field operations instead of the O(d^3) of a fresh start per column.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .eea import BasisPair
from .poly import Poly


@dataclass(frozen=True)
class EvalMatrix:
    """Lazy view of the erasure evaluation matrix.

    Rows are indexed 1..n_rows, columns 1..n_cols.  Only the two basis
    evaluations per row are cached; entries are produced on demand.
    """

    basis: BasisPair
    erased_locators: tuple[int, ...]
    n_rows: int
    n_cols: int
    _d1_evals: tuple[int, ...] = dc_field(default=(), repr=False)
    _d2_evals: tuple[int, ...] = dc_field(default=(), repr=False)

    def __post_init__(self):
        d1 = tuple(self.basis.delta1.evaluate(a) for a in self.erased_locators)
        d2 = tuple(self.basis.delta2.evaluate(a) for a in self.erased_locators)
        object.__setattr__(self, "_d1_evals", d1)
        object.__setattr__(self, "_d2_evals", d2)

    @property
    def field(self):
        return self.basis.delta1.field

    def column_spec(self, col: int) -> tuple[int, int]:
        """(which basis polynomial: 1 or 2, power of x) for a 1-based column.

        Layout: columns 1..g are x^0..x^(g-1) * delta1, column g+1 is delta2,
        then alternating x^g*delta1, x*delta2, x^(g+1)*delta1, x^2*delta2, ...
        """
        g = self.basis.g
        if col < 1:
            raise ValueError("columns are 1-based")
        if col <= g:
            return 1, col - 1
        k = col - g - 1
        if k == 0:
            return 2, 0
        if k % 2 == 1:
            return 1, g + (k - 1) // 2
        return 2, k // 2

    def emission_columns(self) -> list[int]:
        g = self.basis.g
        return [c for c in range(g + 1, self.n_cols + 1) if (c - g - 1) % 2 == 0]

    def entry(self, row: int, col: int) -> int:
        """Matrix entry at 1-based (row, col)."""
        which, power = self.column_spec(col)
        a = self.erased_locators[row - 1]
        base = self._d1_evals[row - 1] if which == 1 else self._d2_evals[row - 1]
        if base == 0:
            return 0
        return self.field.mul(self.field.pow(a, power), base)

    def dense_block(self, rows: int, cols: int) -> list[list[int]]:
        return [[self.entry(r, c) for c in range(1, cols + 1)]
                for r in range(1, rows + 1)]


def build_matrix(basis: BasisPair, erased_locators) -> EvalMatrix:
    """Evaluation matrix for the given erased locators (least reliable first).

    The column count is the largest emission column whose leading subsystem
    fits in the available rows, capped so the assembled locator degree stays
    below d; zero when no candidate is reachable.
    """
    erased = tuple(erased_locators)
    if len(set(erased)) != len(erased):
        raise ValueError("duplicate erased locators")
    if any(a == 0 for a in erased):
        raise ValueError("zero is not a valid erasure locator")
    g = basis.g
    n_rows = len(erased)
    m_by_rows = (n_rows - g) // 2 if n_rows >= g else -1
    m_by_degree = (basis.d - 1) - basis.next_aux_degree
    m_max = min(m_by_rows, m_by_degree)
    n_cols = g + 1 + 2 * m_max if m_max >= 0 else 0
    return EvalMatrix(basis, erased, n_rows, n_cols)


@dataclass(frozen=True)
class ConnectionVector:
    """Coefficients over matrix columns 1..len(coeffs); solves the leading
    rows_satisfied rows exactly."""

    coeffs: tuple[int, ...]
    rows_satisfied: int


@dataclass(frozen=True)
class RawCandidate:
    vector: ConnectionVector
    column: int
    erasures_used: int
    locator_degree: int


@dataclass
class FiaResult:
    candidates: list[RawCandidate]
    ops: int
    stored_rows: dict[int, int]        # column -> row where its vector stuck
    visits: list[tuple[int, int, bool]] | None = None  # (col, row, disc zero)


def assemble_locator(vector: ConnectionVector, matrix: EvalMatrix) -> Poly:
    """The locator polynomial of a connection vector, lowest coefficient 1."""
    basis = matrix.basis
    f = basis.delta1.field
    acc = Poly.zero(f)
    for idx, coef in enumerate(vector.coeffs):
        if coef == 0:
            continue
        which, power = matrix.column_spec(idx + 1)
        p = basis.delta1 if which == 1 else basis.delta2
        acc = acc + p.shift(power).scale(coef)
    if acc.is_zero:
        raise ValueError("connection vector assembles to the zero polynomial")
    return acc.normalize_low()


def _normalize_vector(field, coeffs) -> tuple[int, ...]:
    low = next(c for c in coeffs if c)
    inv = field.inv(low)
    return tuple(field.mul(inv, c) for c in coeffs)


def fia_run(matrix: EvalMatrix, record_visits: bool = False) -> FiaResult:
    """Column-by-column discrepancy scan with starting-vector reuse.

    Rules: columns 2..g resume from the vector stored in column c-1, padded
    with a zero in position 1, at its stored row; column g+1 starts fresh in
    row 1; later columns take the vector stored in column c-2, padded with
    zeros in positions 1 and g+1, and resume one row below the stored row
    (the discrepancy there is the stored one scaled by the row locator, so
    the elimination is applied without a fresh inner product).

    A candidate is emitted at each column c in {g+1, g+3, ...} once the
    current vector satisfies rows 1..c-1; if the scan sticks first, an
    earlier column's vector already covering those rows is emitted instead.
    ops counts one field multiplication per vector position per discrepancy
    inner product, i.e. the dominant cost of the scan.
    """
    f = matrix.field
    g = matrix.basis.g
    n_rows, n_cols = matrix.n_rows, matrix.n_cols
    row_store: dict[int, tuple[list[int], int]] = {}  # row -> (vector, disc)
    col_vectors: dict[int, tuple[list[int], int]] = {}  # col -> (vector, row)
    satisfied: dict[int, tuple[list[int], int]] = {}   # col -> (vector, rows ok)
    candidates: list[RawCandidate] = []
    ops = 0
    visits: list[tuple[int, int, bool]] | None = [] if record_visits else None

    def discrepancy(vec: list[int], row: int) -> int:
        nonlocal ops
        acc = 0
        for idx, a in enumerate(vec):
            if a:
                acc = f.add(acc, f.mul(a, matrix.entry(row, idx + 1)))
        ops += len(vec)
        return acc

    def starting_vector(col: int) -> tuple[list[int], int]:
        if 2 <= col <= g and (col - 1) in col_vectors:
            vec, row = col_vectors[col - 1]
            return [0] + vec, row
        if col > g + 1 and (col - 2) in col_vectors:
            vec, row = col_vectors[col - 2]
            padded = [0] + vec
            padded = padded[:g] + [0] + padded[g:]
            # a vector that cleared every row has no stored discrepancy to
            # cancel; its shift clears every row too, so resume past the end
            if row <= n_rows:
                # stored discrepancy scales by the row locator under the
                # shift; eliminate with the stored vector for free
                a_row = matrix.erased_locators[row - 1]
                for idx, b in enumerate(vec):
                    if b:
                        padded[idx] = f.sub(padded[idx], f.mul(a_row, b))
                return padded, row + 1
            return padded, row
        vec = [0] * col
        vec[col - 1] = 1
        return vec, 1

    def emit(col: int, vec: list[int], rows_ok: int):
        coeffs = _normalize_vector(f, vec)
        if len(coeffs) < col:
            coeffs = coeffs + (0,) * (col - len(coeffs))
        cv = ConnectionVector(coeffs, rows_ok)
        lam = assemble_locator(cv, matrix)
        candidates.append(RawCandidate(cv, col, col - 1, int(lam.degree)))

    for col in range(1, n_cols + 1):
        vec, row = starting_vector(col)
        is_emission = col >= g + 1 and (col - g - 1) % 2 == 0
        target = col - 1
        emitted = False
        if is_emission and row - 1 >= target:
            emit(col, vec, row - 1)
            emitted = True
        stuck = False
        while row <= n_rows:
            disc = discrepancy(vec, row)
            if visits is not None:
                visits.append((col, row, disc == 0))
            if disc == 0:
                row += 1
            elif row in row_store:
                svec, sdisc = row_store[row]
                coef = f.div(disc, sdisc)
                for idx, b in enumerate(svec):
                    if b:
                        vec[idx] = f.sub(vec[idx], f.mul(coef, b))
                row += 1
            else:
                row_store[row] = (list(vec), disc)
                col_vectors[col] = (list(vec), row)
                satisfied[col] = (list(vec), row - 1)
                stuck = True
                break
            if is_emission and not emitted and row - 1 >= target:
                emit(col, vec, row - 1)
                emitted = True
        if not stuck:
            satisfied[col] = (list(vec), n_rows)
            col_vectors[col] = (list(vec), n_rows + 1)
        if is_emission and not emitted:
            # the scan stuck below the subsystem size; an earlier column's
            # vector that already satisfies enough rows is still a solution
            for c0 in range(col - 1, 0, -1):
                if c0 in satisfied and satisfied[c0][1] >= target:
                    emit(col, satisfied[c0][0], satisfied[c0][1])
                    emitted = True
                    break
    stored_rows = {c: r for c, (v, r) in col_vectors.items()}
    return FiaResult(candidates, ops, stored_rows, visits)
