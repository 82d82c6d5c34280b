"""Independent brute-force references: Gaussian elimination over the
evaluation matrix, exhaustive nearest-codeword decoding, a naive FIA with
fresh column starts, and a genie EEA run on a widened spectral window.

These share only the gf/poly primitives with the main pipeline; they exist
so every fast path can be cross-checked, and they are shipped (not test-only)
so the CLI can self-verify on demand.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .fia import ConnectionVector, EvalMatrix, FiaResult, RawCandidate, assemble_locator
from .poly import Poly, dft
from .rs import CodeParams, encode


# -- Gaussian elimination ------------------------------------------------------


def kernel_basis(field, rows: list[list[int]], n_cols: int) -> list[tuple[int, ...]]:
    """Basis of the right kernel of the matrix, each vector normalized so its
    first nonzero entry is 1."""
    mat = [list(r) for r in rows]
    pivots: list[int] = []
    r = 0
    for c in range(n_cols):
        pivot = next((i for i in range(r, len(mat)) if mat[i][c]), None)
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        inv = field.inv(mat[r][c])
        mat[r] = [field.mul(inv, v) for v in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c]:
                coef = mat[i][c]
                mat[i] = [field.sub(a, field.mul(coef, b))
                          for a, b in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
    free = [c for c in range(n_cols) if c not in pivots]
    basis = []
    for fc in free:
        v = [0] * n_cols
        v[fc] = 1
        for prow, pc in enumerate(pivots):
            v[pc] = field.neg(mat[prow][fc])
        low = next(x for x in v if x)
        inv = field.inv(low)
        basis.append(tuple(field.mul(inv, x) for x in v))
    return basis


def oracle_gauss_solve(matrix: EvalMatrix) -> dict[int, list[tuple[int, ...]]]:
    """Kernel basis of the leading (c-1) x c subsystem at every scheduled
    emission column c."""
    out = {}
    for col in matrix.emission_columns():
        rows = matrix.dense_block(col - 1, col)
        out[col] = kernel_basis(matrix.field, rows, col)
    return out


# -- exhaustive decoding -------------------------------------------------------

EXHAUSTIVE_LIMIT = 2 * 10**6


def oracle_exhaustive_decode(code: CodeParams, received) -> tuple[int, list[list[int]]]:
    """(minimal Hamming distance, list of codewords attaining it)."""
    total = code.field.q ** code.k
    if total > EXHAUSTIVE_LIMIT:
        raise ValueError(
            f"search space {total} exceeds the exhaustive bound {EXHAUSTIVE_LIMIT}"
        )
    best = code.n + 1
    winners: list[list[int]] = []
    for info in product(range(code.field.q), repeat=code.k):
        cw = encode(code, list(info))
        dist = sum(1 for a, b in zip(cw, received) if a != b)
        if dist < best:
            best, winners = dist, [cw]
        elif dist == best:
            winners.append(cw)
    return best, winners


# -- naive FIA -------------------------------------------------------------------


def oracle_naive_fia(matrix: EvalMatrix, record_visits: bool = False) -> FiaResult:
    """Basic FIA baseline: every column starts fresh in row 1, no vector
    reuse; emissions and op counting match fia_run."""
    f = matrix.field
    g = matrix.basis.g
    n_rows, n_cols = matrix.n_rows, matrix.n_cols
    row_store: dict[int, tuple[list[int], int]] = {}
    satisfied: dict[int, tuple[list[int], int]] = {}
    candidates: list[RawCandidate] = []
    ops = 0
    visits: list[tuple[int, int, bool]] | None = [] if record_visits else None

    def emit(col: int, vec: list[int], rows_ok: int):
        low = next(c for c in vec if c)
        inv = f.inv(low)
        coeffs = tuple(f.mul(inv, c) for c in vec)
        coeffs = coeffs + (0,) * (col - len(coeffs))
        cv = ConnectionVector(coeffs, rows_ok)
        lam = assemble_locator(cv, matrix)
        candidates.append(RawCandidate(cv, col, col - 1, int(lam.degree)))

    for col in range(1, n_cols + 1):
        vec = [0] * col
        vec[col - 1] = 1
        row = 1
        is_emission = col >= g + 1 and (col - g - 1) % 2 == 0
        target = col - 1
        emitted = False
        stuck = False
        while row <= n_rows:
            acc = 0
            for idx, a in enumerate(vec):
                if a:
                    acc = f.add(acc, f.mul(a, matrix.entry(row, idx + 1)))
            ops += len(vec)
            if visits is not None:
                visits.append((col, row, acc == 0))
            if acc == 0:
                row += 1
            elif row in row_store:
                svec, sdisc = row_store[row]
                coef = f.div(acc, sdisc)
                for idx, b in enumerate(svec):
                    if b:
                        vec[idx] = f.sub(vec[idx], f.mul(coef, b))
                row += 1
            else:
                row_store[row] = (list(vec), acc)
                satisfied[col] = (list(vec), row - 1)
                stuck = True
                break
            if is_emission and not emitted and row - 1 >= target:
                emit(col, vec, row - 1)
                emitted = True
        if not stuck:
            satisfied[col] = (list(vec), n_rows)
        if is_emission and not emitted:
            for c0 in range(col - 1, 0, -1):
                if c0 in satisfied and satisfied[c0][1] >= target:
                    emit(col, satisfied[c0][0], satisfied[c0][1])
                    emitted = True
                    break
    return FiaResult(candidates, ops, {}, visits)


# -- genie EEA -------------------------------------------------------------------


@dataclass
class GenieStep:
    quotient: Poly | None
    remainder: Poly
    aux: Poly


def genie_eea(code: CodeParams, error_word, window_factor: int = 3) -> list[GenieStep]:
    """EEA on a widened window of the true error spectrum.

    The window holds D = window_factor*(d-1) consecutive cyclic spectral
    coefficients ending at the syndrome window, so the top d-1 coefficients
    are x^(D-(d-1)) * S(x).  With the extra cushion every step the windowed
    run can compute (and at least one more) is reproduced with all
    coefficients reliable, which is what the windowed trace is checked
    against.
    """
    f = code.field
    n, d = code.n, code.d
    E = dft(f, code.alpha, list(error_word))
    D = window_factor * (d - 1)
    offset = D - (d - 1)  # window spans cyclic indices -offset .. d-2
    wide = Poly(f, [E[(j - offset) % n] for j in range(D)])
    r_prev = Poly.x_power(f, D)
    r_cur = wide
    u_prev = Poly.zero(f)
    u_cur = Poly.one(f)
    steps = [GenieStep(None, r_cur, u_cur)]
    while not r_cur.is_zero:
        q, r_next = divmod(r_prev, r_cur)
        u_next = u_prev - q * u_cur
        r_prev, r_cur = r_cur, r_next
        u_prev, u_cur = u_cur, u_next
        steps.append(GenieStep(q, r_cur, u_cur))
    return steps
