from functools import reduce
from random import Random

import pytest

from gmdrs.eea import eea_run, extract_basis
from gmdrs.fia import assemble_locator, build_matrix, fia_run
from gmdrs.gf import GF
from gmdrs.oracles import oracle_naive_fia
from gmdrs.rs import CodeParams, syndrome


def make_instance(rng, code, t, tau):
    err = [0] * code.n
    for p in rng.sample(range(code.n), t):
        err[p] = rng.randrange(1, code.field.q)
    synd = syndrome(code, err)
    trace = eea_run(synd, code.d)
    basis = extract_basis(trace, past_classical=True)
    positions = rng.sample(range(code.n), tau)
    locs = [code.locator_of_position(i) for i in positions]
    return basis, build_matrix(basis, locs)


def test_column_layout_alternates_after_delta2():
    rng = Random(1)
    f = GF(17)
    code = CodeParams(f, 16, 6)
    basis, matrix = make_instance(rng, code, 7, 8)
    g = basis.g
    # columns 1..g are increasing shifts of delta1, column g+1 is delta2,
    # then shifts alternate between the two chains
    for row in range(1, matrix.n_rows + 1):
        a = matrix.erased_locators[row - 1]
        d1 = basis.delta1.evaluate(a)
        d2 = basis.delta2.evaluate(a)
        for col in range(1, matrix.n_cols + 1):
            if col <= g:
                expect = f.mul(f.pow(a, col - 1), d1)
            elif (col - g - 1) % 2 == 0:
                expect = f.mul(f.pow(a, (col - g - 1) // 2), d2)
            else:
                expect = f.mul(f.pow(a, g + (col - g - 1) // 2), d1)
            assert matrix.entry(row, col) == expect


def test_emission_columns_are_odd_offsets():
    rng = Random(2)
    f = GF(17)
    code = CodeParams(f, 16, 6)
    basis, matrix = make_instance(rng, code, 7, 8)
    g = basis.g
    cols = matrix.emission_columns()
    assert cols[0] == g + 1
    assert all(b - a == 2 for a, b in zip(cols, cols[1:]))
    assert cols[-1] <= matrix.n_cols


def test_candidates_lie_in_leading_kernel():
    rng = Random(3)
    for (q, n, k) in ((17, 16, 6), (13, 12, 4), (64, 63, 49)):
        f = GF(q)
        code = CodeParams(f, n, k)
        d = code.d
        for _ in range(60):
            t = rng.randrange((d - 1) // 2 + 1, min(n, d + 1))
            tau = max(d - 3, 0) - (max(d - 3, 0) % 2)
            basis, matrix = make_instance(rng, code, t, tau)
            result = fia_run(matrix)
            for cand in result.candidates:
                col = cand.column
                vec = list(cand.vector.coeffs) + [0] * (col - len(cand.vector.coeffs))
                block = matrix.dense_block(col - 1, col)
                for r in range(col - 1):
                    s = reduce(f.add, (f.mul(block[r][c], vec[c]) for c in range(col)), 0)
                    assert s == 0


def test_shift_scales_discrepancy():
    # evaluating x*p at a row locator multiplies the evaluation by it
    rng = Random(4)
    f = GF(17)
    code = CodeParams(f, 16, 6)
    basis, matrix = make_instance(rng, code, 7, 8)
    g = basis.g
    for row in range(1, matrix.n_rows + 1):
        a = matrix.erased_locators[row - 1]
        for col in range(1, g):
            assert matrix.entry(row, col + 1) == f.mul(a, matrix.entry(row, col))


def test_fast_never_costs_more_than_naive():
    rng = Random(5)
    f = GF(64)
    code = CodeParams(f, 63, 47)  # d = 17
    for _ in range(40):
        t = rng.randrange(9, 17)
        basis, matrix = make_instance(rng, code, t, 14)
        assert fia_run(matrix).ops <= oracle_naive_fia(matrix).ops


def test_assemble_locator_normalized():
    rng = Random(6)
    f = GF(17)
    code = CodeParams(f, 16, 6)
    basis, matrix = make_instance(rng, code, 7, 8)
    result = fia_run(matrix)
    assert result.candidates
    for cand in result.candidates:
        lam = assemble_locator(cand.vector, matrix)
        low = next(c for c in lam.coeffs if c)
        assert low == 1


def test_build_matrix_rejects_bad_locators():
    rng = Random(7)
    f = GF(17)
    code = CodeParams(f, 16, 6)
    err = [0] * 16
    for p in rng.sample(range(16), 7):
        err[p] = rng.randrange(1, 17)
    trace = eea_run(syndrome(code, err), code.d)
    basis = extract_basis(trace, past_classical=True)
    loc = code.locator_of_position(3)
    with pytest.raises(ValueError):
        build_matrix(basis, [loc, loc])
    with pytest.raises(ValueError):
        build_matrix(basis, [loc, 0])


def test_never_stuck_column_is_reusable():
    # when a column clears every row, the next column in its chain must not
    # rescan from the top
    rng = Random(8)
    f = GF(64)
    code = CodeParams(f, 63, 31)  # d = 33
    found = 0
    for _ in range(100):
        t = rng.randrange(17, 31)
        pos = rng.sample(range(63), t)
        err = [0] * 63
        for p in pos:
            err[p] = rng.randrange(1, 64)
        trace = eea_run(syndrome(code, err), code.d)
        basis = extract_basis(trace, past_classical=True)
        # erase the true error positions first, like a genie-ranked channel
        erased = pos + [i for i in range(63) if i not in set(pos)]
        locs = [code.locator_of_position(i) for i in erased[:30]]
        matrix = build_matrix(basis, locs)
        result = fia_run(matrix, record_visits=True)
        cleared = {c for c, r in result.stored_rows.items() if r > matrix.n_rows}
        for col in cleared:
            nxt = col + 2 if col >= basis.g else col + 1
            if nxt > matrix.n_cols:
                continue
            first = [row for c, row, _ in result.visits if c == nxt]
            if first:
                assert first[0] > 1
            found += 1
    assert found > 0
