from random import Random

import pytest

from gmdrs.eea import eea_run, extract_basis
from gmdrs.fia import EvalMatrix, build_matrix, fia_run
from gmdrs.gf import GF
from gmdrs.oracles import (
    EXHAUSTIVE_LIMIT,
    genie_eea,
    kernel_basis,
    oracle_exhaustive_decode,
    oracle_gauss_solve,
    oracle_naive_fia,
)
from gmdrs.rs import CodeParams, encode, syndrome


def test_kernel_basis_known_matrix():
    f = GF(7)
    rows = [[1, 2, 3], [2, 4, 6]]  # rank 1
    basis = kernel_basis(f, rows, 3)
    assert len(basis) == 2
    for vec in basis:
        for row in rows:
            s = 0
            for a, b in zip(row, vec):
                s = f.add(s, f.mul(a, b))
            assert s == 0


def test_kernel_basis_full_rank_is_empty():
    f = GF(7)
    rows = [[1, 0], [0, 1]]
    assert kernel_basis(f, rows, 2) == []


def test_exhaustive_decode_small():
    f = GF(7)
    code = CodeParams(f, 6, 2)
    word = encode(code, [3, 5])
    recv = list(word)
    recv[0] = f.add(recv[0], 1)
    recv[3] = f.add(recv[3], 6)
    dist, winners = oracle_exhaustive_decode(code, recv)
    assert dist == 2
    assert word in winners


def test_exhaustive_decode_refuses_large_codes():
    f = GF(64)
    code = CodeParams(f, 63, 49)
    with pytest.raises(ValueError):
        oracle_exhaustive_decode(code, [0] * 63)
    assert EXHAUSTIVE_LIMIT <= 2 * 10**6


def make_matrix(rng, code, t, tau):
    err = [0] * code.n
    for p in rng.sample(range(code.n), t):
        err[p] = rng.randrange(1, code.field.q)
    synd = syndrome(code, err)
    trace = eea_run(synd, code.d)
    basis = extract_basis(trace, past_classical=True)
    locs = [code.locator_of_position(i) for i in rng.sample(range(code.n), tau)]
    return build_matrix(basis, locs)


def test_naive_fia_agrees_with_gauss_presence():
    rng = Random(1)
    f = GF(17)
    code = CodeParams(f, 16, 6)
    for _ in range(80):
        matrix = make_matrix(rng, code, rng.randrange(6, 9), 8)
        naive = oracle_naive_fia(matrix)
        gauss = oracle_gauss_solve(matrix)
        emitted = {c.column for c in naive.candidates}
        for col in matrix.emission_columns():
            assert (col in emitted) == bool(gauss.get(col))


def test_naive_visits_grow_beyond_fast():
    rng = Random(2)
    f = GF(64)
    code = CodeParams(f, 63, 31)  # d = 33
    fast_tot = naive_tot = 0
    for _ in range(20):
        matrix = make_matrix(rng, code, 20, 30)
        fast_tot += fia_run(matrix).ops
        naive_tot += oracle_naive_fia(matrix).ops
    assert naive_tot > 2 * fast_tot


def test_duplicate_row_rank_deficiency():
    # build_matrix rejects duplicate locators, but the oracles must cope
    # with a direct construction: repeated rows collapse the rank
    rng = Random(3)
    f = GF(17)
    code = CodeParams(f, 16, 6)
    err = [0] * 16
    for p in rng.sample(range(16), 7):
        err[p] = rng.randrange(1, 17)
    trace = eea_run(syndrome(code, err), code.d)
    basis = extract_basis(trace, past_classical=True)
    loc = code.locator_of_position(2)
    others = [code.locator_of_position(i) for i in (5, 9, 11)]
    g = basis.g
    n_cols = g + 1 + 2 * ((5 - g) // 2)
    dup = EvalMatrix(basis, (loc, loc, *others), 5, n_cols)
    gauss = oracle_gauss_solve(dup)
    naive = oracle_naive_fia(dup)
    fast = fia_run(dup)
    for res in (naive, fast):
        emitted = {c.column for c in res.candidates}
        for col in dup.emission_columns():
            assert (col in emitted) == bool(gauss.get(col))


def test_genie_eea_top_window_is_syndrome():
    rng = Random(4)
    f = GF(17)
    code = CodeParams(f, 16, 6)
    for _ in range(50):
        err = [0] * 16
        for p in rng.sample(range(16), rng.randrange(1, 10)):
            err[p] = rng.randrange(1, 17)
        synd = syndrome(code, err)
        gen = genie_eea(code, err)
        wide = gen[0].remainder
        D = 3 * (code.d - 1)
        off = D - (code.d - 1)
        assert [wide.coeff(off + j) for j in range(code.d - 1)] == \
            [synd.coeff(j) for j in range(code.d - 1)]
