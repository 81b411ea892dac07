import json

import pytest
from hypothesis import given, strategies as st

from qtoeplitz.qmat import (
    QMatrix, adjoint, commutator, coords, diag, format_matrix, from_coords, identity, is_zero,
    lscale, madd, matrix_from_json, matrix_to_json, matvec, mmul, msub, parse_matrix, rscale,
    shift, transpose, unit, zeros,
)
from qtoeplitz.quat import I, J, K, ONE, ZERO, qconj, qmul

from conftest import quaternions


def matrices(n):
    return st.lists(st.lists(quaternions, min_size=n, max_size=n), min_size=n, max_size=n).map(QMatrix)


def naive_mmul(A, B):
    n = A.n
    out = []
    for r in range(n):
        row = []
        for s in range(n):
            acc = ZERO
            for t in range(n):
                acc = acc + qmul(A[r, t], B[t, s])
            row.append(acc)
        out.append(row)
    return QMatrix(out)


@given(matrices(3), matrices(3))
def test_mmul_matches_naive_loop(A, B):
    assert mmul(A, B) == naive_mmul(A, B) == A @ B


@given(matrices(2), matrices(2), matrices(2))
def test_associative_not_commutative(A, B, C):
    assert mmul(mmul(A, B), C) == mmul(A, mmul(B, C))


def test_noncommutative_scalars_matter():
    A, B = diag([I, ONE]), diag([J, ONE])
    assert mmul(A, B) != mmul(B, A)
    assert mmul(A, B) == diag([K, ONE])
    assert not is_zero(commutator(A, B))


@given(matrices(2), quaternions)
def test_scaling(A, c):
    assert lscale(c, A) == mmul(diag([c, c]), A)
    assert rscale(A, c) == mmul(A, diag([c, c]))


@given(matrices(3), matrices(3))
def test_adjoint_reverses_products(A, B):
    assert adjoint(mmul(A, B)) == mmul(adjoint(B), adjoint(A))
    assert adjoint(adjoint(A)) == A
    assert transpose(transpose(A)) == A


def test_shift_and_its_adjoint():
    S = shift(3)
    assert S[1, 0] == ONE and S[2, 1] == ONE and S[0, 2] == ZERO
    Sst = adjoint(S)
    assert mmul(S, Sst) == diag([ZERO, ONE, ONE])
    assert mmul(Sst, S) == diag([ONE, ONE, ZERO])


@given(matrices(2))
def test_coords_roundtrip(A):
    assert from_coords(2, coords(A)) == A
    assert len(coords(A)) == 16


def test_coords_order():
    # entry-major, then 1, i, j, k
    assert coords(unit(2, 0, 1, J)) == (0,) * 6 + (1,) + (0,) * 9


@given(matrices(2), matrices(2))
def test_add_sub(A, B):
    assert msub(madd(A, B), B) == A
    assert A + B - B == A
    assert madd(A, -A) == zeros(2)


@given(matrices(2), st.lists(quaternions, min_size=2, max_size=2))
def test_matvec(A, v):
    col = QMatrix([[v[0], ZERO], [v[1], ZERO]])
    prod = mmul(A, col)
    assert matvec(A, v) == (prod[0, 0], prod[1, 0])


def test_text_and_json_roundtrip():
    A = QMatrix([[ONE, I + J], [-K, "1/2"]])
    assert parse_matrix(format_matrix(A)) == A
    assert matrix_from_json(json.loads(json.dumps(matrix_to_json(A)))) == A
    assert matrix_from_json([[[1, 0, 0, 0], [0, 1, 1, 0]], [[0, 0, 0, -1], ["1/2", 0, 0, 0]]]) == A


def test_validation():
    with pytest.raises(ValueError):
        QMatrix([[ONE, ONE]])
    with pytest.raises(ValueError):
        mmul(identity(2), identity(3))
    assert identity(2) == diag([ONE, ONE])
