import itertools

import pytest
from hypothesis import given, strategies as st

from qtoeplitz.hspace import (
    apply_outer_operator, format_vector, inner, outer, parse_vector, qvec, std_basis, vadd, vscale,
)
from qtoeplitz.qmat import matvec
from qtoeplitz.quat import I, J, K, ONE, ZERO, Quaternion, qconj, qmul
from qtoeplitz.sampling import random_rational, trial_rng

from conftest import quaternions, vectors


def test_orthonormal_basis_n4():
    E = std_basis(4)
    for r, s in itertools.product(range(4), repeat=2):
        assert inner(E[r], E[s]) == (ONE if r == s else ZERO)
    assert std_basis(1) == [(ONE,)]
    assert std_basis(3)[1] == (ZERO, ONE, ZERO)


def test_inner_examples():
    assert inner((I, J), (I, J)) == Quaternion(2)
    e0 = std_basis(1)[0]
    assert inner(vscale(K, e0), e0) == K


@given(vectors(3), vectors(3), quaternions)
def test_right_scalar_rules(x, y, c):
    ip = inner(x, y)
    assert inner(tuple(qmul(a, c) for a in x), y) == qmul(ip, c)
    assert inner(x, tuple(qmul(b, c) for b in y)) == qmul(qconj(c), ip)
    assert inner(y, x) == qconj(ip)


@given(vectors(3))
def test_positive_definite(x):
    v = inner(x, x)
    assert v.is_real() and v.real >= 0
    assert (v.real == 0) == (not any(x))


@given(vectors(2), st.tuples(*[st.integers(-3, 3)] * 2), quaternions)
def test_left_homogeneity_when_second_argument_real(x, yr, c):
    y = tuple(Quaternion(t) for t in yr)
    assert inner(vscale(c, x), y) == qmul(c, inner(x, y))


def test_left_homogeneity_fails_in_general():
    # conj(i) j 1 = -k, but j conj(i) = k
    assert inner(vscale(J, (ONE,)), (I,)) == -K
    assert qmul(J, inner((ONE,), (I,))) == K


def test_outer_examples():
    e = std_basis(3)
    M = outer(e[0], e[0])
    assert M[0, 0] == ONE and sum(1 for r in range(3) for s in range(3) if M[r, s]) == 1
    x = (I, ONE + J, K)
    col = outer(x, e[0])
    assert [col[r, 0] for r in range(3)] == list(x)
    assert all(not col[r, s] for r in range(3) for s in range(1, 3))


def test_outer_matches_operator_for_real_vectors():
    for t in range(50):
        rng = trial_rng(7, "outer-real", t)
        x = tuple(Quaternion(random_rational(rng)) for _ in range(3))
        y = tuple(Quaternion(random_rational(rng)) for _ in range(3))
        z = tuple(Quaternion(*(random_rational(rng) for _ in range(4))) for _ in range(3))
        assert matvec(outer(x, y), z) == apply_outer_operator(x, y, z)


@given(vectors(3), vectors(3))
def test_outer_matches_operator_when_x_real(y, z):
    x = (ONE, ZERO, Quaternion(2))
    assert matvec(outer(x, y), z) == apply_outer_operator(x, y, z)


def test_outer_and_operator_differ_when_only_y_real():
    x, y, z = (I,), (ONE,), (J,)
    assert matvec(outer(x, y), z) == (K,)
    assert apply_outer_operator(x, y, z) == (-K,)


def test_length_mismatch():
    with pytest.raises(ValueError):
        inner((ONE,), (ONE, ONE))
    with pytest.raises(ValueError):
        vadd((ONE,), (ONE, ONE))
    with pytest.raises(ValueError):
        std_basis(0)
    with pytest.raises(ValueError):
        qvec()


def test_vector_text_roundtrip():
    v = (ONE, I + J, -K)
    assert parse_vector(format_vector(v)) == v
    assert parse_vector("(1, 2i, -1/2)") == (ONE, 2 * I, Quaternion("-1/2"))
