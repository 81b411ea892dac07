import pytest
from gmpy2 import mpq

from qtoeplitz import gpq as G
from qtoeplitz.linalg import Echelon, nullspace, rank
from qtoeplitz.qmat import adjoint, diag, identity, lscale, madd, shift, unit
from qtoeplitz.quat import I, J, K, ONE, ZERO
from qtoeplitz.spanengine import (
    RealSpan, _closure, contains_mat, dim, is_product_closed, left_algebra_closure, span_equal,
    span_of, within,
)
from qtoeplitz.subalg import FULL
from qtoeplitz.toeplitz import ToeplitzQ, is_toeplitz, to_dense


def test_linalg_basics():
    assert rank([[1, 2], [2, 4], [0, 0]]) == 1
    ns = nullspace([[1, 1, 0], [0, 0, 1]], 3)
    assert len(ns) == 1 and ns[0] == [mpq(-1), mpq(1), mpq(0)]
    assert len(nullspace([], 4)) == 4
    E = Echelon(3)
    assert E.add({0: mpq(1), 1: mpq(1)}) and not E.add({0: mpq(2), 1: mpq(2)})
    assert E.contains({0: mpq(-3), 1: mpq(-3)})


def test_canonical_form():
    a = span_of([identity(2), unit(2, 0, 1, I)])
    b = span_of([madd(identity(2), unit(2, 0, 1, I)), lscale(mpq(3), identity(2))])
    assert a == b and span_equal(a, b)
    assert a.basis() == b.basis()


def test_span_examples():
    assert dim(span_of([identity(3)])) == 1
    assert dim(span_of([lscale(q, identity(2)) for q in (ONE, I, J, K)])) == 4
    for n in (1, 2, 3):
        assert dim(G.toeplitz_span(n)) == 4 * (2 * n - 1)
    S = span_of([identity(2)])
    assert contains_mat(S, lscale(mpq(2), identity(2)))
    assert not contains_mat(S, shift(2))
    assert not contains_mat(S, lscale(I, identity(2)))


def test_size_checks():
    with pytest.raises(ValueError):
        span_of([identity(2), identity(3)])
    with pytest.raises(ValueError):
        contains_mat(span_of([identity(2)]), identity(3))


def test_closure_examples():
    assert dim(left_algebra_closure([identity(2)], "R")) == 1
    assert dim(left_algebra_closure([identity(2)], "H")) == 4
    circ = [to_dense(T) for T in G.basis(G.GpqSpec(2, FULL, ONE, ONE))]
    C = left_algebra_closure(circ, "H")
    assert dim(C) == 8 and C == span_of(circ)
    assert is_product_closed(span_of(circ))


def test_closure_of_shift_pair_leaves_toeplitz():
    for n in (2, 3):
        S = shift(n)
        C = left_algebra_closure([S, adjoint(S)], "R")
        assert contains_mat(C, diag([ZERO] + [ONE] * (n - 1)))
        assert contains_mat(C, diag([ONE] * (n - 1) + [ZERO]))
        assert dim(C) >= 4
        assert not within(C, G.toeplitz_span(n))


def test_within():
    full = span_of([lscale(q, unit(2, r, s)) for r in range(2) for s in range(2) for q in (ONE, I, J, K)])
    assert dim(full) == 16
    g = G.gspan(G.GpqSpec(2, FULL, ONE, ONE))
    assert within(g, full) and within(g, G.toeplitz_span(2))


def test_full_toeplitz_space_not_closed():
    for n in (2, 3):
        T = G.toeplitz_span(n)
        assert not is_product_closed(T)
        assert dim(left_algebra_closure(T.basis(), "H")) > 4 * (2 * n - 1)


def test_monotone_and_idempotent():
    base = [to_dense(ToeplitzQ.from_diagonals(3, {0: ONE}))]
    extra = to_dense(ToeplitzQ.from_diagonals(3, {1: ONE}))
    d1 = dim(left_algebra_closure(base, "R"))
    C2 = left_algebra_closure(base + [extra], "R")
    assert dim(C2) >= d1
    assert left_algebra_closure(C2.basis(), "R") == C2


def test_closure_stops_when_leaving_ambient():
    amb = G.toeplitz_span(3)
    span, escaped = _closure([shift(3), adjoint(shift(3))], "R", ambient=amb)
    assert escaped


def test_bad_scalar_mode():
    with pytest.raises(ValueError):
        left_algebra_closure([identity(2)], "C")
