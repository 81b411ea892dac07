from fractions import Fraction
import itertools

import pytest
from gmpy2 import mpq
from hypothesis import given

from qtoeplitz.quat import (
    I, J, K, ONE, ZERO, Complex, Quaternion, as_quat, c2_matmul, cd_join, cd_split, commutes,
    format_quat, from_complex2, is_root_of_x2_plus_1, parse_quat, pure_unit_points, qconj, qinv,
    qmul, qnorm2, rational, to_complex2,
)

from conftest import quaternions


def test_versor_table():
    assert qmul(I, J) == K and qmul(J, K) == I and qmul(K, I) == J
    assert qmul(J, I) == -K and qmul(K, J) == -I and qmul(I, K) == -J
    for v in (I, J, K):
        assert qmul(v, v) == -ONE
    assert qmul(qmul(I, J), K) == -ONE


def test_rational_coercion():
    assert rational(3) == mpq(3)
    assert rational(Fraction(1, 3)) == mpq(1, 3)
    assert rational("-2/6") == mpq(-1, 3)
    with pytest.raises(TypeError):
        rational(0.5)


def test_exact_fractions_stay_exact():
    a = Quaternion("1/3", 0, "2/7", 0)
    assert a[0] == mpq(1, 3)
    assert qmul(a, qinv(a)) == ONE


@given(quaternions, quaternions, quaternions)
def test_ring_axioms(a, b, c):
    assert qmul(qmul(a, b), c) == qmul(a, qmul(b, c))
    assert qmul(a, b + c) == qmul(a, b) + qmul(a, c)
    assert qmul(a + b, c) == qmul(a, c) + qmul(b, c)


@given(quaternions, quaternions)
def test_conjugate_and_norm(a, b):
    assert qconj(qmul(a, b)) == qmul(qconj(b), qconj(a))
    assert qnorm2(qmul(a, b)) == qnorm2(a) * qnorm2(b)
    assert qmul(a, qconj(a)) == Quaternion(qnorm2(a))


@given(quaternions)
def test_inverse(a):
    if not a:
        with pytest.raises(ZeroDivisionError):
            qinv(a)
    else:
        assert qmul(a, qinv(a)) == ONE == qmul(qinv(a), a)


@given(quaternions, quaternions)
def test_commutes_iff_pure_parts_parallel(a, b):
    u, v = a.pure, b.pure
    parallel = (u[2] * v[3] == u[3] * v[2] and u[3] * v[1] == u[1] * v[3] and u[1] * v[2] == u[2] * v[1])
    assert commutes(a, b) == parallel


def test_square_of_sum_does_not_expand():
    s = I + J
    assert qmul(s, s) == -2 * ONE
    assert qmul(I, I) + 2 * qmul(I, J) + qmul(J, J) == -2 * ONE + 2 * K


@given(quaternions)
def test_complex_split_roundtrip(a):
    g0, g1 = cd_split(a)
    assert cd_join(g0, g1) == a
    assert from_complex2(to_complex2(a)) == a


@given(quaternions, quaternions)
def test_complex_representation_is_multiplicative(a, b):
    assert c2_matmul(to_complex2(a), to_complex2(b)) == to_complex2(qmul(a, b))


def test_complex_split_of_j_part():
    # alpha = g0 + g1 j with g0 = a0 + a1 i, g1 = a2 + a3 i
    g0, g1 = cd_split(Quaternion(1, 2, 3, 4))
    assert g0 == Complex(1, 2) and g1 == Complex(3, 4)
    assert cd_join(Complex(0, 0), Complex(0, 1)) == K  # i j = k


def test_many_roots_of_minus_one():
    roots = set(pure_unit_points(5))
    assert {I, J, K, -I} <= roots
    assert Quaternion(0, "3/5", "4/5", 0) in roots
    assert all(is_root_of_x2_plus_1(r) for r in roots)
    assert len(roots) > 20
    assert not is_root_of_x2_plus_1(Quaternion(0, 1, 1, 0))


@pytest.mark.parametrize("text, value", [
    ("0", ZERO), ("1", ONE), ("-i", -I), ("2i+3j-k", Quaternion(0, 2, 3, -1)),
    ("1/2 - 3/4k", Quaternion("1/2", 0, 0, "-3/4")), ("k", K), ("+j", J),
])
def test_parse(text, value):
    assert parse_quat(text) == value


@pytest.mark.parametrize("bad", ["", "x", "1 2", "i j", "1//2", "ii"])
def test_parse_rejects(bad):
    with pytest.raises(ValueError):
        parse_quat(bad)


@given(quaternions)
def test_format_roundtrip(a):
    assert parse_quat(format_quat(a)) == a


def test_as_quat_and_operators():
    assert as_quat(2) == Quaternion(2)
    assert as_quat("i") == I
    assert I * 2 == 2 * I == Quaternion(0, 2)
    assert (ONE + I) / (ONE + I) == ONE
    assert str(Quaternion(1, -1, 0, "1/2")) == "1 - i + 1/2k"
    assert hash(Quaternion(1)) == hash(ONE)


def test_versor_products_close():
    versors = [s * v for v in (ONE, I, J, K) for s in (1, -1)]
    assert all(qmul(a, b) in versors for a, b in itertools.product(versors, repeat=2))
