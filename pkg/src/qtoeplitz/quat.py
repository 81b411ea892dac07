"""Exact quaternion arithmetic over the rationals.

Coefficients are ``gmpy2.mpq`` values, which are always stored in lowest
terms with a positive denominator, so equality of quaternions is plain
componentwise equality.
"""

from __future__ import annotations

import re
from operator import itemgetter
from typing import Iterable, Iterator, NamedTuple, Union

from gmpy2 import mpq

Scalar = Union[int, "mpq"]

_tuple_new = tuple.__new__


def rational(x) -> mpq:
    """Coerce ``x`` (int, mpq, Fraction or a ``"num/den"`` string) to mpq."""
    if isinstance(x, str):
        return mpq(x.strip())
    if isinstance(x, float):
        raise TypeError("floats are not exact; pass an int, Fraction or 'num/den' string")
    return mpq(x)


class Quaternion(tuple):
    """An exact quaternion ``a0 + a1 i + a2 j + a3 k``.

    Instances are immutable 4-tuples of rationals. Arithmetic operators
    follow the Hamilton product, so ``a * b`` and ``b * a`` generally differ.
    """

    __slots__ = ()

    def __new__(cls, a0=0, a1=0, a2=0, a3=0):
        return _tuple_new(cls, (rational(a0), rational(a1), rational(a2), rational(a3)))

    a0 = property(itemgetter(0))
    a1 = property(itemgetter(1))
    a2 = property(itemgetter(2))
    a3 = property(itemgetter(3))

    @classmethod
    def parse(cls, text: str) -> "Quaternion":
        return parse_quat(text)

    @property
    def real(self) -> mpq:
        return self[0]

    @property
    def pure(self) -> "Quaternion":
        return _q(0, self[1], self[2], self[3])

    def is_real(self) -> bool:
        return not (self[1] or self[2] or self[3])

    def is_pure(self) -> bool:
        return not self[0]

    def __bool__(self) -> bool:
        return bool(self[0] or self[1] or self[2] or self[3])

    def __add__(self, other):
        if not isinstance(other, Quaternion):
            if isinstance(other, tuple):
                return NotImplemented
            other = Quaternion(other)
        return qadd(self, other)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, Quaternion):
            if isinstance(other, tuple):
                return NotImplemented
            other = Quaternion(other)
        a0, a1, a2, a3 = self
        b0, b1, b2, b3 = other
        return _q(a0 - b0, a1 - b1, a2 - b2, a3 - b3)

    def __rsub__(self, other):
        return Quaternion(other) - self

    def __neg__(self):
        a0, a1, a2, a3 = self
        return _q(-a0, -a1, -a2, -a3)

    def __pos__(self):
        return self

    def __mul__(self, other):
        if isinstance(other, Quaternion):
            return qmul(self, other)
        if isinstance(other, tuple):
            return NotImplemented
        c = rational(other)
        a0, a1, a2, a3 = self
        return _q(a0 * c, a1 * c, a2 * c, a3 * c)

    def __rmul__(self, other):
        # only reached for non-quaternion left operands, which are real
        return self.__mul__(other)

    def __truediv__(self, other):
        if isinstance(other, Quaternion):
            return qmul(self, qinv(other))
        c = rational(other)
        if not c:
            raise ZeroDivisionError("quaternion division by zero")
        a0, a1, a2, a3 = self
        return _q(a0 / c, a1 / c, a2 / c, a3 / c)

    def conj(self) -> "Quaternion":
        return qconj(self)

    def norm2(self) -> mpq:
        return qnorm2(self)

    def __repr__(self) -> str:
        return f"Quaternion({format_quat(self)!r})"

    def __str__(self) -> str:
        return format_quat(self)

    def __getnewargs__(self):
        return tuple(self)


def _q(a0, a1, a2, a3) -> Quaternion:
    # trusted constructor: components are already mpq
    return _tuple_new(Quaternion, (a0, a1, a2, a3))


ZERO = Quaternion(0)
ONE = Quaternion(1)
I = Quaternion(0, 1)
J = Quaternion(0, 0, 1)
K = Quaternion(0, 0, 0, 1)
VERSORS = (ONE, I, J, K)


def as_quat(x) -> Quaternion:
    """Accept a Quaternion, a real scalar, or a quaternion literal string."""
    if isinstance(x, Quaternion):
        return x
    if isinstance(x, str):
        return parse_quat(x)
    if isinstance(x, (tuple, list)):
        return Quaternion(*x)
    return Quaternion(x)


def qadd(a: Quaternion, b: Quaternion) -> Quaternion:
    a0, a1, a2, a3 = a
    b0, b1, b2, b3 = b
    return _q(a0 + b0, a1 + b1, a2 + b2, a3 + b3)


def qmul(a: Quaternion, b: Quaternion) -> Quaternion:
    """Hamilton product ``a*b``."""
    a0, a1, a2, a3 = a
    b0, b1, b2, b3 = b
    return _q(
        a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
        a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
        a0 * b2 + a2 * b0 + a3 * b1 - a1 * b3,
        a0 * b3 + a3 * b0 + a1 * b2 - a2 * b1,
    )


def qconj(a: Quaternion) -> Quaternion:
    a0, a1, a2, a3 = a
    return _q(a0, -a1, -a2, -a3)


def qnorm2(a: Quaternion) -> mpq:
    a0, a1, a2, a3 = a
    return a0 * a0 + a1 * a1 + a2 * a2 + a3 * a3


def qinv(a: Quaternion) -> Quaternion:
    n = qnorm2(a)
    if not n:
        raise ZeroDivisionError("zero quaternion has no inverse")
    a0, a1, a2, a3 = a
    return _q(a0 / n, -a1 / n, -a2 / n, -a3 / n)


def commutes(a: Quaternion, b: Quaternion) -> bool:
    return qmul(a, b) == qmul(b, a)


def qsum(items: Iterable[Quaternion]) -> Quaternion:
    s0 = s1 = s2 = s3 = mpq(0)
    for b0, b1, b2, b3 in items:
        s0 += b0
        s1 += b1
        s2 += b2
        s3 += b3
    return _q(s0, s1, s2, s3)


# -- complex representation ------------------------------------------------


class Complex(NamedTuple):
    """Exact complex number with rational parts."""

    re: mpq
    im: mpq

    def __add__(self, other):
        return Complex(self.re + other.re, self.im + other.im)

    def __mul__(self, other):
        return Complex(self.re * other.re - self.im * other.im,
                       self.re * other.im + self.im * other.re)

    def __neg__(self):
        return Complex(-self.re, -self.im)

    def conjugate(self) -> "Complex":
        return Complex(self.re, -self.im)

    def __str__(self) -> str:
        return format_quat(_q(self.re, self.im, mpq(0), mpq(0)))


Complex2x2 = tuple  # ((w, z), (-conj z, conj w)) of Complex


def to_complex2(a: Quaternion):
    """Image of ``a`` in 2x2 complex matrices: ``[[w, z], [-conj z, conj w]]``."""
    a0, a1, a2, a3 = a
    w = Complex(a0, a1)
    z = Complex(a2, a3)
    return ((w, z), (-z.conjugate(), w.conjugate()))


def from_complex2(m) -> Quaternion:
    """Inverse of :func:`to_complex2`; raises ValueError off the image."""
    (w, z), (zz, ww) = m
    if zz != -z.conjugate() or ww != w.conjugate():
        raise ValueError("matrix is not of the form [[w, z], [-conj z, conj w]]")
    return _q(mpq(w.re), mpq(w.im), mpq(z.re), mpq(z.im))


def c2_matmul(x, y):
    return tuple(
        tuple(x[r][0] * y[0][s] + x[r][1] * y[1][s] for s in range(2))
        for r in range(2)
    )


def cd_split(a: Quaternion) -> tuple[Complex, Complex]:
    """Split ``a = g0 + g1*j`` with ``g0, g1`` in span{1, i}."""
    a0, a1, a2, a3 = a
    return Complex(a0, a1), Complex(a2, a3)


def cd_join(g0: Complex, g1: Complex) -> Quaternion:
    c0 = _q(mpq(g0.re), mpq(g0.im), mpq(0), mpq(0))
    c1 = _q(mpq(g1.re), mpq(g1.im), mpq(0), mpq(0))
    return qadd(c0, qmul(c1, J))


def is_root_of_x2_plus_1(a: Quaternion) -> bool:
    return qmul(a, a) == -ONE


def pure_unit_points(max_den: int) -> Iterator[Quaternion]:
    """Rational points on the unit sphere of pure quaternions.

    Enumerates Pythagorean quadruples ``x^2 + y^2 + z^2 = d^2`` with
    ``1 <= d <= max_den`` and yields ``(x i + y j + z k)/d``.
    """
    for d in range(1, max_den + 1):
        d2 = d * d
        for x in range(-d, d + 1):
            for y in range(-d, d + 1):
                rest = d2 - x * x - y * y
                if rest < 0:
                    continue
                z = _isqrt_exact(rest)
                if z is None:
                    continue
                for zz in {z, -z}:
                    yield _q(mpq(0), mpq(x, d), mpq(y, d), mpq(zz, d))


def _isqrt_exact(m: int):
    from math import isqrt
    r = isqrt(m)
    return r if r * r == m else None


# -- text literals ----------------------------------------------------------

_TERM = re.compile(r"([+-]?)(\d+(?:/\d+)?)?([ijk]?)")
_UNIT_INDEX = {"": 0, "i": 1, "j": 2, "k": 3}


def parse_quat(text: str) -> Quaternion:
    """Parse ``a0 +- a1 i +- a2 j +- a3 k``; omitted terms are zero.

    Coefficients are integers or ``num/den``; whitespace may surround signs
    but not split a number, and a bare unit such as ``-k`` has coefficient one.
    """
    if re.search(r"[\d/]\s+[\d/ijk]", text):
        raise ValueError(f"whitespace inside a term of {text!r}")
    s = "".join(text.split())
    if not s:
        raise ValueError("empty quaternion literal")
    coeffs = [mpq(0)] * 4
    pos = 0
    while pos < len(s):
        m = _TERM.match(s, pos)
        sign, num, unit = m.groups()
        if m.end() == pos or (not num and not unit):
            raise ValueError(f"bad quaternion literal {text!r} at offset {pos}")
        if pos > 0 and not sign:
            raise ValueError(f"missing sign between terms in {text!r}")
        c = mpq(num) if num else mpq(1)
        if sign == "-":
            c = -c
        coeffs[_UNIT_INDEX[unit]] += c
        pos = m.end()
    return _q(*coeffs)


def format_quat(a: Quaternion) -> str:
    """Inverse of :func:`parse_quat`, e.g. ``1 - 1/2i + 3k``."""
    parts = []
    for c, unit in zip(a, ("", "i", "j", "k")):
        if not c:
            continue
        mag = abs(c)
        body = unit if (unit and mag == 1) else f"{mag}{unit}"
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append(("- " if c < 0 else "+ ") + body)
    return " ".join(parts) if parts else "0"
