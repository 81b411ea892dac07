"""Dense square matrices over H."""

from __future__ import annotations

import json
from typing import Iterable, Sequence

from gmpy2 import mpq

from .quat import ONE, ZERO, Quaternion, _q, as_quat, format_quat, parse_quat, qadd, qconj, qmul


class QMatrix:
    """Immutable ``n x n`` quaternion matrix, indices ``0..n-1``."""

    __slots__ = ("n", "rows", "_hash")

    def __init__(self, rows: Iterable[Iterable]):
        rows = tuple(tuple(as_quat(x) for x in row) for row in rows)
        n = len(rows)
        if n == 0:
            raise ValueError("matrix must be at least 1x1")
        if any(len(row) != n for row in rows):
            raise ValueError("matrix must be square")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "_hash", None)

    @classmethod
    def _trusted(cls, rows: tuple) -> "QMatrix":
        m = object.__new__(cls)
        object.__setattr__(m, "n", len(rows))
        object.__setattr__(m, "rows", rows)
        object.__setattr__(m, "_hash", None)
        return m

    def __setattr__(self, name, value):
        raise AttributeError("QMatrix is immutable")

    def __getitem__(self, rs) -> Quaternion:
        r, s = rs
        return self.rows[r][s]

    def __eq__(self, other):
        if not isinstance(other, QMatrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        if self._hash is None:
            object.__setattr__(self, "_hash", hash(self.rows))
        return self._hash

    def __add__(self, other):
        return madd(self, other)

    def __sub__(self, other):
        return msub(self, other)

    def __neg__(self):
        return QMatrix._trusted(tuple(tuple(-a for a in row) for row in self.rows))

    def __matmul__(self, other):
        return mmul(self, other)

    def entries(self):
        for r, row in enumerate(self.rows):
            for s, a in enumerate(row):
                yield r, s, a

    def __repr__(self):
        return f"QMatrix({format_matrix(self)!r})"

    def __str__(self):
        return format_matrix(self)


def _check_size(A: QMatrix, B: QMatrix) -> None:
    if A.n != B.n:
        raise ValueError(f"size mismatch: {A.n} vs {B.n}")


def zeros(n: int) -> QMatrix:
    return QMatrix._trusted(tuple((ZERO,) * n for _ in range(n)))


def identity(n: int) -> QMatrix:
    return diag([ONE] * n)


def diag(values: Sequence) -> QMatrix:
    n = len(values)
    vals = [as_quat(v) for v in values]
    return QMatrix._trusted(
        tuple(tuple(vals[r] if r == s else ZERO for s in range(n)) for r in range(n))
    )


def unit(n: int, r: int, s: int, value=ONE) -> QMatrix:
    """Matrix with ``value`` at ``(r, s)`` and zeros elsewhere."""
    value = as_quat(value)
    return QMatrix._trusted(
        tuple(tuple(value if (a, b) == (r, s) else ZERO for b in range(n)) for a in range(n))
    )


def madd(A: QMatrix, B: QMatrix) -> QMatrix:
    _check_size(A, B)
    return QMatrix._trusted(
        tuple(tuple(qadd(a, b) for a, b in zip(ra, rb)) for ra, rb in zip(A.rows, B.rows))
    )


def msub(A: QMatrix, B: QMatrix) -> QMatrix:
    _check_size(A, B)
    return QMatrix._trusted(
        tuple(tuple(a - b for a, b in zip(ra, rb)) for ra, rb in zip(A.rows, B.rows))
    )


def lscale(q, A: QMatrix) -> QMatrix:
    """Entrywise ``q * a``."""
    q = as_quat(q)
    return QMatrix._trusted(tuple(tuple(qmul(q, a) for a in row) for row in A.rows))


def rscale(A: QMatrix, q) -> QMatrix:
    """Entrywise ``a * q``."""
    q = as_quat(q)
    return QMatrix._trusted(tuple(tuple(qmul(a, q) for a in row) for row in A.rows))


def mmul(A: QMatrix, B: QMatrix) -> QMatrix:
    """Matrix product; entry ``(r, s) = sum_k A[r,k] * B[k,s]`` in that order."""
    _check_size(A, B)
    cols = list(zip(*B.rows))
    out = []
    for row in A.rows:
        new_row = []
        for col in cols:
            c0 = c1 = c2 = c3 = mpq(0)
            for (a0, a1, a2, a3), (b0, b1, b2, b3) in zip(row, col):
                if not (a0 or a1 or a2 or a3):
                    continue
                c0 += a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3
                c1 += a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2
                c2 += a0 * b2 + a2 * b0 + a3 * b1 - a1 * b3
                c3 += a0 * b3 + a3 * b0 + a1 * b2 - a2 * b1
            new_row.append(_q(c0, c1, c2, c3))
        out.append(tuple(new_row))
    return QMatrix._trusted(tuple(out))


def matvec(A: QMatrix, v: Sequence[Quaternion]) -> tuple:
    if len(v) != A.n:
        raise ValueError(f"size mismatch: {A.n} vs {len(v)}")
    return tuple(
        _sum_products(row, v) for row in A.rows
    )


def _sum_products(xs, ys) -> Quaternion:
    c = ZERO
    for x, y in zip(xs, ys):
        if x:
            c = qadd(c, qmul(x, y))
    return c


def adjoint(A: QMatrix) -> QMatrix:
    """Conjugate transpose."""
    return QMatrix._trusted(tuple(tuple(qconj(a) for a in col) for col in zip(*A.rows)))


def transpose(A: QMatrix) -> QMatrix:
    return QMatrix._trusted(tuple(zip(*A.rows)))


def shift(n: int) -> QMatrix:
    """Lower shift: ones on the first subdiagonal, so ``S e_r = e_{r+1}``."""
    if n < 1:
        raise ValueError("n must be positive")
    return QMatrix._trusted(
        tuple(tuple(ONE if r == s + 1 else ZERO for s in range(n)) for r in range(n))
    )


def commutator(A: QMatrix, B: QMatrix) -> QMatrix:
    return msub(mmul(A, B), mmul(B, A))


def is_zero(A: QMatrix) -> bool:
    return not any(a for row in A.rows for a in row)


# -- real coordinates ---------------------------------------------------------


def coords(A: QMatrix) -> tuple:
    """Real coordinate vector of length ``4 n^2``: entry-major, then 1, i, j, k."""
    return tuple(c for row in A.rows for a in row for c in a)


def from_coords(n: int, v: Sequence) -> QMatrix:
    if len(v) != 4 * n * n:
        raise ValueError("coordinate vector has the wrong length")
    it = iter(v)
    return QMatrix._trusted(
        tuple(tuple(_q(*(mpq(next(it)) for _ in range(4))) for _ in range(n)) for _ in range(n))
    )


# -- text and JSON ------------------------------------------------------------


def format_matrix(A: QMatrix) -> str:
    """One row per line, entries separated by ``;``."""
    return "\n".join("; ".join(format_quat(a) for a in row) for row in A.rows)


def parse_matrix(text: str) -> QMatrix:
    rows = [line for line in text.strip().splitlines() if line.strip()]
    return QMatrix([[parse_quat(cell) for cell in line.split(";")] for line in rows])


def matrix_to_json(A: QMatrix) -> list:
    return [[format_quat(a) for a in row] for row in A.rows]


def matrix_from_json(data) -> QMatrix:
    """Accept entries as literals (``"1+2i"``) or 4-lists of coefficients."""
    if isinstance(data, str):
        data = json.loads(data)

    def entry(x):
        if isinstance(x, list):
            return Quaternion(*(str(c) if isinstance(c, str) else c for c in x))
        if isinstance(x, str):
            return parse_quat(x)
        if isinstance(x, int):
            return Quaternion(x)
        raise ValueError(f"cannot read matrix entry {x!r}")

    return QMatrix([[entry(x) for x in row] for row in data])
