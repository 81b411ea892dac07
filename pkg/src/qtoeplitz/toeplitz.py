"""Quaternion Toeplitz matrices stored by their ``2n - 1`` diagonals.

A Toeplitz matrix ``T`` has ``T[r, s] = alpha[r - s]`` for diagonal
parameters ``alpha[1-n] .. alpha[n-1]``. Row 0 therefore reads
``alpha[0], alpha[-1], ..., alpha[1-n]`` and column 0 reads
``alpha[0], alpha[1], ..., alpha[n-1]``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Optional, Sequence

import numpy as np

from .hspace import QVector, outer, std_basis
from .qmat import QMatrix, adjoint, madd, mmul, msub, shift
from .quat import ONE, ZERO, Quaternion, _q, as_quat, commutes, format_quat, parse_quat, qadd, qconj, qmul


class NotToeplitz(ValueError):
    """Raised when a dense matrix is not constant along a diagonal."""

    def __init__(self, pair):
        (r, s), (r1, s1) = pair
        self.pair = pair
        super().__init__(f"entries ({r}, {s}) and ({r1}, {s1}) differ on diagonal {r - s}")


@dataclass(frozen=True)
class ToeplitzQ:
    n: int
    params: tuple  # alpha[1-n], ..., alpha[n-1]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be positive")
        if len(self.params) != 2 * self.n - 1:
            raise ValueError(f"expected {2 * self.n - 1} parameters, got {len(self.params)}")

    @classmethod
    def from_params(cls, n: int, params: Sequence) -> "ToeplitzQ":
        return cls(n, tuple(as_quat(a) for a in params))

    @classmethod
    def from_diagonals(cls, n: int, diagonals: Mapping[int, object]) -> "ToeplitzQ":
        """Build from ``{offset: value}``; missing diagonals are zero."""
        params = [ZERO] * (2 * n - 1)
        for k, v in diagonals.items():
            if not 1 - n <= k <= n - 1:
                raise ValueError(f"diagonal {k} out of range for n={n}")
            params[k + n - 1] = as_quat(v)
        return cls(n, tuple(params))

    def alpha(self, k: int) -> Quaternion:
        if not 1 - self.n <= k <= self.n - 1:
            raise IndexError(k)
        return self.params[k + self.n - 1]

    def dense(self) -> QMatrix:
        return to_dense(self)

    def __str__(self):
        return format_toeplitz(self)


def zero_toeplitz(n: int) -> ToeplitzQ:
    return ToeplitzQ(n, (ZERO,) * (2 * n - 1))


def identity_toeplitz(n: int) -> ToeplitzQ:
    return ToeplitzQ.from_diagonals(n, {0: ONE})


def shift_toeplitz(n: int) -> ToeplitzQ:
    return ToeplitzQ.from_diagonals(n, {1: ONE} if n > 1 else {})


def to_dense(T: ToeplitzQ) -> QMatrix:
    n, p = T.n, T.params
    return QMatrix._trusted(
        tuple(tuple(p[r - s + n - 1] for s in range(n)) for r in range(n))
    )


def toeplitz_violation(A: QMatrix):
    """First pair ``((r, s), (r-1, s-1))`` with unequal entries, or None."""
    rows = A.rows
    for r in range(1, A.n):
        for s in range(1, A.n):
            if rows[r][s] != rows[r - 1][s - 1]:
                return (r, s), (r - 1, s - 1)
    return None


def is_toeplitz(A: QMatrix) -> bool:
    return toeplitz_violation(A) is None


def from_dense(A: QMatrix) -> ToeplitzQ:
    bad = toeplitz_violation(A)
    if bad is not None:
        raise NotToeplitz(bad)
    n = A.n
    lower = [A.rows[k][0] for k in range(n)]  # alpha[0..n-1]
    upper = [A.rows[0][k] for k in range(n - 1, 0, -1)]  # alpha[1-n..-1]
    return ToeplitzQ(n, tuple(upper + lower))


def displacement(A: QMatrix) -> QMatrix:
    """``A - S A S*``, computed by index shifting.

    ``(S A S*)[r, s]`` is ``A[r-1, s-1]`` when ``r, s >= 1`` and zero otherwise.
    """
    rows = A.rows
    out = []
    for r, row in enumerate(rows):
        if r == 0:
            out.append(row)
            continue
        prev = rows[r - 1]
        out.append((row[0],) + tuple(row[s] - prev[s - 1] for s in range(1, A.n)))
    return QMatrix._trusted(tuple(out))


def displacement_by_products(A: QMatrix) -> QMatrix:
    """Same as :func:`displacement` but through two dense products."""
    S = shift(A.n)
    return msub(A, mmul(mmul(S, A), adjoint(S)))


def displacement_vectors(T: ToeplitzQ) -> tuple[QVector, QVector]:
    """Vectors ``x, y`` with ``T - S T S* = x (x) e0 + e0 (x) y``.

    ``x`` is column 0. Row 0 of ``e0 (x) y`` holds ``conj(y_s)``, so ``y``
    carries the conjugated upper diagonals.
    """
    n = T.n
    x = tuple(T.alpha(k) for k in range(n))
    y = (ZERO,) + tuple(qconj(T.alpha(-k)) for k in range(1, n))
    return x, y


def displacement_from_vectors(x: QVector, y: QVector) -> QMatrix:
    e0 = std_basis(len(x))[0]
    return madd(outer(x, e0), outer(e0, y))


def is_displacement_rank_one_bordered(A: QMatrix) -> bool:
    """True iff ``A - S A S*`` vanishes outside row 0 and column 0."""
    D = displacement(A)
    return not any(D.rows[r][s] for r in range(1, A.n) for s in range(1, A.n))


def is_circulant(T: ToeplitzQ) -> bool:
    return all(T.alpha(r) == T.alpha(r - T.n) for r in range(1, T.n))


def circulant(first_column: Sequence) -> ToeplitzQ:
    """Circulant with the given column 0."""
    col = [as_quat(a) for a in first_column]
    n = len(col)
    return ToeplitzQ.from_diagonals(
        n, {**{r: col[r] for r in range(n)}, **{r - n: col[r] for r in range(1, n)}}
    )


def _same_size(A: ToeplitzQ, B: ToeplitzQ) -> None:
    if A.n != B.n:
        raise ValueError(f"size mismatch: {A.n} vs {B.n}")


def product_criterion_violation(A: ToeplitzQ, B: ToeplitzQ):
    """First ``(r, s)`` with ``alpha_r beta_{s-n} != alpha_{r-n} beta_s``, or None."""
    _same_size(A, B)
    n = A.n
    for r in range(1, n):
        ar, arn = A.alpha(r), A.alpha(r - n)
        for s in range(1, n):
            if qmul(ar, B.alpha(s - n)) != qmul(arn, B.alpha(s)):
                return r, s
    return None


def product_criterion(A: ToeplitzQ, B: ToeplitzQ) -> bool:
    """True iff the product of the dense forms of ``A`` and ``B`` is Toeplitz."""
    return product_criterion_violation(A, B) is None


def toeplitz_product(A: ToeplitzQ, B: ToeplitzQ) -> ToeplitzQ:
    """``A B`` as a ToeplitzQ; raises NotToeplitz if the criterion fails."""
    bad = product_criterion_violation(A, B)
    if bad is not None:
        r, s = bad
        n = A.n
        # the criterion at (r, s) is the diagonal step between (r, n-s) and (r-1, n-s-1)
        raise NotToeplitz(((r, n - s), (r - 1, n - s - 1)))
    return from_dense(mmul(to_dense(A), to_dense(B)))


def entries_commute(A: ToeplitzQ, B: ToeplitzQ) -> bool:
    return all(commutes(a, b) for a in set(A.params) for b in set(B.params))


@dataclass(frozen=True)
class CommutingProductReport:
    entries_commute: bool
    criterion: bool
    commute: bool
    product_is_toeplitz: bool

    @property
    def corrected_holds(self) -> bool:
        """Commuting entries and the product criterion force ``AB = BA``."""
        return not (self.entries_commute and self.criterion) or self.commute

    @property
    def literal_holds(self) -> bool:
        """Commuting entries alone force ``AB = BA``."""
        return not self.entries_commute or self.commute


def commuting_product_check(A: ToeplitzQ, B: ToeplitzQ) -> CommutingProductReport:
    _same_size(A, B)
    dA, dB = to_dense(A), to_dense(B)
    AB = mmul(dA, dB)
    return CommutingProductReport(
        entries_commute=entries_commute(A, B),
        criterion=product_criterion(A, B),
        commute=AB == mmul(dB, dA),
        product_is_toeplitz=is_toeplitz(AB),
    )


# -- structured kernels ----------------------------------------------------


def matvec(T: ToeplitzQ, v: Sequence[Quaternion]) -> QVector:
    """Exact ``T v`` straight from the parameters, without forming T."""
    n = T.n
    if len(v) != n:
        raise ValueError(f"size mismatch: {n} vs {len(v)}")
    p = T.params
    out = []
    for r in range(n):
        acc = ZERO
        base = r + n - 1
        for s in range(n):
            a = p[base - s]
            if a:
                acc = qadd(acc, qmul(a, v[s]))
        out.append(acc)
    return tuple(out)


def qmul_array(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Broadcasting Hamilton product over the last axis (length 4)."""
    a0, a1, a2, a3 = np.moveaxis(a, -1, 0)
    b0, b1, b2, b3 = np.moveaxis(b, -1, 0)
    return np.stack(
        [
            a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
            a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
            a0 * b2 + a2 * b0 + a3 * b1 - a1 * b3,
            a0 * b3 + a3 * b0 + a1 * b2 - a2 * b1,
        ],
        axis=-1,
    )


def params_to_float(T: ToeplitzQ) -> np.ndarray:
    return np.array([[float(c) for c in a] for a in T.params], dtype=np.float64)


def vector_to_float(v: Sequence[Quaternion]) -> np.ndarray:
    return np.array([[float(c) for c in a] for a in v], dtype=np.float64)


def _split(x: np.ndarray):
    """``x = c + d j`` with complex ``c, d``; ``x`` has shape ``(..., 4)``."""
    return x[..., 0] + 1j * x[..., 1], x[..., 2] + 1j * x[..., 3]


def _join(c: np.ndarray, d: np.ndarray) -> np.ndarray:
    return np.stack([c.real, c.imag, d.real, d.imag], axis=-1)


def _check_shapes(params: np.ndarray, v: np.ndarray) -> int:
    n = v.shape[0]
    if v.shape != (n, 4) or params.shape != (2 * n - 1, 4):
        raise ValueError("expected params of shape (2n-1, 4) and v of shape (n, 4)")
    return n


def matvec_float(params: np.ndarray, v: np.ndarray) -> np.ndarray:
    """``T v`` from the ``2n - 1`` parameters, one diagonal at a time.

    With ``alpha = a + b j`` and ``v = c + d j`` (complex ``a, b, c, d``),
    ``alpha v = (a c - b conj(d)) + (a d + b conj(c)) j``.
    """
    n = _check_shapes(params, v)
    a, b = _split(params)
    c, d = _split(v)
    cc, dc = np.conj(c), np.conj(d)
    g0 = np.zeros(n, dtype=complex)
    g1 = np.zeros(n, dtype=complex)
    for k in range(1 - n, n):
        m = k + n - 1
        # diagonal k couples row r to column r - k
        rows, cols = (slice(k, n), slice(0, n - k)) if k >= 0 else (slice(0, n + k), slice(-k, n))
        g0[rows] += a[m] * c[cols] - b[m] * dc[cols]
        g1[rows] += a[m] * d[cols] + b[m] * cc[cols]
    return _join(g0, g1)


def matvec_float_fft(params: np.ndarray, v: np.ndarray) -> np.ndarray:
    """Same product as four complex linear convolutions done by FFT.

    Row ``r`` of ``T v`` is entry ``r + n - 1`` of the convolution of the
    parameter sequence with ``v``.
    """
    n = _check_shapes(params, v)
    a, b = _split(params)
    c, d = _split(v)
    size = 1 << (3 * n - 3).bit_length()  # >= 3n - 2, no wraparound
    fa, fb = np.fft.fft(a, size), np.fft.fft(b, size)
    fc, fd = np.fft.fft(c, size), np.fft.fft(d, size)
    fcc, fdc = np.fft.fft(np.conj(c), size), np.fft.fft(np.conj(d), size)
    g0 = np.fft.ifft(fa * fc - fb * fdc)[n - 1:2 * n - 1]
    g1 = np.fft.ifft(fa * fd + fb * fcc)[n - 1:2 * n - 1]
    return _join(g0, g1)


def dense_float(params: np.ndarray) -> np.ndarray:
    """Expand float parameters to an ``(n, n, 4)`` array."""
    n = (params.shape[0] + 1) // 2
    idx = np.arange(n)[:, None] - np.arange(n)[None, :] + n - 1
    return params[idx]


def dense_matvec_float(A: np.ndarray, v: np.ndarray) -> np.ndarray:
    return qmul_array(A, v[None, :, :]).sum(axis=1)


# -- text format ----------------------------------------------------------------


def format_toeplitz(T: ToeplitzQ) -> str:
    """``n`` on the first line, then ``alpha[1-n] .. alpha[n-1]`` one per line."""
    return "\n".join([str(T.n)] + [format_quat(a) for a in T.params])


def parse_toeplitz(text: str) -> ToeplitzQ:
    tokens = [t.strip() for line in text.splitlines() for t in line.split(";")]
    tokens = [t for t in tokens if t and not t.startswith("#")]
    if not tokens:
        raise ValueError("empty Toeplitz description")
    n = int(tokens[0])
    return ToeplitzQ.from_params(n, [parse_quat(t) for t in tokens[1:]])
