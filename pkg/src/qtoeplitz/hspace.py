"""The left inner-product space H^n.

Vectors are plain tuples of :class:`~qtoeplitz.quat.Quaternion`.
"""

from __future__ import annotations

from typing import Sequence, Tuple

from .quat import ONE, ZERO, Quaternion, as_quat, format_quat, parse_quat, qconj, qmul, qsum

QVector = Tuple[Quaternion, ...]


def qvec(*items) -> QVector:
    if not items:
        raise ValueError("vectors need at least one entry")
    return tuple(as_quat(x) for x in items)


def _check_len(x: Sequence, y: Sequence) -> None:
    if len(x) != len(y):
        raise ValueError(f"length mismatch: {len(x)} vs {len(y)}")


def inner(x: QVector, y: QVector) -> Quaternion:
    """``<x, y> = sum_k conj(y_k) x_k``; left-linear in ``x``."""
    _check_len(x, y)
    return qsum(qmul(qconj(b), a) for a, b in zip(x, y))


def vscale(q: Quaternion, x: QVector) -> QVector:
    """Left scalar multiple ``q x``."""
    return tuple(qmul(q, a) for a in x)


def vadd(x: QVector, y: QVector) -> QVector:
    _check_len(x, y)
    return tuple(a + b for a, b in zip(x, y))


def std_basis(n: int) -> list[QVector]:
    if n < 1:
        raise ValueError("n must be positive")
    return [tuple(ONE if r == c else ZERO for c in range(n)) for r in range(n)]


def outer(x: QVector, y: QVector):
    """Matrix of ``x (x) y`` with entry ``(r, s) = x_r conj(y_s)``.

    Applied to a column ``z`` this gives ``x_r <z, y>``, whereas the operator
    ``z -> <z, y> x`` puts the scalar on the left. The two agree whenever
    ``x`` is real, which covers ``e0 (x) y``; for ``x (x) e0`` they agree on
    real ``z`` only.
    """
    from .qmat import QMatrix

    _check_len(x, y)
    cy = [qconj(b) for b in y]
    return QMatrix._trusted(
        tuple(tuple(qmul(a, b) if (a and b) else ZERO for b in cy) for a in x)
    )


def apply_outer_operator(x: QVector, y: QVector, z: QVector) -> QVector:
    """Evaluate the operator form ``<z, y> x`` (scalar on the left)."""
    return vscale(inner(z, y), x)


def parse_vector(text: str) -> QVector:
    s = text.strip()
    if s.startswith("(") and s.endswith(")"):
        s = s[1:-1]
    return tuple(parse_quat(part) for part in s.split(","))


def format_vector(x: QVector) -> str:
    return "(" + ", ".join(format_quat(a) for a in x) + ")"
