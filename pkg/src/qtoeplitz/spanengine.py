"""Real-linear subspaces of M_n[H] and left-algebra closure.

A matrix is encoded by its ``4 n^2`` real coordinates (entry-major, then
1, i, j, k) and a subspace by the canonical reduced echelon basis of those
coordinates, so two spans are equal iff their reduced bases are identical.
"""

from __future__ import annotations

from typing import Iterable, Optional, Sequence

from .linalg import Echelon, dense
from .qmat import QMatrix, from_coords, lscale, mmul
from .quat import I, J, K

SCALAR_MODES = ("R", "H")


def matrix_vector(A: QMatrix) -> dict:
    v = {}
    k = 0
    for row in A.rows:
        for a in row:
            for c in a:
                if c:
                    v[k] = c
                k += 1
    return v


class RealSpan:
    """Real span of a set of ``n x n`` quaternion matrices."""

    __slots__ = ("n", "_ech")

    def __init__(self, n: int, ech: Optional[Echelon] = None):
        self.n = n
        self._ech = ech if ech is not None else Echelon(4 * n * n)

    def copy(self) -> "RealSpan":
        return RealSpan(self.n, self._ech.copy())

    def _check(self, n: int) -> None:
        if n != self.n:
            raise ValueError(f"size mismatch: {self.n} vs {n}")

    def add(self, A: QMatrix) -> bool:
        """Adjoin ``A``; True if the dimension grew."""
        self._check(A.n)
        return self._ech.add(matrix_vector(A))

    @property
    def dim(self) -> int:
        return len(self._ech)

    def basis(self) -> list[QMatrix]:
        return [from_coords(self.n, dense(r, 4 * self.n * self.n)) for r in self._ech.rows()]

    def __contains__(self, A: QMatrix) -> bool:
        return contains_mat(self, A)

    def __eq__(self, other):
        if not isinstance(other, RealSpan):
            return NotImplemented
        return span_equal(self, other)

    __hash__ = None

    def __repr__(self):
        return f"RealSpan(n={self.n}, dim={self.dim})"


def span_of(mats: Iterable[QMatrix], n: Optional[int] = None) -> RealSpan:
    mats = list(mats)
    if n is None:
        if not mats:
            raise ValueError("need n for an empty generator list")
        n = mats[0].n
    S = RealSpan(n)
    for A in mats:
        S.add(A)
    return S


def contains_mat(S: RealSpan, A: QMatrix) -> bool:
    S._check(A.n)
    return S._ech.contains(matrix_vector(A))


def span_equal(S1: RealSpan, S2: RealSpan) -> bool:
    S1._check(S2.n)
    return S1._ech.key() == S2._ech.key()


def dim(S: RealSpan) -> int:
    return S.dim


def within(S: RealSpan, ambient: RealSpan) -> bool:
    ambient._check(S.n)
    return all(ambient._ech.contains(r) for r in S._ech.rows())


def is_product_closed(S: RealSpan) -> bool:
    """True iff products of basis elements fall back into the span."""
    B = S.basis()
    return all(contains_mat(S, mmul(X, Y)) for X in B for Y in B)


def _closure(gens: Sequence[QMatrix], scalar_mode: str, ambient: Optional[RealSpan] = None,
             max_rounds: Optional[int] = None):
    """Semi-naive closure iteration.

    Returns ``(span, escaped)``. With ``ambient`` given, stops as soon as an
    element outside it is produced and reports ``escaped=True``.
    """
    if scalar_mode not in SCALAR_MODES:
        raise ValueError(f"scalar mode must be one of {SCALAR_MODES}")
    gens = list(gens)
    if not gens:
        raise ValueError("need at least one generator")
    n = gens[0].n
    span = RealSpan(n)
    elems: list[QMatrix] = []

    def push(A: QMatrix, fresh: list) -> bool:
        if span.add(A):
            if ambient is not None and not contains_mat(ambient, A):
                return True
            elems.append(A)
            fresh.append(A)
        return False

    fresh: list[QMatrix] = []
    for A in gens:
        if push(A, fresh):
            return span, True

    cap = max_rounds if max_rounds is not None else 4 * n * n
    rounds = 0
    while fresh:
        rounds += 1
        if rounds > cap + 1:
            raise RuntimeError("closure did not stabilise within the dimension bound")
        new: list[QMatrix] = []
        if scalar_mode == "H":
            for A in fresh:
                for u in (I, J, K):
                    if push(lscale(u, A), new):
                        return span, True
        # every pair of elements is multiplied once, in the round where the
        # later of the two is fresh
        current = list(elems)
        for A in fresh:
            for B in current:
                for P in (mmul(A, B), mmul(B, A)):
                    if push(P, new):
                        return span, True
        fresh = new
    return span, False


def left_algebra_closure(gens: Sequence[QMatrix], scalar_mode: str = "R") -> RealSpan:
    """Smallest span containing ``gens`` closed under products and left scalars.

    ``scalar_mode`` is ``"R"`` (real scalars) or ``"H"`` (left multiplication
    by any quaternion).
    """
    span, _ = _closure(gens, scalar_mode)
    return span
