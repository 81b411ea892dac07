"""Exact rational elimination: incremental echelon bases and null spaces.

Vectors are sparse ``{index: mpq}`` dicts holding only nonzero entries.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from gmpy2 import mpq


def sparse(v: Sequence) -> dict:
    return {k: mpq(x) for k, x in enumerate(v) if x}


def dense(v: dict, dim: int) -> list:
    out = [mpq(0)] * dim
    for k, x in v.items():
        out[k] = x
    return out


class Echelon:
    """Fully reduced row-echelon basis of a rational subspace, built incrementally.

    Each stored row has a leading 1 at its pivot and zeros at every other
    pivot, so the stored form is canonical for the subspace.
    """

    __slots__ = ("dim", "_rows")

    def __init__(self, dim: int):
        self.dim = dim
        self._rows: dict[int, dict] = {}

    def __len__(self) -> int:
        return len(self._rows)

    def copy(self) -> "Echelon":
        e = Echelon(self.dim)
        e._rows = {p: dict(r) for p, r in self._rows.items()}
        return e

    def reduce(self, v: dict) -> dict:
        """Residual of ``v`` after eliminating every pivot; empty iff ``v`` is in the span."""
        v = dict(v)
        for p, row in self._rows.items():
            c = v.get(p)
            if not c:
                continue
            for k, x in row.items():
                nv = v.get(k, 0) - c * x
                if nv:
                    v[k] = nv
                else:
                    v.pop(k, None)
        return v

    def contains(self, v: dict) -> bool:
        return not self.reduce(v)

    def add(self, v: dict) -> bool:
        """Insert ``v``; returns False if it was already in the span."""
        r = self.reduce(v)
        if not r:
            return False
        p = min(r)
        c = r[p]
        r = {k: x / c for k, x in r.items()}
        for row in self._rows.values():
            f = row.get(p)
            if f:
                for k, x in r.items():
                    nv = row.get(k, 0) - f * x
                    if nv:
                        row[k] = nv
                    else:
                        row.pop(k, None)
        self._rows[p] = r
        return True

    def rows(self) -> list[dict]:
        return [self._rows[p] for p in sorted(self._rows)]

    def key(self) -> tuple:
        return tuple((p, tuple(sorted(self._rows[p].items()))) for p in sorted(self._rows))


def rank(vectors: Iterable[Sequence]) -> int:
    vectors = list(vectors)
    if not vectors:
        return 0
    e = Echelon(len(vectors[0]))
    for v in vectors:
        e.add(sparse(v))
    return len(e)


def nullspace(rows: Sequence[Sequence], ncols: int) -> list[list]:
    """Basis of ``{x : rows @ x = 0}`` over the rationals."""
    e = Echelon(ncols)
    for row in rows:
        e.add(sparse(row))
    pivots = {}
    for r in e.rows():
        pivots[min(r)] = r
    basis = []
    for f in range(ncols):
        if f in pivots:
            continue
        x = [mpq(0)] * ncols
        x[f] = mpq(1)
        for p, r in pivots.items():
            c = r.get(f)
            if c:
                x[p] = -c
        basis.append(x)
    return basis
