"""Unital real subalgebras of H and their commutants.

Every unital real subalgebra of H is R, a plane span{1, v} with ``v`` pure,
or H itself, so the classification is a three-way tag.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from math import gcd
from typing import Iterable, Optional

from gmpy2 import mpq

from .linalg import nullspace
from .quat import I, J, K, ONE, Quaternion, _q, as_quat, format_quat, parse_quat, qmul

REALS_KIND = "R"
PLANE_KIND = "plane"
FULL_KIND = "H"


def _cross_is_zero(u: Quaternion, v: Quaternion) -> bool:
    _, u1, u2, u3 = u
    _, v1, v2, v3 = v
    return u2 * v3 == u3 * v2 and u3 * v1 == u1 * v3 and u1 * v2 == u2 * v1


def canonical_direction(v: Quaternion) -> Quaternion:
    """Integer primitive representative of the line through the pure part of ``v``."""
    comps = [v[1], v[2], v[3]]
    if not any(comps):
        raise ValueError("plane direction must have a nonzero pure part")
    den = reduce(lambda a, b: a * b // gcd(a, b), (int(c.denominator) for c in comps), 1)
    ints = [int(c * den) for c in comps]
    g = reduce(gcd, (abs(x) for x in ints))
    ints = [x // g for x in ints]
    lead = next(x for x in ints if x)
    if lead < 0:
        ints = [-x for x in ints]
    return _q(mpq(0), *(mpq(x) for x in ints))


@dataclass(frozen=True)
class SubalgebraH:
    kind: str
    direction: Optional[Quaternion] = None

    def __post_init__(self):
        if self.kind == PLANE_KIND:
            if self.direction is None:
                raise ValueError("a plane needs a direction")
            object.__setattr__(self, "direction", canonical_direction(as_quat(self.direction)))
        elif self.kind in (REALS_KIND, FULL_KIND):
            if self.direction is not None:
                raise ValueError(f"{self.kind} takes no direction")
        else:
            raise ValueError(f"unknown subalgebra kind {self.kind!r}")

    @property
    def dim(self) -> int:
        return {REALS_KIND: 1, PLANE_KIND: 2, FULL_KIND: 4}[self.kind]

    def __contains__(self, a) -> bool:
        return contains(self, as_quat(a))

    def __str__(self) -> str:
        if self.kind == PLANE_KIND:
            return "plane:" + format_quat(self.direction).replace(" ", "")
        return self.kind

    @classmethod
    def parse(cls, text: str) -> "SubalgebraH":
        return parse_algebra(text)


REALS = SubalgebraH(REALS_KIND)
FULL = SubalgebraH(FULL_KIND)


def plane(v) -> SubalgebraH:
    return SubalgebraH(PLANE_KIND, as_quat(v))


def parse_algebra(text: str) -> SubalgebraH:
    t = text.strip()
    if t in ("R", "r"):
        return REALS
    if t in ("H", "h"):
        return FULL
    if t.lower().startswith("plane:"):
        return plane(parse_quat(t[6:]))
    raise ValueError(f"algebra must be R, H or plane:<v>, got {text!r}")


def real_basis(A: SubalgebraH) -> list[Quaternion]:
    if A.kind == REALS_KIND:
        return [ONE]
    if A.kind == PLANE_KIND:
        return [ONE, A.direction]
    return [ONE, I, J, K]


def contains(A: SubalgebraH, a: Quaternion) -> bool:
    if A.kind == FULL_KIND:
        return True
    if A.kind == REALS_KIND:
        return a.is_real()
    return _cross_is_zero(a, A.direction)


def is_subalgebra(A: SubalgebraH, B: SubalgebraH) -> bool:
    """``A`` is contained in ``B``."""
    return all(contains(B, x) for x in real_basis(A))


def _classify_pure_parts(elements: Iterable[Quaternion]):
    """Return (None, 0) if all real, (v, 1) if all pure parts are parallel to v, else (None, 2)."""
    direction = None
    for a in elements:
        if a.is_real():
            continue
        if direction is None:
            direction = a
        elif not _cross_is_zero(a, direction):
            return None, 2
    return direction, (0 if direction is None else 1)


def commutant_of_set(S: Iterable) -> SubalgebraH:
    """Quaternions commuting with every element of ``S``.

    Two quaternions commute iff their pure parts are parallel, which gives the
    closed form used here.
    """
    direction, shape = _classify_pure_parts(as_quat(a) for a in S)
    if shape == 0:
        return FULL
    if shape == 1:
        return plane(direction)
    return REALS


def commutant_of_algebra(A: SubalgebraH) -> SubalgebraH:
    if A.kind == REALS_KIND:
        return FULL
    if A.kind == FULL_KIND:
        return REALS
    return A


def generated_subalgebra(S: Iterable) -> SubalgebraH:
    """Smallest of R, span{1, v}, H containing ``S`` and 1."""
    direction, shape = _classify_pure_parts(as_quat(a) for a in S)
    if shape == 0:
        return REALS
    if shape == 1:
        return plane(direction)
    return FULL


# -- linear-system route ------------------------------------------------------


def _left_matrix(s: Quaternion) -> list[list]:
    """4x4 real matrix of ``x -> x s - s x``."""
    cols = [list(qmul(e, s) - qmul(s, e)) for e in (ONE, I, J, K)]
    return [[cols[c][r] for c in range(4)] for r in range(4)]


def commutant_basis(S: Iterable) -> list[Quaternion]:
    """Real basis of ``{x : x s = s x for all s in S}`` by solving the linear system."""
    rows = []
    for s in S:
        rows.extend(_left_matrix(as_quat(s)))
    return [_q(*v) for v in nullspace(rows, 4)]


def classify_span(basis: list[Quaternion]) -> SubalgebraH:
    """Tag a real span that is known to be a unital subalgebra."""
    if len(basis) == 4:
        return FULL
    if len(basis) == 1:
        return REALS
    if len(basis) == 2:
        return plane(next(b for b in basis if not b.is_real()))
    raise ValueError(f"a unital subalgebra of H cannot have dimension {len(basis)}")


def commutant_by_linear_system(S: Iterable) -> SubalgebraH:
    return classify_span(commutant_basis(S))
