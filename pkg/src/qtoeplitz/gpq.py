"""The left algebras G_{p,q}[A] of Toeplitz matrices.

``G_{p,q}[A]`` is the set of Toeplitz matrices with every diagonal parameter
in the subalgebra ``A`` and ``p alpha_{r-n} = q alpha_r`` for ``r = 1..n-1``,
where ``p, q`` commute with everything in ``A``. Circulants are ``(1, 1)``,
upper-triangular Toeplitz matrices ``(0, 1)``, lower-triangular ``(1, 0)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .qmat import lscale, mmul
from .quat import ZERO, Quaternion, as_quat, format_quat, qmul
from .sampling import random_combination, random_quat, random_rational, random_toeplitz, trial_rng
from .spanengine import RealSpan, _closure, is_product_closed, span_equal, span_of
from .subalg import (
    FULL,
    SubalgebraH,
    commutant_of_algebra,
    commutant_of_set,
    contains,
    is_subalgebra,
    real_basis,
)
from .linalg import nullspace
from .toeplitz import ToeplitzQ, from_dense, is_toeplitz, to_dense

MAX_FALSIFY_N = 4


class InvalidSpec(ValueError):
    pass


@dataclass(frozen=True)
class GpqSpec:
    n: int
    algebra: SubalgebraH
    p: Quaternion
    q: Quaternion

    def __post_init__(self):
        object.__setattr__(self, "p", as_quat(self.p))
        object.__setattr__(self, "q", as_quat(self.q))
        if self.n < 1:
            raise InvalidSpec("n must be positive")
        if not self.p and not self.q:
            # no constraint at all: the whole Toeplitz space, which is not product-closed
            raise InvalidSpec("p and q cannot both be zero")
        comm = commutant_of_algebra(self.algebra)
        for name, x in (("p", self.p), ("q", self.q)):
            if not contains(comm, x):
                raise InvalidSpec(f"{name} = {x} does not commute with {self.algebra}")

    @property
    def scalar_mode(self) -> str:
        """Left scalars that keep entries inside the algebra."""
        return "H" if self.algebra == FULL else "R"

    def label(self) -> str:
        return f"n={self.n} A={self.algebra} p={format_quat(self.p)} q={format_quat(self.q)}"

    def to_json(self) -> dict:
        return {"n": self.n, "algebra": str(self.algebra),
                "p": format_quat(self.p), "q": format_quat(self.q)}


def is_valid_spec(n: int, algebra: SubalgebraH, p, q) -> bool:
    try:
        GpqSpec(n, algebra, p, q)
    except InvalidSpec:
        return False
    return True


def is_member(T: ToeplitzQ, spec: GpqSpec) -> bool:
    if T.n != spec.n:
        raise ValueError(f"size mismatch: {T.n} vs {spec.n}")
    if not all(contains(spec.algebra, a) for a in T.params):
        return False
    n, p, q = spec.n, spec.p, spec.q
    return all(qmul(p, T.alpha(r - n)) == qmul(q, T.alpha(r)) for r in range(1, n))


def pair_solutions(spec: GpqSpec) -> list[tuple[Quaternion, Quaternion]]:
    """Real basis of ``{(a, b) in A x A : p a = q b}``."""
    E = real_basis(spec.algebra)
    d = len(E)
    cols = [list(qmul(spec.p, e)) for e in E] + [list(-qmul(spec.q, e)) for e in E]
    rows = [[col[r] for col in cols] for r in range(4)]
    out = []
    for v in nullspace(rows, 2 * d):
        a = sum((E[t] * v[t] for t in range(d)), ZERO)
        b = sum((E[t] * v[d + t] for t in range(d)), ZERO)
        out.append((a, b))
    return out


def basis(spec: GpqSpec) -> list[ToeplitzQ]:
    """Real basis of G_{p,q}[A].

    The free main diagonal contributes one element per basis vector of ``A``;
    each diagonal pair ``(r - n, r)`` contributes the solutions of ``p a = q b``.
    """
    n = spec.n
    out = [ToeplitzQ.from_diagonals(n, {0: e}) for e in real_basis(spec.algebra)]
    pairs = pair_solutions(spec)
    for r in range(1, n):
        for a, b in pairs:
            out.append(ToeplitzQ.from_diagonals(n, {r - n: a, r: b}))
    return out


def gspan(spec: GpqSpec) -> RealSpan:
    return span_of([to_dense(T) for T in basis(spec)], spec.n)


def toeplitz_span(n: int, algebra: SubalgebraH = FULL) -> RealSpan:
    """Span of T_n[A]: Toeplitz matrices with every parameter in ``A``."""
    mats = [
        to_dense(ToeplitzQ.from_diagonals(n, {k: e}))
        for k in range(1 - n, n)
        for e in real_basis(algebra)
    ]
    return span_of(mats, n)


def product_closed(spec: GpqSpec) -> bool:
    """Full rank test: every product of basis elements lies in the span."""
    return is_product_closed(gspan(spec))


def random_member(rng, spec: GpqSpec, gbasis: Optional[list] = None) -> ToeplitzQ:
    return random_combination(rng, gbasis if gbasis is not None else basis(spec))


@dataclass
class ClosureReport:
    spec: GpqSpec
    trials: int
    passed: int = 0
    scalar_mode: str = "R"
    failure: Optional[dict] = None

    @property
    def ok(self) -> bool:
        return self.failure is None and self.passed == self.trials

    def to_json(self) -> dict:
        return {"spec": self.spec.to_json(), "trials": self.trials, "passed": self.passed,
                "scalar_mode": self.scalar_mode, "failure": self.failure}


def closure_check(spec: GpqSpec, trials: int, seed: int) -> ClosureReport:
    """Sampled closure: products and left scalar multiples of random members stay in G."""
    gb = basis(spec)
    report = ClosureReport(spec, trials, scalar_mode=spec.scalar_mode)
    stream = "closure:" + spec.label()
    for t in range(trials):
        rng = trial_rng(seed, stream, t)
        A = random_member(rng, spec, gb)
        B = random_member(rng, spec, gb)
        c = random_quat(rng) if spec.scalar_mode == "H" else Quaternion(random_rational(rng))
        P = mmul(to_dense(A), to_dense(B))
        problem = None
        if not is_toeplitz(P):
            problem = "product is not Toeplitz"
        else:
            PT = from_dense(P)
            if not all(contains(spec.algebra, a) for a in PT.params):
                problem = "product has entries outside the algebra"
            elif not is_member(PT, spec):
                problem = "product violates the defining relation"
            elif not is_member(from_dense(lscale(c, to_dense(A))), spec):
                problem = "left scalar multiple left the family"
        if problem:
            report.failure = {
                "trial": t, "reason": problem,
                "A": [format_quat(a) for a in A.params],
                "B": [format_quat(b) for b in B.params],
                "scalar": format_quat(c),
            }
            break
        report.passed += 1
    return report


def _same_ambient(s1: GpqSpec, s2: GpqSpec) -> None:
    if s1.n != s2.n or s1.algebra != s2.algebra:
        raise ValueError("specs must share n and the algebra")


def equality_criterion(s1: GpqSpec, s2: GpqSpec) -> bool:
    """``p q2 == p2 q``, multiplied in that written order."""
    _same_ambient(s1, s2)
    return qmul(s1.p, s2.q) == qmul(s2.p, s1.q)


def sets_equal(s1: GpqSpec, s2: GpqSpec) -> bool:
    """Ground truth: the two families have the same real span."""
    _same_ambient(s1, s2)
    return span_equal(gspan(s1), gspan(s2))


def witness_matrix(spec: GpqSpec) -> ToeplitzQ:
    """Zero diagonal, ``p`` on every subdiagonal, ``q`` on every superdiagonal."""
    n = spec.n
    diags = {k: spec.p for k in range(1, n)}
    diags.update({-k: spec.q for k in range(1, n)})
    return ToeplitzQ.from_diagonals(n, diags)


def maximality_criterion(spec: GpqSpec) -> bool:
    """``{p, q}' == A``."""
    return commutant_of_set([spec.p, spec.q]) == spec.algebra


@dataclass(frozen=True)
class Counterexample:
    spec: GpqSpec
    ambient: str
    trial: int
    source: str
    X: ToeplitzQ
    g_dim: int
    closure_dim: int

    def to_json(self) -> dict:
        return {
            "spec": self.spec.to_json(), "ambient": self.ambient, "trial": self.trial,
            "source": self.source, "X": [format_quat(a) for a in self.X.params],
            "g_dim": self.g_dim, "closure_dim": self.closure_dim,
        }


def enlargement(spec: GpqSpec) -> Optional[SubalgebraH]:
    """``{p, q}'`` when it strictly contains A, else None."""
    E = commutant_of_set([spec.p, spec.q])
    if E != spec.algebra and is_subalgebra(spec.algebra, E):
        return E
    return None


def maximality_falsify(spec: GpqSpec, ambient: str, trials: int, seed: int,
                       max_n: int = MAX_FALSIFY_N) -> Optional[Counterexample]:
    """Search for a left algebra strictly between G_{p,q}[A] and the ambient Toeplitz space.

    ``ambient`` is ``"A"`` (T_n[A]) or ``"H"`` (T_n[H]). Each trial picks a
    Toeplitz ``X`` outside G and closes ``G + {X}`` under products and left
    scalars; a closure that never leaves the ambient space is a witness
    against maximality. Even trials draw ``X`` from G_{p,q}[{p,q}'] when that
    family is larger and fits in the ambient space; the rest draw from the
    ambient space itself.
    """
    if spec.n > max_n:
        raise ValueError(f"n={spec.n} exceeds the falsification bound {max_n}")
    if ambient not in ("A", "H"):
        raise ValueError("ambient must be 'A' or 'H'")
    amb_alg = spec.algebra if ambient == "A" else FULL
    amb_span = toeplitz_span(spec.n, amb_alg)
    gb = basis(spec)
    gdense = [to_dense(T) for T in gb]
    g_dim = len(gb)
    E = enlargement(spec)
    big = None
    if E is not None and is_subalgebra(E, amb_alg):
        big = GpqSpec(spec.n, E, spec.p, spec.q)
        big_basis = basis(big)
    stream = f"falsify:{ambient}:" + spec.label()
    for t in range(trials):
        rng = trial_rng(seed, stream, t)
        if big is not None and t % 2 == 0:
            source = "enlargement"
            X = random_member(rng, big, big_basis)
        else:
            source = "ambient"
            X = random_toeplitz(rng, spec.n, amb_alg)
        if is_member(X, spec):
            continue
        span, escaped = _closure(gdense + [to_dense(X)], spec.scalar_mode, ambient=amb_span)
        if not escaped and span.dim > g_dim:
            return Counterexample(spec, ambient, t, source, X, g_dim, span.dim)
    return None
