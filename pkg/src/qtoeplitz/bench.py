"""Structured (2n-1 parameters) versus dense (n^2 entries) Toeplitz matvec."""

from __future__ import annotations

import time
from dataclasses import asdict, dataclass

import numpy as np

from . import qmat
from .sampling import random_quats, random_toeplitz, trial_rng
from .toeplitz import (
    dense_float, dense_matvec_float, matvec, matvec_float, matvec_float_fft, params_to_float, to_dense,
    vector_to_float,
)

BENCH_SIZES = (64, 256, 1024)
FLOAT_TOL = 1e-9


@dataclass
class SizeTiming:
    n: int
    structured_s: float
    dense_s: float
    ratio: float  # dense / structured
    fft_s: float
    fft_ratio: float  # dense / fft
    params_stored: int
    entries_stored: int
    storage_ratio: float  # (2n - 1) / n^2
    max_abs_diff: float


@dataclass
class ExactCheck:
    n: int
    exact_structured_equals_dense: bool
    float_max_abs_err: float

    @property
    def ok(self) -> bool:
        return self.exact_structured_equals_dense and self.float_max_abs_err <= FLOAT_TOL


def _best(fn, reps: int) -> float:
    best = float("inf")
    for _ in range(reps):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def time_size(n: int, reps: int, seed: int) -> SizeTiming:
    rng = np.random.Generator(np.random.PCG64(np.random.SeedSequence(entropy=seed, spawn_key=(n,))))
    params = rng.standard_normal((2 * n - 1, 4))
    v = rng.standard_normal((n, 4))
    A = dense_float(params)
    structured = matvec_float(params, v)
    dense = dense_matvec_float(A, v)
    ts = _best(lambda: matvec_float(params, v), reps)
    td = _best(lambda: dense_matvec_float(A, v), reps)
    tf = _best(lambda: matvec_float_fft(params, v), reps)
    return SizeTiming(
        n=n,
        structured_s=ts,
        dense_s=td,
        ratio=td / ts if ts > 0 else float("inf"),
        fft_s=tf,
        fft_ratio=td / tf if tf > 0 else float("inf"),
        params_stored=2 * n - 1,
        entries_stored=n * n,
        storage_ratio=(2 * n - 1) / (n * n),
        max_abs_diff=float(max(np.max(np.abs(structured - dense)),
                               np.max(np.abs(matvec_float_fft(params, v) - dense)))),
    )


def exact_check(n: int, seed: int, trials: int = 5) -> ExactCheck:
    """Structured exact matvec vs dense exact matvec, and the float path vs both."""
    same = True
    err = 0.0
    for t in range(trials):
        rng = trial_rng(seed, f"bench.exact:{n}", t)
        T = random_toeplitz(rng, n)
        v = tuple(random_quats(rng, n))
        exact = matvec(T, v)
        same &= exact == qmat.matvec(to_dense(T), v)
        p, fv, ref = params_to_float(T), vector_to_float(v), vector_to_float(exact)
        for kernel in (matvec_float, matvec_float_fft):
            err = max(err, float(np.max(np.abs(kernel(p, fv) - ref))))
    return ExactCheck(n, same, err)


def run_bench(sizes=BENCH_SIZES, reps: int = 5, seed: int = 42, exact_sizes=range(1, 9)) -> dict:
    timings = [time_size(n, reps, seed) for n in sizes]
    exact = [exact_check(n, seed) for n in exact_sizes]
    return {
        "sizes": [asdict(t) for t in timings],
        "exact": [dict(asdict(e), ok=e.ok) for e in exact],
        "float_tolerance": FLOAT_TOL,
        "ok": all(e.ok for e in exact) and all(t.max_abs_diff <= 1e-6 * t.n for t in timings),
    }


def format_bench(report: dict) -> str:
    lines = [f"{'n':>6} {'structured':>12} {'dense':>12} {'ratio':>8} {'fft':>12} {'ratio':>8}  storage"]
    for t in report["sizes"]:
        lines.append(
            f"{t['n']:>6} {t['structured_s'] * 1e3:>10.3f}ms {t['dense_s'] * 1e3:>10.3f}ms "
            f"{t['ratio']:>8.2f} {t['fft_s'] * 1e3:>10.3f}ms {t['fft_ratio']:>8.2f}  "
            f"{t['params_stored']}/{t['entries_stored']} = {t['storage_ratio']:.2e}"
        )
    bad = [e["n"] for e in report["exact"] if not e["ok"]]
    lines.append("exact path n<=8: " + ("ok" if not bad else f"mismatch at n={bad}"))
    return "\n".join(lines)
