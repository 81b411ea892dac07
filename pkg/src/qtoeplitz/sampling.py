"""Seeded random inputs for the randomized checks.

Every trial gets its own generator: PCG64 seeded from
``SeedSequence(entropy=seed, spawn_key=(crc32(stream), trial))``. Reports
therefore depend only on ``(seed, stream name, trial index)``, never on the
order in which trials happen to run.
"""

from __future__ import annotations

import zlib
from typing import Sequence

import numpy as np
from gmpy2 import mpq

from .qmat import QMatrix
from .quat import ONE, ZERO, I, J, K, Quaternion, _q
from .subalg import FULL, SubalgebraH, real_basis
from .toeplitz import ToeplitzQ

ALPHABET = (mpq(0), mpq(1), mpq(-1), mpq(1, 2), mpq(-1, 2), mpq(2), mpq(-2))
VERSOR_ALPHABET = (ZERO, ONE, I, J, K)


def stream_id(name: str) -> int:
    return zlib.crc32(name.encode("utf-8"))


def trial_rng(seed: int, stream: str, trial: int = 0) -> np.random.Generator:
    ss = np.random.SeedSequence(entropy=seed, spawn_key=(stream_id(stream), trial))
    return np.random.Generator(np.random.PCG64(ss))


def random_rational(rng: np.random.Generator, alphabet: Sequence = ALPHABET) -> mpq:
    return alphabet[int(rng.integers(len(alphabet)))]


def random_quat(rng: np.random.Generator, alphabet: Sequence = ALPHABET) -> Quaternion:
    return random_quats(rng, 1, alphabet)[0]


def random_quats(rng: np.random.Generator, count: int, alphabet: Sequence = ALPHABET) -> list:
    idx = rng.integers(len(alphabet), size=(count, 4)).tolist()
    return [_q(alphabet[a], alphabet[b], alphabet[c], alphabet[d]) for a, b, c, d in idx]


def random_in(rng: np.random.Generator, A: SubalgebraH, alphabet: Sequence = ALPHABET) -> Quaternion:
    """Random element of ``A`` with alphabet coefficients on its real basis."""
    if A.kind == FULL.kind:
        return random_quat(rng, alphabet)
    acc = ZERO
    for b in real_basis(A):
        acc = acc + b * random_rational(rng, alphabet)
    return acc


def random_toeplitz(rng: np.random.Generator, n: int, A: SubalgebraH = FULL,
                    alphabet: Sequence = ALPHABET) -> ToeplitzQ:
    if A.kind == FULL.kind:
        return ToeplitzQ(n, tuple(random_quats(rng, 2 * n - 1, alphabet)))
    return ToeplitzQ(n, tuple(random_in(rng, A, alphabet) for _ in range(2 * n - 1)))


def random_dense(rng: np.random.Generator, n: int, alphabet: Sequence = ALPHABET) -> QMatrix:
    flat = random_quats(rng, n * n, alphabet)
    return QMatrix._trusted(tuple(tuple(flat[r * n:(r + 1) * n]) for r in range(n)))


def random_combination(rng: np.random.Generator, items: Sequence, alphabet: Sequence = ALPHABET):
    """Random real combination of ToeplitzQ values (all the same size)."""
    n = items[0].n
    params = [ZERO] * (2 * n - 1)
    for T in items:
        c = random_rational(rng, alphabet)
        if not c:
            continue
        params = [p + a * c for p, a in zip(params, T.params)]
    return ToeplitzQ(n, tuple(params))
