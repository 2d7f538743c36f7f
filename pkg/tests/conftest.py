import random
from math import gcd

import pytest

from toruscurves import Scheme, new_scheme


def random_nonzero_scheme(rng: random.Random, n: int, hi: int = 12) -> Scheme:
    k = n * (n - 1) // 2
    pool = [x for x in range(-hi, hi + 1) if x != 0]
    return new_scheme(n, [rng.choice(pool) for _ in range(k)])


def random_vector_scheme(rng: random.Random, n: int, qmax: int = 6,
                         distinct: bool = False) -> Scheme:
    """Scheme read off an actual system of primitive vectors (always
    realizable on the torus)."""
    vecs = []
    seen = set()
    while len(vecs) < n:
        p, q = rng.randint(-qmax, qmax), rng.randint(-qmax, qmax)
        if (p, q) == (0, 0) or gcd(abs(p), abs(q)) != 1:
            continue
        if distinct:
            key = (p, q) if q > 0 or (q == 0 and p > 0) else (-p, -q)
            if key in seen:
                continue
            seen.add(key)
        vecs.append((p, q))
    entries = [
        vecs[i][0] * vecs[j][1] - vecs[j][0] * vecs[i][1]
        for j in range(1, n)
        for i in range(j)
    ]
    return new_scheme(n, entries)


def random_permutation(rng: random.Random, n: int):
    sigma = list(range(1, n + 1))
    rng.shuffle(sigma)
    return tuple(sigma)


@pytest.fixture
def rng() -> random.Random:
    return random.Random(0xC0FFEE)
