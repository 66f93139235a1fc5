"""Shared fixtures: pinned reference seeds and a reproducible random-seed factory."""

from __future__ import annotations

import random

import pytest

from clusterclass import BaseRing, SeedMatrix, validate

# 8 exchangeable + 2 frozen rows; acyclic, mixed gcds, one even-gcd partner pair.
BIG_B = [
    [0, -3, -1, -1, 1, -1, 6, 2],
    [3, 0, 0, 0, 0, 0, 0, 0],
    [1, 0, 0, 0, 0, 0, 0, 0],
    [1, 0, 0, 0, 0, 0, 0, 0],
    [-1, 0, 0, 0, 0, 0, 0, 0],
    [1, 0, 0, 0, 0, 0, 0, 0],
    [-6, 0, 0, 0, 0, 0, 0, 0],
    [-2, 0, 0, 0, 0, 0, 0, 0],
    [0, 3, 2, 1, 0, 0, 0, 0],
    [-1, 0, 0, 0, -1, 1, 0, 0],
]

# Vertices 1 and 3 isolated; the remaining triangle-free part is 4->2, 5->2.
ISOLATED_B = [
    [0, 0, 0, 0, 0],
    [0, 0, 0, -1, -1],
    [0, 0, 0, 0, 0],
    [0, 1, 0, 0, 0],
    [0, 1, 0, 0, 0],
]

RINGS = (
    BaseRing.integers(),
    BaseRing.rationals(),
    BaseRing.algebraically_closed(),
    BaseRing.custom([4]),
    BaseRing.custom([4, 6]),
)


@pytest.fixture
def big_quiver() -> SeedMatrix:
    return validate(BIG_B, n=8, m=2)


@pytest.fixture
def isolated_seed() -> SeedMatrix:
    return validate(ISOLATED_B)


def make_random_seed(
    rng: random.Random,
    n_max: int = 8,
    m_max: int = 4,
    max_abs: int = 4,
    edge_prob: float = 0.5,
    acyclic: bool = True,
) -> SeedMatrix:
    """Random skew-symmetrizable seed with |entries| <= max_abs.

    With acyclic=True every edge is oriented along a random linear order;
    otherwise orientations are drawn freely (directed cycles allowed).
    Skew-symmetrizability comes from b_ij = a*d_j, b_ji = -a*d_i.
    """
    n = rng.randint(2, n_max)
    m = rng.randint(0, m_max)
    d = [rng.choice((1, 1, 1, 2)) for _ in range(n)]
    order = list(range(n))
    rng.shuffle(order)
    pos = {v: idx for idx, v in enumerate(order)}
    b = [[0] * n for _ in range(n + m)]
    for i in range(n):
        for j in range(i + 1, n):
            cap = max_abs // max(d[i], d[j])
            if cap < 1 or rng.random() >= edge_prob:
                continue
            a = rng.randint(1, cap)
            if acyclic:
                src, dst = (i, j) if pos[i] < pos[j] else (j, i)
            else:
                src, dst = (i, j) if rng.random() < 0.5 else (j, i)
            b[src][dst] = a * d[dst]
            b[dst][src] = -a * d[src]
    for k in range(n, n + m):
        for j in range(n):
            b[k][j] = rng.randint(-max_abs, max_abs)
    return validate(b, n=n, m=m)
