"""Shared fixtures: seeded generators and forced-rank matrix factories."""

import numpy as np
import pytest

from crpinv import rank, rational_matrix


@pytest.fixture
def rng():
    return np.random.default_rng(20260822)


def haar_columns(m, k, rng):
    """m×k matrix with orthonormal columns, Haar-distributed."""
    q, _ = np.linalg.qr(rng.standard_normal((m, k)))
    return q


@pytest.fixture
def rational_rank_factory(rng):
    """Integer-entried rational matrices of a requested exact rank.

    Builds an outer product of small integer factors and retries until
    the exact rank matches, which it almost always does on the first
    draw.
    """

    def build(m, n, r):
        if r == 0:
            return rational_matrix(np.zeros((m, n), dtype=int))
        for _ in range(50):
            left = rng.integers(-4, 5, (m, r))
            right = rng.integers(-4, 5, (r, n))
            a = rational_matrix(left @ right)
            if rank(a) == r:
                return a
        raise RuntimeError("could not hit rank %d for shape (%d, %d)" % (r, m, n))

    return build


@pytest.fixture
def float_rank_factory(rng):
    """Well-conditioned rank-r float matrices.

    The leading r columns are orthonormal, so the column selection made
    by the factorization is never close to a rank decision boundary.
    """

    def build(m, n, r):
        if r == 0:
            return np.zeros((m, n))
        tail = rng.standard_normal((r, n - r)) if n > r else np.zeros((r, 0))
        return haar_columns(m, r, rng) @ np.concatenate([np.eye(r), tail], axis=1)

    return build


@pytest.fixture
def tame_factor_factory(rng):
    """Rank-r m×k float factors with singular values inside [1, 3]."""

    def build(m, k, r):
        if r == 0:
            return np.zeros((m, k))
        s = rng.uniform(1.0, 3.0, r)
        return (haar_columns(m, r, rng) * s) @ haar_columns(k, r, rng).T

    return build
