"""CR factorization: A = C · R from the reduced row echelon form.

C keeps the first r independent columns of A as they appear; R is the
nonzero rows of rref(A).  Both factors are full rank by construction,
which is what makes the reverse-order pseudoinverse law applicable.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .elimination import rank, rref
from .matrices import domain_of, identity, zeros


@dataclass(frozen=True)
class CrFactorization:
    """``c`` (m×r) times ``r_factor`` (r×n) reproduces the input.

    ``pivot_cols`` are the indices of the independent columns collected
    into ``c``; the same columns of ``r_factor`` form an identity.
    """

    c: np.ndarray
    r_factor: np.ndarray
    rank: int
    pivot_cols: tuple

    @property
    def product(self) -> np.ndarray:
        from .matrices import mmul

        return mmul(self.c, self.r_factor)


def cr_factorize(a: np.ndarray) -> CrFactorization:
    """Factor ``a`` into its first independent columns times its RREF rows.

    A rank-0 input yields an m×0 by 0×n pair whose product is the zero
    matrix.
    """
    red = rref(a)
    c = a[:, list(red.pivot_cols)].copy()
    r_factor = red.rref[: red.rank].copy()
    return CrFactorization(
        c=c, r_factor=r_factor, rank=red.rank, pivot_cols=red.pivot_cols
    )


def complete_to_generalized(a: np.ndarray):
    """Extend the CR factors of ``a`` to square invertible matrices.

    Returns ``(c0, c1, r0, r1)`` where ``[c0 c1]`` is m×m invertible,
    ``[r0; r1]`` is n×n invertible, and ``c0``, ``r0`` are the CR
    factors.  Completion vectors are standard basis vectors, greedily
    taken in index order whenever they enlarge the rank.
    """
    f = cr_factorize(a)
    dom = domain_of(a)
    m, n = a.shape
    eye_m = identity(m, dom)
    eye_n = identity(n, dom)
    c1 = _complete_columns(f.c, eye_m)
    r1 = _complete_columns(f.r_factor.T.copy(), eye_n).T.copy()
    return f.c, c1, f.r_factor, r1


def _complete_columns(base: np.ndarray, eye: np.ndarray) -> np.ndarray:
    """Standard basis columns that extend ``base`` to a square invertible matrix."""
    m = base.shape[0]
    current = base
    have = rank(current)
    picked = []
    for i in range(m):
        if have == m:
            break
        cand = np.hstack([current, eye[:, i : i + 1]])
        cand_rank = rank(cand)
        if cand_rank > have:
            current = cand
            have = cand_rank
            picked.append(i)
    return eye[:, picked].copy() if picked else zeros(m, 0, domain_of(base))
