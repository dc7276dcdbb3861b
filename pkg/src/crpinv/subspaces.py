"""Bases for the four fundamental subspaces, and rank-based space tests.

Column space, row space, nullspace and left nullspace all read off the
RREF: pivot columns of A span C(A), nonzero RREF rows span the row
space, the special solutions span N(A), and N(Aᵀ) is the nullspace of
the transpose.  Space comparisons never project; they use the rank
criterion rank([Y X]) = rank(Y), which stays exact over rationals.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .elimination import rank, rref
from .errors import ShapeError
from .matrices import FLOAT, domain_of, zeros


class SubspaceKind(enum.Enum):
    COLUMN_SPACE = "column_space"
    ROW_SPACE = "row_space"
    NULLSPACE = "nullspace"
    LEFT_NULLSPACE = "left_nullspace"


@dataclass(frozen=True)
class SubspaceBasis:
    """Columns of ``basis`` span one fundamental subspace of a matrix.

    ``ambient_dim`` is the dimension of the containing space: m for the
    column space and left nullspace, n for the row space and nullspace.
    """

    kind: SubspaceKind
    basis: np.ndarray
    ambient_dim: int


def subspace_basis(a: np.ndarray, kind: SubspaceKind) -> SubspaceBasis:
    """Basis for the requested fundamental subspace of ``a``."""
    kind = SubspaceKind(kind)
    m, n = a.shape
    if kind is SubspaceKind.LEFT_NULLSPACE:
        inner = subspace_basis(a.T.copy(), SubspaceKind.NULLSPACE)
        return SubspaceBasis(kind=kind, basis=inner.basis, ambient_dim=m)
    red = rref(a)
    if kind is SubspaceKind.COLUMN_SPACE:
        basis = a[:, list(red.pivot_cols)].copy()
        return SubspaceBasis(kind=kind, basis=basis, ambient_dim=m)
    if kind is SubspaceKind.ROW_SPACE:
        basis = red.rref[: red.rank].T.copy()
        return SubspaceBasis(kind=kind, basis=basis, ambient_dim=n)
    return SubspaceBasis(kind=kind, basis=_special_solutions(red, n, domain_of(a)), ambient_dim=n)


def _special_solutions(red, n: int, domain: str) -> np.ndarray:
    """Nullspace basis from the RREF: one column per free variable.

    Free variable j gets value 1, the other free variables 0, and each
    pivot variable the negated RREF entry in column j.
    """
    pivots = list(red.pivot_cols)
    free = [j for j in range(n) if j not in set(pivots)]
    basis = zeros(n, len(free), domain)
    one = 1.0 if domain == FLOAT else Fraction(1)
    for col_idx, j in enumerate(free):
        basis[j, col_idx] = one
        for i, pcol in enumerate(pivots):
            basis[pcol, col_idx] = -red.rref[i, j]
    return basis


def same_column_space(a: np.ndarray, b: np.ndarray) -> bool:
    """True iff C(a) = C(b), by the rank criterion on [a b]."""
    if a.shape[0] != b.shape[0]:
        raise ShapeError(
            "row counts differ: %d vs %d" % (a.shape[0], b.shape[0])
        )
    ra = rank(a)
    rb = rank(b)
    if ra != rb:
        return False
    return rank(np.hstack([a, b])) == ra


def column_space_contains(y: np.ndarray, x: np.ndarray) -> bool:
    """True iff C(x) ⊆ C(y), i.e. rank([y x]) = rank(y)."""
    if y.shape[0] != x.shape[0]:
        raise ShapeError(
            "row counts differ: %d vs %d" % (y.shape[0], x.shape[0])
        )
    return rank(np.hstack([y, x])) == rank(y)
