"""Reduced row echelon form and rank.

Two paths share one contract:

* rational matrices reduce with exact Fraction arithmetic, pivoting on
  the first nonzero entry of each column;
* float matrices reduce in the compiled (or fallback) kernel with
  partial pivoting; the flush tolerance and the pivot budget both come
  from the SVD (``max(m, n) * eps * sigma_1`` and the numerical rank),
  so the elimination cannot disagree with the module's rank rule.
  Plain elimination thresholds are growth-sensitive and misjudge
  numerically rank-deficient inputs, which poisons every downstream
  formula that inverts a Gram matrix.

The rational path optionally records every elementary row operation, so
a reduction can be undone exactly; that is the basis of the
reversibility test rather than a user-facing feature.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import kernels
from .matrices import FLOAT, RATIONAL, domain_of


@dataclass(frozen=True)
class RrefResult:
    """Reduced matrix plus the pivot bookkeeping.

    Attributes
    ----------
    rref : np.ndarray
        The reduced row echelon form, same shape and domain as the input.
    pivot_cols : tuple[int, ...]
        Strictly increasing pivot column indices.
    rank : int
        Number of pivots.
    """

    rref: np.ndarray
    pivot_cols: tuple
    rank: int


def rref(a: np.ndarray) -> RrefResult:
    """Reduce ``a``; the input is not modified."""
    if domain_of(a) == RATIONAL:
        result, _ = rref_rational_recorded(a, record=False)
        return result
    from .svd import svd

    work = np.ascontiguousarray(a, dtype=np.float64).copy()
    oracle = svd(work)
    sigma1 = float(oracle.singular_values[0]) if oracle.singular_values.size else 0.0
    tol = max(a.shape) * np.finfo(np.float64).eps * sigma1 if a.size else 0.0
    pivots = kernels.rref_float_in_place(work, tol, oracle.numerical_rank)
    return RrefResult(rref=work, pivot_cols=tuple(pivots), rank=len(pivots))


def rref_rational_recorded(a: np.ndarray, record: bool = True):
    """Exact reduction; optionally returns the elementary operations applied.

    Operations come back as tuples: ``("swap", i, j)``,
    ``("scale", i, factor)`` and ``("addmul", i, j, factor)`` meaning
    ``row[i] += factor * row[j]``.  Replaying their inverses in reverse
    order turns the RREF back into ``a`` exactly.
    """
    work = a.copy()
    m, n = work.shape
    ops = [] if record else None
    pivots = []
    row = 0
    for col in range(n):
        if row == m:
            break
        p = next((i for i in range(row, m) if work[i, col] != 0), None)
        if p is None:
            continue
        if p != row:
            work[[row, p]] = work[[p, row]]
            if record:
                ops.append(("swap", row, p))
        piv = work[row, col]
        if piv != 1:
            work[row] = work[row] / piv
            if record:
                ops.append(("scale", row, piv))
        for i in range(m):
            f = work[i, col]
            if i != row and f != 0:
                work[i] = work[i] - f * work[row]
                if record:
                    ops.append(("addmul", i, row, -f))
        pivots.append(col)
        row += 1
    result = RrefResult(rref=work, pivot_cols=tuple(pivots), rank=len(pivots))
    return result, ops


def undo_operations(reduced: np.ndarray, ops) -> np.ndarray:
    """Invert a recorded reduction: replay inverse row operations in reverse."""
    work = reduced.copy()
    for op in reversed(ops):
        if op[0] == "swap":
            _, i, j = op
            work[[i, j]] = work[[j, i]]
        elif op[0] == "scale":
            _, i, f = op
            work[i] = work[i] * f
        else:
            _, i, j, f = op
            work[i] = work[i] - f * work[j]
    return work


def rank(a: np.ndarray) -> int:
    """Rank: exact for rationals; for floats, the SVD numerical rank."""
    if domain_of(a) == RATIONAL:
        return rref(a).rank
    from .svd import svd

    return svd(a).numerical_rank
