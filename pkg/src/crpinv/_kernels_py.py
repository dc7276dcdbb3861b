"""Pure numpy fallback kernels.

Mirrors the compiled module in ``_kernels_c.pyx``: same pivot choices,
same rotation order, same convergence rules.  The two backends agree to
rounding because the elementwise update formulas are identical; only
summation order inside dot products differs.
"""

from __future__ import annotations

import math

import numpy as np


def rref_float_in_place(a: np.ndarray, tol: float, max_rank: int) -> list:
    """Reduce ``a`` (float64, C-contiguous) to RREF in place.

    Partial pivoting on the largest remaining entry of each column.  A
    subcolumn whose largest entry is at most ``tol`` is flushed to zero
    and the column is skipped, and no more than ``max_rank`` pivots are
    accepted; the caller supplies both so rank policy lives in one
    place.  Eliminated entries are set to exact zeros.  Returns the
    pivot column indices.
    """
    m, n = a.shape
    pivots = []
    row = 0
    for col in range(n):
        if row == m or len(pivots) == max_rank:
            break
        sub = np.abs(a[row:, col])
        p = row + int(np.argmax(sub))
        if abs(a[p, col]) <= tol:
            a[row:, col] = 0.0
            continue
        if p != row:
            a[[row, p]] = a[[p, row]]
        a[row] /= a[row, col]
        a[row, col] = 1.0
        for i in range(m):
            if i != row and a[i, col] != 0.0:
                a[i] -= a[i, col] * a[row]
                a[i, col] = 0.0
        pivots.append(col)
        row += 1
    if row < m:
        a[row:] = 0.0
    return pivots


def jacobi_orthogonalize(wt: np.ndarray, vt: np.ndarray, max_sweeps: int, tol: float) -> int:
    """One-sided Jacobi on the rows of ``wt``.

    Rows of ``wt`` are the vectors being orthogonalized (the transposed
    layout keeps each vector contiguous).  ``vt`` starts as the identity
    and receives the same rotations, so on exit ``vt[j]`` is the j-th
    right singular vector.  Returns the number of sweeps used, or -1 if
    the budget ran out before a clean sweep.
    """
    k = wt.shape[0]
    for sweep in range(max_sweeps):
        sq = np.einsum("ij,ij->i", wt, wt)
        rotated = False
        for p in range(k - 1):
            for q in range(p + 1, k):
                alpha = sq[p]
                beta = sq[q]
                gamma = float(np.dot(wt[p], wt[q]))
                if abs(gamma) <= tol * math.sqrt(alpha) * math.sqrt(beta):
                    continue
                zeta = (beta - alpha) / (2.0 * gamma)
                sign = 1.0 if zeta >= 0.0 else -1.0
                t = sign / (abs(zeta) + math.sqrt(1.0 + zeta * zeta))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = c * t
                wp = wt[p].copy()
                wt[p] = c * wp - s * wt[q]
                wt[q] = s * wp + c * wt[q]
                vp = vt[p].copy()
                vt[p] = c * vp - s * vt[q]
                vt[q] = s * vp + c * vt[q]
                sq[p] = alpha - t * gamma
                sq[q] = beta + t * gamma
                rotated = True
        if not rotated:
            return sweep + 1
    return -1
