# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: float RREF and one-sided Jacobi sweeps.

Behavioral twin of ``_kernels_py``; keep pivot choices, rotation order
and convergence rules in lockstep with that module.
"""

from libc.math cimport fabs, sqrt

import numpy as np


def rref_float_in_place(double[:, ::1] a, double tol, Py_ssize_t max_rank):
    """Reduce ``a`` to RREF in place; returns the pivot column indices.

    Subcolumns whose largest entry is at most ``tol`` are flushed; at
    most ``max_rank`` pivots are accepted.  Rank policy belongs to the
    caller.
    """
    cdef Py_ssize_t m = a.shape[0]
    cdef Py_ssize_t n = a.shape[1]
    cdef Py_ssize_t row = 0, col, i, j, p, npiv = 0
    cdef double best, mag, f, piv
    pivots = []
    for col in range(n):
        if row == m or npiv == max_rank:
            break
        p = row
        best = fabs(a[row, col])
        for i in range(row + 1, m):
            mag = fabs(a[i, col])
            if mag > best:
                best = mag
                p = i
        if best <= tol:
            for i in range(row, m):
                a[i, col] = 0.0
            continue
        if p != row:
            for j in range(n):
                f = a[row, j]
                a[row, j] = a[p, j]
                a[p, j] = f
        piv = a[row, col]
        for j in range(n):
            a[row, j] /= piv
        a[row, col] = 1.0
        for i in range(m):
            if i != row and a[i, col] != 0.0:
                f = a[i, col]
                for j in range(n):
                    a[i, j] -= f * a[row, j]
                a[i, col] = 0.0
        pivots.append(col)
        npiv += 1
        row += 1
    for i in range(row, m):
        for j in range(n):
            a[i, j] = 0.0
    return pivots


def jacobi_orthogonalize(double[:, ::1] wt, double[:, ::1] vt, int max_sweeps, double tol):
    """One-sided Jacobi on the rows of ``wt``, mirrored into ``vt``.

    Returns sweeps used, or -1 when the budget ran out.
    """
    cdef Py_ssize_t k = wt.shape[0]
    cdef Py_ssize_t m = wt.shape[1]
    cdef Py_ssize_t kv = vt.shape[1]
    cdef Py_ssize_t sweep, p, q, i
    cdef double alpha, beta, gamma, zeta, t, c, s, xp, xq, acc, sign
    cdef int rotated
    sq_arr = np.empty(k, dtype=np.float64)
    cdef double[::1] sq = sq_arr
    for sweep in range(max_sweeps):
        for p in range(k):
            acc = 0.0
            for i in range(m):
                acc += wt[p, i] * wt[p, i]
            sq[p] = acc
        rotated = 0
        for p in range(k - 1):
            for q in range(p + 1, k):
                alpha = sq[p]
                beta = sq[q]
                gamma = 0.0
                for i in range(m):
                    gamma += wt[p, i] * wt[q, i]
                if fabs(gamma) <= tol * sqrt(alpha) * sqrt(beta):
                    continue
                zeta = (beta - alpha) / (2.0 * gamma)
                sign = 1.0 if zeta >= 0.0 else -1.0
                t = sign / (fabs(zeta) + sqrt(1.0 + zeta * zeta))
                c = 1.0 / sqrt(1.0 + t * t)
                s = c * t
                for i in range(m):
                    xp = wt[p, i]
                    xq = wt[q, i]
                    wt[p, i] = c * xp - s * xq
                    wt[q, i] = s * xp + c * xq
                for i in range(kv):
                    xp = vt[p, i]
                    xq = vt[q, i]
                    vt[p, i] = c * xp - s * xq
                    vt[q, i] = s * xp + c * xq
                sq[p] = alpha - t * gamma
                sq[q] = beta + t * gamma
                rotated = 1
        if not rotated:
            return sweep + 1
    return -1
