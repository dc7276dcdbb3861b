"""Pseudoinverses built on the CR factorization, plus their verifiers.

Three routes to the Moore-Penrose pseudoinverse:

* ``pinv_reverse_order``: R⁺C⁺ for a full-rank factorization, using
  C⁺ = (CᵀC)⁻¹Cᵀ and R⁺ = Rᵀ(RRᵀ)⁻¹.  ``pinv`` applies it to the CR
  factors of an arbitrary matrix, which is the general path.
* ``pinv_rational_closed_form``: Rᵀ(CᵀARᵀ)⁻¹Cᵀ, one r×r inverse.
* ``pinv_always``: (C⁺CR)⁺(CRR⁺)⁺ for factor pairs with no rank
  assumptions at all; the reverse-order product R⁺C⁺ is wrong for such
  pairs in general, and ``check_greville`` decides exactly when.

The checkers test the four Penrose identities, Greville's column-space
inclusions, the two-sided projection equation, and the pair of demands
equivalent to the reverse-order law.  The Z-block family constructs
every generalized inverse with AGA = A from completion blocks, and the
complete-solution helpers enumerate solutions of Ax = b and A⁺b = x.

Everything is domain-generic: exact over rationals, tolerance-based
over floats.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InconsistentSystemError, ShapeError
from .factorization import CrFactorization, cr_factorize, complete_to_generalized
from .matrices import (
    RATIONAL,
    domain_of,
    exact_eq,
    frobenius_norm,
    identity,
    inv_square,
    mmul,
    rel_diff,
    same_matrix,
    zeros,
)
from .subspaces import column_space_contains

DEFAULT_TOL = 1e-10


def pinv(a: np.ndarray) -> np.ndarray:
    """Moore-Penrose pseudoinverse of any matrix, via its CR factors."""
    return pinv_reverse_order(cr_factorize(a))


def pinv_reverse_order(f: CrFactorization) -> np.ndarray:
    """R⁺C⁺ for a full-rank factorization.

    Valid because cr_factorize always delivers C of full column rank
    and R of full row rank; for arbitrary factor pairs use
    ``pinv_always`` instead.
    """
    c = f.c
    r = f.r_factor
    c_plus = mmul(inv_square(mmul(c.T, c)), c.T)
    r_plus = mmul(r.T, inv_square(mmul(r, r.T)))
    return mmul(r_plus, c_plus)


def pinv_rational_closed_form(f: CrFactorization, a: np.ndarray) -> np.ndarray:
    """Rᵀ(CᵀARᵀ)⁻¹Cᵀ; the single r×r inverse keeps rational inputs rational."""
    c = f.c
    r = f.r_factor
    if a.shape != (c.shape[0], r.shape[1]):
        raise ShapeError("matrix shape %s does not match factors" % (a.shape,))
    core = mmul(c.T, a, r.T)
    return mmul(r.T, inv_square(core), c.T)


def pinv_always(c: np.ndarray, r: np.ndarray) -> np.ndarray:
    """(C⁺CR)⁺(CRR⁺)⁺: correct for factor pairs of any rank.

    Inner and outer pseudoinverses are all taken through fresh CR
    factorizations, so the rational path stays exact.
    """
    if c.shape[1] != r.shape[0]:
        raise ShapeError(
            "inner dimensions differ: %s vs %s" % (c.shape, r.shape)
        )
    c_plus = pinv(c)
    r_plus = pinv(r)
    left = mmul(c_plus, c, r)
    right = mmul(c, r, r_plus)
    return mmul(pinv(left), pinv(right))


@dataclass(frozen=True)
class PenroseReport:
    """Outcome of the four Penrose identity checks for a candidate inverse.

    ``holds`` has one flag per identity: AGA=A, GAG=G, (GA)ᵀ=GA,
    (AG)ᵀ=AG.  ``residuals`` carries the relative Frobenius residuals
    (informative zeros when the exact domain says equality holds).
    """

    holds: tuple
    residuals: tuple

    @property
    def all_hold(self) -> bool:
        return all(self.holds)


def check_penrose(a: np.ndarray, g: np.ndarray, tol: float = DEFAULT_TOL) -> PenroseReport:
    """Test the four Penrose identities: exact over rationals, ≤ tol over floats."""
    m, n = a.shape
    if g.shape != (n, m):
        raise ShapeError("candidate inverse must be %s, got %s" % ((n, m), g.shape))
    ga = mmul(g, a)
    ag = mmul(a, g)
    pairs = (
        (mmul(ag, a), a),
        (mmul(ga, g), g),
        (ga.T, ga),
        (ag.T, ag),
    )
    exact = domain_of(a) == RATIONAL
    holds = []
    residuals = []
    for lhs, rhs in pairs:
        res = rel_diff(lhs, rhs)
        residuals.append(res)
        holds.append(exact_eq(lhs, rhs) if exact else res <= tol)
    return PenroseReport(holds=tuple(holds), residuals=tuple(residuals))


def check_greville(c: np.ndarray, r: np.ndarray) -> bool:
    """True iff the reverse-order law (CR)⁺ = R⁺C⁺ holds for this pair.

    Tests the two column-space inclusions C(RRᵀCᵀ) ⊆ C(Cᵀ) and
    C(CᵀCR) ⊆ C(R) by the rank criterion.
    """
    if c.shape[1] != r.shape[0]:
        raise ShapeError(
            "inner dimensions differ: %s vs %s" % (c.shape, r.shape)
        )
    first = column_space_contains(c.T, mmul(r, r.T, c.T))
    second = column_space_contains(r, mmul(c.T, c, r))
    return first and second


def check_projection_equation(c: np.ndarray, r: np.ndarray, tol: float = DEFAULT_TOL) -> bool:
    """Test C⁺C(RRᵀCᵀC)RR⁺ = RRᵀCᵀC, the two-sided projection identity."""
    if c.shape[1] != r.shape[0]:
        raise ShapeError(
            "inner dimensions differ: %s vs %s" % (c.shape, r.shape)
        )
    core = mmul(r, r.T, c.T, c)
    lhs = mmul(pinv(c), c, core, r, pinv(r))
    return same_matrix(lhs, core, tol)


def check_reverse_order_demands(c: np.ndarray, r: np.ndarray, tol: float = DEFAULT_TOL):
    """Truth of C⁺C(RAᵀ) = RAᵀ and RR⁺(CᵀA) = CᵀA for A = CR, individually."""
    if c.shape[1] != r.shape[0]:
        raise ShapeError(
            "inner dimensions differ: %s vs %s" % (c.shape, r.shape)
        )
    a = mmul(c, r)
    first_target = mmul(r, a.T)
    second_target = mmul(c.T, a)
    first = same_matrix(mmul(pinv(c), c, first_target), first_target, tol)
    second = same_matrix(mmul(r, pinv(r), second_target), second_target, tol)
    return first, second


@dataclass(frozen=True)
class GeneralizedInverseSpec:
    """Blocks defining a generalized inverse of A = c0 · r0.

    ``c0, c1`` extend to an invertible m×m matrix and ``r0, r1`` to an
    invertible n×n matrix (see ``complete_to_generalized``).  The free
    blocks are z11 (r×(m−r)), z21 ((n−r)×r) and z22 ((n−r)×(m−r));
    zero blocks give the Moore-Penrose pseudoinverse.
    """

    c0: np.ndarray
    c1: np.ndarray
    r0: np.ndarray
    r1: np.ndarray
    z11: np.ndarray
    z21: np.ndarray
    z22: np.ndarray

    @classmethod
    def from_matrix(cls, a: np.ndarray, z11=None, z21=None, z22=None):
        """Build a spec for ``a``, defaulting free blocks to zeros."""
        c0, c1, r0, r1 = complete_to_generalized(a)
        dom = domain_of(a)
        m, n = a.shape
        rk = c0.shape[1]
        if z11 is None:
            z11 = zeros(rk, m - rk, dom)
        if z21 is None:
            z21 = zeros(n - rk, rk, dom)
        if z22 is None:
            z22 = zeros(n - rk, m - rk, dom)
        return cls(c0=c0, c1=c1, r0=r0, r1=r1, z11=z11, z21=z21, z22=z22)


def generalized_inverse(spec: GeneralizedInverseSpec) -> np.ndarray:
    """G = [r0; r1]⁻¹ · [[I, z11], [z21, z22]] · [c0 c1]⁻¹.

    Always satisfies AGA = A for A = c0·r0; GAG = G exactly when
    z22 = z21·z11.
    """
    rows = np.vstack([spec.r0, spec.r1])
    cols = np.hstack([spec.c0, spec.c1])
    if rows.shape[0] != rows.shape[1]:
        raise ShapeError("row completion is not square: %s" % (rows.shape,))
    if cols.shape[0] != cols.shape[1]:
        raise ShapeError("column completion is not square: %s" % (cols.shape,))
    rk = spec.r0.shape[0]
    dom = domain_of(rows)
    top = np.hstack([identity(rk, dom), spec.z11])
    bottom = np.hstack([spec.z21, spec.z22])
    middle = np.vstack([top, bottom])
    return mmul(inv_square(rows), middle, inv_square(cols))


def _check_vector(v: np.ndarray, length: int, name: str) -> None:
    if v.shape != (length, 1):
        raise ShapeError("%s must be %d×1, got %s" % (name, length, v.shape))


def solve_complete_forward(a: np.ndarray, g: np.ndarray, b: np.ndarray, z: np.ndarray) -> np.ndarray:
    """x = G·b + (I − G·A)·z, the complete solution family of Ax = b.

    ``g`` must be a generalized inverse (AGA = A).  Raises
    :class:`InconsistentSystemError` when b is outside C(A), attaching
    the witnessing residual ‖Ax − b‖.
    """
    m, n = a.shape
    _check_vector(b, m, "b")
    _check_vector(z, n, "z")
    x = mmul(g, b) + mmul(identity(n, domain_of(a)) - mmul(g, a), z)
    if not column_space_contains(a, b):
        residual = frobenius_norm(mmul(a, x) - b)
        raise InconsistentSystemError(
            "b is not in the column space of a (residual %.3e)" % residual,
            residual=residual,
        )
    return x


def solve_complete_adjoint(a: np.ndarray, aplus: np.ndarray, x: np.ndarray, w: np.ndarray) -> np.ndarray:
    """b = A·x + (I − A·A⁺)·w, every b with A⁺·b = x.

    ``x`` must lie in the row space of A; otherwise no b maps back to x
    and :class:`InconsistentSystemError` reports the residual.
    """
    m, n = a.shape
    _check_vector(x, n, "x")
    _check_vector(w, m, "w")
    b = mmul(a, x) + mmul(identity(m, domain_of(a)) - mmul(a, aplus), w)
    if not column_space_contains(a.T, x):
        residual = frobenius_norm(mmul(aplus, b) - x)
        raise InconsistentSystemError(
            "x is not in the row space of a (residual %.3e)" % residual,
            residual=residual,
        )
    return b
