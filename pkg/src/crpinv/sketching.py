"""Sketched pseudoinverses: compress with P and Q, then invert.

The sketched product (PᵀA)⁺(PᵀA)Q(AQ)⁺ equals A⁺ exactly whenever the
sketches preserve rank, i.e. rank(PᵀA) = rank(AQ) = rank(A); otherwise
it is a cheap approximation.  ``rpinv`` draws Gaussian sketches (which
preserve rank almost surely at matching sizes) and ``rsvd_pinv`` is the
randomized-SVD baseline: pseudoinvert the rank-s approximation built
from an orthonormalized range sample.

Float sketches pseudoinvert through the SVD with the numerical-rank
cut; rational sketches go through the exact CR route, so integer
worked examples verify exactly.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .elimination import rank
from .errors import DomainError, ShapeError
from .matrices import FLOAT, RATIONAL, domain_of, mmul
from .pseudoinverse import pinv
from .svd import pinv_from_svd, svd


@dataclass
class SketchPair:
    """Sketch matrices P (m×p) and Q (n×q), plus rank bookkeeping.

    ``seed`` is set when the pair came from a seeded generator and None
    for user-supplied sketches.  The three rank fields are filled in by
    ``validate_rank_preserving``.
    """

    p_mat: np.ndarray
    q_mat: np.ndarray
    seed: int | None = None
    rank_pta: int | None = None
    rank_aq: int | None = None
    rank_a: int | None = None


@dataclass(frozen=True)
class SketchedPinvResult:
    """Sketched approximation of A⁺ with its rank diagnosis.

    ``rank_preserving`` is exactly the condition under which ``approx``
    is the true pseudoinverse; ``achieved_ranks`` is
    (rank PᵀA, rank AQ, rank A).
    """

    approx: np.ndarray
    rank_preserving: bool
    achieved_ranks: tuple


def _domain_pinv(a: np.ndarray) -> np.ndarray:
    if domain_of(a) == RATIONAL:
        return pinv(a)
    return pinv_from_svd(svd(a))


def _check_sketch_shapes(a: np.ndarray, sketch: SketchPair) -> None:
    m, n = a.shape
    if domain_of(sketch.p_mat) != domain_of(a) or domain_of(sketch.q_mat) != domain_of(a):
        raise DomainError("sketches must share the matrix domain")
    if sketch.p_mat.shape[0] != m:
        raise ShapeError(
            "p_mat must have %d rows, got %s" % (m, sketch.p_mat.shape)
        )
    if sketch.q_mat.shape[0] != n:
        raise ShapeError(
            "q_mat must have %d rows, got %s" % (n, sketch.q_mat.shape)
        )


def validate_rank_preserving(a: np.ndarray, sketch: SketchPair) -> bool:
    """True iff rank(PᵀA) = rank(AQ) = rank(A); caches all three ranks."""
    _check_sketch_shapes(a, sketch)
    sketch.rank_a = rank(a)
    sketch.rank_pta = rank(mmul(sketch.p_mat.T, a))
    sketch.rank_aq = rank(mmul(a, sketch.q_mat))
    return sketch.rank_pta == sketch.rank_a == sketch.rank_aq


def pinv_sketched(a: np.ndarray, sketch: SketchPair) -> SketchedPinvResult:
    """(PᵀA)⁺ · PᵀA · Q · (AQ)⁺, evaluated left to right.

    Equals A⁺ (all four Penrose identities) when the sketch preserves
    rank; the result reports whether it did.  The float path reads the
    sketch-product ranks off the same SVDs it pseudoinverts, so the
    diagnosis costs one extra decomposition (of ``a``), not three.
    """
    _check_sketch_shapes(a, sketch)
    pta = mmul(sketch.p_mat.T, a)
    aq = mmul(a, sketch.q_mat)
    if domain_of(a) == FLOAT:
        svd_pta = svd(pta)
        svd_aq = svd(aq)
        approx = mmul(
            pinv_from_svd(svd_pta), pta, sketch.q_mat, pinv_from_svd(svd_aq)
        )
        sketch.rank_pta = svd_pta.numerical_rank
        sketch.rank_aq = svd_aq.numerical_rank
    else:
        approx = mmul(pinv(pta), pta, sketch.q_mat, pinv(aq))
        sketch.rank_pta = rank(pta)
        sketch.rank_aq = rank(aq)
    sketch.rank_a = rank(a)
    preserving = sketch.rank_pta == sketch.rank_a == sketch.rank_aq
    return SketchedPinvResult(
        approx=approx,
        rank_preserving=preserving,
        achieved_ranks=(sketch.rank_pta, sketch.rank_aq, sketch.rank_a),
    )


def sketched_pinv_factors(c: np.ndarray, r: np.ndarray, sketch: SketchPair):
    """The grouped form for A = C·R: ((PᵀCR)⁺PᵀC, RQ(CRQ)⁺).

    The product of the two factors equals the sketched pseudoinverse of
    C·R; exposing them separately lets exact worked examples check each
    half.
    """
    if c.shape[1] != r.shape[0]:
        raise ShapeError(
            "inner dimensions differ: %s vs %s" % (c.shape, r.shape)
        )
    a = mmul(c, r)
    _check_sketch_shapes(a, sketch)
    left = mmul(_domain_pinv(mmul(sketch.p_mat.T, a)), sketch.p_mat.T, c)
    right = mmul(r, sketch.q_mat, _domain_pinv(mmul(a, sketch.q_mat)))
    return left, right


def rpinv(a: np.ndarray, p: int, q: int, seed: int) -> SketchedPinvResult:
    """Gaussian-sketched pseudoinverse of a float matrix; deterministic per seed."""
    if domain_of(a) != FLOAT:
        raise DomainError("rpinv draws float sketches; use pinv_sketched for rationals")
    m, n = a.shape
    if not 1 <= p <= m:
        raise ValueError("p must be in [1, %d], got %d" % (m, p))
    if not 1 <= q <= n:
        raise ValueError("q must be in [1, %d], got %d" % (n, q))
    rng = np.random.default_rng(seed)
    p_mat = rng.standard_normal((m, p))
    q_mat = rng.standard_normal((n, q))
    sketch = SketchPair(p_mat=p_mat, q_mat=q_mat, seed=seed)
    return pinv_sketched(a, sketch)


def rsvd_pinv(a: np.ndarray, s: int, seed: int) -> np.ndarray:
    """Pseudoinverse of the rank-s randomized-SVD approximation of ``a``.

    Sample the range with a Gaussian Ω (n×s), orthonormalize Y = AΩ
    into Q̂, take the thin SVD Q̂ᵀA = UΣVᵀ, and pseudoinvert
    A_s = Q̂UΣVᵀ as VΣ⁺(Q̂U)ᵀ.
    """
    if domain_of(a) != FLOAT:
        raise DomainError("rsvd_pinv is float-only")
    m, n = a.shape
    if not 1 <= s <= min(m, n):
        raise ValueError("s must be in [1, %d], got %d" % (min(m, n), s))
    rng = np.random.default_rng(seed)
    omega = rng.standard_normal((n, s))
    sample = a @ omega
    qhat, _ = np.linalg.qr(sample)
    small = svd(qhat.T @ a)
    r = small.numerical_rank
    if r == 0:
        return np.zeros((n, m))
    vr = small.v[:, :r]
    ur = small.u[:, :r]
    return (vr / small.singular_values[:r]) @ (qhat @ ur).T
