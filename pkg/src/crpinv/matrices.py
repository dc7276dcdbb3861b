"""Dense matrices over two scalar domains.

Everything in this package moves through numpy arrays in one of two
forms:

* float domain: ordinary ``float64`` arrays;
* rational domain: ``dtype=object`` arrays whose entries are
  :class:`fractions.Fraction` values, giving exact arithmetic.

``Fraction`` keeps every entry in lowest terms with a positive
denominator, so equality of rational matrices is plain ``==``.  The
helpers here construct, convert, multiply and invert matrices without
caring which domain they live in; domain-specific branches live behind
:func:`domain_of`.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from .errors import DomainError, ShapeError, SingularMatrixError

RATIONAL = "rational"
FLOAT = "float"

_ZERO = Fraction(0)
_ONE = Fraction(1)


def domain_of(a: np.ndarray) -> str:
    """Return ``"rational"`` or ``"float"`` for a matrix built by this package."""
    if not isinstance(a, np.ndarray) or a.ndim != 2:
        raise DomainError("expected a 2-d numpy array, got %r" % type(a).__name__)
    if a.dtype == np.float64:
        return FLOAT
    if a.dtype == object:
        return RATIONAL
    raise DomainError(
        "unsupported dtype %s; build matrices with rational_matrix or float_matrix"
        % a.dtype
    )


def _exact_fraction(x) -> Fraction:
    f = Fraction(x)
    if type(f.numerator) is int and type(f.denominator) is int:
        return f
    return Fraction(int(f.numerator), int(f.denominator))


def rational_matrix(rows) -> np.ndarray:
    """Build an exact rational matrix from nested values.

    Entries may be ints, Fractions, or strings like ``"2/3"``; anything
    ``Fraction`` accepts works.  Floats convert to their exact binary
    value, which is rarely what you want for decimals.  Numerators and
    denominators are forced to Python ints so that numpy integer scalars
    cannot smuggle fixed-width arithmetic into the exact domain.
    """
    data = [[_exact_fraction(x) for x in row] for row in rows]
    ncols = {len(row) for row in data}
    if len(ncols) > 1:
        raise ShapeError("ragged rows: %s" % sorted(ncols))
    m = len(data)
    n = ncols.pop() if ncols else 0
    out = np.empty((m, n), dtype=object)
    for i, row in enumerate(data):
        for j, x in enumerate(row):
            out[i, j] = x
    return out


def float_matrix(rows) -> np.ndarray:
    """Build a float64 matrix from nested values."""
    out = np.array(rows, dtype=np.float64)
    if out.ndim != 2:
        raise ShapeError("expected a 2-d layout, got ndim=%d" % out.ndim)
    return out


def zeros(m: int, n: int, domain: str) -> np.ndarray:
    if domain == FLOAT:
        return np.zeros((m, n))
    if domain == RATIONAL:
        return np.full((m, n), _ZERO, dtype=object)
    raise DomainError("unknown domain %r" % domain)


def identity(n: int, domain: str) -> np.ndarray:
    out = zeros(n, n, domain)
    one = 1.0 if domain == FLOAT else _ONE
    for i in range(n):
        out[i, i] = one
    return out


def to_float(a: np.ndarray) -> np.ndarray:
    """Cast a matrix of either domain to float64."""
    if domain_of(a) == FLOAT:
        return a.copy()
    return np.array([[float(x) for x in row] for row in a], dtype=np.float64).reshape(
        a.shape
    )


def to_rational(a: np.ndarray) -> np.ndarray:
    """Cast to the exact domain; float entries convert to their exact binary value."""
    if domain_of(a) == RATIONAL:
        return a.copy()
    return rational_matrix(a.tolist())


def mmul(*mats: np.ndarray) -> np.ndarray:
    """Product of two or more matrices, evaluated left to right.

    All factors must share a domain.  Handles empty inner dimensions,
    which plain ``@`` gets wrong for object arrays (it produces integer
    zeros instead of Fractions).
    """
    if not mats:
        raise ValueError("mmul needs at least one factor")
    out = mats[0]
    dom = domain_of(out)
    for b in mats[1:]:
        if domain_of(b) != dom:
            raise DomainError("mixed domains in product")
        if out.shape[1] != b.shape[0]:
            raise ShapeError(
                "cannot multiply %s by %s" % (out.shape, b.shape)
            )
        if dom == RATIONAL and out.shape[1] == 0:
            out = zeros(out.shape[0], b.shape[1], RATIONAL)
        else:
            out = out @ b
    return out


def frobenius_norm(a: np.ndarray) -> float:
    """Frobenius norm as a float, for either domain.

    For rationals the squared norm is computed exactly before the final
    square root; an overflowing conversion reports ``inf``.
    """
    if domain_of(a) == FLOAT:
        return float(np.linalg.norm(a))
    total = _ZERO
    for x in a.flat:
        total += x * x
    try:
        return float(total) ** 0.5
    except OverflowError:
        return float("inf")


def rel_diff(x: np.ndarray, y: np.ndarray) -> float:
    """``‖x − y‖_F / ‖y‖_F``, falling back to the absolute norm when y = 0."""
    if x.shape != y.shape:
        raise ShapeError("cannot compare %s with %s" % (x.shape, y.shape))
    num = frobenius_norm(x - y)
    den = frobenius_norm(y)
    if den == 0.0:
        return num
    return num / den


def exact_eq(a: np.ndarray, b: np.ndarray) -> bool:
    """Entrywise equality; exact in both domains."""
    return a.shape == b.shape and bool(np.all(a == b))


def same_matrix(a: np.ndarray, b: np.ndarray, tol: float = 1e-10) -> bool:
    """Domain-aware equality: exact for rationals, relative tolerance for floats."""
    if a.shape != b.shape:
        return False
    if domain_of(a) == RATIONAL:
        return exact_eq(a, b)
    return rel_diff(a, b) <= tol


def inv_square(a: np.ndarray) -> np.ndarray:
    """Inverse of a square matrix by Gauss-Jordan elimination.

    The rational path pivots on the first nonzero entry and is exact.
    The float path partially pivots on the largest entry.  Raises
    :class:`SingularMatrixError` when no usable pivot exists.
    """
    dom = domain_of(a)
    n = a.shape[0]
    if a.shape[1] != n:
        raise ShapeError("inv_square needs a square matrix, got %s" % (a.shape,))
    work = np.hstack([a.copy(), identity(n, dom)]) if n else zeros(0, 0, dom)
    for j in range(n):
        if dom == FLOAT:
            p = j + int(np.argmax(np.abs(work[j:, j])))
        else:
            p = next((i for i in range(j, n) if work[i, j] != 0), j)
        if work[p, j] == 0:
            raise SingularMatrixError("singular at column %d" % j)
        if p != j:
            work[[j, p]] = work[[p, j]]
        work[j] = work[j] / work[j, j]
        for i in range(n):
            if i != j and work[i, j] != 0:
                work[i] = work[i] - work[i, j] * work[j]
    return work[:, n:]
