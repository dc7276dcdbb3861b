"""Matrix file formats.

Float matrices use Matrix Market (array or coordinate, real general).
Rational matrices use a plain text format: a first line ``m n``, then m
lines of n entries, each an integer or ``p/q``.  Both directions are
bit-exact round trips: floats are written with ``repr`` (shortest
round-trip form) and rationals verbatim.
"""

from __future__ import annotations

from contextlib import contextmanager
from fractions import Fraction

import numpy as np

from .errors import DomainError
from .matrices import FLOAT, domain_of, rational_matrix

_MM_BANNER = "%%MatrixMarket"


@contextmanager
def _open_for(target, mode):
    if hasattr(target, "write") or hasattr(target, "read"):
        yield target
    else:
        with open(target, mode) as fh:
            yield fh


def write_rational_text(a: np.ndarray, target) -> None:
    """Write a rational matrix: ``m n`` header then one row per line."""
    if domain_of(a) == FLOAT:
        raise DomainError("write_rational_text needs a rational matrix")
    m, n = a.shape
    with _open_for(target, "w") as fh:
        fh.write("%d %d\n" % (m, n))
        for i in range(m):
            fh.write(" ".join(str(a[i, j]) for j in range(n)) + "\n")


def read_rational_text(source) -> np.ndarray:
    """Parse the exact text format back into a rational matrix."""
    with _open_for(source, "r") as fh:
        header = fh.readline().split()
        if len(header) != 2:
            raise ValueError("expected 'm n' on the first line")
        m, n = int(header[0]), int(header[1])
        rows = []
        for i in range(m):
            parts = fh.readline().split()
            if len(parts) != n:
                raise ValueError(
                    "row %d has %d entries, expected %d" % (i, len(parts), n)
                )
            rows.append([Fraction(p) for p in parts])
    out = rational_matrix(rows)
    return out.reshape(m, n) if m == 0 or n == 0 else out


def write_matrix_market(a: np.ndarray, target, fmt: str = "array") -> None:
    """Write a float matrix in Matrix Market form.

    ``fmt`` picks dense "array" (column-major entries, per the format
    definition) or sparse "coordinate" (nonzeros with 1-based indices).
    """
    if domain_of(a) != FLOAT:
        raise DomainError("write_matrix_market needs a float matrix")
    m, n = a.shape
    with _open_for(target, "w") as fh:
        if fmt == "array":
            fh.write("%s matrix array real general\n" % _MM_BANNER)
            fh.write("%d %d\n" % (m, n))
            for j in range(n):
                for i in range(m):
                    fh.write(repr(float(a[i, j])) + "\n")
        elif fmt == "coordinate":
            entries = [
                (i, j, a[i, j]) for j in range(n) for i in range(m) if a[i, j] != 0.0
            ]
            fh.write("%s matrix coordinate real general\n" % _MM_BANNER)
            fh.write("%d %d %d\n" % (m, n, len(entries)))
            for i, j, val in entries:
                fh.write("%d %d %s\n" % (i + 1, j + 1, repr(float(val))))
        else:
            raise ValueError("fmt must be 'array' or 'coordinate', got %r" % fmt)


def read_matrix_market(source) -> np.ndarray:
    """Read a real general Matrix Market file (array or coordinate)."""
    with _open_for(source, "r") as fh:
        banner = fh.readline().split()
        if len(banner) != 5 or banner[0] != _MM_BANNER or banner[1] != "matrix":
            raise ValueError("not a Matrix Market file")
        layout, field, symmetry = banner[2], banner[3], banner[4]
        if layout not in ("array", "coordinate"):
            raise ValueError("unsupported Matrix Market layout %r" % layout)
        if field not in ("real", "integer") or symmetry != "general":
            raise ValueError(
                "only real/integer general matrices are supported, got %s %s"
                % (field, symmetry)
            )
        line = fh.readline()
        while line.startswith("%"):
            line = fh.readline()
        dims = line.split()
        if layout == "array":
            if len(dims) != 2:
                raise ValueError("array size line must be 'm n'")
            m, n = int(dims[0]), int(dims[1])
            out = np.zeros((m, n))
            for j in range(n):
                for i in range(m):
                    out[i, j] = float(fh.readline())
            return out
        if len(dims) != 3:
            raise ValueError("coordinate size line must be 'm n nnz'")
        m, n, nnz = int(dims[0]), int(dims[1]), int(dims[2])
        out = np.zeros((m, n))
        for _ in range(nnz):
            si, sj, sval = fh.readline().split()
            out[int(si) - 1, int(sj) - 1] = float(sval)
        return out


def read_matrix(path, domain: str) -> np.ndarray:
    """Read a matrix file in the named domain's format."""
    if domain == FLOAT:
        return read_matrix_market(path)
    if domain == "rational":
        return read_rational_text(path)
    raise DomainError("unknown domain %r" % domain)


def write_matrix(a: np.ndarray, target, **kwargs) -> None:
    """Write a matrix in its own domain's format."""
    if domain_of(a) == FLOAT:
        write_matrix_market(a, target, **kwargs)
    else:
        write_rational_text(a, target)
