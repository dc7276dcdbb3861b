"""Backend selection for the hot kernels.

The compiled extension is preferred when it imported cleanly; otherwise
the numpy fallback takes over.  ``load_backend`` gives explicit access
to either one, which the kernel benchmark uses to compare them.
"""

from __future__ import annotations

from . import _kernels_py

try:
    from . import _kernels_c as _active
    ACTIVE_BACKEND = "compiled"
except ImportError:
    _active = _kernels_py
    ACTIVE_BACKEND = "python"

rref_float_in_place = _active.rref_float_in_place
jacobi_orthogonalize = _active.jacobi_orthogonalize


def active_backend() -> str:
    """Name of the backend the package is running on."""
    return ACTIVE_BACKEND


def available_backends() -> tuple[str, ...]:
    names = ["python"]
    if ACTIVE_BACKEND == "compiled":
        names.append("compiled")
    return tuple(names)


def load_backend(name: str):
    """Return the kernel module for ``name`` ("python" or "compiled")."""
    if name == "python":
        return _kernels_py
    if name == "compiled":
        if ACTIVE_BACKEND != "compiled":
            raise ImportError("compiled kernels are not available in this install")
        return _active
    raise ValueError("unknown backend %r" % name)
