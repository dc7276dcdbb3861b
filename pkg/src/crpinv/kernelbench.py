"""Timing comparison of the kernel backends.

Runs the raw Jacobi-sweep and RREF kernels from each available backend
on identical seeded inputs.  Useful for checking what the compiled
extension buys on a given machine; the numbers are informational only.
"""

from __future__ import annotations

import csv
import time
from dataclasses import dataclass

import numpy as np

from . import kernels
from .bench import derive_seed
from .svd import _ORTHO_TOL, _SWEEPS_PER_COLUMN


@dataclass(frozen=True)
class KernelRecord:
    backend: str
    kernel: str
    n: int
    trial: int
    wall_time_seconds: float


def run_kernel_bench(sizes, trials: int, seed: int) -> list:
    """Time both kernels per backend on shared seeded n×n matrices."""
    records = []
    for backend in kernels.available_backends():
        impl = kernels.load_backend(backend)
        for n in sizes:
            for trial in range(trials):
                rng = np.random.default_rng(derive_seed(seed, "matrix", n, trial))
                a = rng.standard_normal((n, n))
                wt = np.ascontiguousarray(a.T).copy()
                vt = np.eye(n)
                start = time.perf_counter()
                impl.jacobi_orthogonalize(wt, vt, _SWEEPS_PER_COLUMN * n, _ORTHO_TOL)
                records.append(
                    KernelRecord(
                        backend, "jacobi", n, trial, time.perf_counter() - start
                    )
                )
                work = a.copy()
                tol = n * np.finfo(np.float64).eps * float(np.max(np.abs(work)))
                start = time.perf_counter()
                impl.rref_float_in_place(work, tol, n)
                records.append(
                    KernelRecord(
                        backend, "rref", n, trial, time.perf_counter() - start
                    )
                )
    return records


def summarize(records) -> list:
    """Median wall time per (backend, kernel, n), sorted."""
    groups = {}
    for rec in records:
        groups.setdefault((rec.backend, rec.kernel, rec.n), []).append(
            rec.wall_time_seconds
        )
    out = []
    for key in sorted(groups):
        out.append((*key, float(np.median(groups[key]))))
    return out


def emit_kernel_csv(records, path) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["backend", "kernel", "n", "trial", "wall_time_seconds"])
        for rec in records:
            writer.writerow(
                [
                    rec.backend,
                    rec.kernel,
                    rec.n,
                    rec.trial,
                    repr(float(rec.wall_time_seconds)),
                ]
            )
