"""Benchmark harness: seeded test matrices, timing grid, CSV emission.

Compares three ways to a pseudoinverse on randsvd-style matrices:
``direct`` (the SVD oracle), ``rpinv`` (Gaussian sketches with
p = q = ceil(alpha*n)) and ``rsvd`` (randomized-SVD baseline at the
numerical rank).  Error metric throughout: relative Frobenius
``norm(G - A_plus) / norm(A_plus)`` against the direct result.

Every cell derives a private seed from (master seed, method, n, trial),
so grid cells are independent and the records are reproducible
regardless of evaluation order; output is sorted by (method, n, trial).
"""

from __future__ import annotations

import csv
import math
import time
from dataclasses import dataclass

import numpy as np

from .matrices import rel_diff
from .sketching import rpinv, rsvd_pinv
from .svd import pinv_from_svd, svd

# Proxy flop unit: one multiply-add pass of the given volume.  A
# pseudoinverse through an iterative SVD costs several such passes over
# min(a,b)*a*b; six is a conservative single constant for all sizes.
PINV_COST_FACTOR = 6.0

_STREAM_IDS = {"matrix": 0, "direct": 1, "rpinv": 2, "rsvd": 3}


@dataclass(frozen=True)
class RandSvdSpec:
    """Square test matrix: prescribed condition number, seeded.

    Singular values run geometrically from 1 down to 1/condition;
    ``mode`` names the spacing profile (only "geometric" exists).
    """

    n: int
    condition: float
    mode: str = "geometric"
    seed: int = 0


@dataclass(frozen=True)
class BenchConfig:
    """Grid definition: sizes × trials × methods at one sketch fraction."""

    sizes: tuple
    alpha: float
    condition: float
    trials: int
    seed: int
    methods: tuple = ("direct", "rpinv", "rsvd")


@dataclass(frozen=True)
class BenchRecord:
    """One timed method invocation on one generated matrix."""

    method: str
    n: int
    alpha: float
    trial: int
    wall_time_seconds: float
    relative_error: float
    rank_preserving: bool | None


def derive_seed(master: int, stream: str, n: int, trial: int) -> int:
    """Stable per-cell seed; identical across runs and evaluation orders."""
    ss = np.random.SeedSequence([master, _STREAM_IDS[stream], n, trial])
    return int(ss.generate_state(1, dtype=np.uint64)[0])


def gen_randsvd(spec: RandSvdSpec) -> np.ndarray:
    """U·diag(σ)·Vᵀ with random orthogonal U, V and geometric σ from 1 to 1/κ."""
    if spec.n < 2:
        raise ValueError("n must be at least 2, got %d" % spec.n)
    if spec.condition < 1.0:
        raise ValueError("condition must be >= 1, got %g" % spec.condition)
    if spec.mode != "geometric":
        raise ValueError("unknown singular value mode %r" % spec.mode)
    rng = np.random.default_rng(spec.seed)
    u, _ = np.linalg.qr(rng.standard_normal((spec.n, spec.n)))
    v, _ = np.linalg.qr(rng.standard_normal((spec.n, spec.n)))
    sigma = spec.condition ** (-np.arange(spec.n) / (spec.n - 1))
    return (u * sigma) @ v.T


def _validate_config(config: BenchConfig) -> None:
    if not config.sizes:
        raise ValueError("sizes must be nonempty")
    if any(n < 2 for n in config.sizes):
        raise ValueError("all sizes must be >= 2")
    if not 0.0 < config.alpha <= 1.0:
        raise ValueError("alpha must be in (0, 1], got %g" % config.alpha)
    if config.trials < 1:
        raise ValueError("trials must be >= 1")
    if config.seed < 0:
        raise ValueError("seed must be nonnegative")
    unknown = set(config.methods) - {"direct", "rpinv", "rsvd"}
    if unknown or not config.methods:
        raise ValueError("methods must be a nonempty subset of direct/rpinv/rsvd")


def run_bench(config: BenchConfig) -> list:
    """Run the timing grid; per-cell failures become NaN-error records."""
    _validate_config(config)
    records = []
    for n in config.sizes:
        for trial in range(config.trials):
            mat_seed = derive_seed(config.seed, "matrix", n, trial)
            a = gen_randsvd(
                RandSvdSpec(n=n, condition=config.condition, seed=mat_seed)
            )
            start = time.perf_counter()
            oracle = svd(a)
            reference = pinv_from_svd(oracle)
            direct_time = time.perf_counter() - start
            if "direct" in config.methods:
                records.append(
                    BenchRecord(
                        method="direct",
                        n=n,
                        alpha=config.alpha,
                        trial=trial,
                        wall_time_seconds=direct_time,
                        relative_error=0.0,
                        rank_preserving=None,
                    )
                )
            if "rpinv" in config.methods:
                p = math.ceil(config.alpha * n)
                records.append(
                    _timed_cell(
                        "rpinv",
                        n,
                        config,
                        trial,
                        reference,
                        lambda: rpinv(
                            a, p, p, derive_seed(config.seed, "rpinv", n, trial)
                        ),
                    )
                )
            if "rsvd" in config.methods:
                s = max(1, oracle.numerical_rank)
                records.append(
                    _timed_cell(
                        "rsvd",
                        n,
                        config,
                        trial,
                        reference,
                        lambda: rsvd_pinv(
                            a, s, derive_seed(config.seed, "rsvd", n, trial)
                        ),
                    )
                )
    records.sort(key=lambda rec: (rec.method, rec.n, rec.trial))
    return records


def _timed_cell(method, n, config, trial, reference, call) -> BenchRecord:
    start = time.perf_counter()
    try:
        out = call()
    except Exception:
        return BenchRecord(
            method=method,
            n=n,
            alpha=config.alpha,
            trial=trial,
            wall_time_seconds=time.perf_counter() - start,
            relative_error=float("nan"),
            rank_preserving=None,
        )
    elapsed = time.perf_counter() - start
    if method == "rpinv":
        approx = out.approx
        preserving = out.rank_preserving
    else:
        approx = out
        preserving = None
    return BenchRecord(
        method=method,
        n=n,
        alpha=config.alpha,
        trial=trial,
        wall_time_seconds=elapsed,
        relative_error=rel_diff(approx, reference),
        rank_preserving=preserving,
    )


CSV_HEADER = "method,n,alpha,trial,wall_time_seconds,relative_error,rank_preserving"


def emit_csv(records, path) -> None:
    """Write records under the fixed header; floats keep round-trip precision."""
    try:
        with open(path, "w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(CSV_HEADER.split(","))
            for rec in records:
                writer.writerow(
                    [
                        rec.method,
                        rec.n,
                        repr(float(rec.alpha)),
                        rec.trial,
                        repr(float(rec.wall_time_seconds)),
                        repr(float(rec.relative_error)),
                        _flag_str(rec.rank_preserving),
                    ]
                )
    except OSError as exc:
        raise OSError("could not write bench CSV to %r: %s" % (str(path), exc)) from exc


def read_records(path) -> list:
    """Parse a CSV produced by emit_csv back into records."""
    try:
        with open(path, newline="") as fh:
            reader = csv.reader(fh)
            header = next(reader, None)
            if header != CSV_HEADER.split(","):
                raise ValueError("unrecognized bench CSV header in %r" % str(path))
            out = []
            for row in reader:
                out.append(
                    BenchRecord(
                        method=row[0],
                        n=int(row[1]),
                        alpha=float(row[2]),
                        trial=int(row[3]),
                        wall_time_seconds=float(row[4]),
                        relative_error=float(row[5]),
                        rank_preserving=_flag_parse(row[6]),
                    )
                )
            return out
    except OSError as exc:
        raise OSError("could not read bench CSV from %r: %s" % (str(path), exc)) from exc


def _flag_str(flag) -> str:
    if flag is None:
        return "n/a"
    return "true" if flag else "false"


def _flag_parse(text: str):
    if text == "n/a":
        return None
    if text in ("true", "false"):
        return text == "true"
    raise ValueError("bad rank_preserving flag %r" % text)


def write_plot_data(records, path) -> None:
    """Per-(method, n) medians of wall time and relative error, as a second CSV."""
    groups = {}
    for rec in records:
        groups.setdefault((rec.method, rec.n), []).append(rec)
    try:
        with open(path, "w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(
                ["method", "n", "median_wall_time_seconds", "median_relative_error"]
            )
            for method, n in sorted(groups):
                cell = groups[(method, n)]
                times = [r.wall_time_seconds for r in cell]
                errors = [r.relative_error for r in cell if math.isfinite(r.relative_error)]
                writer.writerow(
                    [
                        method,
                        n,
                        repr(float(np.median(times))),
                        repr(float(np.median(errors))) if errors else "nan",
                    ]
                )
    except OSError as exc:
        raise OSError("could not write plot CSV to %r: %s" % (str(path), exc)) from exc


def pinv_flop_proxy(m: int, n: int) -> float:
    """Model cost of a pseudoinverse of an m×n matrix."""
    return PINV_COST_FACTOR * min(m, n) * m * n


def direct_flop_proxy(m: int, n: int) -> float:
    """Model cost of the direct path: one full-size pseudoinverse."""
    return pinv_flop_proxy(m, n)


def rpinv_flop_proxy(m: int, n: int, p: int, q: int) -> float:
    """Model cost of the sketched path.

    Two sketch products plus pseudoinverses of the p×n and m×q
    compressions.
    """
    return (
        p * m * n
        + q * m * n
        + pinv_flop_proxy(p, n)
        + pinv_flop_proxy(m, q)
    )
