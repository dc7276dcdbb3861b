"""Command-line front end.

Subcommands: ``factorize``, ``pinv``, ``check penrose``,
``check greville``, ``rpinv``, ``bench`` and ``kernelbench``.  Matrices
come from files in the domain's text format (Matrix Market for floats,
the exact ``m n`` text format for rationals) and results are printed in
the same formats.
"""

from __future__ import annotations

import argparse
import sys

from . import bench as bench_mod
from . import kernelbench as kbench_mod
from .errors import CrpinvError
from .factorization import cr_factorize
from .fileio import read_matrix, write_matrix
from .kernels import active_backend
from .matrices import FLOAT, RATIONAL
from .pseudoinverse import (
    check_greville,
    check_penrose,
    pinv_always,
    pinv_rational_closed_form,
    pinv_reverse_order,
)
from .sketching import rpinv


def _add_domain(parser, default=RATIONAL) -> None:
    parser.add_argument(
        "--domain",
        choices=[RATIONAL, FLOAT],
        default=default,
        help="matrix file format: rational text or Matrix Market floats",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="crpinv",
        description="Pseudoinverses through the CR factorization",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_fact = sub.add_parser("factorize", help="print C, R, rank and pivot columns")
    p_fact.add_argument("matrix_file")
    _add_domain(p_fact)

    p_pinv = sub.add_parser("pinv", help="compute the Moore-Penrose pseudoinverse")
    p_pinv.add_argument("matrix_file")
    p_pinv.add_argument(
        "--method",
        choices=["reverse-order", "closed-form", "always"],
        default="reverse-order",
    )
    _add_domain(p_pinv)

    p_check = sub.add_parser("check", help="verify inverse or factor-pair conditions")
    check_sub = p_check.add_subparsers(dest="check_command", required=True)
    p_pen = check_sub.add_parser("penrose", help="test the four Penrose identities")
    p_pen.add_argument("a_file")
    p_pen.add_argument("g_file")
    p_pen.add_argument("--tol", type=float, default=1e-10)
    _add_domain(p_pen)
    p_grev = check_sub.add_parser(
        "greville", help="test the reverse-order-law conditions for C, R"
    )
    p_grev.add_argument("c_file")
    p_grev.add_argument("r_file")
    _add_domain(p_grev)

    p_rp = sub.add_parser("rpinv", help="Gaussian-sketched pseudoinverse (float)")
    p_rp.add_argument("matrix_file")
    p_rp.add_argument("--p", type=int, required=True)
    p_rp.add_argument("--q", type=int, required=True)
    p_rp.add_argument("--seed", type=int, required=True)
    p_rp.add_argument(
        "--validate",
        action="store_true",
        help="exit nonzero when the sketch failed to preserve rank",
    )

    p_bench = sub.add_parser("bench", help="time direct vs sketched pseudoinverses")
    p_bench.add_argument("--sizes", default="100,200,400")
    p_bench.add_argument("--alpha", type=float, default=0.4)
    p_bench.add_argument("--cond", type=float, default=1e8)
    p_bench.add_argument("--trials", type=int, default=5)
    p_bench.add_argument("--seed", type=int, default=42)
    p_bench.add_argument("--out", required=True)
    p_bench.add_argument("--methods", default="direct,rpinv,rsvd")
    p_bench.add_argument(
        "--plot-data",
        dest="plot_data",
        default=None,
        help="also write per-method median wall time and error to this CSV",
    )

    p_kb = sub.add_parser("kernelbench", help="compare python and compiled kernels")
    p_kb.add_argument("--sizes", default="50,100,200")
    p_kb.add_argument("--trials", type=int, default=3)
    p_kb.add_argument("--seed", type=int, default=0)
    p_kb.add_argument("--out", default=None)

    return parser


def _flag(value: bool) -> str:
    return "true" if value else "false"


def _cmd_factorize(args) -> int:
    a = read_matrix(args.matrix_file, args.domain)
    f = cr_factorize(a)
    print("rank: %d" % f.rank)
    print("pivot columns: %s" % " ".join(str(j) for j in f.pivot_cols))
    print("C:")
    write_matrix(f.c, sys.stdout)
    print("R:")
    write_matrix(f.r_factor, sys.stdout)
    return 0


def _cmd_pinv(args) -> int:
    a = read_matrix(args.matrix_file, args.domain)
    f = cr_factorize(a)
    if args.method == "reverse-order":
        result = pinv_reverse_order(f)
    elif args.method == "closed-form":
        result = pinv_rational_closed_form(f, a)
    else:
        result = pinv_always(f.c, f.r_factor)
    write_matrix(result, sys.stdout)
    report = check_penrose(a, result)
    print(
        "penrose: AGA=A %s, GAG=G %s, (GA)^T=GA %s, (AG)^T=AG %s (max residual %.3e)"
        % (*[_flag(h) for h in report.holds], max(report.residuals))
    )
    return 0


def _cmd_check_penrose(args) -> int:
    a = read_matrix(args.a_file, args.domain)
    g = read_matrix(args.g_file, args.domain)
    report = check_penrose(a, g, tol=args.tol)
    names = ["AGA=A", "GAG=G", "(GA)^T=GA", "(AG)^T=AG"]
    for name, held, residual in zip(names, report.holds, report.residuals):
        print("%s: %s (residual %.3e)" % (name, _flag(held), residual))
    print(
        "penrose: %s"
        % ("all four identities hold" if report.all_hold else "not a pseudoinverse")
    )
    return 0


def _cmd_check_greville(args) -> int:
    c = read_matrix(args.c_file, args.domain)
    r = read_matrix(args.r_file, args.domain)
    print("greville: %s" % _flag(check_greville(c, r)))
    return 0


def _cmd_rpinv(args) -> int:
    a = read_matrix(args.matrix_file, FLOAT)
    result = rpinv(a, args.p, args.q, args.seed)
    write_matrix(result.approx, sys.stdout)
    rank_pta, rank_aq, rank_a = result.achieved_ranks
    print("rank(P^T A) = %d, rank(AQ) = %d, rank(A) = %d" % (rank_pta, rank_aq, rank_a))
    print("rank-preserving: %s" % _flag(result.rank_preserving))
    if args.validate and not result.rank_preserving:
        print("error: sketch did not preserve rank", file=sys.stderr)
        return 1
    return 0


def _parse_sizes(text: str) -> tuple:
    try:
        return tuple(int(part) for part in text.split(",") if part)
    except ValueError:
        raise ValueError("sizes must be comma-separated integers, got %r" % text)


def _cmd_bench(args) -> int:
    config = bench_mod.BenchConfig(
        sizes=_parse_sizes(args.sizes),
        alpha=args.alpha,
        condition=args.cond,
        trials=args.trials,
        seed=args.seed,
        methods=tuple(part for part in args.methods.split(",") if part),
    )
    records = bench_mod.run_bench(config)
    bench_mod.emit_csv(records, args.out)
    print("wrote %d records to %s" % (len(records), args.out))
    if args.plot_data:
        bench_mod.write_plot_data(records, args.plot_data)
        print("wrote medians to %s" % args.plot_data)
    return 0


def _cmd_kernelbench(args) -> int:
    records = kbench_mod.run_kernel_bench(
        _parse_sizes(args.sizes), args.trials, args.seed
    )
    print("active backend: %s" % active_backend())
    print("backend kernel n median_seconds")
    for backend, kernel, n, median in kbench_mod.summarize(records):
        print("%s %s %d %.6f" % (backend, kernel, n, median))
    if args.out:
        kbench_mod.emit_kernel_csv(records, args.out)
        print("wrote %d records to %s" % (len(records), args.out))
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "factorize":
            return _cmd_factorize(args)
        if args.command == "pinv":
            return _cmd_pinv(args)
        if args.command == "check":
            if args.check_command == "penrose":
                return _cmd_check_penrose(args)
            return _cmd_check_greville(args)
        if args.command == "rpinv":
            return _cmd_rpinv(args)
        if args.command == "bench":
            return _cmd_bench(args)
        return _cmd_kernelbench(args)
    except (CrpinvError, OSError, ValueError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
