"""``qsvand`` command line: gen, factor, invert, verify, bench.

Exit codes: 0 success, 2 numerical failure (singular matrix or failed
verification), 3 bad input.
"""

from __future__ import annotations

import argparse
import os
import sys

import numpy as np

from . import benchmark
from .displacement import (DisplacementInstance, canonical_vq_generators,
                           displacement_residual, materialize)
from .errors import (InstanceFormatError, InvalidNodesError, InvalidSystemError,
                     SingularBasisError, SingularMatrixError)
from .gepp import gepp
from .instance_io import dumps_instance, format_matrix, load_instance
from .inversion import invert
from .oracle import cond_estimate, dense_inverse
from .sampling import random_nodes, random_system

EXIT_OK = 0
EXIT_NUMERIC = 2
EXIT_INPUT = 3
DEFAULT_TOL = 1e-7


class InputError(Exception):
    pass


def residual_tolerance() -> float:
    raw = os.environ.get("QSVAND_TOL")
    if raw is None:
        return DEFAULT_TOL
    try:
        return float(raw)
    except ValueError:
        raise InputError(f"QSVAND_TOL={raw!r} is not a number") from None


def generate(family, n, alpha_rank, seed, canonical=False) -> DisplacementInstance:
    if n < 1:
        raise InputError("n must be at least 1")
    if alpha_rank < 1:
        raise InputError("alpha must be at least 1")
    rng = np.random.default_rng(seed)
    sys_ = random_system(family, n, rng)
    x = random_nodes(n, rng)
    if canonical:
        return canonical_vq_generators(sys_, x)
    return DisplacementInstance(sys_, x, rng.standard_normal((n, alpha_rank)),
                                rng.standard_normal((alpha_rank, n)))


def _emit(text, out):
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w") as fh:
            fh.write(text)


def _load(args):
    try:
        return load_instance(args.instance, validate=not args.no_validate)
    except OSError as exc:
        raise InputError(f"cannot read {args.instance}: {exc.strerror}") from exc


def verification(inst, Rinv):
    """Dense checks of a computed inverse against the oracle."""
    R = materialize(inst)
    R_oracle = dense_inverse(R)
    eye = np.eye(inst.n)
    kappa = cond_estimate(R, R_oracle)
    scale = np.abs(R_oracle).max()
    return {
        "residual": float(np.abs(R @ Rinv - eye).sum(axis=1).max()),
        "left_residual": float(np.abs(Rinv @ R - eye).sum(axis=1).max()),
        "max_rel_deviation": float(np.abs(Rinv - R_oracle).max() / scale),
        "kappa": kappa,
    }


def _print_report(report, stream):
    for key, value in report.items():
        print(f"{key}: {value:.6e}", file=stream)


def cmd_gen(args):
    inst = generate(args.family, args.n, args.alpha, args.seed, args.canonical)
    _emit(dumps_instance(inst), args.out)
    return EXIT_OK


def cmd_factor(args):
    inst = _load(args)
    fact = gepp(inst)
    text = (format_matrix("perm", fact.perm + 1)
            + format_matrix("L", fact.L) + format_matrix("U", fact.U))
    _emit(text, args.out)
    return EXIT_OK


def cmd_invert(args):
    inst = _load(args)
    tol = residual_tolerance()
    result = invert(inst, report=False)
    _emit(format_matrix("Rinv", result.Rinv), args.out)
    report_stream = sys.stdout if args.out else sys.stderr
    if not args.verify:
        return EXIT_OK
    report = verification(inst, result.Rinv)
    threshold = tol * report["kappa"]
    _print_report(report, report_stream)
    print(f"threshold: {threshold:.6e}", file=report_stream)
    ok = report["residual"] <= threshold
    print("verify: " + ("ok" if ok else "FAILED"), file=report_stream)
    return EXIT_OK if ok else EXIT_NUMERIC


def cmd_verify(args):
    """Displacement, factorization and inversion checks on one instance."""
    inst = _load(args)
    tol = residual_tolerance()
    R = materialize(inst)
    normR = float(np.abs(R).sum(axis=1).max())
    fact = gepp(inst)
    result = invert(inst, report=False, fact=fact)
    report = {
        "displacement_residual": displacement_residual(inst, R) / max(normR, 1.0),
        "plu_error": float(np.abs(fact.reconstruct() - R).sum(axis=1).max()) / normR,
    }
    report.update(verification(inst, result.Rinv))
    _print_report(report, sys.stdout)
    checks = [report["displacement_residual"] <= 1e-10,
              report["plu_error"] <= 1e-9,
              report["residual"] <= tol * report["kappa"]]
    ok = all(checks)
    print("verify: " + ("ok" if ok else "FAILED"))
    return EXIT_OK if ok else EXIT_NUMERIC


def _sizes(text):
    try:
        sizes = [int(s) for s in text.split(",") if s.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad size list {text!r}") from None
    if not sizes or min(sizes) < 1:
        raise argparse.ArgumentTypeError("sizes must be positive integers")
    return sizes


def cmd_bench(args):
    if args.reps < 1:
        raise InputError("reps must be at least 1")
    rows, exponent = benchmark.run_bench(args.family, args.sizes, args.reps,
                                         args.alpha, args.seed)
    lines = ["n,fast_seconds,oracle_seconds,fitted_exponent"]
    exp_text = "" if exponent is None else f"{exponent:.4f}"
    for n, fast, oracle in rows:
        oracle_text = "" if oracle is None else f"{oracle:.6e}"
        lines.append(f"{n},{fast:.6e},{oracle_text},{exp_text}")
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def build_parser():
    p = argparse.ArgumentParser(prog="qsvand", description=(
        "Fast factorization and inversion of quasiseparable-Vandermonde-like matrices."))
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="write a random instance file")
    g.add_argument("--family", choices=["qs", "ss", "wf"], default="qs")
    g.add_argument("--n", type=int, default=8)
    g.add_argument("--alpha", type=int, default=1, help="displacement rank")
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--canonical", action="store_true",
                   help="use the rank-one generators of V_Q itself")
    g.add_argument("--out")
    g.set_defaults(func=cmd_gen)

    for name, func, helptext in (("factor", cmd_factor, "dump P (as swaps), L, U"),
                                 ("invert", cmd_invert, "dump the inverse"),
                                 ("verify", cmd_verify, "check an instance against the oracle")):
        c = sub.add_parser(name, help=helptext)
        c.add_argument("instance")
        c.add_argument("--no-validate", action="store_true",
                       help="accept repeated nodes")
        if name != "verify":
            c.add_argument("--out")
        if name == "invert":
            c.add_argument("--verify", action="store_true")
        c.set_defaults(func=func)

    b = sub.add_parser("bench", help="time fast inversion against the dense oracle")
    b.add_argument("--family", choices=["qs", "ss", "wf"], default="qs")
    b.add_argument("--sizes", type=_sizes, default=[64, 128, 256, 512])
    b.add_argument("--reps", type=int, default=3)
    b.add_argument("--alpha", type=int, default=1)
    b.add_argument("--seed", type=int, default=0)
    b.add_argument("--out")
    b.set_defaults(func=cmd_bench)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InputError, InstanceFormatError, InvalidSystemError, InvalidNodesError) as exc:
        print(f"qsvand: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (SingularMatrixError, SingularBasisError) as exc:
        print(f"qsvand: numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC


if __name__ == "__main__":
    sys.exit(main())
