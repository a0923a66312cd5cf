"""Command line front end.

Exit codes: 0 success (or "equivalent"), 1 not equivalent, 2 argument or
value errors, 3 domain errors (zero quaternion, origin), 4 I/O errors.
Numbers are printed with 17 significant digits so output round-trips back
to the same float; angles are radians everywhere.
"""

from __future__ import annotations

import argparse
import math
import sys
from dataclasses import dataclass

from . import selfcheck
from .cycletime import (
    ComplexScalar,
    TimeQuaternion,
    canonical_distance,
    cycle_equivalent,
    eta,
    log_eta,
    shift_cycle,
)
from .errors import DomainError
from .hyperspherical import HypersphericalCoords, from_cartesian, to_cartesian
from .logarithm import log_branch
from .quaternion import Quaternion, exp_q, exp_series_oracle

__all__ = ["SweepRow", "sweep_rows", "main"]

EXIT_OK = 0
EXIT_NOT_EQUIVALENT = 1
EXIT_USAGE = 2
EXIT_DOMAIN = 3
EXIT_IO = 4

SWEEP_HEADER = "k,tau_input,t_canonical,tau_phase,theta1,theta2,theta3,max_abs_diff_vs_k0"


def _fmt(x: float) -> str:
    return format(float(x), ".17g")


def _quat_text(q: Quaternion) -> str:
    return " ".join(_fmt(c) for c in (q.q1, q.q2, q.q3, q.q4))


@dataclass(frozen=True)
class SweepRow:
    """One line of the sweep table: a cycle index and its canonical log."""

    k: int
    tau_input: float
    t_canonical: float
    tau_phase: float
    theta1: float
    theta2: float
    theta3: float
    max_abs_diff_vs_k0: float


def sweep_rows(
    t: float,
    tau: float,
    x: float,
    y: float,
    z: float,
    k_min: int,
    k_max: int,
) -> list[SweepRow]:
    """Canonical logs of shift_cycle(q, k) for every k in [k_min, k_max].

    The last column measures the worst disagreement of each row's canonical
    fields with the unshifted k = 0 row; equivalence predicts zeros.
    """
    if k_min > k_max:
        raise ValueError("k_min must not exceed k_max")
    base = eta(ComplexScalar(t, tau), x, y, z)
    ref = log_eta(base)
    rows = []
    for k in range(k_min, k_max + 1):
        shifted = shift_cycle(base, k)
        entry = log_eta(shifted)
        rows.append(
            SweepRow(
                k=k,
                tau_input=shifted.time.tau,
                t_canonical=entry.t,
                tau_phase=entry.tau_phase,
                theta1=entry.theta1,
                theta2=entry.theta2,
                theta3=entry.theta3,
                max_abs_diff_vs_k0=canonical_distance(entry, ref),
            )
        )
    return rows


def _cmd_exp(args) -> int:
    q = Quaternion(args.c1, args.c2, args.c3, args.c4)
    result = exp_q(q)
    print(_quat_text(result))
    if args.verify:
        series = exp_series_oracle(q, 60)
        diff = max(
            abs(result.q1 - series.q1),
            abs(result.q2 - series.q2),
            abs(result.q3 - series.q3),
            abs(result.q4 - series.q4),
        )
        print("series: " + _quat_text(series))
        print("max_abs_diff: " + _fmt(diff))
    return EXIT_OK


def _cmd_log(args) -> int:
    branch = log_branch(Quaternion(args.c1, args.c2, args.c3, args.c4), args.k)
    line = _quat_text(branch.value) + f" k={branch.k}"
    if branch.axis_defaulted:
        line += " axis_defaulted"
    print(line)
    return EXIT_OK


def _cmd_spherical(args) -> int:
    if args.inverse:
        coords = from_cartesian(Quaternion(args.c1, args.c2, args.c3, args.c4))
        print(
            " ".join(
                _fmt(v)
                for v in (coords.r, coords.theta1, coords.theta2, coords.theta3)
            )
        )
    else:
        q = to_cartesian(HypersphericalCoords(args.c1, args.c2, args.c3, args.c4))
        print(_quat_text(q))
    return EXIT_OK


def _cmd_eta_log(args) -> int:
    entry = log_eta(eta(ComplexScalar(args.t, args.tau), args.x, args.y, args.z))
    wraps = ",".join(str(w) for w in entry.wrap_counts)
    print(
        f"t={_fmt(entry.t)} tau_phase={_fmt(entry.tau_phase)}"
        f" theta1={_fmt(entry.theta1)} theta2={_fmt(entry.theta2)}"
        f" theta3={_fmt(entry.theta3)} wraps={wraps}"
    )
    return EXIT_OK


def _describe(label: str, q: TimeQuaternion) -> None:
    entry = log_eta(q)
    print(
        f"{label}: t={_fmt(entry.t)} tau_phase={_fmt(entry.tau_phase)}"
        f" theta1={_fmt(entry.theta1)} theta2={_fmt(entry.theta2)}"
        f" theta3={_fmt(entry.theta3)}"
    )


def _cmd_cycle_check(args) -> int:
    first = eta(ComplexScalar(args.t, args.tau), args.x, args.y, args.z)
    if args.against is not None:
        t2, tau2, x2, y2, z2 = args.against
        second = eta(ComplexScalar(t2, tau2), x2, y2, z2)
    else:
        second = shift_cycle(first, args.k)
    _describe("a", first)
    _describe("b", second)
    if cycle_equivalent(first, second, args.tol):
        print("EQUIVALENT")
        return EXIT_OK
    print("NOT EQUIVALENT")
    return EXIT_NOT_EQUIVALENT


def _cmd_sweep(args) -> int:
    rows = sweep_rows(args.t, args.tau, args.x, args.y, args.z, args.k_min, args.k_max)
    with open(args.out, "w", encoding="utf-8", newline="") as fh:
        fh.write(SWEEP_HEADER + "\n")
        for row in rows:
            fh.write(
                ",".join(
                    [
                        str(row.k),
                        _fmt(row.tau_input),
                        _fmt(row.t_canonical),
                        _fmt(row.tau_phase),
                        _fmt(row.theta1),
                        _fmt(row.theta2),
                        _fmt(row.theta3),
                        _fmt(row.max_abs_diff_vs_k0),
                    ]
                )
                + "\n"
            )
    return EXIT_OK


def _cmd_verify(args) -> int:
    results = selfcheck.run_all(samples=args.samples, seed=args.seed)
    ok = True
    for res in results:
        status = "PASS" if res.passed else "FAIL"
        ok = ok and res.passed
        print(
            f"{res.name:<26} samples={res.samples:<6}"
            f" max_dev={res.max_deviation:.3e} tol={res.tolerance:.1e} {status}"
        )
    return EXIT_OK if ok else EXIT_NOT_EQUIVALENT


def _add_quaternion_args(parser: argparse.ArgumentParser, names) -> None:
    for name, help_text in names:
        parser.add_argument(name, type=float, help=help_text)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quatcycles",
        description="Quaternion exponentials, branched logarithms, and cycle checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_exp = sub.add_parser("exp", help="quaternion exponential of q1 q2 q3 q4")
    _add_quaternion_args(
        p_exp,
        [("c1", "scalar part"), ("c2", "i part"), ("c3", "j part"), ("c4", "k part")],
    )
    p_exp.add_argument(
        "--verify",
        action="store_true",
        help="also print the 60-term series value and the max component diff",
    )
    p_exp.set_defaults(func=_cmd_exp)

    p_log = sub.add_parser("log", help="branched logarithm of q1 q2 q3 q4")
    _add_quaternion_args(
        p_log,
        [("c1", "scalar part"), ("c2", "i part"), ("c3", "j part"), ("c4", "k part")],
    )
    p_log.add_argument("--k", type=int, default=0, help="branch index (default 0)")
    p_log.set_defaults(func=_cmd_log)

    p_sph = sub.add_parser(
        "spherical",
        help="spherical coordinates: r theta1 theta2 theta3 -> components,"
        " or components -> coordinates with --inverse",
    )
    _add_quaternion_args(
        p_sph,
        [
            ("c1", "r (or q1 with --inverse)"),
            ("c2", "theta1 (or q2)"),
            ("c3", "theta2 (or q3)"),
            ("c4", "theta3 (or q4)"),
        ],
    )
    p_sph.add_argument("--inverse", action="store_true", help="components -> coordinates")
    p_sph.set_defaults(func=_cmd_spherical)

    p_eta = sub.add_parser("eta-log", help="canonical log of (t + tau*I) + x*i + y*j + z*k")
    _add_quaternion_args(
        p_eta,
        [
            ("t", "real time"),
            ("tau", "imaginary time"),
            ("x", "i part"),
            ("y", "j part"),
            ("z", "k part"),
        ],
    )
    p_eta.set_defaults(func=_cmd_eta_log)

    p_check = sub.add_parser(
        "cycle-check",
        help="test cycle equivalence against a k-shift or an explicit second point",
    )
    _add_quaternion_args(
        p_check,
        [
            ("t", "real time"),
            ("tau", "imaginary time"),
            ("x", "i part"),
            ("y", "j part"),
            ("z", "k part"),
        ],
    )
    p_check.add_argument("--k", type=int, default=1, help="cycle shift (default 1)")
    p_check.add_argument(
        "--against",
        type=float,
        nargs=5,
        metavar=("T", "TAU", "X", "Y", "Z"),
        help="compare against this point instead of a shift of the first",
    )
    p_check.add_argument("--tol", type=float, default=1e-10, help="tolerance (default 1e-10)")
    p_check.set_defaults(func=_cmd_cycle_check)

    p_sweep = sub.add_parser(
        "sweep", help="CSV of canonical logs across a range of cycle shifts"
    )
    _add_quaternion_args(
        p_sweep,
        [
            ("t", "real time"),
            ("tau", "imaginary time"),
            ("x", "i part"),
            ("y", "j part"),
            ("z", "k part"),
        ],
    )
    p_sweep.add_argument("--k-min", type=int, default=-3, help="first shift (default -3)")
    p_sweep.add_argument("--k-max", type=int, default=3, help="last shift (default 3)")
    p_sweep.add_argument("--out", required=True, help="output CSV path")
    p_sweep.set_defaults(func=_cmd_sweep)

    p_verify = sub.add_parser("verify", help="run the oracle battery and print max deviations")
    p_verify.add_argument(
        "--samples", type=int, default=1000, help="samples per check (default 1000)"
    )
    p_verify.add_argument(
        "--seed", type=int, default=20260816, help="RNG seed (default 20260816)"
    )
    p_verify.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
