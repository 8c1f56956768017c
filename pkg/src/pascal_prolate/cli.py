"""Command-line interface.

Exit codes: 0 success, 1 a mathematical check failed, 2 bad arguments.
"""

from __future__ import annotations

import argparse
import cmath
import csv
import io
import json
import random
import sys
from fractions import Fraction
from typing import Callable

from . import contour, curves, genfun, ode, operators, padic
from .parallel import parallel_map, resolve_workers
from .ring import check_odd_prime, format_rational

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _even(N: int) -> None:
    if N < 0 or N % 2:
        raise UsageError(f"N must be even and nonnegative, got {N}")


def _prime(p: int) -> None:
    try:
        check_odd_prime(p)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _dump(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


# eigvec

def cmd_eigvec(args) -> tuple[int, str]:
    _even(args.n)
    v = genfun.theorem_A_vector(args.n)
    f = genfun.gen_poly(v)
    entries = [format_rational(x) for x in v]
    coeffs = [format_rational(f[k]) for k in range(args.n + 1)]
    if args.format == "json":
        return EXIT_OK, _dump({"N": args.n, "vector": entries, "poly": coeffs}) + "\n"
    if args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["k", "v_k", "z_power", "coefficient"])
        for k in range(args.n + 1):
            w.writerow([k, entries[k], k, coeffs[k]])
        return EXIT_OK, buf.getvalue()
    lines = [f"v_{k} = {e}" for k, e in enumerate(entries)]
    lines.append(f"f(v; z) = {f}")
    return EXIT_OK, "\n".join(lines) + "\n"


# verify

def _residual(lhs, rhs) -> str:
    if isinstance(lhs, list):
        return str([format_rational(a - b) for a, b in zip(lhs, rhs)])
    return str(lhs - rhs)


def _check_pascal(N: int):
    if N % 2:
        return None
    v = genfun.theorem_A_vector(N)
    Tv = operators.pascal_apply(N, v)
    if Tv == v and v[-1] == 1:
        return True, {}
    return False, {"vector": [format_rational(x) for x in v], "residual": _residual(Tv, v)}


def _check_jacobi(N: int):
    if N % 2:
        return None
    v = genfun.theorem_A_vector(N)
    mu = Fraction(N * N + 2 * N, 2)
    Jv = operators.jacobi_apply(N, v)
    muv = [mu * x for x in v]
    if Jv == muv:
        return True, {}
    return False, {"vector": [format_rational(x) for x in v], "residual": _residual(Jv, muv)}


def _check_binomial(N: int):
    for k in range(N + 1):
        e = operators.basis_vector(N, k)
        if operators.binomial_apply(N, operators.binomial_apply(N, e)) != e:
            return False, {"identity": "B^2 = I", "vector": e}
        if not genfun.b_adjoint_identity_check(N, e):
            return False, {"identity": "f(B*v) = (z-1)^N f(v; z/(z-1))", "vector": e}
    if N % 2 == 0:
        v = genfun.theorem_A_vector(N)
        vec = [format_rational(x) for x in v]
        if not genfun.eigen_relation_check(N, v, 1):
            return False, {"identity": "eigen relation", "vector": vec}
        try:
            sign = operators.binomial_sign(N, v)
        except ValueError:
            return False, {"identity": "B v = +-v", "vector": vec}
        return True, {"binomial_sign": sign}
    return True, {}


def _check_cholesky(N: int):
    rep = operators.structure_checks(N)
    return rep.ok, {"identity": rep.failed, "vector": rep.witness}


def _check_ode(N: int):
    # the operator with mu = 0 carries f(v) to f(J v)
    op = ode.theoremB_operator(N, 0)
    for k in range(N + 1):
        e = operators.basis_vector(N, k)
        lhs = op(ode.ef(genfun.gen_poly(e)))
        rhs = ode.ef(genfun.gen_poly(operators.jacobi_apply(N, e)))
        if lhs != rhs:
            return False, {"identity": "D f(v) = f(J v)", "vector": e}
    if N % 2 == 0:
        mu = Fraction(N * N + 2 * N, 2)
        res = ode.theoremB_operator(N, mu)(ode.ef(genfun.theorem_A_poly(N)))
        if not res.is_zero():
            return False, {"identity": "ODE annihilates f", "residual": repr(res)}
    return True, {}


def _check_symmetric_square(N: int):
    if N % 2:
        return None
    mu_star = Fraction(N * N + 2 * N, 2)
    L = ode.symmetric_square_criterion(N, mu_star)
    if L is None or L != ode.symmsquare_L(N):
        return False, {"identity": "criterion at mu*", "mu": format_rational(mu_star)}
    for mu in sorted({Fraction(0), Fraction(1), Fraction(N * N)} - {mu_star}):
        if ode.symmetric_square_criterion(N, mu) is not None:
            return False, {"identity": "criterion rejects mu", "mu": format_rational(mu)}
    if not ode.substitution_conjugate_check(N):
        return False, {"identity": "substitution y~ = z^(N+1) y"}
    return True, {}


def _check_gensoln(N: int):
    if N % 2:
        return None
    return ode.gensoln_basis_check(N), {}


def _check_helper(N: int):
    if N % 2:
        return None
    if not genfun.palindromy_check(N):
        return False, {"identity": "palindromy", "poly": str(genfun.legendre_factor(N))}
    if not genfun.helper_identity_check(N):
        return False, {"identity": "helper"}
    return True, {}


def _check_functional_eq(N: int):
    rng = random.Random(N)
    vectors = [operators.basis_vector(N, k) for k in range(N + 1)]
    vectors += [[rng.randint(-50, 50) for _ in range(N + 1)] for _ in range(10)]
    for v in vectors:
        lhs = genfun.taction_image(N, v)
        rhs = genfun.gen_poly(operators.pascal_apply(N, v))
        if lhs != rhs:
            return False, {"vector": v, "residual": str(lhs - rhs)}
    return True, {}


SUITES: dict[str, Callable] = {
    "pascal": _check_pascal,
    "jacobi": _check_jacobi,
    "binomial": _check_binomial,
    "cholesky": _check_cholesky,
    "ode": _check_ode,
    "symmetric-square": _check_symmetric_square,
    "gensoln": _check_gensoln,
    "helper": _check_helper,
    "functional-eq": _check_functional_eq,
}


def _verify_task(task: tuple[str, int]):
    suite, N = task
    return N, SUITES[suite](N)


def cmd_verify(args) -> tuple[int, str]:
    if args.n_min < 0 or args.n_max < args.n_min:
        raise UsageError("need 0 <= --n-min <= --n-max")
    tasks = [(args.suite, N) for N in range(args.n_min, args.n_max + 1)]
    results = parallel_map(_verify_task, tasks, args.workers)
    checked, witness = [], None
    for N, outcome in results:
        if outcome is None:
            continue
        ok, detail = outcome
        checked.append({"N": N, "pass": ok, **({"detail": detail} if detail and ok else {})})
        if not ok and witness is None:
            witness = {"N": N, **detail}
    passed = witness is None
    report = {"suite": args.suite, "n_min": args.n_min, "n_max": args.n_max,
              "pass": passed, "checked": checked, "witness": witness}
    if args.format == "text":
        lines = [f"{args.suite} N={c['N']}: {'pass' if c['pass'] else 'FAIL'}" for c in checked]
        lines.append(f"{args.suite}: {'PASS' if passed else 'FAIL'}")
        if witness:
            lines.append(f"witness: {_dump(witness)}")
        out = "\n".join(lines) + "\n"
    else:
        out = _dump(report) + "\n"
    return (EXIT_OK if passed else EXIT_FAIL), out


# curve

def cmd_curve(args) -> tuple[int, str]:
    _prime(args.p)
    if args.sweep == (args.z is not None):
        raise UsageError("give exactly one of --z or --sweep")
    if args.z is not None and args.z % args.p in (0, 1):
        raise UsageError(f"z = {args.z} is singular (z must not be 0 or 1 mod p)")
    zs = None if args.sweep else [args.z]
    counts = curves.count_sweep(args.p, zs, workers=args.workers)
    if args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["p", "z", "points", "trace"])
        for c in counts:
            w.writerow([c.p, c.z, c.points, c.trace])
        return EXIT_OK, buf.getvalue()
    if args.format == "text":
        return EXIT_OK, "".join(
            f"p={c.p} z={c.z} points={c.points} trace={c.trace}\n" for c in counts)
    return EXIT_OK, "".join(_dump(c.as_dict()) + "\n" for c in counts)


# congruence

def cmd_congruence(args) -> tuple[int, str]:
    _prime(args.p)
    results = curves.congruence_suite(args.p, workers=args.workers)
    passed = all(r.ok for r in results)
    if args.format == "text":
        lines = [f"{r.name}: {'pass' if r.ok else 'FAIL'}"
                 + (f" (witness z={r.witness})" if r.witness is not None else "")
                 for r in results]
        out = "\n".join(lines) + "\n"
    else:
        out = _dump({"p": args.p, "pass": passed,
                     "checks": [{"name": r.name, "pass": r.ok, "witness": r.witness}
                                for r in results]}) + "\n"
    return (EXIT_OK if passed else EXIT_FAIL), out


# padic

ODE_CHECK_ORDER = 50


def cmd_padic(args) -> tuple[int, str]:
    _prime(args.p)
    if args.n < 1:
        raise UsageError("level --n must be >= 1")
    if args.samples < 1:
        raise UsageError("--samples must be >= 1")
    if args.p**args.n > 3000:
        raise UsageError("p^n beyond desk scale (3000)")
    rep = padic.padic_congruence_check(args.p, args.n, range(1, args.samples + 1))
    hyp = padic.hypergeometric_ode_check(ODE_CHECK_ORDER)
    sym = padic.symmetric_square_ode_check(ODE_CHECK_ORDER)
    report = rep.as_dict()
    report.update({"hypergeometric_ode": hyp, "symmetric_square_ode": sym})
    passed = rep.ok and hyp and sym
    report["pass"] = passed
    if args.format == "text":
        out = "".join(f"{k}: {v}\n" for k, v in report.items())
    else:
        out = _dump(report) + "\n"
    return (EXIT_OK if passed else EXIT_FAIL), out


# integral

# Sample points where the pole 1 - 1/z sits left of the line, i.e. |z - 1| < 1
# (z = 0 is the boundary limit, where the pole goes to infinity).
INTEGRAL_SAMPLES = [0, 0.5, 1, 0.25, 0.75, 1.5, 1 + 0.5j, 1 - 0.5j, 0.2 + 0.3j, 1.8]


def integral_samples(count: int) -> list[complex]:
    pts = [complex(z) for z in INTEGRAL_SAMPLES[:count]]
    extra = count - len(pts)
    for k in range(extra):
        pts.append(1 + 0.7 * cmath.exp(2j * cmath.pi * (k + 0.5) / extra))
    return pts


def _integral_task(task):
    N, v, z, tol = task
    res = contour.integral_operator_numeric(N, v, z, tol=tol)
    expected = complex(genfun.gen_poly(v)(z))  # eigenvalue 1
    return z, res, abs(res.value - expected)


def cmd_integral(args) -> tuple[int, str]:
    if args.n < 2 or args.n % 2:
        raise UsageError(f"N must be even and >= 2, got {args.n}")
    if args.samples < 1:
        raise UsageError("--samples must be >= 1")
    v = genfun.theorem_A_vector(args.n)
    tasks = [(args.n, v, z, args.tol) for z in integral_samples(args.samples)]
    rows = parallel_map(_integral_task, tasks, args.workers)
    max_err = max(err for _, _, err in rows)
    passed = max_err <= args.tol
    report = {
        "N": args.n, "lambda": 1, "tol": args.tol, "max_error": max_err, "pass": passed,
        "samples": [{"z": [z.real, z.imag], "value": [r.value.real, r.value.imag],
                     "error": err, "quadrature_error": r.error} for z, r, err in rows],
    }
    if args.format == "text":
        lines = [f"z={z}: |I - f| = {err:.3e}" for z, _, err in rows]
        lines.append(f"max error {max_err:.3e} (tol {args.tol:g}): {'pass' if passed else 'FAIL'}")
        out = "\n".join(lines) + "\n"
    else:
        out = _dump(report) + "\n"
    return (EXIT_OK if passed else EXIT_FAIL), out


# parser

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--threads", type=int, default=argparse.SUPPRESS,
                        help="worker count (default: $PROLATE_THREADS or CPU count)")
    common.add_argument("--format", choices=["json", "csv", "text"], default=argparse.SUPPRESS)

    parser = argparse.ArgumentParser(prog="pascal-prolate", parents=[common],
                                     description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eigvec", parents=[common], help="eigenvalue-1 eigenvector of T_N")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_eigvec)

    p = sub.add_parser("verify", parents=[common], help="run an exact verification suite")
    p.add_argument("suite", choices=sorted(SUITES))
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--n-min", type=int, default=0)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("curve", parents=[common], help="point counts on y^2 = x(x-1)(x-z)")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--z", type=int)
    p.add_argument("--sweep", action="store_true")
    p.set_defaults(func=cmd_curve)

    p = sub.add_parser("congruence", parents=[common], help="mod-p congruence checks")
    p.add_argument("--p", type=int, required=True)
    p.set_defaults(func=cmd_congruence)

    p = sub.add_parser("padic", parents=[common], help="U_n = F^2 mod p^n on the open disk")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--n", type=int, default=1)
    p.add_argument("--samples", type=int, default=10)
    p.set_defaults(func=cmd_padic)

    p = sub.add_parser("integral", parents=[common], help="numeric contour-integral check")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--samples", type=int, default=10)
    p.add_argument("--tol", type=float, default=1e-8)
    p.set_defaults(func=cmd_integral)
    return parser


def run(argv: list[str] | None = None) -> tuple[int, str, str]:
    """Parse and execute; returns (exit code, stdout text, stderr text)."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0), "", ""
    args.format = getattr(args, "format", "json")
    try:
        try:
            args.workers = resolve_workers(getattr(args, "threads", None))
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        code, out = args.func(args)
    except UsageError as exc:
        return EXIT_USAGE, "", f"error: {exc}\n"
    return code, out, ""


def main(argv: list[str] | None = None) -> int:
    code, out, err = run(argv)
    sys.stdout.write(out)
    sys.stderr.write(err)
    return code


if __name__ == "__main__":
    sys.exit(main())
