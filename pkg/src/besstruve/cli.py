"""Command-line access to the integral evaluators, polynomial dumps,
table generation, and the verification suites.

Usage examples:

    besstruve eval s --z 2 --zeta 1
    besstruve eval dj1z --k 2 --z 0 --format csv
    besstruve poly r1 --nu 3
    besstruve poly sigma --k 1
    besstruve table c --z-grid 0.5,1,2 --zeta-grid 0,1 --format csv
    besstruve verify --suite lommel

Exit codes: 0 success, 1 verification failure, 2 domain/usage error,
3 convergence failure.  All inputs are flags; no environment variables or
configuration files are consulted, so identical invocations produce
byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import sys

from .evaluation import ConvergenceError, DomainError, EvalConfig
from .integrals import IntegralRequest, c_integral, s_integral
from .bessel_deriv import deriv_j1z, p_polys
from .struve_deriv import deriv_h1z, s_sum_poly, sigma_polys_composed
from .lommel import r0_poly, r1_poly
from .verify import run_suites

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_DOMAIN = 2
EXIT_CONVERGENCE = 3


def _record_to_csv(record: dict) -> str:
    header = ",".join(record.keys())
    row = ",".join(repr(v) if isinstance(v, float) else str(v) for v in record.values())
    return f"{header}\n{row}"


def _eval_record(subject: str, args) -> dict:
    cfg = EvalConfig(abs_tol=args.tol)
    if subject in ("s", "c"):
        if args.z is None or args.zeta is None:
            raise DomainError(f"eval {subject} requires --z and --zeta")
        req = IntegralRequest(args.z, args.zeta, cfg)
        res = s_integral(req) if subject == "s" else c_integral(req)
        return {
            "subject": subject,
            "z": args.z,
            "zeta": args.zeta,
            "tol": args.tol,
            "value": res.value,
            "abs_err_estimate": res.abs_err_estimate,
            "terms_used": res.terms_used,
            "path": res.path,
        }
    if args.k is None or args.z is None:
        raise DomainError(f"eval {subject} requires --k and --z")
    res = deriv_j1z(args.k, args.z, cfg) if subject == "dj1z" else deriv_h1z(args.k, args.z, cfg)
    return {
        "subject": subject,
        "k": args.k,
        "z": args.z,
        "tol": args.tol,
        "value": res.value,
        "abs_err_estimate": res.abs_err_estimate,
        "terms_used": res.terms_used,
        "path": res.path,
    }


def _cmd_eval(args) -> int:
    record = _eval_record(args.subject, args)
    if args.format == "json":
        print(json.dumps(record))
    else:
        print(_record_to_csv(record))
    return EXIT_OK


def _cmd_poly(args) -> int:
    family = args.family
    if family in ("r0", "r1", "s_sum"):
        if args.nu is None:
            raise DomainError(f"poly {family} requires --nu")
        if family == "r0":
            poly = r0_poly(args.nu)
        elif family == "r1":
            poly = r1_poly(args.nu)
        else:
            poly = s_sum_poly(args.nu)
        print(json.dumps(poly.to_json_obj()))
        return EXIT_OK
    if args.k is None:
        raise DomainError(f"poly {family} requires --k")
    if family == "p":
        form = p_polys(args.k)
        print(
            json.dumps(
                {
                    "k": form.k,
                    "p1": form.p1.to_json_obj(),
                    "p0": form.p0.to_json_obj(),
                }
            )
        )
    else:
        form = sigma_polys_composed(args.k)
        print(
            json.dumps(
                {
                    "k": form.k,
                    "sigma0": form.sigma0.to_json_obj(),
                    "sigma1": form.sigma1.to_json_obj(),
                    "sigma2": form.sigma2.to_json_obj(),
                }
            )
        )
    return EXIT_OK


def _parse_grid(text: str, name: str) -> list[float]:
    try:
        values = [float(part) for part in text.split(",") if part.strip() != ""]
    except ValueError as exc:
        raise DomainError(f"malformed {name}: {text!r}") from exc
    if not values:
        raise DomainError(f"empty {name}: {text!r}")
    return values


def _cmd_table(args) -> int:
    z_grid = _parse_grid(args.z_grid, "--z-grid")
    zeta_grid = _parse_grid(args.zeta_grid, "--zeta-grid")
    cfg = EvalConfig(abs_tol=args.tol)
    evaluate = s_integral if args.subject == "s" else c_integral
    rows = []
    for z in z_grid:
        for zeta in zeta_grid:
            res = evaluate(IntegralRequest(z, zeta, cfg))
            rows.append(
                {
                    "z": z,
                    "zeta": zeta,
                    "value": res.value,
                    "err": res.abs_err_estimate,
                    "terms": res.terms_used,
                    "path": res.path,
                }
            )
    if args.format == "json":
        print(json.dumps(rows))
    else:
        print("z,zeta,value,err,terms,path")
        for row in rows:
            print(
                f"{row['z']!r},{row['zeta']!r},{row['value']!r},"
                f"{row['err']!r},{row['terms']},{row['path']}"
            )
    return EXIT_OK


def _cmd_verify(args) -> int:
    results = run_suites(args.suite, args.tol)
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        print(f"[{status}] {r.suite}/{r.name}: {r.detail}")
    summary = {
        "suite": args.suite,
        "checks": [
            {"suite": r.suite, "name": r.name, "passed": r.passed, "detail": r.detail}
            for r in results
        ],
        "all_passed": all(r.passed for r in results),
    }
    print(json.dumps(summary))
    return EXIT_OK if summary["all_passed"] else EXIT_VERIFY_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="besstruve",
        description="Evaluate the two oscillatory moment integrals, their "
        "derivative building blocks, and the exact prefactor polynomials.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="evaluate an integral or a kernel derivative")
    p_eval.add_argument("subject", choices=("s", "c", "dj1z", "dh1z"))
    p_eval.add_argument("--z", type=float, default=None)
    p_eval.add_argument("--zeta", type=float, default=None)
    p_eval.add_argument("--k", type=int, default=None)
    p_eval.add_argument("--tol", type=float, default=1e-10)
    p_eval.add_argument("--format", choices=("json", "csv"), default="json")
    p_eval.set_defaults(func=_cmd_eval)

    p_poly = sub.add_parser("poly", help="dump an exact prefactor polynomial as JSON")
    p_poly.add_argument("family", choices=("r0", "r1", "p", "sigma", "s_sum"))
    p_poly.add_argument("--nu", type=int, default=None)
    p_poly.add_argument("--k", type=int, default=None)
    p_poly.set_defaults(func=_cmd_poly)

    p_table = sub.add_parser("table", help="evaluate an integral over a grid")
    p_table.add_argument("subject", choices=("s", "c"))
    p_table.add_argument("--z-grid", required=True)
    p_table.add_argument("--zeta-grid", required=True)
    p_table.add_argument("--tol", type=float, default=1e-10)
    p_table.add_argument("--format", choices=("csv", "json"), default="csv")
    p_table.set_defaults(func=_cmd_table)

    p_verify = sub.add_parser("verify", help="run a verification suite")
    p_verify.add_argument(
        "--suite",
        choices=("all", "lommel", "bessel", "struve", "integrals", "scaling"),
        default="all",
    )
    p_verify.add_argument(
        "--tol",
        type=float,
        default=None,
        help="override the numeric comparison tolerance (symbolic checks stay exact)",
    )
    p_verify.set_defaults(func=_cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        # DomainError and invalid tolerance/threshold configuration
        print(f"domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except ConvergenceError as exc:
        print(f"convergence failure: {exc}", file=sys.stderr)
        return EXIT_CONVERGENCE


if __name__ == "__main__":
    sys.exit(main())
