"""Command-line surface: generate character polynomials, evaluate normalized
characters and cumulants, and run the verification suite.

Exit codes: 0 success, 1 usage error, 2 verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys

from symchar import charoracle, functionals, kerov, stanley, verify
from symchar.diagrams import MultiRect, parse_partition
from symchar.ratpoly import RatPoly

POLY_K_MAX = 8


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.exit(1, f"{self.prog}: error: {message}\n")


def build_parser() -> _Parser:
    parser = _Parser(prog="symchar", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    poly = sub.add_parser("poly", parents=[], help="print J_k or K_k",
                          description="Generate the character polynomial for a k-cycle.")
    poly.add_argument("--k", type=int, required=True)
    poly.add_argument("--basis", choices=("R", "S"), default="R",
                      help="R: free cumulants (Kerov polynomial); S: shape functionals")
    poly.add_argument("--route", choices=("count", "convert", "stanley"), default="count",
                      help="generation route; all routes agree")
    poly.add_argument("--json", action="store_true")

    character = sub.add_parser("character", help="normalized character Sigma_k")
    character.add_argument("--lambda", dest="lam", required=True,
                           help='partition, e.g. "4,3,1"; empty string for the empty diagram')
    character.add_argument("--k", type=int, required=True)
    character.add_argument("--json", action="store_true")

    cumulants = sub.add_parser("cumulants", help="table of S_k and R_k")
    cumulants.add_argument("--lambda", dest="lam", default=None)
    cumulants.add_argument("--p", dest="p", default=None, help='block heights, e.g. "1,2"')
    cumulants.add_argument("--q", dest="q", default=None, help='block widths, e.g. "3,1"')
    cumulants.add_argument("--max-k", type=int, default=4)
    cumulants.add_argument("--json", action="store_true")

    ver = sub.add_parser("verify", help="run the cross-route verification suite")
    ver.add_argument("--max-n", type=int, default=6)
    ver.add_argument("--max-k", type=int, default=5)
    ver.add_argument("--json", action="store_true")
    return parser


def _poly_for(k: int, basis: str, route: str) -> RatPoly:
    if basis == "S":
        if route == "count":
            return stanley.j_polynomial_by_counting(k)
        if route == "stanley":
            return stanley.j_polynomial_via_stanley(k)
        return kerov.kerov_polynomial_by_counting(k).substitute(
            {("R", j): functionals.r_in_terms_of_s(j) for j in range(2, k + 2)})
    if route == "count":
        return kerov.kerov_polynomial_by_counting(k)
    if route == "convert":
        return kerov.kerov_polynomial_by_conversion(k)
    table = kerov.s_in_terms_of_r(k + 1)
    return stanley.j_polynomial_via_stanley(k).substitute(
        {("S", j): poly for j, poly in table.items()})


def _cmd_poly(args) -> int:
    if not 1 <= args.k <= POLY_K_MAX:
        print(f"symchar poly: error: --k must be between 1 and {POLY_K_MAX}",
              file=sys.stderr)
        return 1
    poly = _poly_for(args.k, args.basis, args.route)
    if args.json:
        print(poly.to_json())
    else:
        print(poly)
    return 0


def _cmd_character(args) -> int:
    try:
        rows = parse_partition(args.lam)
    except ValueError as exc:
        print(f"symchar character: error: {exc}", file=sys.stderr)
        return 1
    if args.k < 1:
        print("symchar character: error: --k must be >= 1", file=sys.stderr)
        return 1
    value = charoracle.normalized_character(rows, args.k)
    if args.json:
        print(json.dumps({"lambda": list(rows), "k": args.k, "value": str(value)},
                         sort_keys=True))
    else:
        print(value)
    return 0


def _cumulant_rows(rows, multirect, k_max):
    """Rows (k, S_k, R_k) plus route-agreement flags, computing every route
    that is cheap at the given size."""
    table = []
    agree = True
    if multirect is not None and multirect.is_integral():
        rows = multirect.to_partition()
    if rows is not None:
        svals = functionals.s_vector(rows, k_max)
        fc = None
        if rows:
            from symchar.diagrams import frobenius
            fc = frobenius(rows)
        n = sum(rows)
        for k in range(2, k_max + 1):
            s_val = svals[k]
            if fc is not None and functionals.s_functional_frobenius(fc, k) != s_val:
                agree = False
            r_val = functionals.free_cumulant_from_s(svals, k)
            if n <= 6 and k <= 5:
                if functionals.free_cumulant_by_interpolation(rows, k) != r_val:
                    agree = False
            if multirect is not None and k <= 6:
                if functionals.free_cumulant_multirect(multirect, k) != r_val:
                    agree = False
            table.append((k, s_val, r_val))
        return table, agree
    svals = {k: functionals.s_functional_multirect(multirect, k)
             for k in range(2, k_max + 1)}
    for k in range(2, k_max + 1):
        r_val = functionals.free_cumulant_from_s(svals, k)
        if k <= 6 and functionals.free_cumulant_multirect(multirect, k) != r_val:
            agree = False
        table.append((k, svals[k], r_val))
    return table, agree


def _cmd_cumulants(args) -> int:
    if (args.p is None) != (args.q is None):
        print("symchar cumulants: error: --p and --q must be given together",
              file=sys.stderr)
        return 1
    if (args.lam is None) == (args.p is None):
        print("symchar cumulants: error: give either --lambda or --p/--q",
              file=sys.stderr)
        return 1
    if args.max_k < 2:
        print("symchar cumulants: error: --max-k must be >= 2", file=sys.stderr)
        return 1
    try:
        rows = parse_partition(args.lam) if args.lam is not None else None
        multirect = (MultiRect.from_strings(args.p, args.q)
                     if args.p is not None else None)
    except ValueError as exc:
        print(f"symchar cumulants: error: {exc}", file=sys.stderr)
        return 1
    table, agree = _cumulant_rows(rows, multirect, args.max_k)
    if args.json:
        doc = {
            "S": {str(k): str(s) for k, s, _ in table},
            "R": {str(k): str(r) for k, _, r in table},
            "routes_agree": agree,
        }
        if rows is not None:
            doc["lambda"] = list(rows)
        else:
            doc["p"] = [str(x) for x in multirect.p]
            doc["q"] = [str(x) for x in multirect.q]
        print(json.dumps(doc, sort_keys=True))
    else:
        print("k\tS_k\tR_k")
        for k, s_val, r_val in table:
            print(f"{k}\t{s_val}\t{r_val}")
        if not agree:
            print("route mismatch detected", file=sys.stderr)
    return 0 if agree else 2


def _cmd_verify(args) -> int:
    results = verify.run_checks(args.max_n, args.max_k)
    failed = [r for r in results if not r.passed]
    if args.json:
        doc = {"checks": [{"check": r.name, "status": "pass" if r.passed else "fail"}
                          for r in results]}
        print(json.dumps(doc, sort_keys=True))
    else:
        for r in results:
            line = f"{'PASS' if r.passed else 'FAIL'} {r.name}"
            if not r.passed and r.detail:
                line += f"  ({r.detail})"
            print(line)
        if results:
            print(f"{len(results) - len(failed)}/{len(results)} checks passed")
    return 2 if failed else 0


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 1
    if args.command == "poly":
        return _cmd_poly(args)
    if args.command == "character":
        return _cmd_character(args)
    if args.command == "cumulants":
        return _cmd_cumulants(args)
    return _cmd_verify(args)


if __name__ == "__main__":
    sys.exit(main())
