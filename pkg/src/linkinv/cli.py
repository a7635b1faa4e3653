"""Command-line front end: ``linkinv <command> ...``."""

from __future__ import annotations

import argparse
import json
import sys

from .compute import EXIT_INPUT, compute
from .errors import (LinkInvError, NotInImageError, NotSigmaShapedError, ParseError,
                     SchemaError)
from .generate import GenParams, generate
from .laurent import format_poly, parse_poly
from .modelfile import emit_model, load_model
from .selftest import MUTATIONS, selftest
from .theorem import (kirk_decompose, kirk_to_theorem, lambda_n_decompose, predicted_omega,
                      theorem_coeffs)


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload, indent=2, ensure_ascii=False))
    else:
        print(text)


def cmd_compute(args) -> int:
    try:
        mf = load_model(args.file)
    except OSError as exc:
        print(f"error: cannot read {args.file}: {exc.strerror}", file=sys.stderr)
        return EXIT_INPUT
    except (ParseError, SchemaError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    report = compute(mf, verbose=args.verbose)
    print(report.to_json() if args.json else report.render())
    if report.exit_code == EXIT_INPUT:
        for note in report.notes[-1:]:
            print(f"error: {note}", file=sys.stderr)
    return report.exit_code


def cmd_generate(args) -> int:
    params = GenParams(max_d=args.max_d, max_n=args.max_n, max_deg=args.max_deg,
                       sigma_zero=args.sigma_zero)
    text = emit_model(generate(args.seed, params))
    if args.output in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    return 0


def cmd_lambda_n(args) -> int:
    r, at_one = lambda_n_decompose(args.n)
    rhat = r.shift(3)
    _emit(args, {"n": args.n, "r_n": format_poly(r), "r_n_at_1": at_one,
                 "rhat_n": format_poly(rhat)},
          f"n = {args.n}\nr_n    = {r}   (mod 2)\nr_n(1) = {at_one}\nrhat_n = {rhat}")
    return 0


def cmd_kirk(args) -> int:
    p = parse_poly(args.poly)
    dec = kirk_decompose(p)
    payload = {"a0": dec.a0, "a": {str(n): v for n, v in sorted(dec.a.items())}}
    lines = [f"a0 = {dec.a0}"] + [f"a_{n} = {v}" for n, v in sorted(dec.a.items())]
    try:
        coeffs = kirk_to_theorem(dec)
    except NotSigmaShapedError:
        coeffs = None
    if coeffs is not None:
        payload["theorem_coeffs"] = {str(n): v for n, v in coeffs}
        lines.append("as sum a_n (s^n - 1): "
                     + ", ".join(f"a_{n} = {v}" for n, v in coeffs) if coeffs else
                     "as sum a_n (s^n - 1): all zero")
    _emit(args, payload, "\n".join(lines))
    return 0


def cmd_predict(args) -> int:
    p = parse_poly(args.poly)
    coeffs = theorem_coeffs(p)
    omega = predicted_omega(p)
    _emit(args, {"coeffs": {str(n): v for n, v in coeffs}, "omega_predicted": omega},
          "\n".join([f"a_{n} = {v}" for n, v in coeffs] + [f"omega_- = {omega}"]))
    return 0


def cmd_selftest(args) -> int:
    return selftest(quick=args.quick, mutate=args.mutate)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="linkinv",
        description="Kirk's sigma and Li's omega for combinatorial link-map data.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="report invariants for a model file")
    p.add_argument("file")
    p.add_argument("--verbose", action="store_true", help="include the replay trace")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("generate", help="write a random consistent model file")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--max-d", type=int, default=4)
    p.add_argument("--max-n", type=int, default=6)
    p.add_argument("--max-deg", type=int, default=6)
    p.add_argument("--sigma-zero", action="store_true",
                   help="draw from the family with sigma_+ = 0")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("lambda-n", help="divide s^n + s^-n + n(s + s^-1) by (1+s)^4 mod 2")
    p.add_argument("n", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_lambda_n)

    p = sub.add_parser("kirk", help="decompose a polynomial as a0 + sum a_n (n^2 s - s^n)")
    p.add_argument("poly", help='e.g. "0:3, 1:-4, 2:1"')
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_kirk)

    p = sub.add_parser("predict", help="omega_- predicted from sigma_+")
    p.add_argument("poly")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_predict)

    p = sub.add_parser("selftest", help="run the verification battery")
    p.add_argument("--quick", action="store_true")
    p.add_argument("--mutate", choices=sorted(MUTATIONS), default=None,
                   help="inject a broken per-point omega term (should fail)")
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (NotInImageError, NotSigmaShapedError, ParseError, SchemaError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except LinkInvError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
