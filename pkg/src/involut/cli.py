"""Command-line front end.  Every subcommand prints one JSON document."""
from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional

from . import __version__
from .classifier import FamilySpec, Verdict, classify_involution
from .matrices import J_matrix, Matrix, MatrixTuple
from .normal_form import skew_congruence_to_J, sym_congruence_to_identity
from .stabilizer import Outcome, generates_full_algebra, stabilizer_element
from .witnesses import WITNESSES

SCHEMA = "involut/1"
EXIT_OK, EXIT_FAILURE, EXIT_INVALID, EXIT_UNDECIDED = 0, 1, 2, 3


class InputError(ValueError):
    pass


def parse_signs(text: str) -> List[int]:
    out = []
    for tok in text.split(","):
        tok = tok.strip()
        if tok in ("+", "+1", "1"):
            out.append(1)
        elif tok in ("-", "-1", "−", "−1"):
            out.append(-1)
        else:
            raise InputError(f"bad sign {tok!r}; use + or -")
    return out


def _load_json(path: str):
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc


def _load_matrix(data) -> Matrix:
    if isinstance(data, list):
        return Matrix.from_json(data)
    if "matrix" in data:
        return Matrix.from_json(data["matrix"])
    if "components" in data:
        tup = MatrixTuple.from_json(data)
        if tup.m != 1:
            raise InputError("normal-form expects a single matrix (m = 1)")
        return tup[0]
    raise InputError("expected a matrix: a row list, {'matrix': ...} or a 1-tuple")


def _emit(doc: dict) -> None:
    sys.stdout.write(json.dumps({"schema": SCHEMA, **doc}, indent=2) + "\n")


def cmd_classify(args) -> int:
    signs = parse_signs(args.signs) if args.signs else None
    spec = FamilySpec(args.n, args.m, args.family, tuple(signs) if signs else None)
    report = classify_involution(spec, trials=args.trials, seed=args.seed)
    _emit(report.to_json())
    if report.verdict in (Verdict.INCONCLUSIVE, Verdict.NOT_GENERATING):
        return EXIT_UNDECIDED
    return EXIT_OK


def cmd_stabilizer(args) -> int:
    data = _load_json(args.input)
    tup = MatrixTuple.from_json(data)
    if args.signs:
        signs = parse_signs(args.signs)
    else:
        signs = data.get("signs", [1] * tup.m)
    doc = {"command": "stabilizer", "n": tup.n, "m": tup.m, "signs": list(signs)}
    if not generates_full_algebra(tup):
        _emit({**doc, "generates": False, "outcome": "NotGenerating"})
        return EXIT_UNDECIDED
    result = stabilizer_element(signs, tup, assume_generating=True)
    _emit({**doc, "generates": True, **result.to_json()})
    return EXIT_UNDECIDED if result.outcome is Outcome.AMBIGUOUS else EXIT_OK


def cmd_normal_form(args) -> int:
    mat = _load_matrix(_load_json(args.input))
    if args.target == "identity":
        b, ctx = sym_congruence_to_identity(mat)
        target = Matrix.identity(mat.n)
        radicands = list(ctx.radicands)
    else:
        b = skew_congruence_to_J(mat)
        target = J_matrix(mat.n)
        radicands = []
    residual = b @ mat @ b.T - target
    _emit({
        "command": "normal-form",
        "target": args.target,
        "input": mat.to_json(),
        "b": b.to_json(),
        "radicands": radicands,
        "residual_zero": residual.is_zero(),
    })
    return EXIT_OK if residual.is_zero() else EXIT_FAILURE


def cmd_witness(args) -> int:
    _emit({"command": "witness", **WITNESSES[args.name]()})
    return EXIT_OK


def cmd_selftest(args) -> int:
    from .selftest import run_selftest

    results = run_selftest(cases=args.cases, seed=args.seed)
    ok = all(r["passed"] == r["cases"] for r in results.values())
    _emit({"command": "selftest", "seed": args.seed, "ok": ok, "checks": results})
    return EXIT_OK if ok else EXIT_FAILURE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="involut",
        description="Stabilizers, normal forms and trace witnesses for involutions "
                    "of generic matrix algebras.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="classify the involution of a tuple family")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--family", choices=["full", "sym", "symp"], default="full")
    p.add_argument("--signs", help="comma separated, e.g. +,-,+ (full family only)")
    p.add_argument("--trials", type=int, default=5)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("stabilizer", help="stabilizer element of a tuple read from JSON")
    p.add_argument("--input", required=True, help="tuple JSON file, or - for stdin")
    p.add_argument("--signs")
    p.set_defaults(func=cmd_stabilizer)

    p = sub.add_parser("normal-form", help="congruence normal form of a matrix")
    p.add_argument("--input", required=True)
    p.add_argument("--target", choices=["identity", "J"], required=True)
    p.set_defaults(func=cmd_normal_form)

    p = sub.add_parser("witness", help="run a golden witness computation")
    p.add_argument("--name", choices=sorted(WITNESSES), required=True)
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("selftest", help="run the built-in property checks")
    p.add_argument("--cases", type=int, default=25)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INVALID if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (InputError, ValueError, KeyError, TypeError, ZeroDivisionError) as exc:
        _emit({"command": args.command, "error": f"{type(exc).__name__}: {exc}"})
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
