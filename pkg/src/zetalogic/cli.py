"""Command-line entry point: ``zetalogic {logic,square,zeta} ...``.

Exit codes: 0 success, 2 parse or file error, 3 semantic error (unknown
logic, bad valuation), 4 request outside a method's domain.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import square as sq
from .formula import FormulaSyntaxError, parse, render
from .semantics import (
    SemanticError,
    classify_laws,
    entailment_witness,
    evaluate,
    get_logic,
    tautology_witness,
    truth_table,
)
from .zeta import (
    EMParams,
    Status,
    bernoulli,
    bose_integral_check,
    dirichlet_partial,
    em_zeta,
    eta_zeta,
    euler_product_partial,
    functional_eq_zeta,
    region_map,
)

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_SEMANTIC = 3
EXIT_DOMAIN = 4

# flags whose values may begin with '-' (argparse would take "-1,0" for an option)
_SIGNED_FLAGS = ("-s", "--s", "--re", "--im")


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


# ---------------------------------------------------------------------------
# helpers


def _emit(args, payload, text: str) -> None:
    if args.format == "json":
        print(json.dumps(payload, ensure_ascii=False, sort_keys=False))
    else:
        print(text)


def _parse_complex(text: str) -> complex:
    parts = [p.strip() for p in text.split(",")]
    try:
        if len(parts) == 1:
            return complex(float(parts[0]), 0.0)
        if len(parts) == 2:
            return complex(float(parts[0]), float(parts[1]))
    except ValueError:
        pass
    raise CliError(f"cannot read {text!r} as a complex number; use 're,im'", EXIT_PARSE)


def _parse_range(text: str) -> tuple[float, float]:
    z = _parse_complex(text)
    if "," not in text:
        raise CliError(f"range {text!r} must be 'lo,hi'", EXIT_PARSE)
    return z.real, z.imag


def _parse_formula(text: str):
    try:
        return parse(text)
    except FormulaSyntaxError as exc:
        raise CliError(str(exc), EXIT_PARSE) from None


def _logic(name: str):
    try:
        return get_logic(name)
    except SemanticError as exc:
        raise CliError(str(exc), EXIT_SEMANTIC) from None


def _parse_assignments(pairs) -> dict:
    out = {}
    for pair in pairs or ():
        name, sep, value = pair.partition("=")
        if not sep or not name:
            raise CliError(f"assignment {pair!r} must look like atom=T", EXIT_PARSE)
        out[name.strip()] = value.strip()
    return out


def _witness_text(witness: dict, logic) -> str:
    return ", ".join(f"{k}={logic.show(v)}" for k, v in witness.items())


# ---------------------------------------------------------------------------
# logic


def cmd_logic(args) -> int:
    logic = _logic(args.logic)
    if args.action == "laws":
        report = classify_laws(logic)
        _emit(args, report.to_dict(), report.to_text())
        return EXIT_OK

    formula = _parse_formula(args.formula)
    if args.action == "eval":
        try:
            value = evaluate(formula, _parse_assignments(args.assign), logic)
        except SemanticError as exc:
            raise CliError(str(exc), EXIT_SEMANTIC) from None
        shown = logic.show(value)
        _emit(
            args,
            {"formula": render(formula), "logic": logic.name, "value": shown,
             "designated": logic.is_designated(value)},
            shown,
        )
    elif args.action == "table":
        try:
            table = truth_table(formula, logic)
        except SemanticError as exc:
            raise CliError(str(exc), EXIT_SEMANTIC) from None
        _emit(args, table.to_dict(), table.to_text())
    elif args.action == "taut":
        try:
            witness = tautology_witness(formula, logic)
        except SemanticError as exc:
            raise CliError(str(exc), EXIT_SEMANTIC) from None
        if witness is None:
            text = "true"
        else:
            text = f"false (witness {_witness_text(witness, logic)})"
        _emit(
            args,
            {"formula": render(formula), "logic": logic.name, "tautology": witness is None,
             "witness": None if witness is None else {k: logic.show(v) for k, v in witness.items()}},
            text,
        )
    else:  # entails
        premises = [_parse_formula(p) for p in args.premise or ()]
        try:
            witness = entailment_witness(premises, formula, logic)
        except SemanticError as exc:
            raise CliError(str(exc), EXIT_SEMANTIC) from None
        if witness is None:
            text = "true"
        else:
            text = f"false (countermodel {_witness_text(witness, logic)})"
        _emit(
            args,
            {"premises": [render(p) for p in premises], "conclusion": render(formula),
             "logic": logic.name, "entails": witness is None,
             "countermodel": None if witness is None else {k: logic.show(v) for k, v in witness.items()}},
            text,
        )
    return EXIT_OK


# ---------------------------------------------------------------------------
# square


def cmd_square(args) -> int:
    if args.builtin == "pnp":
        result = sq.case_study_pnp()
        _emit(args, result.to_dict(), result.to_text())
        return EXIT_OK
    if args.builtin == "rh":
        if args.ac is None or args.logic is None:
            raise CliError("--builtin rh needs --ac {true,false} and --logic", EXIT_PARSE)
        try:
            verdict = sq.case_study_rh(args.ac == "true", args.logic, args.reading)
        except ValueError as exc:
            raise CliError(str(exc), EXIT_SEMANTIC) from None
        _emit(args, verdict.to_dict(), verdict.to_text())
        return EXIT_OK

    if args.model is None:
        raise CliError("give a model file or --builtin {pnp,rh}", EXIT_PARSE)
    if args.subject is None or args.predicate is None:
        raise CliError("a model file needs --subject and --predicate", EXIT_PARSE)
    try:
        model = sq.load_model(args.model)
        verdict = sq.square_report(args.subject, args.predicate, model)
    except OSError as exc:
        raise CliError(f"cannot read model file: {exc}", EXIT_PARSE) from None
    except sq.ModelError as exc:
        raise CliError(f"model error: {exc}", EXIT_PARSE) from None
    _emit(args, verdict.to_dict(), verdict.to_text())
    return EXIT_OK


# ---------------------------------------------------------------------------
# zeta

_METHOD_ALIASES = {
    "dirichlet": "dirichlet",
    "euler_product": "euler_product",
    "eta": "eta",
    "em": "euler_maclaurin",
    "euler_maclaurin": "euler_maclaurin",
    "functional": "functional_equation",
    "functional_equation": "functional_equation",
}


def _em_params(args, s: complex):
    if args.m is None and args.n is None:
        return None
    base = EMParams.for_point(s)
    try:
        return EMParams(m=args.m if args.m is not None else base.m, n=args.n if args.n is not None else base.n)
    except ValueError as exc:
        raise CliError(str(exc), EXIT_DOMAIN) from None


def _zeta_value(args):
    s = _parse_complex(args.s)
    method = _METHOD_ALIASES[args.method]
    try:
        if method == "dirichlet":
            return dirichlet_partial(s, args.N)
        if method == "euler_product":
            return euler_product_partial(s, args.prime_bound)
        if method == "eta":
            return eta_zeta(s, args.tol)
        if method == "euler_maclaurin":
            return em_zeta(s, _em_params(args, s))
        return functional_eq_zeta(s, _em_params(args, s))
    except ValueError as exc:
        raise CliError(str(exc), EXIT_DOMAIN) from None


def cmd_zeta(args) -> int:
    if args.action == "value":
        result = _zeta_value(args)
        _emit(args, result.to_dict(), result.to_text())
        # no value at all (nan) means the request fell outside the method's rule
        if result.status is Status.OUT_OF_DOMAIN or (
            result.status is Status.POLE and result.value != result.value
        ):
            print(f"{result.status.value}: {result.note}", file=sys.stderr)
            return EXIT_DOMAIN
        return EXIT_OK

    if args.action == "map":
        step = args.step if args.step_im is None else (args.step, args.step_im)
        try:
            grid = region_map(_parse_range(args.re), _parse_range(args.im), step, args.method, args.m)
        except ValueError as exc:
            raise CliError(str(exc), EXIT_DOMAIN) from None
        csv_text = grid.to_csv()
        if args.out:
            try:
                with open(args.out, "w", encoding="utf-8", newline="") as fh:
                    fh.write(csv_text)
            except OSError as exc:
                raise CliError(f"cannot write {args.out}: {exc}", EXIT_PARSE) from None
            counts = grid.counts()
            summary = {"method": args.method, "m": args.m, "columns": len(grid.re_values),
                       "rows": len(grid.im_values), "counts": counts, "out": args.out}
            text = "\n".join(
                [f"wrote {len(grid.re_values) * len(grid.im_values)} points to {args.out}"]
                + [f"  {k}: {v}" for k, v in sorted(counts.items())]
            )
            _emit(args, summary, text)
        elif args.format == "json":
            _emit(args, {"method": args.method, "m": args.m,
                         "points": [[x, y, st.value] for x, y, st in grid.points()]}, "")
        else:
            sys.stdout.write(csv_text)
        return EXIT_OK

    if args.action == "verify-derivation":
        s = _parse_complex(args.s)
        if s.imag != 0:
            raise CliError("verify-derivation needs real s > 1", EXIT_DOMAIN)
        try:
            check = bose_integral_check(s.real, args.quad_tol)
        except ValueError as exc:
            raise CliError(str(exc), EXIT_DOMAIN) from None
        payload = {"s": s.real, "integral": check.integral,
                   "gamma_times_zeta": check.gamma_times_zeta, "difference": check.difference}
        text = "\n".join([
            f"s                = {s.real!r}",
            f"integral         = {check.integral!r}",
            f"gamma(s)*zeta(s) = {check.gamma_times_zeta!r}",
            f"difference       = {check.difference!r}",
        ])
        _emit(args, payload, text)
        return EXIT_OK

    # bernoulli
    try:
        b = bernoulli(args.k)
    except ValueError as exc:
        raise CliError(str(exc), EXIT_DOMAIN) from None
    _emit(args, {"k": args.k, "numerator": b.numerator, "denominator": b.denominator,
                 "value": float(b)}, str(b))
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("text", "json"), default="text")

    parser = argparse.ArgumentParser(
        prog="zetalogic",
        description="Three-valued logics, the square of opposition, and zeta numerics.",
    )
    top = parser.add_subparsers(dest="command", required=True)

    # logic
    logic = top.add_parser("logic", help="evaluate formulas in a builtin logic")
    lsub = logic.add_subparsers(dest="action", required=True)
    common = argparse.ArgumentParser(add_help=False, parents=[fmt])
    common.add_argument("--logic", default="classical", help="builtin logic name or alias")
    p = lsub.add_parser("eval", parents=[common], help="value of a formula under one valuation")
    p.add_argument("formula")
    p.add_argument("--assign", nargs="*", metavar="ATOM=V", help="truth values T, X or F")
    p = lsub.add_parser("table", parents=[common], help="full truth table")
    p.add_argument("formula")
    p = lsub.add_parser("taut", parents=[common], help="tautology check with witness")
    p.add_argument("formula")
    p = lsub.add_parser("entails", parents=[common], help="designated-value consequence")
    p.add_argument("formula", help="conclusion")
    p.add_argument("--premise", action="append", metavar="FORMULA")
    lsub.add_parser("laws", parents=[common], help="status of LOI, LEM, LNC, DN, ECQ, De Morgan")

    # square
    p = top.add_parser("square", parents=[fmt], help="square of opposition and case studies")
    p.add_argument("model", nargs="?", help="model file ('domain: a,b' plus 'pred: a' lines)")
    p.add_argument("--subject")
    p.add_argument("--predicate")
    p.add_argument("--builtin", choices=("pnp", "rh"))
    p.add_argument("--ac", choices=("true", "false"), help="accept analytic continuation (rh)")
    p.add_argument("--logic", help="classical, intuitionistic, lp or bochvar (rh)")
    p.add_argument("--reading", choices=("conditional", "conjunction"), default="conditional")

    # zeta
    zeta = top.add_parser("zeta", help="zeta values, region maps, identities")
    zsub = zeta.add_subparsers(dest="action", required=True)
    p = zsub.add_parser("value", parents=[fmt], help="evaluate zeta(s) by one method")
    p.add_argument("-s", required=True, help="'re,im'")
    p.add_argument("--method", choices=tuple(_METHOD_ALIASES), default="em")
    p.add_argument("-N", type=int, default=1000, help="terms for dirichlet")
    p.add_argument("--m", type=int, default=None, help="Euler-Maclaurin correction terms")
    p.add_argument("--n", type=int, default=None, help="Euler-Maclaurin cutoff")
    p.add_argument("--tol", type=float, default=1e-12, help="eta tolerance")
    p.add_argument("--prime-bound", type=int, default=10_000)
    p = zsub.add_parser("map", parents=[fmt], help="status grid as CSV (re, im, status)")
    p.add_argument("--re", default="-3,3", help="'lo,hi'")
    p.add_argument("--im", default="-10,10", help="'lo,hi'")
    p.add_argument("--step", type=float, default=0.1)
    p.add_argument("--step-im", type=float, default=None, help="separate imaginary step")
    p.add_argument("--method", choices=("dirichlet", "euler_product", "eta", "euler_maclaurin"),
                   default="dirichlet")
    p.add_argument("--m", type=int, default=3)
    p.add_argument("--out", help="CSV path (default: stdout)")
    p = zsub.add_parser("verify-derivation", parents=[fmt], help="Bose integral vs Gamma*zeta")
    p.add_argument("-s", required=True)
    p.add_argument("--quad-tol", type=float, default=1e-11)
    p = zsub.add_parser("bernoulli", parents=[fmt], help="exact Bernoulli number B_k")
    p.add_argument("k", type=int)
    return parser


def _join_signed(argv: list[str]) -> list[str]:
    out = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok in _SIGNED_FLAGS and i + 1 < len(argv):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    args = build_parser().parse_args(_join_signed(argv))
    handler = {"logic": cmd_logic, "square": cmd_square, "zeta": cmd_zeta}[args.command]
    try:
        return handler(args)
    except CliError as exc:
        if getattr(args, "format", "text") == "json":
            print(json.dumps({"error": str(exc), "exit": exc.code}))
        print(f"error: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
