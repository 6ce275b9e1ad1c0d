"""Command-line front end: polynomial parsing and CSV/JSON emission.

Grammar accepted by the polynomial parser::

    expr   := term (('+'|'-') term)*
    term   := factor ('*'? factor)*
    factor := INT | VAR ('^' INT)? | '(' expr ')' ('^' INT)?

Variables are identifiers; undeclared variables are inferred in order
of first appearance.  Coefficients are reduced mod p at parse time and
subtraction maps to the additive inverse.  All machine output keeps
rationals exact (num/den); floats appear only as trailing courtesy
columns in CSV.

Exit codes: 0 success, 2 parse error, 3 constraint violation,
4 resource guard, 5 check/certification failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .config import ENV_MAX_DENSE_CELLS
from .errors import (
    FptlabError,
    ParseError,
    ResourceGuard,
    UnknownVariable,
)
from .families import (
    verify_cusp,
    verify_deformed_fermat,
    verify_double_line,
    verify_equal_threshold_curve,
)
from .fsignature import left_derivative_table, signature_samples
from .polyring import PolyRing, SparsePoly
from .testideals import test_ideal_root_chain
from .thresholds import certify_fpt, nu_sequence

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_CONSTRAINT = 3
EXIT_GUARD = 4
EXIT_CHECK_FAILURE = 5


# ---------------------------------------------------------------------------
# Polynomial parsing
# ---------------------------------------------------------------------------

_OPERATORS = set("+-*^()")


def _tokenize(text: str) -> list:
    tokens = []
    pos = 0
    while pos < len(text):
        ch = text[pos]
        if ch.isspace():
            pos += 1
            continue
        if ch in _OPERATORS:
            tokens.append((ch, ch, pos))
            pos += 1
            continue
        if ch.isdigit():
            start = pos
            while pos < len(text) and text[pos].isdigit():
                pos += 1
            tokens.append(("INT", int(text[start:pos]), start))
            continue
        if ch.isalpha() or ch == "_":
            start = pos
            while pos < len(text) and (text[pos].isalnum() or text[pos] == "_"):
                pos += 1
            tokens.append(("VAR", text[start:pos], start))
            continue
        raise ParseError(f"unexpected character {ch!r}", pos)
    return tokens


class _Parser:
    def __init__(self, tokens: list, ring: PolyRing, end: int):
        self.tokens = tokens
        self.index = 0
        self.ring = ring
        self.end = end  # position just past the input, for error reporting
        self.var_index = {name: i for i, name in enumerate(ring.variables)}

    def _peek(self):
        if self.index < len(self.tokens):
            return self.tokens[self.index]
        return (None, None, self.end)

    def _accept(self, kind):
        if self._peek()[0] == kind:
            tok = self.tokens[self.index]
            self.index += 1
            return tok
        return None

    def parse(self) -> SparsePoly:
        poly = self._expr()
        kind, _, pos = self._peek()
        if kind is not None:
            raise ParseError("unexpected trailing input", pos)
        return poly

    def _expr(self) -> SparsePoly:
        poly = self._term()
        while True:
            if self._accept("+"):
                poly = poly + self._term()
            elif self._accept("-"):
                poly = poly - self._term()
            else:
                return poly

    def _term(self) -> SparsePoly:
        poly = self._factor()
        while True:
            if self._accept("*"):
                poly = poly * self._factor()
            elif self._peek()[0] in ("INT", "VAR", "("):
                poly = poly * self._factor()
            else:
                return poly

    def _factor(self) -> SparsePoly:
        kind, value, pos = self._peek()
        if kind == "INT":
            self.index += 1
            return self.ring.constant(value)
        if kind == "VAR":
            self.index += 1
            if value not in self.var_index:
                raise UnknownVariable(f"variable {value!r} is not declared")
            exponent = 1
            if self._accept("^"):
                tok = self._accept("INT")
                if tok is None:
                    raise ParseError("expected an integer exponent after '^'",
                                     self._peek()[2])
                exponent = tok[1]
            exps = [0] * self.ring.n
            exps[self.var_index[value]] = exponent
            return self.ring.monomial(tuple(exps))
        if kind == "(":
            self.index += 1
            poly = self._expr()
            if not self._accept(")"):
                raise ParseError("expected ')'", self._peek()[2])
            if self._accept("^"):
                tok = self._accept("INT")
                if tok is None:
                    raise ParseError("expected an integer exponent after '^'",
                                     self._peek()[2])
                poly = poly ** tok[1]
            return poly
        raise ParseError("expected a number, variable, or '('", pos)


def parse_polynomial(text: str, p: int, variables=None) -> SparsePoly:
    """Parse polynomial text over F_p.

    With ``variables`` declared, any other identifier raises
    UnknownVariable; without it, variables are inferred in first
    appearance order.
    """
    tokens = _tokenize(text)
    if variables is None:
        names = []
        for kind, value, _ in tokens:
            if kind == "VAR" and value not in names:
                names.append(value)
        if not names:
            names = ["x"]  # constant input still needs an ambient ring
        variables = names
    ring = PolyRing(p, tuple(variables))
    return _Parser(tokens, ring, len(text)).parse()


# ---------------------------------------------------------------------------
# Output helpers
# ---------------------------------------------------------------------------


def _emit_json(payload: dict) -> None:
    sys.stdout.write(json.dumps(payload, indent=2) + "\n")


def _emit_csv(header: list, rows: list) -> None:
    lines = [",".join(header)]
    for row in rows:
        lines.append(",".join("" if cell is None else str(cell) for cell in row))
    sys.stdout.write("\n".join(lines) + "\n")


def _float10(value) -> str:
    return f"{float(value):.10g}"


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"expected a rational like 'a/b', got {text!r}", 0)


def _declared_vars(args):
    if args.vars is None:
        return None
    return [name.strip() for name in args.vars.split(",") if name.strip()]


# ---------------------------------------------------------------------------
# Subcommand handlers
# ---------------------------------------------------------------------------


def _cmd_nu(args) -> int:
    f = parse_polynomial(args.poly, args.prime, _declared_vars(args))
    records = nu_sequence(f, args.e)
    _emit_csv(["e", "nu"], [(rec.e, rec.nu) for rec in records])
    return EXIT_OK


def _cmd_fpt(args) -> int:
    f = parse_polynomial(args.poly, args.prime, _declared_vars(args))
    records = nu_sequence(f, args.e)
    q = args.prime ** args.e
    nu = records[-1].nu
    payload = {
        "f": f.render(),
        "p": args.prime,
        "e": args.e,
        "nu": [rec.nu for rec in records],
        "interval": {
            "lower": str(Fraction(nu, q)),
            "upper": str(Fraction(nu + 1, q)),
            "width": str(Fraction(1, q)),
        },
        "certified_fpt": None,
        "certificate": None,
    }
    exit_code = EXIT_OK
    if args.certify is not None:
        a, qq = args.certify
        cert = certify_fpt(f, a, qq)
        payload["certificate"] = cert.to_json_dict()
        if cert.certified:
            payload["certified_fpt"] = str(cert.value)
        else:
            payload["refutation"] = cert.reason
            exit_code = EXIT_CHECK_FAILURE
    _emit_json(payload)
    return exit_code


def _cmd_tau(args) -> int:
    f = parse_polynomial(args.poly, args.prime, _declared_vars(args))
    report = test_ideal_root_chain(f, _rational(args.t), args.smax)
    _emit_json(report.to_json_dict())
    return EXIT_OK


def _cmd_fsig(args) -> int:
    f = parse_polynomial(args.poly, args.prime, _declared_vars(args))
    grid = [_rational(part) for part in args.grid.split(",") if part.strip()]
    samples = signature_samples(f, grid, args.e)
    rows = [
        (s.t.numerator, s.t.denominator, s.e, s.length,
         s.value.numerator, s.value.denominator, _float10(s.value))
        for s in samples
    ]
    _emit_csv(["t_num", "t_den", "e", "length", "s_num", "s_den", "s_float"], rows)
    return EXIT_OK


def _cmd_deriv(args) -> int:
    f = parse_polynomial(args.poly, args.prime, _declared_vars(args))
    table = left_derivative_table(f, _rational(args.alpha), args.e)
    rows = []
    for row in table.rows:
        slope = row.left_slope
        rows.append((
            row.e, row.exponent, row.length,
            row.ratio.numerator, row.ratio.denominator, _float10(row.ratio),
            None if slope is None else slope.numerator,
            None if slope is None else slope.denominator,
            None if slope is None else _float10(slope),
        ))
    _emit_csv(
        ["e", "exponent", "lambda", "ratio_num", "ratio_den", "ratio_float",
         "slope_num", "slope_den", "slope_float"],
        rows,
    )
    return EXIT_OK


def _cmd_verify(args) -> int:
    if args.family == "deformed-fermat":
        report = verify_deformed_fermat(args.prime, args.d, args.n, e_max=args.e)
    elif args.family == "equal-threshold-curve":
        report = verify_equal_threshold_curve(args.n, e_max=args.e, s_max=args.smax)
    elif args.family == "cusp":
        report = verify_cusp(args.prime, e_max=args.e)
    else:
        report = verify_double_line(args.prime, e_max=args.e)
    _emit_json(report.to_json_dict())
    return EXIT_OK if report.all_pass else EXIT_CHECK_FAILURE


# ---------------------------------------------------------------------------
# Argument parsing and dispatch
# ---------------------------------------------------------------------------


def _add_poly_flags(sub):
    sub.add_argument("-f", dest="poly", required=True, help="polynomial text")
    sub.add_argument("-p", dest="prime", type=int, required=True, help="characteristic")
    sub.add_argument("--vars", default=None,
                     help="comma-separated variable names (default: inferred)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fptlab",
        description="Exact F-pure thresholds, test ideals, and F-signature "
                    "samples for hypersurfaces over prime fields.",
        epilog=f"The dense-box guard can be overridden via {ENV_MAX_DENSE_CELLS}.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    nu = commands.add_parser("nu", help="nu table (CSV)")
    _add_poly_flags(nu)
    nu.add_argument("-e", type=int, required=True, help="maximal depth e")
    nu.set_defaults(handler=_cmd_nu)

    fpt = commands.add_parser("fpt", help="threshold interval, optional certificate (JSON)")
    _add_poly_flags(fpt)
    fpt.add_argument("-e", type=int, required=True, help="interval depth e")
    fpt.add_argument("--certify", nargs=2, type=int, metavar=("A", "Q"), default=None,
                     help="attempt to certify fpt = A/(Q-1) exactly")
    fpt.set_defaults(handler=_cmd_fpt)

    tau = commands.add_parser("tau", help="test ideal report (JSON)")
    _add_poly_flags(tau)
    tau.add_argument("-t", required=True, help="parameter t in (0,1], as 'a/b'")
    tau.add_argument("--smax", type=int, default=8, help="chain stabilization bound")
    tau.set_defaults(handler=_cmd_tau)

    fsig = commands.add_parser("fsig", help="F-signature samples (CSV)")
    _add_poly_flags(fsig)
    fsig.add_argument("--grid", required=True, help="comma-separated t values")
    fsig.add_argument("-e", type=int, required=True, help="sampling depth e")
    fsig.set_defaults(handler=_cmd_fsig)

    deriv = commands.add_parser("deriv", help="left-derivative table (CSV)")
    _add_poly_flags(deriv)
    deriv.add_argument("--alpha", required=True, help="threshold candidate, as 'a/b'")
    deriv.add_argument("-e", type=int, required=True, help="table depth e_max")
    deriv.set_defaults(handler=_cmd_deriv)

    verify = commands.add_parser("verify", help="run a named family's exact checks (JSON)")
    families = verify.add_subparsers(dest="family", required=True)

    vdf = families.add_parser("deformed-fermat")
    vdf.add_argument("-p", dest="prime", type=int, required=True)
    vdf.add_argument("-d", type=int, required=True)
    vdf.add_argument("-n", type=int, required=True)
    vdf.add_argument("-e", type=int, default=1, help="interval depth")
    vdf.set_defaults(handler=_cmd_verify)

    vcurve = families.add_parser("equal-threshold-curve")
    vcurve.add_argument("-n", type=int, required=True)
    vcurve.add_argument("-e", type=int, default=8, help="nu/table depth")
    vcurve.add_argument("--smax", type=int, default=8)
    vcurve.set_defaults(handler=_cmd_verify)

    vcusp = families.add_parser("cusp")
    vcusp.add_argument("-p", dest="prime", type=int, required=True)
    vcusp.add_argument("-e", type=int, default=3)
    vcusp.set_defaults(handler=_cmd_verify)

    vline = families.add_parser("double-line")
    vline.add_argument("-p", dest="prime", type=int, required=True)
    vline.add_argument("-e", type=int, default=5)
    vline.set_defaults(handler=_cmd_verify)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except (ParseError, UnknownVariable) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ResourceGuard as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except FptlabError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONSTRAINT
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONSTRAINT


if __name__ == "__main__":
    sys.exit(main())
