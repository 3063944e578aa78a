"""
Command-line front end.

Exit codes: 0 success, 1 a verification check failed, 2 malformed input or
unknown suite, 3 a well-formed request that cannot be carried out.
"""

from __future__ import annotations

import argparse
import cmath
import json
import math
import os
import re
import sys

from . import fusion, suites
from .diagram import BraidWord, DiagramError, MorseDiagram, braid_closure, loads
from .laurent import LaurentPoly, ParseError, eval_complex, parse_poly
from .skein import CrossingCapExceeded, evaluate, evaluator_names, is_experimental
from .tlhecke import homfly_delta, tl_dim, trace_closure, zeta

EXIT_OK, EXIT_FAILED, EXIT_PARSE, EXIT_SEMANTIC = 0, 1, 2, 3
DEFAULT_CAP = 16


class UsageError(Exception):
    """Bad input; maps to exit code 2."""


class SemanticError(Exception):
    """Valid input that cannot be evaluated; maps to exit code 3."""


_EXP = re.compile(
    r"^(?:exp|e\^)\(\s*(?:([-+]?[\d.]+)\s*\*\s*)?i\s*\*\s*pi\s*"
    r"(?:\*\s*([-+]?[\d.]+))?\s*(?:/\s*([\d.]+))?\s*\)$")


def parse_number(text: str) -> complex:
    """A complex literal (``1.5``, ``0.3-2i``, ``-i``) or ``exp(i*pi*p/q)``."""
    s = text.strip().replace(" ", "")
    m = _EXP.match(s)
    if m:
        pre, mul, den = m.groups()
        angle = math.pi * float(pre or 1) * float(mul or 1) / float(den or 1)
        return cmath.exp(1j * angle)
    s = s.replace("i", "j")
    if s in ("j", "+j", "-j"):
        s = s[:-1] + "1j"
    try:
        return complex(s)
    except ValueError:
        raise UsageError(f"cannot read {text!r} as a number") from None


def parse_assignments(items: list[str]) -> dict[str, complex]:
    out = {}
    for item in items:
        for part in item.split(","):
            name, sep, value = part.partition("=")
            if not sep or not name.strip():
                raise UsageError(f"--specialize expects name=value, got {part!r}")
            out[name.strip()] = parse_number(value)
    return out


def format_complex(z: complex) -> str:
    re_, im = z.real, z.imag
    if abs(im) < 1e-15 * max(1.0, abs(re_)):
        return f"{re_:.15g}"
    return f"{re_:.15g}{im:+.15g}i"


def default_cap(flag: int | None) -> int:
    if flag is not None:
        return flag
    env = os.environ.get("SKEIN_CAP")
    if env:
        try:
            return int(env)
        except ValueError:
            raise UsageError(f"SKEIN_CAP must be an integer, got {env!r}") from None
    return DEFAULT_CAP


def read_diagram(args) -> MorseDiagram:
    sources = [s for s in (args.braid, args.morse, args.morse_file) if s is not None]
    if len(sources) != 1:
        raise UsageError("give exactly one of --braid, --morse, --morse-file")
    try:
        if args.braid is not None:
            return braid_closure(BraidWord.parse(args.braid))
        if args.morse is not None:
            return MorseDiagram.parse(args.morse)
        with open(args.morse_file, encoding="utf-8") as fh:
            text = fh.read()
        if text.lstrip().startswith("{"):
            obj = loads(text)
            return braid_closure(obj) if isinstance(obj, BraidWord) else obj
        return MorseDiagram.parse(text)
    except OSError as exc:
        raise UsageError(str(exc)) from None
    except (DiagramError, ValueError, KeyError, json.JSONDecodeError) as exc:
        raise UsageError(f"malformed diagram: {exc}") from None


def emit(args, text: str, obj) -> None:
    print(json.dumps(obj, indent=2) if args.json else text)


def cmd_eval(args) -> int:
    if args.invariant not in evaluator_names():
        raise UsageError(f"unknown invariant {args.invariant!r}; choose from {', '.join(evaluator_names())}")
    d = read_diagram(args)
    cap = default_cap(args.cap)
    if is_experimental(args.invariant):
        print(f"warning: {args.invariant} is experimental", file=sys.stderr)
    try:
        value = evaluate(args.invariant, d, cap)
    except CrossingCapExceeded as exc:
        raise SemanticError(str(exc)) from None
    result = {"invariant": args.invariant, "diagram": d.to_text(), "value": value.to_json_obj()}
    if args.specialize:
        point = parse_assignments(args.specialize)
        try:
            z = eval_complex(value, point)
        except KeyError as exc:
            raise SemanticError(f"no value given for variable {exc.args[0]}") from None
        except ZeroDivisionError as exc:
            raise SemanticError(str(exc)) from None
        result["specialized"] = {"re": z.real, "im": z.imag}
        emit(args, format_complex(z), result)
    else:
        emit(args, value.to_text(), result)
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        reports = suites.run_suite(args.suite)
    except KeyError:
        names = ", ".join(list(suites.SUITES) + ["all"])
        raise UsageError(f"unknown suite {args.suite!r}; choose from {names}") from None
    ok = all(r.passed for r in reports)
    emit(args, "\n".join(r.text() for r in reports),
         {"passed": ok, "reports": [r.to_json_obj() for r in reports]})
    return EXIT_OK if ok else EXIT_FAILED


def cmd_fmatrix(args) -> int:
    if not args.dims:
        raise UsageError("--dims is required")
    try:
        dims = [float(x) for x in args.dims.split(",")]
    except ValueError:
        raise UsageError(f"--dims expects comma-separated numbers, got {args.dims!r}") from None
    if args.kappa not in (1, -1):
        raise UsageError("--kappa must be 1 or -1")
    try:
        F = fusion.f_matrix(dims, args.kappa, args.variant)
    except (fusion.FusionError, ValueError) as exc:
        raise SemanticError(str(exc)) from None
    report = fusion.verify_f_identities(F)
    rows = "\n".join("  ".join(f"{x: .12f}" for x in row) for row in F.M)
    header = f"F-matrix  d_q={F.d_q:.12g}  kappa={F.kappa}" + (f"  variant={F.variant}" if F.variant else "")
    emit(args, f"{header}\n{rows}\n{report.text()}",
         {"fmatrix": F.to_json_obj(), "report": report.to_json_obj()})
    return EXIT_OK if report.passed else EXIT_FAILED


def cmd_tl(args) -> int:
    if args.dim is not None:
        if args.dim < 1:
            raise SemanticError("the strand count must be positive")
        n = tl_dim(args.dim)
        emit(args, str(n), {"strands": args.dim, "dimension": n})
        return EXIT_OK
    if args.braid is None:
        raise UsageError("tl needs --braid or --dim")
    try:
        word = BraidWord.parse(args.braid)
        a, b = parse_poly(args.a), parse_poly(args.b)
        delta = parse_poly(args.delta) if args.delta else None
    except (DiagramError, ParseError) as exc:
        raise UsageError(str(exc)) from None
    try:
        delta = homfly_delta(a, b) if delta is None else delta
        image = zeta(word, a, b, delta)
    except (ValueError, ZeroDivisionError) as exc:
        raise SemanticError(str(exc)) from None
    closure = trace_closure(image, delta)
    lines = [f"{c}  {[list(p) for p in pairing.pairs]}" for pairing, c in sorted(image.combo.items())]
    lines.append(f"closure: {closure}")
    emit(args, "\n".join(lines),
         {"braid": word.to_json_obj(), "delta": delta.to_json_obj(),
          "element": image.to_json_obj(), "closure": closure.to_json_obj()})
    return EXIT_OK


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(EXIT_PARSE)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="skeinkit", description="Framed link invariants and fusion data.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def diagram_flags(p):
        p.add_argument("--braid", help='braid word, e.g. "B3: 1 -2 1"')
        p.add_argument("--morse", help='Morse word, e.g. "cup@1 cap@1"')
        p.add_argument("--morse-file", help="file holding a Morse word or diagram JSON")

    p = sub.add_parser("eval", help="evaluate an invariant on a diagram")
    p.add_argument("--invariant", required=True, help=", ".join(evaluator_names()))
    diagram_flags(p)
    p.add_argument("--cap", type=int, help=f"crossing cap (default $SKEIN_CAP or {DEFAULT_CAP})")
    p.add_argument("--specialize", action="append", default=[], metavar="NAME=VALUE",
                   help="substitute numbers, e.g. a=exp(i*pi/5) or z=0.5+1i")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", default="all", help="laurent, tl, skein, fusion, lickorish or all")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("fmatrix", help="build and check an F-matrix")
    p.add_argument("--dims", help="d_q for k=1, or d_q,d_x,d_y for k=2")
    p.add_argument("--kappa", type=int, default=1)
    p.add_argument("--variant", choices=(fusion.DUBROVNIK, fusion.KAUFFMAN))
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_fmatrix)

    p = sub.add_parser("tl", help="braid images in the Temperley-Lieb algebra")
    p.add_argument("--braid")
    p.add_argument("--a", default="a", help="weight of the identity term")
    p.add_argument("--b", default="b", help="weight of the cup-cap term")
    p.add_argument("--delta", help="loop value (default -(a/b + b/a))")
    p.add_argument("--dim", type=int, help="print the basis size of TL_n")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_tl)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except SemanticError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SEMANTIC


if __name__ == "__main__":
    sys.exit(main())
