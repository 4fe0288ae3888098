"""Command line entry point.

Exit status: 0 when every check passed or the analysis completed, 1 when a
mathematical check failed, 2 for usage, parse and schema errors.
"""

from __future__ import annotations

import argparse
import os
import sys

from .catalog import BUILTINS, emit_builtin_example, load_builtin
from .errors import ContractError, ParseError, SchemaError, ValidationError
from .exact_algebra import parse_rational
from .report import Analysis, render_json, render_text
from .spec_io import parse_manifold_spec

EXIT_OK, EXIT_CHECK_FAILED, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _rational_arg(text):
    try:
        return parse_rational(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _field_arg(text):
    try:
        return tuple(parse_rational(part) for part in text.split(","))
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"bad --field {text!r}: {exc}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="framegeom",
        description="Exact curvature and almost-contact analysis of frame manifolds.",
    )
    sub = parser.add_subparsers(dest="command", metavar="command")
    sub.required = True

    def add(name, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("manifold", help="manifold JSON document, or the name of a built-in example")
        p.add_argument("--format", choices=("text", "json"), default="text")
        return p

    add("validate", "check frame well-formedness and almost contact axioms")
    add("curvature", "connection, Riemann, Ricci and scalar curvature")
    add("contact", "h and h' tensors with their identities")
    add("nullity", "fit (k, mu)'-nullity constants and check their identities")
    add("fields", "constant Killing and conformal fields")
    p = add("classify", "classify one constant vector field")
    p.add_argument("--field", required=True, type=_field_arg, help='frame coefficients, e.g. "0,1,-1"')
    p = add("soliton", "solve the eta-Ricci-Yamabe soliton constants")
    p.add_argument("--alpha", required=True, type=_rational_arg)
    p.add_argument("--beta", required=True, type=_rational_arg)
    p.add_argument("--field", type=_field_arg, help="conformal field (default: first Killing basis field)")
    add("audit", "hypothesis and branch audit of the conformal/Killing field results")
    add("eta-einstein", "classify the Ricci tensor as Einstein / eta-Einstein")
    add("all", "every analysis in one report")

    p = sub.add_parser("example", help="built-in example manifolds")
    p.add_argument("name", help=f"one of: {', '.join(BUILTINS)}")
    p.add_argument("--emit", action="store_true", help="print the manifold document instead of its report")
    p.add_argument("--format", choices=("text", "json"), default="text")
    return parser


def _load(target):
    if os.path.exists(target):
        with open(target, "rb") as fh:
            return parse_manifold_spec(fh.read())
    if target in BUILTINS:
        return load_builtin(target)
    raise UsageError(f"no such manifold file or built-in example: {target}")


def _emit(payload, fmt, out):
    out.write(render_json(payload) if fmt == "json" else render_text(payload))


def run_command(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE

    try:
        if args.command == "example":
            if args.name not in BUILTINS:
                raise UsageError(f"unknown example {args.name!r}; choose from {', '.join(BUILTINS)}")
            if args.emit:
                out.write(emit_builtin_example(args.name).decode("utf-8"))
                return EXIT_OK
            man, acs = load_builtin(args.name)
            payload, ok = Analysis(man, acs).all_sections()
            _emit(payload, args.format, out)
            return EXIT_OK if ok else EXIT_CHECK_FAILED

        man, acs = _load(args.manifold)
        analysis = Analysis(man, acs)
        command = args.command
        if command == "classify" or (command == "soliton" and args.field is not None):
            if len(args.field) != man.dim:
                raise UsageError(f"--field needs {man.dim} coefficients, got {len(args.field)}")
        if command == "validate":
            payload, ok = analysis.validate_section()
        elif command == "curvature":
            payload, ok = analysis.curvature_section()
        elif command == "contact":
            payload, ok = analysis.contact_section()
        elif command == "nullity":
            payload, ok = analysis.nullity_section()
        elif command == "fields":
            payload, ok = analysis.fields_section()
        elif command == "classify":
            payload, ok = analysis.classify_section(args.field)
        elif command == "soliton":
            payload, ok = analysis.soliton_section(args.alpha, args.beta, args.field)
        elif command == "audit":
            payload, ok = analysis.audit_section()
        elif command == "eta-einstein":
            payload, ok = analysis.eta_einstein_section()
        else:
            payload, ok = analysis.all_sections()
        _emit(payload, args.format, out)
        return EXIT_OK if ok else EXIT_CHECK_FAILED
    except (UsageError, ParseError, SchemaError, OSError) as exc:
        err.write(f"error: {exc}\n")
        parser.print_usage(err)
        return EXIT_USAGE
    except ValidationError as exc:
        err.write(f"error: {exc}\n")
        if exc.report is not None:
            _emit({"frame": exc.report.as_dict()}, getattr(args, "format", "text"), out)
        return EXIT_CHECK_FAILED
    except ContractError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_CHECK_FAILED


def main():
    sys.exit(run_command())


if __name__ == "__main__":
    main()
