"""Command-line interface.

Exit codes: 0 success, 1 a verification check failed, 2 bad input,
3 a resource guard was hit.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .automaton import export_automaton_dot, parse_automaton, serialize_automaton
from .errors import InputError, ResourceLimitError
from .generator import GenSpec, generate_csfa
from .holonomy import export_skeleton_dot
from .monoid import DEFAULT_MONOID_CAP
from .report import build_report, dumps, render_text

EXIT_OK, EXIT_VERIFY_FAILED, EXIT_INPUT, EXIT_RESOURCE = 0, 1, 2, 3


def _shared(parser):
    parser.add_argument("--json", action="store_true", help="emit the JSON report")
    parser.add_argument("--max-monoid", type=int, default=DEFAULT_MONOID_CAP,
                        metavar="CAP", help="abort if the monoid grows past CAP elements")
    parser.add_argument("--seed", type=int, default=0,
                        help="PRNG seed (only 'generate' draws random numbers)")


def _dot_flags(parser):
    parser.add_argument("--dot-skeleton", metavar="PATH",
                        help="write the skeleton class order as DOT")
    parser.add_argument("--dot-automaton", metavar="PATH",
                        help="write the automaton as DOT")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="csfa-holonomy",
        description="Holonomy decompositions of complete deterministic automata.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    for name, help_text in [
        ("analyze", "validate and classify an automaton; summarize its monoid"),
        ("decompose", "compute the skeleton and holonomy components"),
    ]:
        p = sub.add_parser(name, help=help_text)
        p.add_argument("file")
        _shared(p)
        _dot_flags(p)

    p = sub.add_parser("verify", help="check the closed-form results against the computation")
    p.add_argument("files", nargs="+", metavar="file")
    _shared(p)
    _dot_flags(p)

    p = sub.add_parser("generate", help="emit a random circular semi-flower automaton")
    p.add_argument("--states", "-n", type=int, required=True)
    p.add_argument("--bpis", type=int, required=True, help="number of branch points")
    p.add_argument("--extra-letters", type=int, default=None)
    p.add_argument("--max-attempts", type=int, default=10000)
    p.add_argument("--output", "-o", metavar="PATH")
    _shared(p)
    return parser


def _read(path):
    try:
        with open(path, "rb") as fh:
            data = fh.read()
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError:
        raise InputError(f"{path}: not valid UTF-8") from None
    return data, text


def _write(path, text):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)


def _analyze(args, out):
    paths = args.files if args.command == "verify" else [args.file]
    reports = []
    failed = False
    for path in paths:
        data, text = _read(path)
        try:
            aut = parse_automaton(text)
        except InputError as exc:
            raise InputError(f"{path}: {exc}") from None
        report, extras = build_report(args.command, aut, path, data, cap=args.max_monoid)
        if args.dot_automaton:
            _write(args.dot_automaton, export_automaton_dot(aut))
        if args.dot_skeleton:
            _write(args.dot_skeleton, export_skeleton_dot(extras["skeleton"]))
        if "verification" in extras and not extras["verification"].passed:
            failed = True
        reports.append(report)
    if args.json:
        out.write(dumps(reports[0] if len(reports) == 1 else reports))
    else:
        out.write("\n".join(render_text(r) for r in reports))
    return EXIT_VERIFY_FAILED if failed else EXIT_OK


def _generate(args, out):
    spec = GenSpec(args.states, args.bpis, args.extra_letters, args.seed, args.max_attempts)
    text = serialize_automaton(generate_csfa(spec))
    if args.output:
        _write(args.output, text)
    if args.json:
        payload = {"tool_version": __version__, "command": "generate",
                   "spec": {"n": spec.n, "bpi_count": spec.bpi_count,
                            "extra_letters": spec.extra_letters, "seed": spec.seed},
                   "automaton": text}
        out.write(json.dumps(payload, indent=2) + "\n")
    elif not args.output:
        out.write(text)
    return EXIT_OK


def main(argv=None, out=None, err=None):
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        if args.command == "generate":
            return _generate(args, out)
        return _analyze(args, out)
    except InputError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_INPUT
    except ResourceLimitError as exc:
        err.write(f"resource limit: {exc}\n")
        return EXIT_RESOURCE
