"""Command-line front end.

Exit status: 0 success, 1 computation error, 2 parse error, 3 axiom failure.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from .axioms import AXIOMS, run_trials, verify_axioms
from .classes import (
    DEFAULT_BUDGET,
    Verdict,
    canonical_rep,
    enumerate_classes,
    format_trace,
    twisted_equiv,
)
from .errors import ParseError, ReidtraceError
from .groups import parse_element
from .instances import parse_classes, parse_torus
from .linalg import det
from .torus import (
    AdmissibleTuple,
    coincidence_points,
    lefschetz_coincidence,
    local_reidemeister_trace,
    nielsen_number,
    point_class,
    point_index,
)
from .wedge import lefschetz_number_wedge, nielsen_report, parse_wedge, reidemeister_trace_chain

EXIT_OK, EXIT_COMPUTE, EXIT_PARSE, EXIT_AXIOM = 0, 1, 2, 3
COMMANDS = ("wedge", "torus", "coincidence", "classes", "verify")


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="reidtrace",
        description="Exact Reidemeister traces for wedges of circles and torus maps.",
    )
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("--input", "-i", help="instance file, or '-' for stdin")
    p.add_argument("--text", "-t", help="instance given inline (use ';' or newlines between lines)")
    p.add_argument("--budget", type=_positive, default=DEFAULT_BUDGET, help="word-length budget for free groups (default 8)")
    p.add_argument("--seed", type=int, default=0, help="seed for the verify harness (default 0)")
    p.add_argument("--trials", type=_positive, default=100, help="random instances for verify (default 100)")
    p.add_argument("--format", choices=("text",), default="text", help="output format (only 'text')")
    p.add_argument("--pair", nargs=2, metavar=("A", "B"), help="classes: compare two elements")
    return p


def _read_input(args) -> Optional[str]:
    if args.text is not None:
        return args.text.replace(";", "\n")
    if args.input is None:
        return None
    if args.input == "-":
        return sys.stdin.read()
    with open(args.input, encoding="utf-8") as fh:
        return fh.read()


def _nielsen_line(report) -> str:
    if report.exact:
        return f"N = {report.lower} (exact)"
    return f"N in [{report.lower}, {report.upper}] (budget-limited)"


def run_wedge(text: str, budget: int) -> list[str]:
    m = parse_wedge(text)
    rt = reidemeister_trace_chain(m, budget)
    return [f"RT = {format_trace(rt)}", f"L = {lefschetz_number_wedge(m)}", _nielsen_line(nielsen_report(rt))]


def point_table(t: AdmissibleTuple) -> list[str]:
    rows = [("id", "x", "index", "class")]
    for p in t.points():
        rows.append((str(p.id), str(p), f"{point_index(t.f, t.g, p):+d}", str(point_class(t, p))))
    widths = [max(len(r[i]) for r in rows) for i in range(4)]
    return ["  " + "  ".join(cell.ljust(w) for cell, w in zip(r, widths)).rstrip() for r in rows]


def run_torus(text: str) -> list[str]:
    t = parse_torus(text)
    rt = local_reidemeister_trace(t)
    lines = [
        f"RT = {format_trace(rt)}",
        f"L = {lefschetz_coincidence(t.f, t.g)}",
        f"N = {nielsen_number(t.with_region(t.region.whole()))}",
    ]
    if not t.region.is_whole:
        lines.append(f"region = {t.region}")
    lines.append(f"points ({len(t.points())} of {len(coincidence_points(t.f, t.g))}):")
    lines.extend(point_table(t))
    return lines


def run_classes(text: str, budget: int, pair: Optional[Sequence[str]] = None) -> list[str]:
    s, file_pair = parse_classes(text)
    if pair is not None:
        try:
            file_pair = tuple(parse_element(w, s.codomain) for w in pair)
        except ReidtraceError as exc:
            raise ParseError(f"--pair: {exc}") from exc
    if file_pair is not None:
        a, b = file_pair
        eq = twisted_equiv(s, a, b, budget)
        lines = [f"verdict = {eq.verdict.name}"]
        if eq.verdict is Verdict.EQUIVALENT:
            lines.append(f"witness = {eq.witness}")
        if s.exact:
            lines.append(f"classes = {canonical_rep(s, a)} {canonical_rep(s, b)}")
        return lines
    classes = enumerate_classes(s)
    if not classes:
        if s.exact:
            return [f"classes: infinite (det(psi - phi) = {det(s.difference)})"]
        return ["classes: not enumerable (non-abelian fundamental group)"]
    return [f"classes ({len(classes)}):"] + [f"  {c}" for c in classes]


def run_verify(text: Optional[str], trials: int, seed: int) -> tuple[list[str], bool]:
    if text is not None:
        t = parse_torus(text)
        results = [(t, verify_axioms(t, seed=seed))]
    else:
        results = run_trials(trials, seed=seed)
    header = ["trial", "n", "det"] + list(AXIOMS)
    rows = [header]
    for i, (t, report) in enumerate(results):
        rows.append([str(i), str(t.n), str(lefschetz_coincidence(t.f, t.g))]
                    + ["pass" if report.results.get(a, True) else "FAIL" for a in AXIOMS])
    widths = [max(len(r[i]) for r in rows) for i in range(len(header))]
    lines = ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in rows]
    failed = [i for i, (_, r) in enumerate(results) if not r.passed]
    for i in failed:
        for axiom, detail in results[i][1].details.items():
            lines.append(f"trial {i} {axiom}: {detail}")
    lines.append(f"{len(results) - len(failed)}/{len(results)} trials passed")
    return lines, not failed


def run(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_PARSE if exc.code else EXIT_OK
    try:
        text = _read_input(args)
        if text is None and args.command != "verify":
            raise ParseError(f"{args.command}: no instance given (use --input or --text)")
        status = EXIT_OK
        if args.command == "wedge":
            lines = run_wedge(text, args.budget)
        elif args.command in ("torus", "coincidence"):
            lines = run_torus(text)
        elif args.command == "classes":
            lines = run_classes(text, args.budget, args.pair)
        else:
            lines, ok = run_verify(text, args.trials, args.seed)
            status = EXIT_OK if ok else EXIT_AXIOM
    except OSError as exc:
        print(f"error: input: {exc}", file=err)
        return EXIT_PARSE
    except ParseError as exc:
        print(f"parse error: {exc}", file=err)
        return EXIT_PARSE
    except ReidtraceError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=err)
        return EXIT_COMPUTE
    out.write("\n".join(lines) + "\n")
    return status


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
