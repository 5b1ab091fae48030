"""Command-line interface.

Exit codes: 0 success, 1 parse error, 2 arithmetic/domain error, 3 usage
error.  ``--machine`` switches stdout to one JSON record per result::

    number   {"terms": [{"c": "<num>/<den>", "p": "<num>/<den>"}, ...]}
    verdict  {"verdict": "Prime|Composite|NotInteger|NotPositive|Unknown",
              "rule": ..., "witness": ..., "cofactor": ..., "reason": ...,
              "trace": [{"cite": ..., "claim": ...}, ...]}
    report   {"B": ..., "p": ..., "N": ..., "stand_in": ..., "passed": ...,
              "cases": [{"m": ..., "passed": ..., "offending_prime": ...,
                         "reason": ...}, ...]}
"""

from __future__ import annotations

import argparse
import contextlib
import io
import json
import shlex
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, TextIO

from . import core, finite, primes
from .core import GrossNumber, Ordering
from .errors import GrossError, ParseError
from .parser import evaluate, format_number, number_from_record, number_record

EXIT_OK, EXIT_PARSE, EXIT_ARITH, EXIT_USAGE = 0, 1, 2, 3


@dataclass
class CommandResult:
    exit_code: int
    human_text: str
    machine_record: dict | None = None


class UsageError(Exception):
    pass


# machine records


def verdict_record(verdict: primes.PrimalityVerdict) -> dict:
    name = {
        primes.Prime: "Prime",
        primes.Composite: "Composite",
        primes.NotInteger: "NotInteger",
        primes.NotPositive: "NotPositive",
        primes.UnknownPrimality: "Unknown",
    }[type(verdict)]
    is_composite = isinstance(verdict, primes.Composite)
    return {
        "verdict": name,
        "rule": verdict.rule.value if isinstance(verdict, primes.Prime) else None,
        "witness": number_record(verdict.witness) if is_composite else None,
        "cofactor": number_record(verdict.cofactor) if is_composite else None,
        "reason": getattr(verdict, "reason", None),
        "trace": [{"cite": s.cite, "claim": s.claim} for s in verdict.trace],
    }


def verdict_from_record(record: dict) -> primes.PrimalityVerdict:
    trace = tuple(primes.TraceStep(s["cite"], s["claim"]) for s in record["trace"])
    kind = record["verdict"]
    if kind == "Prime":
        return primes.Prime(primes.Rule(record["rule"]), trace)
    if kind == "Composite":
        return primes.Composite(number_from_record(record["witness"]), number_from_record(record["cofactor"]), trace)
    if kind == "NotInteger":
        return primes.NotInteger(trace)
    if kind == "NotPositive":
        return primes.NotPositive(trace)
    if kind == "Unknown":
        return primes.UnknownPrimality(record["reason"], trace)
    raise ValueError(f"unknown verdict {kind!r}")


def report_record(report: finite.AnalogueReport) -> dict:
    return {
        "B": report.bound,
        "p": report.p,
        "m_max": report.m_max,
        "N": str(report.stand_in),
        "stand_in": report.stand_in_kind,
        "passed": report.passed,
        "cases": [
            {"m": c.m, "passed": c.passed, "offending_prime": c.offending_prime, "reason": c.reason}
            for c in report.cases
        ],
    }


def report_from_record(record: dict) -> finite.AnalogueReport:
    cases = tuple(finite.AnalogueCase(c["m"], c["passed"], c["offending_prime"], c["reason"]) for c in record["cases"])
    return finite.AnalogueReport(
        record["B"], int(record["N"]), record["p"], record["m_max"], cases, record["stand_in"]
    )


def dumps(record: dict) -> str:
    return json.dumps(record, separators=(",", ":"))


# rendering


def _describe(verdict: primes.PrimalityVerdict, style: str) -> str:
    if isinstance(verdict, primes.Prime):
        label = {primes.Rule.R1: "Theorem 1", primes.Rule.R2: "Lemma 2", primes.Rule.FINITE: "finite"}[verdict.rule]
        return f"Prime ({label})"
    if isinstance(verdict, primes.Composite):
        w, c = format_number(verdict.witness, style), format_number(verdict.cofactor, style)
        return f"Composite: ({w}) × ({c})" if style == "unicode" else f"Composite: ({w}) * ({c})"
    if isinstance(verdict, primes.UnknownPrimality):
        return f"Unknown: {verdict.reason}"
    return type(verdict).__name__


def _trace_lines(trace) -> list[str]:
    return [f"  {step}" for step in trace]


_ASCII = str.maketrans({"①": "G", "λ": "L", "×": "*"})


class _Session:
    def __init__(self, args):
        self.style = "ascii" if args.ascii else "unicode"
        self.machine = args.machine
        self.trace = args.trace

    def fmt(self, x: GrossNumber) -> str:
        return format_number(x, self.style)

    def done(self, text: str, record: dict | None = None) -> CommandResult:
        if self.style == "ascii":
            text = text.translate(_ASCII)
        return CommandResult(EXIT_OK, text, record)


def _expr(text: str) -> GrossNumber:
    return evaluate(text)


def _cert(text: str) -> primes.LambdaCert:
    x = _expr(text)
    cert = primes.lambda_certify(x)
    if cert is None:
        raise core.NotRepresentable(f"{x} is not a lambda-form q*G^k with q > 0 and integer k >= 1")
    return cert


def _rational(text: str) -> Fraction:
    x = _expr(text)
    if not x.is_rational():
        raise core.NotRepresentable(f"{x} is not a finite rational")
    return x.as_rational()


def cmd_eval(s: _Session, a) -> CommandResult:
    x = _expr(a.expr)
    return s.done(s.fmt(x), number_record(x))


def cmd_cmp(s: _Session, a) -> CommandResult:
    x, y = _expr(a.left), _expr(a.right)
    order = core.cmp(x, y)
    symbol = {Ordering.LESS: "<", Ordering.EQUAL: "=", Ordering.GREATER: ">"}[order]
    return s.done(f"{s.fmt(x)} {symbol} {s.fmt(y)}", {"cmp": order.name.capitalize()})


def cmd_classify(s: _Session, a) -> CommandResult:
    verdict = primes.classify_prime(_expr(a.expr))
    lines = [_describe(verdict, s.style)]
    if s.trace:
        lines += _trace_lines(verdict.trace)
    return s.done("\n".join(lines), verdict_record(verdict))


def cmd_shape(s: _Session, a) -> CommandResult:
    shape = core.classify_shape(_expr(a.expr))
    flags = vars(shape)
    return s.done("\n".join(f"{k}: {str(v).lower()}" for k, v in flags.items()), dict(flags))


def cmd_decompose(s: _Session, a) -> CommandResult:
    d = core.decompose(_expr(a.expr))
    fin = GrossNumber.from_scalar(d.finite_part)
    text = f"infinite: {s.fmt(d.infinite_part)}\nfinite: {s.fmt(fin)}\ninfinitesimal: {s.fmt(d.infinitesimal_part)}"
    record = {
        "infinite": number_record(d.infinite_part),
        "finite": number_record(fin),
        "infinitesimal": number_record(d.infinitesimal_part),
    }
    return s.done(text, record)


def cmd_twins(s: _Session, a) -> CommandResult:
    pair = primes.make_twins(_cert(a.lam), a.p, a.m)
    lines = [f"({s.fmt(pair.lower)}, {s.fmt(pair.upper)})"]
    if s.trace:
        lines += _trace_lines(pair.trace)
    record = {
        "lower": number_record(pair.lower),
        "upper": number_record(pair.upper),
        "p": pair.p,
        "m": pair.m,
        "trace": [{"cite": t.cite, "claim": t.claim} for t in pair.trace],
    }
    return s.done("\n".join(lines), record)


def _listing(s: _Session, values: list[GrossNumber]) -> CommandResult:
    return s.done("\n".join(s.fmt(v) for v in values), {"values": [number_record(v) for v in values]})


def cmd_enum_a(s: _Session, a) -> CommandResult:
    return _listing(s, primes.enumerate_A(_cert(a.lam), a.p, a.count, a.m_start))


def cmd_enum_b(s: _Session, a) -> CommandResult:
    return _listing(s, primes.enumerate_B(_cert(a.lam), a.p, a.count))


def cmd_set_count(s: _Session, a) -> CommandResult:
    x = primes.set_count(primes.SetId(a.name.lower()))
    return s.done(s.fmt(x), number_record(x))


def cmd_subst(s: _Session, a) -> CommandResult:
    value = core.eval_at(_expr(a.expr), _rational(a.at))
    return s.done(str(value), {"value": f"{value.numerator}/{value.denominator}"})


def cmd_finite_check(s: _Session, a) -> CommandResult:
    report = finite.finite_analogue_check(a.bound, a.p, a.mmax, a.stand_in)
    lines = [f"B={report.bound} p={report.p} N={report.stand_in} ({report.stand_in_kind})"]
    for c in report.cases:
        status = "pass" if c.passed else f"FAIL ({c.reason})"
        lines.append(f"m={c.m}: {status}")
    lines.append("all passed" if report.passed else "some cases failed")
    return s.done("\n".join(lines), report_record(report))


def cmd_sieve(s: _Session, a) -> CommandResult:
    pairs = finite.twin_sieve(a.limit)
    return s.done("\n".join(f"({p}, {q})" for p, q in pairs), {"pairs": [list(pq) for pq in pairs]})


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _global_flags(parser: argparse.ArgumentParser, default) -> None:
    parser.add_argument("--ascii", action="store_true", default=default, help="print G instead of ①")
    parser.add_argument("--machine", action="store_true", default=default, help="emit JSON records")
    parser.add_argument("--trace", action="store_true", default=default, help="include proof traces")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="grossone", description="Exact grossone arithmetic and infinite-prime classification.")
    _global_flags(parser, False)
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    def command(name, func, help):
        p = sub.add_parser(name, help=help)
        _global_flags(p, argparse.SUPPRESS)
        p.set_defaults(func=func)
        return p

    command("eval", cmd_eval, "evaluate an expression").add_argument("expr")
    p = command("cmp", cmd_cmp, "compare two expressions")
    p.add_argument("left")
    p.add_argument("right")
    command("classify", cmd_classify, "classify primality").add_argument("expr")
    command("shape", cmd_shape, "purely infinite / simple / compound flags").add_argument("expr")
    command("decompose", cmd_decompose, "split into infinite, finite, infinitesimal parts").add_argument("expr")

    p = command("twins", cmd_twins, "build a twin pair from a square lambda")
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--m", type=int, required=True)

    p = command("enum-a", cmd_enum_a, "list members of A(p)")
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--count", type=int, required=True)
    p.add_argument("--m-start", type=int, default=1)

    p = command("enum-b", cmd_enum_b, "list members of B(p)")
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--count", type=int, required=True)

    command("set-count", cmd_set_count, "count elements of a standard set").add_argument(
        "name", type=str.lower, choices=[s.value for s in primes.SetId]
    )

    p = command("subst", cmd_subst, "substitute a finite value for grossone")
    p.add_argument("expr")
    p.add_argument("--at", required=True)

    p = command("finite-check", cmd_finite_check, "finite-analogue check with N = lcm(1..B)^2")
    p.add_argument("--bound", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--mmax", type=int, required=True)
    p.add_argument("--stand-in", choices=sorted(finite.STAND_INS), default="lcm")

    p = command("sieve", cmd_sieve, "finite twin primes up to a limit")
    p.add_argument("--limit", type=int, required=True)

    command("repl", None, "interactive session")
    return parser


def _render(result: CommandResult, machine: bool) -> str:
    if machine and result.machine_record is not None:
        return dumps(result.machine_record)
    return result.human_text


def run_command(argv: Sequence[str], stdin: TextIO | None = None, stdout: TextIO | None = None) -> CommandResult:
    """Run one CLI invocation and return its result without printing it.

    ``repl`` is the exception: it streams to ``stdout`` as it goes and
    returns an empty result.
    """
    parser = build_parser()
    help_out = io.StringIO()
    try:
        with contextlib.redirect_stdout(help_out):
            args = parser.parse_args(list(argv))
    except UsageError as exc:
        return CommandResult(EXIT_USAGE, f"usage error: {exc}")
    except SystemExit as exc:
        # --help
        return CommandResult(EXIT_OK if not exc.code else EXIT_USAGE, help_out.getvalue().rstrip("\n"))

    if args.command == "repl":
        repl(stdin or sys.stdin, stdout or sys.stdout, args)
        return CommandResult(EXIT_OK, "")

    session = _Session(args)
    try:
        return args.func(session, args)
    except ParseError as exc:
        return CommandResult(EXIT_PARSE, f"parse error at {exc}", {"error": "ParseError", "position": exc.position})
    except (GrossError, ValueError) as exc:
        return CommandResult(EXIT_ARITH, f"error: {type(exc).__name__}: {exc}", {"error": type(exc).__name__})


_SINGLE_EXPR = {"eval", "classify", "shape", "decompose"}
_COMMANDS = {"eval", "cmp", "classify", "shape", "decompose", "twins", "enum-a", "enum-b",
             "set-count", "subst", "finite-check", "sieve"}


def _repl_argv(line: str, flags: list[str]) -> list[str]:
    word, _, rest = line.partition(" ")
    if word not in _COMMANDS:
        return ["eval", *flags, "--", line]
    if word in _SINGLE_EXPR:
        tokens = rest.split()
        local = [t for t in tokens if t in ("--ascii", "--machine", "--trace")]
        expr = " ".join(t for t in tokens if t not in local)
        return [word, *flags, *local, "--", expr]
    return [word, *flags, *shlex.split(rest)]


def repl(stdin: TextIO, stdout: TextIO, args=None) -> None:
    """Read expressions or commands line by line until EOF or ``quit``.

    Lines are independent; errors are printed inline and the session goes
    on.
    """
    flags = [f"--{name}" for name in ("ascii", "machine", "trace") if args is not None and getattr(args, name)]
    interactive = stdin.isatty()
    while True:
        if interactive:
            stdout.write("> ")
            stdout.flush()
        line = stdin.readline()
        if not line:
            break
        line = line.strip()
        if not line:
            continue
        if line in ("quit", "exit"):
            break
        try:
            argv = _repl_argv(line, flags)
        except ValueError as exc:
            stdout.write(f"usage error: {exc}\n")
            continue
        result = run_command(argv)
        stdout.write(_render(result, "--machine" in argv) + "\n")
        stdout.flush()


def main(argv: Sequence[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    result = run_command(argv)
    machine = "--machine" in argv
    text = _render(result, machine)
    if result.exit_code == EXIT_OK:
        if text:
            print(text)
    else:
        if machine and result.machine_record is not None:
            print(text)
        print(result.human_text, file=sys.stderr)
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
