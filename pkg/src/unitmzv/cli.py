"""Command line interface.  Every subcommand is a thin adapter over the
library: it parses flags, calls the corresponding function, and prints
the canonical serialization.  Exit codes: 0 success, 1 computation
error, 2 usage error."""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass

from .depth import (
    iterate_derivation1,
    leading_coefficient_table,
    leading_coefficients,
)
from .ihara import derivation_transpose
from .numeric import DEFAULT_ACCEL, DEFAULT_TERMS, numeric_zeta
from .shuffle import regularize, shuffle
from .words import LinComb, format_lincomb, format_word, parse_word
from .zeta import ZetaArg, word_of_zeta, zeta_of_word


@dataclass(frozen=True)
class CommandOutcome:
    code: int
    output: str


def _int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(t) for t in text.split(","))
    except ValueError as exc:
        raise ValueError(f"malformed integer list {text!r}") from exc


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="unitmzv",
        description="Depth-graded leading coefficients of unit cyclotomic "
        "multiple zeta values at levels 2, 3 and 4.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    d = sub.add_parser("decompose", help="leading coefficients of one exponent tuple")
    d.add_argument("--N", type=int, required=True)
    d.add_argument("--eps", required=True, help="comma separated exponents")
    d.add_argument("--json", action="store_true")

    d = sub.add_parser("derive", help="iterated weight-1 depth derivation")
    d.add_argument("--N", type=int, required=True)
    d.add_argument("--word", required=True)
    d.add_argument("--times", type=int, default=1)

    d = sub.add_parser("dual", help="transpose derivation of one word")
    d.add_argument("--N", type=int, required=True)
    d.add_argument("--weight", type=int, required=True)
    d.add_argument("--word", required=True)

    d = sub.add_parser("shuffle", help="shuffle product of two words")
    d.add_argument("--N", type=int, required=True)
    d.add_argument("--w1", required=True)
    d.add_argument("--w2", required=True)

    d = sub.add_parser("regularize", help="rewrite with convergent words only")
    d.add_argument("--N", type=int, required=True)
    d.add_argument("--word", required=True)

    d = sub.add_parser("word-of-zeta", help="word attached to an index")
    d.add_argument("--N", type=int, required=True)
    d.add_argument("--ks", required=True)
    d.add_argument("--eps", required=True)

    d = sub.add_parser("zeta-of-word", help="index attached to a word")
    d.add_argument("--N", type=int, required=True)
    d.add_argument("--word", required=True)

    d = sub.add_parser("eval", help="numeric value of a convergent index")
    d.add_argument("--N", type=int, required=True)
    d.add_argument("--ks", required=True)
    d.add_argument("--eps", required=True)
    d.add_argument("--terms", type=int, default=DEFAULT_TERMS)
    d.add_argument("--accel", type=int, default=DEFAULT_ACCEL)

    d = sub.add_parser("table", help="leading coefficients for all tuples of length r")
    d.add_argument("--N", type=int, required=True)
    d.add_argument("--r", type=int, required=True)
    fmt = d.add_mutually_exclusive_group()
    fmt.add_argument("--csv", action="store_true")
    fmt.add_argument("--json", action="store_true")

    d = sub.add_parser("selftest", help="run the acceptance criteria")
    d.add_argument("--max-weight", type=int, default=6)

    d = sub.add_parser("serve", help="start the HTTP service")
    d.add_argument("--host", default="127.0.0.1")
    d.add_argument("--port", type=int, default=8000)

    return p


def _compact(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _cmd_decompose(args) -> str:
    lc = leading_coefficients(args.N, _int_list(args.eps))
    if args.json:
        return _compact(lc.to_json_obj())
    if lc.modulus == 2:
        return f"c = {lc.c}"
    return f"a = {lc.a}, b = {lc.b}"


def _cmd_derive(args) -> str:
    w = parse_word(args.word, args.N)
    out = iterate_derivation1(args.N, LinComb.from_word(w), args.times)
    return format_lincomb(out)


def _cmd_dual(args) -> str:
    w = parse_word(args.word, args.N)
    return format_lincomb(derivation_transpose(args.N, args.weight, w))


def _cmd_shuffle(args) -> str:
    out = shuffle(parse_word(args.w1, args.N), parse_word(args.w2, args.N))
    return format_lincomb(out)


def _cmd_regularize(args) -> str:
    return format_lincomb(regularize(parse_word(args.word, args.N)))


def _cmd_word_of_zeta(args) -> str:
    z = ZetaArg(args.N, _int_list(args.ks), _int_list(args.eps))
    return format_word(word_of_zeta(z))


def _cmd_zeta_of_word(args) -> str:
    return zeta_of_word(parse_word(args.word, args.N)).format()


def _cmd_eval(args) -> str:
    z = ZetaArg(args.N, _int_list(args.ks), _int_list(args.eps))
    v = numeric_zeta(z, args.terms, args.accel)
    return _compact(v.to_json_obj())


def _cmd_table(args) -> str:
    rows = leading_coefficient_table(args.N, args.r)
    if args.json:
        return "\n".join(_compact(row.to_json_obj()) for row in rows)
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(["N", "r", "eps", "a", "b", "c"])
    for row in rows:
        writer.writerow(row.csv_cells())
    return buf.getvalue().rstrip("\n")


def _cmd_selftest(args) -> tuple[int, str]:
    from .selftest import run_selftest

    results = run_selftest(max_weight=getattr(args, "max_weight"))
    lines = [
        f"{'PASS' if r.passed else 'FAIL'}  {r.name}: {r.detail}" for r in results
    ]
    ok = all(r.passed for r in results)
    lines.append(f"{sum(r.passed for r in results)}/{len(results)} criteria passed")
    return (0 if ok else 1), "\n".join(lines)


def run(argv) -> CommandOutcome:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return CommandOutcome(int(exc.code or 0), "")
    try:
        if args.command == "selftest":
            code, out = _cmd_selftest(args)
            return CommandOutcome(code, out)
        if args.command == "serve":
            import uvicorn

            from .service import app

            uvicorn.run(app, host=args.host, port=args.port)
            return CommandOutcome(0, "")
        handler = {
            "decompose": _cmd_decompose,
            "derive": _cmd_derive,
            "dual": _cmd_dual,
            "shuffle": _cmd_shuffle,
            "regularize": _cmd_regularize,
            "word-of-zeta": _cmd_word_of_zeta,
            "zeta-of-word": _cmd_zeta_of_word,
            "eval": _cmd_eval,
            "table": _cmd_table,
        }[args.command]
        return CommandOutcome(0, handler(args))
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return CommandOutcome(1, "")


def main(argv=None) -> int:
    outcome = run(argv if argv is not None else sys.argv[1:])
    if outcome.output:
        print(outcome.output)
    return outcome.code


def entrypoint() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    entrypoint()
