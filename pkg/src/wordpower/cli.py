"""Command-line front door.

Commands: gen, check, squares, factorize, beta, verify.  Every command
emits one report per line; ``--json`` switches to JSON-lines with the
same information.  Exit codes: 0 success/free, 1 not-free or failed
verification (or a failed beta search), 2 usage error, 3 length cap
exceeded.  The env var WORDPOWER_CAP overrides the default length cap;
``--cap`` overrides both.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys

from . import verify
from .atlas import atlas_membership, squares_in
from .constructions import (
    BetaSearchError,
    UnknownGeneratorError,
    beta_params,
    generator,
)
from .exponents import format_exponent, format_exponent_spec, parse_exponent, parse_exponent_spec
from .morphism import factorize
from .repetition import PowerOccurrence, find_power
from .words import DEFAULT_CAP, CapExceeded, WordFormatError, parse_word

_LITERAL_WORD_RE = re.compile(r"^[01]+$")

USAGE_ERROR = 2
CAP_ERROR = 3


class _UsageError(ValueError):
    pass


def _emit(report: dict, human: str, json_mode: bool) -> None:
    print(json.dumps(report, separators=(",", ":")) if json_mode else human)


def _occurrence_report(occ: PowerOccurrence) -> dict:
    return {
        "kind": "occurrence",
        "start": occ.start,
        "period": occ.period,
        "length": occ.length,
        "exponent": format_exponent(occ.exponent),
    }


def _read_word_argument(arg: str) -> str:
    """A pure 0/1 token is a literal word; '@path' forces a file read;
    otherwise an existing file is read (one ASCII word per file)."""
    if arg.startswith("@"):
        path = arg[1:]
    elif _LITERAL_WORD_RE.match(arg):
        return arg
    elif os.path.isfile(arg):
        path = arg
    else:
        raise _UsageError(f"not a binary word and not a file: {arg!r}")
    try:
        with open(path, "r", encoding="ascii") as handle:
            return parse_word(handle.read().strip())
    except OSError as exc:
        raise _UsageError(f"cannot read word file {path!r}: {exc}") from None


def _cmd_gen(args: argparse.Namespace) -> int:
    prefix = generator(args.name, cap=args.cap)(args.length)
    _emit(
        {"kind": "word", "generator": args.name, "n": args.length, "word": prefix},
        prefix,
        args.json,
    )
    return 0


def _cmd_check(args: argparse.Namespace) -> int:
    word = _read_word_argument(args.word)
    try:
        threshold, plus = parse_exponent_spec(args.exponent)
        if threshold < 1:
            raise ValueError("threshold must be at least 1")
    except ValueError as exc:
        raise _UsageError(str(exc)) from None
    witness = find_power(word, threshold, strict=plus)
    spec_text = format_exponent_spec(threshold, plus)
    free = witness is None
    _emit(
        {
            "kind": "check",
            "word_length": len(word),
            "threshold": spec_text,
            "free": free,
        },
        f"{'free' if free else 'not free'} (threshold {spec_text}, {len(word)} letters)",
        args.json,
    )
    if witness is not None and args.witness:
        _emit(
            _occurrence_report(witness),
            f"witness start={witness.start} period={witness.period} "
            f"length={witness.length} exponent={format_exponent(witness.exponent)}",
            args.json,
        )
    return 0 if free else 1


def _cmd_squares(args: argparse.Namespace) -> int:
    try:
        make = generator(args.input, cap=args.cap)
    except UnknownGeneratorError:
        make = None
    if make is not None:
        if args.length is None:
            raise _UsageError("a generator input needs a prefix length")
        word = make(args.length)
    else:
        word = _read_word_argument(args.input)
    for position, square in squares_in(word):
        membership = atlas_membership(square)
        _emit(
            {
                "kind": "membership",
                "position": position,
                "square": square,
                "family": membership.family,
                "level": membership.level,
                "base": membership.base,
            },
            f"pos={position} square={square} family={membership.family or '-'}"
            + (f" level={membership.level} base={membership.base}" if membership.in_atlas else ""),
            args.json,
        )
    return 0


def _cmd_factorize(args: argparse.Namespace) -> int:
    word = _read_word_argument(args.word)
    try:
        threshold = parse_exponent(args.threshold)
    except ValueError as exc:
        raise _UsageError(str(exc)) from None
    for factorization in factorize(word, threshold):
        _emit(
            {
                "kind": "factorization",
                "u": factorization.head,
                "y": factorization.core,
                "v": factorization.tail,
            },
            f"u={factorization.head or 'e'} y={factorization.core or 'e'} "
            f"v={factorization.tail or 'e'}",
            args.json,
        )
    return 0


def _cmd_beta(args: argparse.Namespace) -> int:
    try:
        alpha = parse_exponent(args.alpha)
    except ValueError as exc:
        raise _UsageError(str(exc)) from None
    params = beta_params(alpha, args.s, cap=args.cap)
    _emit(
        {
            "kind": "params",
            "alpha": format_exponent(params.alpha),
            "s": params.s,
            "r": params.r,
            "t": params.t,
            "beta": format_exponent(params.beta),
        },
        f"r={params.r} t={params.t} beta={format_exponent(params.beta)} "
        f"(alpha={format_exponent(params.alpha)}, s={params.s})",
        args.json,
    )
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    names = verify.suite_names() if args.suite == ["all"] else args.suite
    unknown = [name for name in names if name not in verify.suite_names()]
    if unknown:
        raise _UsageError(f"unknown suite: {', '.join(unknown)}")
    all_passed = True
    for name in names:
        result = verify.run_suite(name)
        all_passed &= result.passed
        _emit(
            {
                "kind": "verdict",
                "suite": result.suite,
                "passed": result.passed,
                "seconds": round(result.seconds, 3),
                "detail": result.detail,
            },
            f"{result.suite}: {'pass' if result.passed else 'FAIL'} "
            f"({result.seconds:.2f}s) {result.detail}",
            args.json,
        )
    return 0 if all_passed else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wordpower",
        description="Repetitions in binary words: generators, power-freeness "
        "checks, square classification and theorem verification.",
    )
    env_cap = os.environ.get("WORDPOWER_CAP")
    default_cap = int(env_cap) if env_cap else DEFAULT_CAP
    parser.add_argument("--json", action="store_true", help="emit JSON lines")
    parser.add_argument(
        "--cap",
        type=int,
        default=default_cap,
        help=f"word length cap (default {default_cap}, env WORDPOWER_CAP)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="print a prefix of a named infinite word")
    p.add_argument("name", help="t, s, a, a-automatic, wb:<bits>, beta:<alpha>:<s>")
    p.add_argument("length", type=int)
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("check", help="test power-freeness of a word")
    p.add_argument("word", help="binary word, @file, or file path")
    p.add_argument("exponent", help="threshold like 7/3, 2, or 2+ for the strict form")
    p.add_argument("--witness", action="store_true", help="print the witness occurrence")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("squares", help="list square occurrences with atlas classification")
    p.add_argument("input", help="word, @file, file path, or generator name")
    p.add_argument("length", type=int, nargs="?", help="prefix length for generators")
    p.set_defaults(func=_cmd_squares)

    p = sub.add_parser("factorize", help="short-edge factorizations of a power-free word")
    p.add_argument("word", help="binary word, @file, or file path")
    p.add_argument("--threshold", default="7/3", help="freeness threshold in (2, 7/3]")
    p.set_defaults(func=_cmd_factorize)

    p = sub.add_parser("beta", help="compute beta-power construction parameters")
    p.add_argument("alpha", help="rational above 2, like 11/5")
    p.add_argument("s", type=int, help="morphism iteration depth, at least 3")
    p.set_defaults(func=_cmd_beta)

    p = sub.add_parser("verify", help="run named verification suites")
    p.add_argument(
        "suite",
        nargs="+",
        help="suite names or 'all': " + ", ".join(verify.suite_names()),
    )
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return CAP_ERROR
    except BetaSearchError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (_UsageError, UnknownGeneratorError, WordFormatError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
