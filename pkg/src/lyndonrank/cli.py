"""Command-line front end.

Every subcommand takes ``--sigma`` (alphabet size) and ``--format`` (word
text format).  Numbers are printed in decimal on one line; words in the
chosen format.  Exit status is 0 on success, 1 on domain errors and 2 on
usage errors.
"""

from __future__ import annotations

import argparse
import sys

from . import debruijn, oracle, ranking
from .cscount import cs_count
from .words import FORMATS, Alphabet, Word, format_word, is_lyndon, parse_word, prev_self_minimal


class DomainError(Exception):
    pass


def _nonneg_int(text: str) -> int:
    try:
        value = int(text, 10)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a decimal integer: {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be non-negative: {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--sigma", type=int, required=True, help="alphabet size (>= 2)")
    common.add_argument(
        "--format",
        choices=FORMATS,
        default="auto",
        help="word format: chars (0-9a-z), csv (comma-separated), alpha (a-z); "
        "auto picks chars up to 36 symbols, csv above",
    )

    parser = argparse.ArgumentParser(
        prog="lyndonrank",
        description="Exact ranking of Lyndon words and random access to minimal de Bruijn sequences.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("rank", parents=[common], help="number of Lyndon words <= WORD of the same length")
    p.add_argument("word")

    p = sub.add_parser("unrank", parents=[common], help="K-th Lyndon word of length N")
    p.add_argument("n", type=_nonneg_int)
    p.add_argument("k", type=_nonneg_int)

    p = sub.add_parser("cs-count", parents=[common], help="number of words whose least rotation is <= WORD")
    p.add_argument("word")
    p.add_argument("--engine", choices=("fast", "matrix"), default="fast")

    p = sub.add_parser("decode", parents=[common], help="position of WORD in the minimal de Bruijn sequence")
    p.add_argument("word")

    p = sub.add_parser("db-symbol", parents=[common], help="K-th symbol of the minimal de Bruijn sequence of order N")
    p.add_argument("n", type=_nonneg_int)
    p.add_argument("k", type=_nonneg_int)

    p = sub.add_parser("dbprime-symbol", parents=[common], help="K-th symbol of the sorted Lyndon words of length N")
    p.add_argument("n", type=_nonneg_int)
    p.add_argument("k", type=_nonneg_int)

    p = sub.add_parser("db-generate", parents=[common], help="print the minimal de Bruijn sequence of order N")
    p.add_argument("n", type=_nonneg_int)

    p = sub.add_parser("lyndon-list", parents=[common], help="list Lyndon words of length N in order")
    p.add_argument("n", type=_nonneg_int)
    p.add_argument("--divisors", action="store_true", help="include every length dividing N")
    return parser


def _alphabet(args) -> Alphabet:
    try:
        return Alphabet(args.sigma)
    except ValueError as e:
        raise DomainError(str(e)) from None


def _positive_n(n: int) -> int:
    if n < 1:
        raise DomainError("n must be at least 1")
    return n


def _run(args, out, err) -> None:
    alphabet = _alphabet(args)
    fmt = args.format

    def word_arg(text: str) -> Word:
        return parse_word(text, alphabet, fmt)

    def show(w: Word) -> str:
        return format_word(w, fmt)

    def symbol(c: int) -> str:
        return show(Word(alphabet, (c,)))

    cmd = args.command
    if cmd == "rank":
        w = word_arg(args.word)
        result = ranking.rank_lyndon(w)
        if not is_lyndon(w):
            print(f"note: {show(w)} is not a Lyndon word; ranked as {show(result.normalized_word)}", file=err)
        print(result.rank, file=out)
    elif cmd == "unrank":
        print(show(ranking.unrank_lyndon(_positive_n(args.n), args.k, alphabet)), file=out)
    elif cmd == "cs-count":
        w = word_arg(args.word)
        v = prev_self_minimal(w)
        if v != w:
            print(f"note: {show(w)} is not self-minimal; counted as {show(v)}", file=err)
        print(cs_count(v, args.engine), file=out)
    elif cmd == "decode":
        print(debruijn.decode(word_arg(args.word)), file=out)
    elif cmd == "db-symbol":
        print(symbol(debruijn.db_symbol(_positive_n(args.n), args.k, alphabet)), file=out)
    elif cmd == "dbprime-symbol":
        print(symbol(debruijn.db_prime_symbol(_positive_n(args.n), args.k, alphabet)), file=out)
    elif cmd == "db-generate":
        print(show(oracle.brute_db(_positive_n(args.n), alphabet)), file=out)
    elif cmd == "lyndon-list":
        for w in oracle.enumerate_lyndon(_positive_n(args.n), alphabet, divisors_only=args.divisors):
            print(show(w), file=out)


def main(argv=None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        _run(args, out, err)
    except (DomainError, ValueError) as e:
        print(f"error: {e}", file=err)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
