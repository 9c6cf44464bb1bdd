"""Exact ranking and unranking of Lyndon words, and decoding of the
lexicographically minimal de Bruijn sequence."""

from .cscount import cs_count, cs_count_fast, cs_count_matrix
from .debruijn import LyndonInLn, db_prime_symbol, db_symbol, decode, fkm_successor, ln_predecessor
from .ranking import RankResult, count_lyndon, mobius, rank_lyndon, unrank_lyndon
from .words import Alphabet, Word, format_word, make_word, parse_word

__all__ = [
    "Alphabet",
    "LyndonInLn",
    "RankResult",
    "Word",
    "count_lyndon",
    "cs_count",
    "cs_count_fast",
    "cs_count_matrix",
    "db_prime_symbol",
    "db_symbol",
    "decode",
    "fkm_successor",
    "format_word",
    "ln_predecessor",
    "make_word",
    "mobius",
    "parse_word",
    "rank_lyndon",
    "unrank_lyndon",
]
