"""Ranking and unranking Lyndon words of a fixed length."""

from __future__ import annotations

from dataclasses import dataclass

from .cscount import cs_count_seq
from .words import Alphabet, Word, is_lyndon, prev_self_minimal_seq, word_from_value


@dataclass(frozen=True)
class RankResult:
    rank: int
    normalized_word: Word


def mobius(m: int) -> int:
    if m < 1:
        raise ValueError("mobius is defined for m >= 1")
    result = 1
    p = 2
    while p * p <= m:
        if m % p == 0:
            m //= p
            if m % p == 0:
                return 0
            result = -result
        p += 1
    if m > 1:
        result = -result
    return result


def divisors(n: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def _rank_seq(s: tuple[int, ...], sigma: int, engine: str = "fast") -> int:
    n = len(s)
    total = 0
    for d in divisors(n):
        mu = mobius(n // d)
        if mu:
            v = prev_self_minimal_seq(s[:d], sigma)
            total += mu * cs_count_seq(v, sigma, engine)
    q, r = divmod(total, n)
    if r:
        raise ArithmeticError(f"Mobius sum {total} not divisible by {n} for {s}")
    return q


def rank_lyndon(w: Word, engine: str = "fast") -> RankResult:
    """Number of Lyndon words of length ``len(w)`` that are ``<= w``.

    ``w`` may be any word; it is first replaced by the largest self-minimal
    word not exceeding it, which leaves the count unchanged.
    """
    v = prev_self_minimal_seq(w.symbols, w.sigma)
    return RankResult(_rank_seq(v, w.sigma, engine), w.replace(v))


def count_lyndon(n: int, alphabet: Alphabet) -> int:
    if n < 1:
        raise ValueError("n must be at least 1")
    return _rank_seq((alphabet.sigma - 1,) * n, alphabet.sigma)


def unrank_lyndon(n: int, k: int, alphabet: Alphabet) -> Word:
    """The ``k``-th smallest Lyndon word of length ``n`` (1-based)."""
    total = count_lyndon(n, alphabet)
    if not 1 <= k <= total:
        raise ValueError(f"rank {k} out of range 1..{total}")
    sigma = alphabet.sigma
    lo, hi = 0, sigma**n - 1
    while lo < hi:
        mid = (lo + hi) // 2
        s = word_from_value(alphabet, n, mid).symbols
        if _rank_seq(prev_self_minimal_seq(s, sigma), sigma) >= k:
            hi = mid
        else:
            lo = mid + 1
    w = word_from_value(alphabet, n, lo)
    if not is_lyndon(w):
        raise AssertionError(f"unrank produced non-Lyndon word {w}")
    return w
