"""Decoding and random access for the minimal de Bruijn sequence.

The lexicographically least de Bruijn sequence of order ``n`` is the sorted
concatenation of the Lyndon words whose length divides ``n``.  A Lyndon
word ``lam`` in that list ends at position ``|CS(lam^(n/len(lam)))|``, so
any position can be recovered from a constant number of neighbouring
Lyndon words plus one ``CS`` count.

Positions are 1-based, matching ``occ(1100, dB_4) = 15``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .cscount import cs_count_seq
from .ranking import count_lyndon, unrank_lyndon
from .words import (
    Alphabet,
    Word,
    is_lyndon,
    least_rotation,
    period_of,
    prev_self_minimal_seq,
    word_from_value,
)


@dataclass(frozen=True)
class LyndonInLn:
    """A Lyndon word whose length divides ``n``."""

    word: Word
    n: int

    def __post_init__(self) -> None:
        if self.n % len(self.word):
            raise ValueError(f"length {len(self.word)} does not divide {self.n}")
        if not is_lyndon(self.word):
            raise ValueError(f"{self.word} is not a Lyndon word")

    @property
    def power(self) -> Word:
        return self.word * (self.n // len(self.word))


def _extend(s: Sequence[int], n: int) -> tuple[int, ...]:
    s = tuple(s)
    reps = -(-n // len(s))
    return (s * reps)[:n]


def _succ(s: tuple[int, ...], n: int, sigma: int) -> Optional[tuple[int, ...]]:
    z = sigma - 1
    x = _extend(s, n)
    while True:
        t = n
        while t and x[t - 1] == z:
            t -= 1
        if t == 0:
            return None
        cand = x[: t - 1] + (x[t - 1] + 1,)
        if n % t == 0:
            return cand
        x = _extend(cand, n)


def _pred(s: tuple[int, ...], n: int, sigma: int) -> Optional[tuple[int, ...]]:
    x = list(_extend(s, n))
    # step down to the previous word of length n, then back up to self-minimal
    i = n - 1
    while i >= 0 and x[i] == 0:
        x[i] = sigma - 1
        i -= 1
    if i < 0:
        return None
    x[i] -= 1
    v = prev_self_minimal_seq(x, sigma)
    return v[: period_of(v)]


def _end_position(s: tuple[int, ...], n: int, sigma: int) -> int:
    return cs_count_seq(_extend(s, n), sigma)


def fkm_successor(lam: LyndonInLn) -> Optional[LyndonInLn]:
    nxt = _succ(lam.word.symbols, lam.n, lam.word.sigma)
    return None if nxt is None else LyndonInLn(lam.word.replace(nxt), lam.n)


def ln_predecessor(lam: LyndonInLn) -> Optional[LyndonInLn]:
    prv = _pred(lam.word.symbols, lam.n, lam.word.sigma)
    return None if prv is None else LyndonInLn(lam.word.replace(prv), lam.n)


def prefix_end_position(lam: LyndonInLn) -> int:
    return _end_position(lam.word.symbols, lam.n, lam.word.sigma)


def _failure(p: Sequence[int]) -> list[int]:
    fail = [0] * len(p)
    k = 0
    for i in range(1, len(p)):
        while k and p[i] != p[k]:
            k = fail[k - 1]
        if p[i] == p[k]:
            k += 1
        fail[i] = k
    return fail


def find_all(text: Sequence[int], pattern: Sequence[int]) -> list[int]:
    """0-based starts of every occurrence of ``pattern`` in ``text`` (KMP)."""
    fail = _failure(pattern)
    m = len(pattern)
    hits = []
    k = 0
    for i, c in enumerate(text):
        while k and c != pattern[k]:
            k = fail[k - 1]
        if c == pattern[k]:
            k += 1
        if k == m:
            hits.append(i - m + 1)
            k = fail[k - 1]
    return hits


def _largest_below(beta: tuple[int, ...], n: int, sigma: int) -> tuple[int, ...]:
    """Largest Lyndon word with length dividing ``n`` that is strictly below ``beta``.

    Those not sharing ``beta`` as a prefix are exactly the ones whose ``n``-th
    power is below ``beta`` padded with minimum letters; the remaining
    candidates are the Lyndon proper prefixes of ``beta``.
    """
    padded = list(beta) + [0] * (n - len(beta))
    best = _pred(tuple(padded), n, sigma) if any(padded) else None
    # _pred steps from the padded word itself, so best^(n/|best|) < padded
    for t in range(len(beta) - 1, 0, -1):
        if n % t == 0:
            p = beta[:t]
            if period_of(p) == t and least_rotation(p) == 0:
                if best is None or p > best:
                    best = p
                break  # longer Lyndon prefixes are larger; first hit suffices
    if best is None:
        raise AssertionError(f"no Lyndon word below {beta}")
    return best


def decode(w: Word) -> int:
    """1-based position of ``w`` in the minimal de Bruijn sequence of order ``len(w)``."""
    s = w.symbols
    n, sigma = len(s), w.sigma
    z = sigma - 1
    i = 0
    while i < n and s[i] == z:
        i += 1
    if i >= 1 and all(c == 0 for c in s[i:]):
        return sigma**n - i + 1

    r = least_rotation(s)
    m = s[r:] + s[:r]
    t = period_of(m)
    lam = m[:t]
    d = n // t
    root = s[:t]
    c = find_all(lam + lam[:-1], root)[0]
    alpha = lam[c:]

    if any(x != z for x in alpha):
        mid = lam
        left = ()
    else:
        if d == 1:
            mid = _largest_below(lam[:c], n, sigma)
        else:
            mid = lam
        left = _pred(mid, n, sigma) or ()
    right = _succ(mid, n, sigma) or ()
    window = left + mid + right
    hits = find_all(window, s)
    if len(hits) != 1:
        raise AssertionError(f"{len(hits)} matches of {w} in window {window}")
    start = _end_position(mid, n, sigma) - len(mid) - len(left) + 1
    return start + hits[0]


def db_symbol(n: int, k: int, alphabet: Alphabet) -> int:
    """The ``k``-th symbol (1-based) of the minimal de Bruijn sequence of order ``n``."""
    sigma = alphabet.sigma
    if n < 1:
        raise ValueError("n must be at least 1")
    if not 1 <= k <= sigma**n:
        raise ValueError(f"position {k} out of range 1..{sigma ** n}")
    lo, hi = 0, sigma**n - 1
    while lo < hi:
        mid = (lo + hi) // 2
        v = prev_self_minimal_seq(word_from_value(alphabet, n, mid).symbols, sigma)
        if cs_count_seq(v, sigma) >= k:
            hi = mid
        else:
            lo = mid + 1
    v = prev_self_minimal_seq(word_from_value(alphabet, n, lo).symbols, sigma)
    cs = cs_count_seq(v, sigma)
    return v[n - (cs - k + 1)]


def db_prime_symbol(n: int, k: int, alphabet: Alphabet) -> int:
    """The ``k``-th symbol of the sorted concatenation of Lyndon words of length ``n``."""
    total = n * count_lyndon(n, alphabet)
    if not 1 <= k <= total:
        raise ValueError(f"position {k} out of range 1..{total}")
    i = (k - 1) % n
    j = (k - 1) // n + 1
    return unrank_lyndon(n, j, alphabet)[i]
