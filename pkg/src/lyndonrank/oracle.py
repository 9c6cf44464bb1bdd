"""Exhaustive reference implementations used to check the fast code.

Nothing here calls into the counting, ranking or decoding modules; Lyndon
words are recognised by comparing against every rotation and the de Bruijn
sequence is assembled by plain concatenation.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product

import numpy as np

from .words import Alphabet, Word

SIZE_LIMIT = 2 * 10**7


class TooLarge(ValueError):
    pass


def _guard(sigma: int, n: int, limit: int | None) -> None:
    limit = SIZE_LIMIT if limit is None else limit
    if sigma**n > limit:
        raise TooLarge(f"{sigma}^{n} words exceed the oracle limit {limit}")


def _naive_lyndon(s: tuple[int, ...]) -> bool:
    return all(s < s[c:] + s[:c] for c in range(1, len(s)))


def enumerate_lyndon(
    n: int, alphabet: Alphabet, divisors_only: bool = False, limit: int | None = None
) -> list[Word]:
    """Sorted Lyndon words of length ``n`` (or of every length dividing ``n``)."""
    sigma = alphabet.sigma
    _guard(sigma, n, limit)
    lengths = [d for d in range(1, n + 1) if n % d == 0] if divisors_only else [n]
    found = [
        s
        for d in lengths
        for s in product(range(sigma), repeat=d)
        if _naive_lyndon(s)
    ]
    return [Word(alphabet, s) for s in sorted(found)]


@lru_cache(maxsize=64)
def _brute_db(n: int, sigma: int) -> tuple[int, ...]:
    out: list[int] = []
    for w in enumerate_lyndon(n, Alphabet(sigma), divisors_only=True):
        out.extend(w.symbols)
    return tuple(out)


def brute_db(n: int, alphabet: Alphabet, limit: int | None = None) -> Word:
    _guard(alphabet.sigma, n, limit)
    return Word(alphabet, _brute_db(n, alphabet.sigma))


@lru_cache(maxsize=16)
def _sorted_min_rotations(n: int, sigma: int) -> np.ndarray:
    """Numeral of the least rotation of every word of length ``n``, sorted."""
    x = np.arange(sigma**n, dtype=np.int64)
    top = sigma ** (n - 1)
    best = x.copy()
    r = x
    for _ in range(n - 1):
        r = (r % top) * sigma + r // top
        np.minimum(best, r, out=best)
    best.sort()
    return best


def brute_cs(w: Word, limit: int | None = None) -> int:
    """``|{x : len(x) == len(w), least rotation of x <= w}|`` by exhaustion."""
    n, sigma = len(w), w.sigma
    _guard(sigma, n, limit)
    value = 0
    for c in w.symbols:
        value = value * sigma + c
    return int(np.searchsorted(_sorted_min_rotations(n, sigma), value, side="right"))


def brute_occ(w: Word, limit: int | None = None) -> int:
    """1-based cyclic position of ``w`` in the explicitly built sequence."""
    n, sigma = len(w), w.sigma
    _guard(sigma, n, limit)
    db = _brute_db(n, sigma)
    text = db + db[: n - 1]
    pat = w.symbols
    hits = [i + 1 for i in range(len(db)) if text[i : i + n] == pat]
    if len(hits) != 1:
        raise AssertionError(f"{w} occurs {len(hits)} times in the oracle sequence")
    return hits[0]


def necklace_count_formula(n: int, sigma: int) -> int:
    """Number of Lyndon words of length ``n`` from the divisor-sum formula."""
    total = 0
    for d in range(1, n + 1):
        if n % d == 0:
            total += _mu(n // d) * sigma**d
    assert total % n == 0
    return total // n


def _mu(m: int) -> int:
    # independent of ranking.mobius: factor by sympy-free sieve on small m
    primes = []
    k, p = m, 2
    while k > 1:
        if k % p == 0:
            k //= p
            if primes and primes[-1] == p:
                return 0
            primes.append(p)
        else:
            p += 1
    return (-1) ** len(primes)
