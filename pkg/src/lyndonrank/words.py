"""Words over an ordered integer alphabet and the basic operations on them.

Symbols are the integers ``0 .. sigma-1``; ``0`` is the smallest letter and
``sigma-1`` the largest.  Lexicographic order is Python's tuple order, which
already puts a proper prefix before its extensions.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import total_ordering
from typing import Iterable, Sequence

CHARS = "0123456789abcdefghijklmnopqrstuvwxyz"
LETTERS = "abcdefghijklmnopqrstuvwxyz"

FORMATS = ("auto", "chars", "csv", "alpha")


class AlphabetMismatch(ValueError):
    pass


@dataclass(frozen=True)
class Alphabet:
    sigma: int

    def __post_init__(self) -> None:
        if not isinstance(self.sigma, int) or self.sigma < 2:
            raise ValueError(f"alphabet size must be an integer >= 2, got {self.sigma!r}")

    @property
    def min_symbol(self) -> int:
        return 0

    @property
    def max_symbol(self) -> int:
        return self.sigma - 1


@total_ordering
@dataclass(frozen=True)
class Word:
    """A non-empty word; ``symbols`` is stored as a tuple of ints."""

    alphabet: Alphabet
    symbols: tuple[int, ...]

    def __post_init__(self) -> None:
        symbols = tuple(self.symbols)
        if not symbols:
            raise ValueError("words must be non-empty")
        sigma = self.alphabet.sigma
        for s in symbols:
            if not 0 <= s < sigma:
                raise ValueError(f"symbol {s!r} outside alphabet of size {sigma}")
        object.__setattr__(self, "symbols", symbols)

    def __len__(self) -> int:
        return len(self.symbols)

    def __iter__(self):
        return iter(self.symbols)

    def __getitem__(self, i):
        return self.symbols[i]

    def __lt__(self, other: Word) -> bool:
        return compare_lex(self, other) < 0

    def __add__(self, other: Word) -> Word:
        _check_same(self, other)
        return Word(self.alphabet, self.symbols + other.symbols)

    def __mul__(self, k: int) -> Word:
        return Word(self.alphabet, self.symbols * k)

    def __str__(self) -> str:
        return format_word(self)

    @property
    def sigma(self) -> int:
        return self.alphabet.sigma

    def prefix(self, i: int) -> Word:
        return Word(self.alphabet, self.symbols[:i])

    def replace(self, symbols: Iterable[int]) -> Word:
        return Word(self.alphabet, tuple(symbols))


def make_word(sigma: int, symbols: Iterable[int]) -> Word:
    return Word(Alphabet(sigma), tuple(symbols))


def _check_same(u: Word, v: Word) -> None:
    if u.alphabet != v.alphabet:
        raise AlphabetMismatch(f"alphabets differ: {u.sigma} vs {v.sigma}")


def compare_lex(u: Word, v: Word) -> int:
    """Return -1, 0 or 1 as ``u`` is less than, equal to or greater than ``v``."""
    _check_same(u, v)
    a, b = u.symbols, v.symbols
    return (a > b) - (a < b)


def rotate(w: Word, c: int) -> Word:
    k = c % len(w)
    s = w.symbols
    return Word(w.alphabet, s[k:] + s[:k])


# --- tuple-level helpers; these are the hot paths used by the counting code


def least_rotation(s: Sequence[int]) -> int:
    """Start index of the lexicographically least rotation of ``s``, in O(n).

    Two-candidate scan: whenever candidates ``i`` and ``j`` disagree after a
    common run of length ``k``, the losing candidate and the ``k`` positions
    after it cannot start the minimum.
    """
    n = len(s)
    i, j, k = 0, 1, 0
    while i < n and j < n and k < n:
        a = s[(i + k) % n]
        b = s[(j + k) % n]
        if a == b:
            k += 1
            continue
        if a > b:
            i += k + 1
        else:
            j += k + 1
        if i == j:
            j += 1
        k = 0
    return min(i, j)


def is_self_minimal_seq(s: Sequence[int]) -> bool:
    s = tuple(s)
    k = least_rotation(s)
    return k == 0 or s[k:] + s[:k] == s


def period_of(s: Sequence[int]) -> int:
    """Length of the primitive root of ``s`` (failure-function method)."""
    n = len(s)
    fail = [0] * n
    k = 0
    for i in range(1, n):
        while k and s[i] != s[k]:
            k = fail[k - 1]
        if s[i] == s[k]:
            k += 1
        fail[i] = k
    p = n - fail[n - 1]
    return p if n % p == 0 else n


def prev_self_minimal_seq(s: Sequence[int], sigma: int) -> tuple[int, ...]:
    s = tuple(s)
    if is_self_minimal_seq(s):
        return s
    n = len(s)
    z = sigma - 1
    # candidates grow with k, so the first self-minimal one from the top wins
    for k in range(n - 1, -1, -1):
        if s[k] == 0:
            continue
        cand = s[:k] + (s[k] - 1,) + (z,) * (n - k - 1)
        if is_self_minimal_seq(cand):
            return cand
    raise AssertionError("unreachable: the all-minimum word is self-minimal")


# --- public word-level API


def min_rotation(w: Word) -> Word:
    k = least_rotation(w.symbols)
    return rotate(w, k)


def is_self_minimal(w: Word) -> bool:
    return is_self_minimal_seq(w.symbols)


def primitive_root(w: Word) -> tuple[Word, int]:
    p = period_of(w.symbols)
    return w.prefix(p), len(w) // p


def is_primitive(w: Word) -> bool:
    return period_of(w.symbols) == len(w)


def is_lyndon(w: Word) -> bool:
    return is_primitive(w) and is_self_minimal(w)


def prev_self_minimal(w: Word) -> Word:
    """Largest self-minimal word of length ``len(w)`` that is ``<= w``."""
    return Word(w.alphabet, prev_self_minimal_seq(w.symbols, w.sigma))


def word_pred(w: Word) -> Word:
    s = list(w.symbols)
    i = len(s) - 1
    while i >= 0 and s[i] == 0:
        s[i] = w.sigma - 1
        i -= 1
    if i < 0:
        raise ValueError(f"{w} is the smallest word of its length")
    s[i] -= 1
    return w.replace(s)


def word_succ(w: Word) -> Word:
    s = list(w.symbols)
    z = w.sigma - 1
    i = len(s) - 1
    while i >= 0 and s[i] == z:
        s[i] = 0
        i -= 1
    if i < 0:
        raise ValueError(f"{w} is the largest word of its length")
    s[i] += 1
    return w.replace(s)


def word_value(w: Word) -> int:
    """``w`` read as a base-sigma numeral; order-preserving on words of equal length."""
    v = 0
    sigma = w.sigma
    for c in w.symbols:
        v = v * sigma + c
    return v


def word_from_value(alphabet: Alphabet, n: int, value: int) -> Word:
    sigma = alphabet.sigma
    if not 0 <= value < sigma**n:
        raise ValueError(f"value {value} does not encode a word of length {n}")
    s = [0] * n
    for i in range(n - 1, -1, -1):
        value, s[i] = divmod(value, sigma)
    return Word(alphabet, tuple(s))


# --- text format


def resolve_format(fmt: str, sigma: int) -> str:
    if fmt not in FORMATS:
        raise ValueError(f"unknown word format {fmt!r}")
    if fmt == "auto":
        return "chars" if sigma <= len(CHARS) else "csv"
    if fmt == "chars" and sigma > len(CHARS):
        raise ValueError(f"chars format supports at most {len(CHARS)} symbols")
    if fmt == "alpha" and sigma > len(LETTERS):
        raise ValueError(f"alpha format supports at most {len(LETTERS)} symbols")
    return fmt


def parse_word(text: str, alphabet: Alphabet, fmt: str = "auto") -> Word:
    """Parse ``text`` into a word.

    ``chars`` uses one character per symbol from ``0-9a-z``; for a binary
    alphabet the letters ``a``/``b`` are also accepted for ``0``/``1``.
    ``alpha`` maps ``a, b, c, ...`` to ``0, 1, 2, ...``.  ``csv`` is a
    comma-separated list of decimal symbol values.
    """
    sigma = alphabet.sigma
    fmt = resolve_format(fmt, sigma)
    text = text.strip()
    if not text:
        raise ValueError("empty word")
    if fmt == "csv":
        try:
            symbols = [int(part) for part in text.split(",")]
        except ValueError:
            raise ValueError(f"malformed csv word {text!r}") from None
    else:
        table = {c: i for i, c in enumerate(LETTERS if fmt == "alpha" else CHARS)}
        if fmt == "chars" and sigma == 2:
            table.update(a=0, b=1)
        symbols = []
        for ch in text.lower():
            if ch not in table:
                raise ValueError(f"bad symbol {ch!r} in {text!r}")
            symbols.append(table[ch])
    for s in symbols:
        if not 0 <= s < sigma:
            raise ValueError(f"symbol {s} out of range for alphabet of size {sigma}")
    return Word(alphabet, tuple(symbols))


def format_word(w: Word, fmt: str = "auto") -> str:
    fmt = resolve_format(fmt, w.sigma)
    if fmt == "csv":
        return ",".join(str(c) for c in w.symbols)
    table = LETTERS if fmt == "alpha" else CHARS
    return "".join(table[c] for c in w.symbols)
