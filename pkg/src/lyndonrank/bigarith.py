"""Exact polynomial arithmetic on big-integer coefficients.

Polynomials are plain lists of Python ints, index ``k`` holding the
coefficient of ``x**k``.  Lengths are explicit: a truncated power series of
length ``m`` keeps trailing zeros.

Multiplication packs each operand into one big integer (Kronecker
substitution) and performs a single big-integer product per sign pair.  The
product itself is delegated to GMP through ``gmpy2`` when it is installed,
since CPython's own multiplication is only Karatsuba.
"""

from __future__ import annotations

from typing import Sequence

try:
    import gmpy2
except ImportError:  # pragma: no cover - exercised only without gmpy2
    gmpy2 = None

Polynomial = list


def _bigmul(a: int, b: int) -> int:
    if gmpy2 is None or a.bit_length() < 20_000 or b.bit_length() < 20_000:
        return a * b
    return int(gmpy2.mpz(a) * gmpy2.mpz(b))


def chunk_width(f: Sequence[int], g: Sequence[int]) -> int:
    """Bits per chunk so that every coefficient of ``f*g`` fits in one chunk.

    Operands must be non-negative.  The result is rounded up to whole bytes
    so packing can go through ``int.to_bytes``.
    """
    bf = max((c.bit_length() for c in f), default=0)
    bg = max((c.bit_length() for c in g), default=0)
    terms = min(len(f), len(g))
    bits = bf + bg + max(terms - 1, 0).bit_length() + 1
    return -(-bits // 8) * 8


def pack(coeffs: Sequence[int], width: int) -> int:
    nbytes = width // 8
    return int.from_bytes(b"".join(c.to_bytes(nbytes, "little") for c in coeffs), "little")


def unpack(value: int, width: int, count: int) -> list[int]:
    nbytes = width // 8
    raw = value.to_bytes(nbytes * count, "little")
    return [int.from_bytes(raw[i : i + nbytes], "little") for i in range(0, nbytes * count, nbytes)]


def _mul_nonneg(f: Sequence[int], g: Sequence[int]) -> list[int]:
    width = chunk_width(f, g)
    prod = _bigmul(pack(f, width), pack(g, width))
    return unpack(prod, width, len(f) + len(g) - 1)


def _split(f: Sequence[int]) -> tuple[list[int], list[int]]:
    pos = [c if c > 0 else 0 for c in f]
    neg = [-c if c < 0 else 0 for c in f]
    return pos, neg


def poly_mul(f: Sequence[int], g: Sequence[int]) -> list[int]:
    """Exact product of two integer polynomials (length ``len(f)+len(g)-1``)."""
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    fp, fn = _split(f)
    gp, gn = _split(g)
    for a, b, sign in ((fp, gp, 1), (fp, gn, -1), (fn, gp, -1), (fn, gn, 1)):
        if not any(a) or not any(b):
            continue
        for k, c in enumerate(_mul_nonneg(a, b)):
            if c:
                out[k] += sign * c
    return out


def poly_mul_trunc(f: Sequence[int], g: Sequence[int], m: int) -> list[int]:
    """``f*g mod x**m``, always of length ``m``."""
    prod = poly_mul(f[:m], g[:m])[:m]
    return prod + [0] * (m - len(prod))


def series_inverse(h: Sequence[int], m: int) -> list[int]:
    """First ``m`` coefficients of ``1/h`` by Newton doubling.

    Each round lifts ``f`` with ``f*h = 1 mod x**k`` to precision ``2k`` via
    ``f <- f*(2 - h*f)``.
    """
    if not h or h[0] != 1:
        raise ValueError("series_inverse needs a constant term equal to 1")
    if m <= 0:
        return []
    f = [1]
    k = 1
    while k < m:
        k = min(2 * k, m)
        e = poly_mul_trunc(h, f, k)
        e = [-c for c in e]
        e[0] += 2
        f = poly_mul_trunc(f, e, k)
    return f
