"""Size of ``CS(w) = {x : len(x) == len(w), minrot(x) <= w}`` for self-minimal ``w``.

Two engines are provided.

``cs_count_matrix`` sums ``pi_n(0, AC) + sum alpha[i][j] * pi_j(i, 0)`` with
every path count taken from explicit per-length tables.

``cs_count_fast`` pushes the coefficients ``alpha`` down to the initial state
(the beta sweep) so that only the ``n + 1`` numbers ``T_j = pi_j(0, 0)`` are
large; those come from a single power-series inversion, and ``pi_n(0, AC)``
from a single polynomial product.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from .automaton import (
    NotSelfMinimal,
    PrefixAutomaton,
    automaton_for,
    paths_initial_to_AC,
    paths_to_initial,
)
from .bigarith import poly_mul, series_inverse
from .words import Word, is_self_minimal


@dataclass
class CoefficientTable:
    """Small coefficients ``alpha[state, length]``, ``state < n``, ``length <= n``."""

    alpha: np.ndarray

    @property
    def n(self) -> int:
        return self.alpha.shape[0]

    def total(self) -> int:
        return int(self.alpha.sum())


def _require_self_minimal(w: Word) -> None:
    if not is_self_minimal(w):
        raise NotSelfMinimal(f"{w} is not self-minimal")


def alpha_coefficients(A: PrefixAutomaton) -> CoefficientTable:
    """Coefficients of the words ``x`` with ``x`` rejected but ``x*x`` accepted.

    Such an ``x`` splits uniquely as ``x1 x2 x3`` where ``x3 x1`` enters
    ``AC`` on its last letter and ``x1 x2`` returns to state 0.  For every
    ``s = len(x3)`` and ``p = len(x1)``, ``x3`` and all of ``x1`` but its last
    letter are forced to be ``w[:k]`` with ``k = s + p - 1``; the remaining
    freedom is the letter closing ``x1`` followed by ``x2``, counted by paths
    back to state 0 from state ``0`` or ``l + 1``, where ``l`` is the state
    reached on ``w[s:k]``.

    All ``s`` are advanced together, one letter per step.
    """
    n = A.n
    w = np.asarray(A.w, dtype=np.int64)
    alpha = np.zeros((n, n + 1), dtype=np.int64)
    # bound[k]: letters b with delta(w[:k], b) == AC
    bound = w.copy()
    bound[n - 1] += 1
    states = np.zeros(max(n - 1, 0), dtype=np.int64)
    for t in range(n - 1):
        m = n - 1 - t  # offsets s = 1..m still have k = s + t <= n - 1
        st = states[:m]
        if t:
            c = w[t : t + m]
            x = w[st]
            grow = (c == x) & (st != n - 1)
            if np.any((c < x) | ((c == x) & ~grow)):
                raise AssertionError("factor of a self-minimal word reached AC")
            st = np.where(c > x, 0, st + 1)
            states[:m] = st
        k = np.arange(1 + t, m + 1 + t)
        j = n - 1 - k
        bk = bound[k]
        nxt = w[st]
        g0 = bk - nxt - 1
        pos = g0 > 0
        alpha[0, j[pos]] += g0[pos]
        hit = (nxt < bk) & (st + 1 < n)
        alpha[st[hit] + 1, j[hit]] += 1
    return CoefficientTable(alpha)


def cs_count_matrix(w: Word) -> int:
    _require_self_minimal(w)
    return _cs_matrix(automaton_for(w.symbols, w.sigma))


def _cs_matrix(A: PrefixAutomaton) -> int:
    n = A.n
    alpha = alpha_coefficients(A).alpha
    table = paths_to_initial(A, n)
    total = paths_initial_to_AC(A, n)
    for i, j in zip(*np.nonzero(alpha)):
        total += int(alpha[i, j]) * table[j][i]
    return total


def t_values(A: PrefixAutomaton, m: int) -> list[int]:
    """``T_0 .. T_m`` where ``T_k`` counts length-``k`` loops at state 0."""
    if m < 0:
        raise ValueError("m must be non-negative")
    h = [1] + [-x for x in A.a]
    return series_inverse(h[: m + 1], m + 1)


def t_values_recurrence(A: PrefixAutomaton, m: int) -> list[int]:
    """Direct quadratic recurrence ``T_k = sum a_i T_{k-i}``; kept as an oracle."""
    a = A.a
    T = [1]
    for k in range(1, m + 1):
        T.append(sum(a[i - 1] * T[k - i] for i in range(1, min(k, len(a)) + 1)))
    return T


def c_values(A: PrefixAutomaton) -> list[int]:
    """``c[j]`` for ``j = 0..n``: paths of length ``j`` from state 0 to ``AC``
    that never revisit state 0.

    The step out of the last prefix state has one more letter into ``AC``
    (``b <= w[n-1]`` rather than ``b < w[n-1]``), so ``c[n]`` gets ``+1``.
    """
    sigma, ap = A.sigma, A.a_prime
    n = A.n
    c = [0]
    for j in range(n):
        c.append(sigma * c[-1] + ap[j])
    c[n] += 1
    return c


def pi_0_AC_via_convolution(A: PrefixAutomaton, T: Optional[list[int]] = None) -> int:
    """``pi_n(0, AC) = sum_{i<n} T_i c_{n-i}``, read off one polynomial product."""
    n = A.n
    if T is None:
        T = t_values(A, n)
    c = c_values(A)
    prod = poly_mul(T[:n], c[1 : n + 1])
    return prod[n - 1]


def beta_sweep(
    A: PrefixAutomaton,
    alpha,
    observer: Optional[Callable[[list[list[int]], int, int], None]] = None,
) -> list[int]:
    """Fold every coefficient onto state 0; returns ``beta[0][0..n]``.

    Uses ``pi_j(i, 0) = pi_{j-1}(i+1, 0) + a_{i+1} pi_{j-1}(0, 0)``; mass
    flowing into state ``n`` (``AC``) is dropped since no path leaves it.
    ``observer(beta, i, j)`` is called after each inner step when given;
    that path runs the cell-by-cell loop on Python lists.
    """
    n, a = A.n, A.a
    if observer is None:
        return _beta_sweep_columns(A, np.asarray(alpha))
    beta = [list(map(int, row)) for row in alpha]
    row0 = beta[0]
    for j in range(n, 0, -1):
        for i in range(1, n):
            b = beta[i][j]
            if b:
                if i + 1 < n:
                    beta[i + 1][j - 1] += b
                row0[j - 1] += a[i] * b
                beta[i][j] = 0
            observer(beta, i, j)
    return row0[:]


def _beta_sweep_columns(A: PrefixAutomaton, alpha: np.ndarray) -> list[int]:
    # Column j only feeds column j-1 and beta[0], so a whole column moves at
    # once.  Every intermediate is bounded by sigma*n*sum(alpha).
    n, sigma = A.n, A.sigma
    safe = sigma * n * (int(alpha.sum()) + 1) * sigma < 2**62
    cols = alpha.T.astype(np.int64 if safe else object)
    row0 = cols[:, 0].copy()
    a_tail = np.asarray(A.a[1:], dtype=cols.dtype)
    for j in range(n, 0, -1):
        body = cols[j, 1:]
        row0[j - 1] += a_tail.dot(body)
        if n > 2:
            cols[j - 1, 2:] += body[:-1]
    return [int(x) for x in row0]


def cs_count_fast(w: Word) -> int:
    _require_self_minimal(w)
    return _cs_fast(automaton_for(w.symbols, w.sigma))


def _cs_fast(A: PrefixAutomaton) -> int:
    n = A.n
    T = t_values(A, n)
    beta0 = beta_sweep(A, alpha_coefficients(A).alpha)
    total = pi_0_AC_via_convolution(A, T)
    for j in range(n + 1):
        if beta0[j]:
            total += beta0[j] * T[j]
    return total


ENGINES = {"fast": _cs_fast, "matrix": _cs_matrix}


def cs_count(w: Word, engine: str = "fast") -> int:
    _require_self_minimal(w)
    return ENGINES[engine](automaton_for(w.symbols, w.sigma))


def cs_count_seq(s, sigma: int, engine: str = "fast") -> int:
    """Unchecked variant on raw symbols, for callers that already normalised."""
    return ENGINES[engine](automaton_for(s, sigma))
