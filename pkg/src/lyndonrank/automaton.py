"""Prefix automaton for a self-minimal word and path counting on it.

For a self-minimal ``w`` of length ``n`` the automaton has states ``0..n``:
state ``i < n`` stands for the prefix ``w[:i]`` and state ``n`` is the
absorbing accepting state ``AC``.  It accepts exactly the words having a
factor ``w[:i] + c`` with ``c < w[i]`` (or the factor ``w`` itself).

Out of state ``i < n`` a letter ``c`` leads to

* state ``0`` if ``c > w[i]`` (``a[i+1]`` such letters),
* state ``i+1`` if ``c == w[i]`` and ``i < n-1``,
* ``AC`` otherwise.

Counts are kept per path length; no transfer matrix is materialised.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .words import Word, is_self_minimal


class NotSelfMinimal(ValueError):
    pass


@dataclass(frozen=True)
class PrefixAutomaton:
    w: tuple[int, ...]
    sigma: int
    # 1-indexed in the usual notation; stored 0-indexed so a[i] goes with w[i]
    a: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.w)

    @property
    def accept(self) -> int:
        return len(self.w)

    @property
    def a_prime(self) -> tuple[int, ...]:
        return tuple(self.sigma - 1 - x for x in self.a)

    def step(self, state: int, c: int) -> int:
        n = len(self.w)
        if state == n:
            return n
        x = self.w[state]
        if c > x:
            return 0
        if c == x and state != n - 1:
            return state + 1
        return n

    def out_edges(self, state: int) -> dict[int, int]:
        """Target state -> number of letters leading there."""
        n = len(self.w)
        if state == n:
            return {n: self.sigma}
        edges = {0: self.a[state]}
        if state < n - 1:
            edges[state + 1] = edges.get(state + 1, 0) + 1
            edges[n] = self.sigma - 1 - self.a[state]
        else:
            edges[n] = self.sigma - self.a[state]
        return edges


def build_automaton(w: Word) -> PrefixAutomaton:
    if not is_self_minimal(w):
        raise NotSelfMinimal(f"{w} is not self-minimal")
    return automaton_for(w.symbols, w.sigma)


def automaton_for(w: Sequence[int], sigma: int) -> PrefixAutomaton:
    """Unchecked constructor on raw symbols; caller guarantees self-minimality."""
    w = tuple(w)
    return PrefixAutomaton(w, sigma, tuple(sigma - 1 - c for c in w))


def run(A: PrefixAutomaton, start: int, x) -> list[int]:
    """States visited while reading ``x`` from ``start``, starting state included."""
    if not 0 <= start <= A.n:
        raise ValueError(f"no state {start}")
    trace = [start]
    q = start
    for c in x:
        q = A.step(q, c)
        trace.append(q)
    return trace


def paths_to_initial(A: PrefixAutomaton, m: int) -> list[list[int]]:
    """``table[j][i]`` = number of length-``j`` paths from state ``i`` to state 0.

    Rows cover ``i`` in ``0..n-1``; from ``AC`` there are no such paths.
    """
    if m < 0:
        raise ValueError("m must be non-negative")
    n, a = A.n, A.a
    row = [0] * n
    row[0] = 1
    table = [row]
    for _ in range(m):
        prev = row
        t0 = prev[0]
        row = [a[i] * t0 + prev[i + 1] for i in range(n - 1)]
        row.append(a[n - 1] * t0)
        table.append(row)
    return table


def paths_initial_to_AC(A: PrefixAutomaton, m: int) -> int:
    """Number of length-``m`` words driving the automaton from state 0 into ``AC``."""
    if m < 0:
        raise ValueError("m must be non-negative")
    n, a, sigma = A.n, A.a, A.sigma
    v = [0] * (n + 1)
    v[0] = 1
    for _ in range(m):
        nxt = [0] * (n + 1)
        to_zero = 0
        to_ac = sigma * v[n]
        for i in range(n - 1):
            x = v[i]
            if x:
                to_zero += a[i] * x
                nxt[i + 1] = x
                to_ac += (sigma - 1 - a[i]) * x
        x = v[n - 1]
        to_zero += a[n - 1] * x
        to_ac += (sigma - a[n - 1]) * x
        nxt[0] = to_zero
        nxt[n] = to_ac
        v = nxt
    return v[n]
