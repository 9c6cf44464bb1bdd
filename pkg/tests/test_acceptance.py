"""Acceptance suite: one test per criterion, tagged with ``criterion``.

The terminal summary (see conftest.py) prints one PASS/FAIL line per criterion.
"""

import math
import random
import time

import pytest

from helpers import W, all_words
from lyndonrank.automaton import build_automaton, paths_initial_to_AC, paths_to_initial
from lyndonrank.cscount import alpha_coefficients, beta_sweep, cs_count, cs_count_fast, cs_count_matrix
from lyndonrank.debruijn import db_prime_symbol, db_symbol, decode
from lyndonrank.oracle import brute_cs, brute_db, brute_occ, enumerate_lyndon, necklace_count_formula
from lyndonrank.ranking import count_lyndon, divisors, mobius, rank_lyndon, unrank_lyndon
from lyndonrank.words import Alphabet, Word, format_word, min_rotation, prev_self_minimal

B = Alphabet(2)
criterion = pytest.mark.criterion


def timed(fn, *args):
    t0 = time.perf_counter()
    value = fn(*args)
    return value, time.perf_counter() - t0


def best_of(repeats, fn, *args):
    return min(timed(fn, *args)[1] for _ in range(repeats))


def random_self_minimal(rng, sigma, n):
    return min_rotation(Word(Alphabet(sigma), tuple(rng.randrange(sigma) for _ in range(n))))


@criterion(1, "ranks of the worked example")
def test_criterion_1_rank_fixtures():
    expected = ["aaaaab", "aaaabb", "aaabab", "aaabbb", "aababb", "aabbab", "aabbbb", "ababbb"]

    def work():
        r = rank_lyndon(W("ababbb")).rank
        listed = [format_word(unrank_lyndon(6, k, B), "alpha") for k in range(1, 9)]
        return r, listed

    (r, listed), elapsed = timed(work)
    assert r == 8
    assert listed == expected
    assert elapsed < 1.0


@criterion(2, "CS fixtures through both engines")
def test_criterion_2_cs_fixtures():
    cases = {"ababbb": 54, "aba": 4, "ab": 3, "a": 1}

    def work():
        got = {}
        for text in cases:
            # aba is not self-minimal; counting via its largest self-minimal
            # lower bound (aab) leaves |CS| unchanged.
            w = prev_self_minimal(W(text))
            got[text] = (cs_count_matrix(w), cs_count_fast(w))
        return got

    got, elapsed = timed(work)
    for text, value in cases.items():
        assert got[text] == (value, value), text
        assert brute_cs(W(text)) == value
    assert elapsed < 1.0


@criterion(3, "decoding fixtures")
def test_criterion_3_decode_fixtures():
    cases = {
        "1001": 5,
        "0101": 10,
        "1100": 15,
        "111000": 62,
        "001100": 10,
        "110110": 53,
        "110010": 24,
    }
    got, elapsed = timed(lambda: {w: decode(W(w)) for w in cases})
    assert got == cases
    assert elapsed < 1.0


@criterion(4, "CS engines agree with brute force on 500 random words")
def test_criterion_4_cs_oracle():
    rng = random.Random(20240611)
    t0 = time.perf_counter()
    for _ in range(500):
        sigma = rng.choice([2, 3])
        n = rng.randint(1, 20 if sigma == 2 else 13)
        assert sigma**n <= 2 * 10**6
        w = random_self_minimal(rng, sigma, n)
        assert cs_count_matrix(w) == cs_count_fast(w) == brute_cs(w), w
    assert time.perf_counter() - t0 < 300


@criterion(5, "ranking agrees with brute-force enumeration")
def test_criterion_5_rank_oracle():
    t0 = time.perf_counter()
    for sigma, max_n in ((2, 14), (3, 8)):
        A = Alphabet(sigma)
        for n in range(1, max_n + 1):
            words = enumerate_lyndon(n, A)
            assert count_lyndon(n, A) == len(words)
            for k, lam in enumerate(words, 1):
                assert rank_lyndon(lam).rank == k
                assert unrank_lyndon(n, k, A) == lam
    assert time.perf_counter() - t0 < 300


@criterion(6, "decoding agrees with brute force on every word")
def test_criterion_6_decode_oracle():
    t0 = time.perf_counter()
    for sigma, max_n in ((2, 12), (3, 7)):
        for n in range(1, max_n + 1):
            for w in all_words(n, sigma):
                assert decode(w) == brute_occ(w), w
    assert time.perf_counter() - t0 < 300


@criterion(7, "random access reproduces the explicit sequences")
def test_criterion_7_random_access():
    for n in range(1, 13):
        db = brute_db(n, B).symbols
        assert tuple(db_symbol(n, k, B) for k in range(1, 2**n + 1)) == db
    for n in range(1, 9):
        expected = tuple(c for w in enumerate_lyndon(n, B) for c in w.symbols)
        assert tuple(db_prime_symbol(n, k, B) for k in range(1, len(expected) + 1)) == expected
    listing = "000001000011000101000111001011001101001111010111011111"
    assert "".join(str(db_prime_symbol(6, k, B)) for k in range(1, 55)) == listing


@criterion(8, "engine scaling")
def test_criterion_8_scaling():
    rng = random.Random(77)
    w300 = random_self_minimal(rng, 2, 300)
    assert cs_count_fast(w300) == cs_count_matrix(w300)

    w500 = random_self_minimal(rng, 2, 500)
    w2000 = random_self_minimal(rng, 2, 2000)
    _, matrix_500 = timed(cs_count_matrix, w500)
    assert matrix_500 < 60

    t500 = best_of(5, cs_count_fast, w500)
    t2000 = best_of(3, cs_count_fast, w2000)
    assert t2000 < 60
    exponent = math.log(t2000 / t500) / math.log(4)
    print(f"fast n=500 {t500:.3f}s n=2000 {t2000:.3f}s exponent {exponent:.2f}; matrix n=500 {matrix_500:.2f}s")
    assert exponent <= 2.3


def _mobius_sum(w):
    # prefixes are taken from the self-minimal normal form, as ranking does
    s, n = prev_self_minimal(w).symbols, len(w)
    total = 0
    for d in divisors(n):
        mu = mobius(n // d)
        if mu:
            total += mu * cs_count(prev_self_minimal(Word(w.alphabet, s[:d])))
    return total


@criterion(9, "structural invariants")
def test_criterion_9_invariants():
    rng = random.Random(9)
    # the Mobius sum is divisible by n for every word, Lyndon or not
    for n in range(1, 11):
        for w in all_words(n, 2):
            assert _mobius_sum(w) % n == 0
    for _ in range(300):
        sigma = rng.choice([2, 3, 5, 26])
        n = rng.randint(1, 60)
        w = Word(Alphabet(sigma), tuple(rng.randrange(sigma) for _ in range(n)))
        assert _mobius_sum(w) % n == 0
        rank_lyndon(w)  # raises ArithmeticError on an inexact division

    # the beta sweep preserves sum beta[i][j] * pi_j(i, 0) at every step
    for _ in range(15):
        sigma = rng.choice([2, 3])
        A = build_automaton(random_self_minimal(rng, sigma, rng.randint(2, 9)))
        n = A.n
        pi = paths_to_initial(A, n)
        alpha = alpha_coefficients(A).alpha
        target = sum(int(alpha[i, j]) * pi[j][i] for i in range(n) for j in range(n + 1))
        seen = []

        def check(beta, i, j):
            seen.append(sum(beta[r][c] * pi[c][r] for r in range(n) for c in range(n + 1)))

        row0 = beta_sweep(A, alpha, observer=check)
        assert seen and set(seen) == {target}
        assert row0 == beta_sweep(A, alpha)

    # every length-j path from state 0 ends somewhere: row sums are sigma^j
    for _ in range(10):
        sigma = rng.choice([2, 3, 5])
        A = build_automaton(random_self_minimal(rng, sigma, rng.randint(1, 12)))
        v = [1] + [0] * A.n
        for j in range(21):
            assert sum(v) == sigma**j
            assert v[A.accept] == paths_initial_to_AC(A, j)
            nxt = [0] * (A.n + 1)
            for q, x in enumerate(v):
                for t, mult in A.out_edges(q).items():
                    nxt[t] += mult * x
            v = nxt


@criterion(10, "rank of the maximal word matches the counting formula")
def test_criterion_10_count_formula():
    for sigma in (2, 3, 5, 26):
        A = Alphabet(sigma)
        for n in range(1, 65):
            z = Word(A, (sigma - 1,) * n)
            assert rank_lyndon(z).rank == necklace_count_formula(n, sigma)
