from itertools import product

from lyndonrank.words import Alphabet, Word, parse_word


def W(text, sigma=2):
    return parse_word(text, Alphabet(sigma))


def all_words(n, sigma):
    A = Alphabet(sigma)
    for s in product(range(sigma), repeat=n):
        yield Word(A, s)


def rotations(s):
    return [s[c:] + s[:c] for c in range(len(s))]
