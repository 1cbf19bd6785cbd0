"""Shuffle product, convergence predicate, and shuffle regularization.

The shuffle product is defined by the usual recursion
    1 sh w = w sh 1 = w,
    (u w1) sh (v w2) = u (w1 sh (v w2)) + v ((u w1) sh w2),
extended bilinearly.  A word is convergent when it neither starts with e0
nor ends with the root letter e^1 (exponent 0).

Regularization rewrites any word without a leading e0 as a rational
combination of convergent words with the same iterated-integral value,
using only that the value of the single letter e^1 is zero.  Words with
a leading e0 are rejected: that second regularization direction is out
of scope here.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .words import E0, LinComb, Word, lc_combine

ROOT_ONE = 0  # exponent of the letter e^1


@lru_cache(maxsize=None)
def _shuffle_letters(l1: tuple, l2: tuple) -> tuple:
    """Shuffle of two letter tuples as ((letters, count), ...)."""
    if not l1:
        return ((l2, 1),)
    if not l2:
        return ((l1, 1),)
    acc: dict[tuple, int] = {}
    for t, c in _shuffle_letters(l1[1:], l2):
        key = (l1[0],) + t
        acc[key] = acc.get(key, 0) + c
    for t, c in _shuffle_letters(l1, l2[1:]):
        key = (l2[0],) + t
        acc[key] = acc.get(key, 0) + c
    return tuple(acc.items())


def shuffle(w1: Word, w2: Word) -> LinComb:
    if w1.modulus != w2.modulus:
        raise ValueError("modulus mismatch in shuffle")
    n = w1.modulus
    return LinComb(n, ((Word(n, t), c) for t, c in _shuffle_letters(w1.letters, w2.letters)))


def shuffle_lincomb(x: LinComb, y: LinComb) -> LinComb:
    """Bilinear extension of the shuffle product."""
    if x.modulus != y.modulus:
        raise ValueError("modulus mismatch in shuffle")
    return lc_combine(
        ((cx * cy, shuffle(wx, wy)) for wx, cx in x.items() for wy, cy in y.items()),
        modulus=x.modulus,
    )


def is_convergent(w: Word) -> bool:
    if w.weight == 0:
        raise ValueError("convergence is undefined for the empty word")
    return w.letters[0] != E0 and w.letters[-1] != ROOT_ONE


@lru_cache(maxsize=None)
def _reg_letters(modulus: int, letters: tuple) -> tuple:
    """Regularize one word (no leading e0) to ((letters, Fraction), ...).

    Strip the trailing e^1 block of length m >= 1 via the exact identity
        v (e^1)^(m-1) sh e^1 = m * v (e^1)^m + (words whose trailing block
                                                has length exactly m-1),
    where every word on the right of the bracket is v with one e^1
    inserted strictly before its last letter.  Solving for v (e^1)^m and
    dropping the shuffle term (its value vanishes) strictly shortens the
    trailing block, so the recursion terminates.
    """
    if not letters or letters[-1] != ROOT_ONE:
        return ((letters, Fraction(1)),)
    m = 0
    while m < len(letters) and letters[-1 - m] == ROOT_ONE:
        m += 1
    v = letters[: len(letters) - m]
    acc: dict[tuple, Fraction] = {}
    coeff = Fraction(-1, m)
    for j in range(len(v)):
        inserted = v[:j] + (ROOT_ONE,) + v[j:] + (ROOT_ONE,) * (m - 1)
        for ls, c in _reg_letters(modulus, inserted):
            nc = acc.get(ls, Fraction(0)) + coeff * c
            if nc:
                acc[ls] = nc
            elif ls in acc:
                del acc[ls]
    return tuple(acc.items())


def regularize(x: LinComb | Word) -> LinComb:
    """Linear extension of word regularization; idempotent, and it
    preserves weight and depth term by term."""
    if isinstance(x, Word):
        x = LinComb.from_word(x)
    n = x.modulus
    for w in x.support():
        if w.weight and w.letters[0] == E0:
            raise ValueError(f"cannot regularize a word with a leading e0: {w}")
    return lc_combine(
        ((c, LinComb(n, ((Word(n, ls), rc) for ls, rc in _reg_letters(n, w.letters))))
         for w, c in x.items()),
        modulus=n,
    )
