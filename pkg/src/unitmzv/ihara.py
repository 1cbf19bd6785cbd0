"""Linearized Ihara action and the transpose depth derivations.

The action of a combination a on a word w is defined by the recursion

    a o (e0^n e_eps w') = e0^n [ ([eps]a) e_eps + e_eps ([eps]a)* ] w'
                          + e0^n e_eps (a o w'),
    a o e0^n            = e0^n a,

where [eps] multiplies every root letter of a by eps (exponent shift mod
N) and * is the signed reversal (u1...un)* = (-1)^n un...u1.

derivation_generator(N, n) returns the depth-1 part of the weight-n
generator of the level-N depth-graded derivation algebra, written in the
basis E^(m)_eta = ad(e0)^m e_eta = sum_k (-1)^k C(m,k) e0^(m-k) e_eta e0^k:

    N=2: n=1: e_{-1};  odd n=2m+1: (1-4^m) E^(2m)_{-1} + 4^m E^(2m)_1;
         even n invalid.
    N=3: n=1: e_eps + e_{eps^-1};  n=2m: E^(2m-1)_eps - E^(2m-1)_{eps^-1};
         n=2m+1: (1-9^m)(E^(2m)_eps + E^(2m)_{eps^-1}) + 2*9^m E^(2m)_1.
    N=4: n=1: e_eps + e_{eps^-1} + 2 e_{-1};
         n=2m: E^(2m-1)_eps - E^(2m-1)_{eps^-1};
         n=2m+1: (1-4^m)(E^(2m)_eps + E^(2m)_{eps^-1})
                 + 2*4^m(1-4^m) E^(2m)_{-1} + 2*16^m E^(2m)_1.

derivation_transpose(N, n, w) computes the weight-lowering depth
derivation dual to the action: with words as an orthonormal basis,

    d_n(w) = sum_v <w, g_n o v> v

over all words v of weight wt(w) - n and depth dep(w) - 1.  When no such
word exists (always the case on unit words for n >= 2) the result is 0.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb

from .words import E0, LinComb, Word, _check_modulus, format_word, iter_words


def twist(shift: int, w: Word) -> Word:
    """Shift every root letter exponent by shift mod N; e0 is fixed."""
    n = w.modulus
    return Word(n, tuple(a if a == E0 else (a + shift) % n for a in w.letters))


def star(w: Word) -> tuple[int, Word]:
    """Signed reversal; returns (sign, reversed word)."""
    sign = -1 if w.weight % 2 else 1
    return sign, Word(w.modulus, w.letters[::-1])


def circ(a: LinComb, w: Word) -> LinComb:
    if a.modulus != w.modulus:
        raise ValueError("modulus mismatch in circ")
    n = w.modulus
    a_terms = tuple((u.letters, c) for u, c in a.items())
    acc: dict[tuple, Fraction] = {}
    for ls, c in _circ_letters(n, a_terms, w.letters):
        nc = acc.get(ls, _ZERO) + c
        if nc:
            acc[ls] = nc
        elif ls in acc:
            del acc[ls]
    return LinComb(n, ((Word(n, ls), c) for ls, c in acc.items()))


_ZERO = Fraction(0)


def _circ_letters(n: int, a_terms: tuple, letters: tuple):
    i = 0
    while i < len(letters) and letters[i] == E0:
        i += 1
    if i == len(letters):
        # base case: a o e0^n = e0^n a
        for ul, c in a_terms:
            yield letters + ul, c
        return
    eps = letters[i]
    head, rest = letters[: i + 1], letters[i + 1 :]
    for ul, c in a_terms:
        tw = tuple(x if x == E0 else (x + eps) % n for x in ul)
        yield letters[:i] + tw + (eps,) + rest, c
        sign = -1 if len(tw) % 2 else 1
        yield head + tw[::-1] + rest, sign * c
    for ls, c in _circ_letters(n, a_terms, rest):
        yield head + ls, c


def _ad_e0_pow(modulus: int, m: int, exponent: int) -> dict[tuple, int]:
    """Letter expansion of ad(e0)^m applied to the root letter e^(eps^k)."""
    out: dict[tuple, int] = {}
    for k in range(m + 1):
        letters = (E0,) * (m - k) + (exponent,) + (E0,) * k
        out[letters] = (-1) ** k * comb(m, k)
    return out


@lru_cache(maxsize=None)
def derivation_generator(modulus: int, weight: int) -> LinComb:
    _check_modulus(modulus)
    if weight < 1:
        raise ValueError(f"derivation weight must be >= 1, got {weight}")
    n = modulus
    inv = n - 1          # exponent of eps^(-1)
    parts: list[tuple[int, dict[tuple, int]]] = []
    if n == 2:
        if weight % 2 == 0:
            raise ValueError("level 2 has no even-weight derivation generator")
        if weight == 1:
            parts.append((1, {(1,): 1}))
        else:
            m = (weight - 1) // 2
            parts.append((1 - 4 ** m, _ad_e0_pow(n, 2 * m, 1)))
            parts.append((4 ** m, _ad_e0_pow(n, 2 * m, 0)))
    elif weight == 1:
        table = {(1,): 1, (inv,): 1}
        if n == 4:
            table[(2,)] = 2
        parts.append((1, table))
    elif weight % 2 == 0:
        m = weight // 2
        parts.append((1, _ad_e0_pow(n, 2 * m - 1, 1)))
        parts.append((-1, _ad_e0_pow(n, 2 * m - 1, inv)))
    else:
        m = (weight - 1) // 2
        base = 9 ** m if n == 3 else 4 ** m
        parts.append((1 - base, _ad_e0_pow(n, 2 * m, 1)))
        parts.append((1 - base, _ad_e0_pow(n, 2 * m, inv)))
        if n == 3:
            parts.append((2 * base, _ad_e0_pow(n, 2 * m, 0)))
        else:
            parts.append((2 * base * (1 - base), _ad_e0_pow(n, 2 * m, 2)))
            parts.append((2 * 16 ** m, _ad_e0_pow(n, 2 * m, 0)))
    acc: dict[Word, int] = {}
    for c, table in parts:
        for letters, v in table.items():
            w = Word(n, letters)
            acc[w] = acc.get(w, 0) + c * v
    return LinComb(n, acc)


@lru_cache(maxsize=None)
def _transpose_table(modulus: int, weight: int, src_weight: int, src_depth: int):
    """Map word -> LinComb over the grade (src_weight, src_depth) source:
    scatter every g_n o v term by target word."""
    gen = derivation_generator(modulus, weight)
    acc: dict[Word, dict[Word, Fraction]] = {}
    for v in iter_words(modulus, src_weight, src_depth):
        for u, c in circ(gen, v).items():
            row = acc.setdefault(u, {})
            row[v] = row.get(v, _ZERO) + c
    return {u: LinComb(modulus, terms) for u, terms in acc.items()}


def derivation_transpose(modulus: int, weight: int, w: Word) -> LinComb:
    if w.modulus != modulus:
        raise ValueError("modulus mismatch in derivation_transpose")
    derivation_generator(modulus, weight)  # validates (modulus, weight)
    d = w.depth
    if d < 1:
        raise ValueError("derivation_transpose needs a word of depth >= 1")
    tw, td = w.weight - weight, d - 1
    if tw < 0 or td > tw:
        return LinComb.zero(modulus)
    table = _transpose_table(modulus, weight, tw, td)
    return table.get(w, LinComb.zero(modulus))


def transpose_matrix(modulus: int, weight: int, src_weight: int, src_depth: int) -> dict:
    """Matrix of the transpose derivation on one graded piece, for export.

    Rows are the source words (weight src_weight, depth src_depth) in
    canonical order, columns the target words (weight src_weight - weight,
    depth src_depth - 1), entries as exact rational strings.
    """
    derivation_generator(modulus, weight)
    rows = sorted(iter_words(modulus, src_weight, src_depth), key=Word.sort_key)
    tw, td = src_weight - weight, src_depth - 1
    if td < 0:
        raise ValueError("source depth must be >= 1")
    cols = (
        sorted(iter_words(modulus, tw, td), key=Word.sort_key)
        if 0 <= td <= tw
        else []
    )
    entries = []
    for w in rows:
        img = derivation_transpose(modulus, weight, w)
        entries.append([str(img.coeff(v)) for v in cols])
    return {
        "N": modulus,
        "derivation_weight": weight,
        "source_weight": src_weight,
        "source_depth": src_depth,
        "rows": [format_word(w) for w in rows],
        "cols": [format_word(v) for v in cols],
        "entries": entries,
    }


def transpose_matrix_csv(modulus: int, weight: int, src_weight: int, src_depth: int) -> str:
    import csv
    import io

    data = transpose_matrix(modulus, weight, src_weight, src_depth)
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(["word"] + data["cols"])
    for w, row in zip(data["rows"], data["entries"]):
        writer.writerow([w] + row)
    return buf.getvalue()
