"""Words over the two-letter-type alphabet {e0, e^(eps^k)} and sparse
rational linear combinations of them.

Fix a level N in {2, 3, 4} and the primitive root eps = exp(2*pi*i/N).
A letter is either the form letter e0 (stored as the sentinel E0 == -1)
or a root letter e^(eps^k), stored as the exponent k in [0, N).  A word
is a finite sequence of letters; its weight is its length and its depth
is the number of root letters.  A word is "unit" when every letter is a
root letter.

Coefficients are exact rationals (fractions.Fraction): arbitrary
precision, lowest terms, positive denominator.  They serialize through
str(), e.g. "1/2", "-1/6", "0".

Text grammar for words: comma separated tokens, "x" for e0 and a bare
decimal exponent for a root letter.  The empty string is the empty word.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, product
from typing import Iterable, Iterator, Mapping, Union

E0 = -1
MODULI = (2, 3, 4)

CoeffLike = Union[int, Fraction]


def _check_modulus(modulus: int) -> None:
    if modulus not in MODULI:
        raise ValueError(f"modulus must be one of {MODULI}, got {modulus!r}")


class Word:
    """Immutable word; letters is a tuple of ints (E0 or exponents mod N)."""

    __slots__ = ("modulus", "letters", "_hash")

    def __init__(self, modulus: int, letters: Iterable[int] = ()):
        _check_modulus(modulus)
        letters = tuple(letters)
        for a in letters:
            if a != E0 and not (0 <= a < modulus):
                raise ValueError(
                    f"letter {a!r} invalid for modulus {modulus}: "
                    f"expected {E0} (e0) or an exponent in [0, {modulus})"
                )
        self.modulus = modulus
        self.letters = letters
        self._hash = hash((modulus, letters))

    @property
    def weight(self) -> int:
        return len(self.letters)

    @property
    def depth(self) -> int:
        return sum(1 for a in self.letters if a != E0)

    @property
    def is_unit(self) -> bool:
        return all(a != E0 for a in self.letters)

    def conjugate(self) -> "Word":
        """Negate every root exponent mod N; e0 is fixed."""
        n = self.modulus
        return Word(n, tuple(a if a == E0 else (-a) % n for a in self.letters))

    def concat(self, other: "Word") -> "Word":
        if other.modulus != self.modulus:
            raise ValueError("modulus mismatch in concatenation")
        return Word(self.modulus, self.letters + other.letters)

    def sort_key(self):
        # weight first, then descending lexicographic on the letters; this
        # puts root letters before e0 and matches the printed term order.
        return (len(self.letters), tuple(-a for a in self.letters))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Word)
            and self.modulus == other.modulus
            and self.letters == other.letters
        )

    def __hash__(self) -> int:
        return self._hash

    def __len__(self) -> int:
        return len(self.letters)

    def __repr__(self) -> str:
        return f"Word({self.modulus}, {format_word(self)!r})"

    def __str__(self) -> str:
        return format_word(self)


def parse_word(text: str, modulus: int) -> Word:
    """Parse the comma separated token grammar ("x" or a decimal exponent)."""
    _check_modulus(modulus)
    if text == "":
        return Word(modulus, ())
    letters = []
    for tok in text.split(","):
        if tok == "x":
            letters.append(E0)
        elif tok.isdigit():
            k = int(tok)
            if k >= modulus:
                raise ValueError(f"exponent {k} out of range for modulus {modulus}")
            letters.append(k)
        else:
            raise ValueError(f"unknown word token {tok!r}")
    return Word(modulus, letters)


def format_word(w: Word) -> str:
    return ",".join("x" if a == E0 else str(a) for a in w.letters)


def weight_and_depth(w: Word) -> tuple[int, int]:
    return (w.weight, w.depth)


def iter_words(modulus: int, weight: int, depth: int | None = None) -> Iterator[Word]:
    """All words of the given weight (and depth, when fixed)."""
    _check_modulus(modulus)
    if weight < 0:
        return
    depths = range(weight + 1) if depth is None else (depth,)
    for d in depths:
        if d < 0 or d > weight:
            continue
        for pos in combinations(range(weight), d):
            for exps in product(range(modulus), repeat=d):
                letters = [E0] * weight
                for p, a in zip(pos, exps):
                    letters[p] = a
                yield Word(modulus, letters)


def iter_unit_words(modulus: int, weight: int) -> Iterator[Word]:
    for exps in product(range(modulus), repeat=weight):
        yield Word(modulus, exps)


class LinComb:
    """Sparse Word -> Fraction map; zero coefficients are never stored."""

    __slots__ = ("modulus", "_terms")

    def __init__(
        self,
        modulus: int,
        terms: Union[Mapping[Word, CoeffLike], Iterable[tuple[Word, CoeffLike]]] = (),
    ):
        _check_modulus(modulus)
        acc: dict[Word, Fraction] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for w, c in items:
            if not isinstance(w, Word):
                raise ValueError(f"LinComb keys must be Word, got {w!r}")
            if w.modulus != modulus:
                raise ValueError("modulus mismatch between LinComb and Word")
            c = Fraction(c)
            if not c:
                continue
            nc = acc.get(w, _ZERO) + c
            if nc:
                acc[w] = nc
            elif w in acc:
                del acc[w]
        self.modulus = modulus
        self._terms = acc

    @classmethod
    def zero(cls, modulus: int) -> "LinComb":
        return cls(modulus)

    @classmethod
    def from_word(cls, w: Word, coeff: CoeffLike = 1) -> "LinComb":
        return cls(w.modulus, ((w, coeff),))

    def items(self) -> Iterator[tuple[Word, Fraction]]:
        return iter(self._terms.items())

    def sorted_items(self) -> list[tuple[Word, Fraction]]:
        return sorted(self._terms.items(), key=lambda t: t[0].sort_key())

    def support(self) -> Iterator[Word]:
        return iter(self._terms)

    def coeff(self, w: Word) -> Fraction:
        return self._terms.get(w, _ZERO)

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, LinComb)
            and self.modulus == other.modulus
            and self._terms == other._terms
        )

    def __add__(self, other: "LinComb") -> "LinComb":
        if not isinstance(other, LinComb):
            return NotImplemented
        if other.modulus != self.modulus:
            raise ValueError("modulus mismatch in LinComb addition")
        acc = dict(self._terms)
        for w, c in other._terms.items():
            nc = acc.get(w, _ZERO) + c
            if nc:
                acc[w] = nc
            elif w in acc:
                del acc[w]
        out = LinComb.zero(self.modulus)
        out._terms = acc
        return out

    def __neg__(self) -> "LinComb":
        out = LinComb.zero(self.modulus)
        out._terms = {w: -c for w, c in self._terms.items()}
        return out

    def __sub__(self, other: "LinComb") -> "LinComb":
        return self + (-other)

    def __mul__(self, scalar: CoeffLike) -> "LinComb":
        c = Fraction(scalar)
        out = LinComb.zero(self.modulus)
        if c:
            out._terms = {w: c * v for w, v in self._terms.items()}
        return out

    __rmul__ = __mul__

    def to_json_obj(self) -> dict:
        return {
            "N": self.modulus,
            "terms": [
                {"word": format_word(w), "coeff": str(c)}
                for w, c in self.sorted_items()
            ],
        }

    def __repr__(self) -> str:
        return f"LinComb({self.modulus}, {format_lincomb(self)!r})"

    def __str__(self) -> str:
        return format_lincomb(self)


_ZERO = Fraction(0)


def lc_combine(pairs: Iterable[tuple[CoeffLike, LinComb]], modulus: int | None = None) -> LinComb:
    """Rational linear combination of LinCombs sharing one modulus."""
    pairs = list(pairs)
    if modulus is None:
        if not pairs:
            raise ValueError("lc_combine needs a modulus when given no terms")
        modulus = pairs[0][1].modulus
    acc: dict[Word, Fraction] = {}
    for c, lc in pairs:
        if lc.modulus != modulus:
            raise ValueError("modulus mismatch in lc_combine")
        c = Fraction(c)
        if not c:
            continue
        for w, v in lc._terms.items():
            nc = acc.get(w, _ZERO) + c * v
            if nc:
                acc[w] = nc
            elif w in acc:
                del acc[w]
    out = LinComb.zero(modulus)
    out._terms = acc
    return out


def format_lincomb(lc: LinComb) -> str:
    """Canonical text form: sorted terms joined with signs, coefficient 1
    omitted; the empty word renders as its bare coefficient."""
    if lc.is_zero():
        return "0"
    parts: list[str] = []
    for w, c in lc.sorted_items():
        neg = c < 0
        mag = -c if neg else c
        if w.weight == 0:
            body = str(mag)
        elif mag == 1:
            body = format_word(w)
        else:
            body = f"{mag}*{format_word(w)}"
        if not parts:
            parts.append(("-" if neg else "") + body)
        else:
            parts.append(("- " if neg else "+ ") + body)
    return " ".join(parts)
