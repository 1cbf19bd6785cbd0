"""Translation between admissible index tuples and words.

An index is zeta(k1,...,kr; eps^(a1),...,eps^(ar)) with integer k_i >= 1
and root exponents a_i mod N; it converges iff (k_r, a_r) != (1, 0).
The attached word is

    e^(h1) e0^(k1-1) e^(h2) e0^(k2-1) ... e^(hr) e0^(kr-1),

where h_i is the exponent of (eps_i * ... * eps_r)^(-1), i.e.
h_i = -(a_i + ... + a_r) mod N.  Reading a word back: the j-th root
letter exponent h_j gives a_j = h_(j+1) - h_j mod N with h_(r+1) = 0,
and k_j is one plus the number of e0 letters following it.

dch_symbolic maps a word (no leading e0) to the finite list of
(coefficient, convergent index) pairs with the same value, by
regularizing first and converting each surviving word.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .words import E0, MODULI, Word, _check_modulus
from .shuffle import regularize


@dataclass(frozen=True)
class ZetaArg:
    """Index tuple: weights ks and root exponents eps, both length r >= 1."""

    modulus: int
    ks: tuple[int, ...]
    eps: tuple[int, ...]

    def __post_init__(self):
        _check_modulus(self.modulus)
        object.__setattr__(self, "ks", tuple(self.ks))
        object.__setattr__(self, "eps", tuple(self.eps))
        if len(self.ks) != len(self.eps) or not self.ks:
            raise ValueError("ks and eps must have equal positive length")
        for k in self.ks:
            if k < 1:
                raise ValueError(f"entry weight {k} must be >= 1")
        for a in self.eps:
            if not 0 <= a < self.modulus:
                raise ValueError(f"exponent {a} out of range for modulus {self.modulus}")

    @property
    def weight(self) -> int:
        return sum(self.ks)

    @property
    def depth(self) -> int:
        return len(self.ks)

    @property
    def is_convergent(self) -> bool:
        return not (self.ks[-1] == 1 and self.eps[-1] == 0)

    def conjugate(self) -> "ZetaArg":
        n = self.modulus
        return ZetaArg(n, self.ks, tuple((-a) % n for a in self.eps))

    def format(self) -> str:
        ks = ",".join(str(k) for k in self.ks)
        eps = ",".join(str(a) for a in self.eps)
        return f"ks={ks}; eps={eps}"

    @classmethod
    def parse(cls, text: str, modulus: int) -> "ZetaArg":
        try:
            ks_part, eps_part = text.split(";")
            ks = tuple(int(t) for t in ks_part.strip().removeprefix("ks=").split(","))
            eps = tuple(int(t) for t in eps_part.strip().removeprefix("eps=").split(","))
        except (ValueError, AttributeError) as exc:
            raise ValueError(f"malformed index text {text!r}") from exc
        return cls(modulus, ks, eps)

    def to_json_obj(self) -> dict:
        return {"ks": list(self.ks), "eps": list(self.eps), "N": self.modulus}


def word_of_zeta(z: ZetaArg) -> Word:
    n = z.modulus
    letters: list[int] = []
    tail = 0  # a_i + ... + a_r accumulated right to left
    heads: list[int] = []
    for a in reversed(z.eps):
        tail += a
        heads.append((-tail) % n)
    heads.reverse()
    for h, k in zip(heads, z.ks):
        letters.append(h)
        letters.extend([E0] * (k - 1))
    return Word(n, letters)


def zeta_of_word(w: Word) -> ZetaArg:
    if w.weight == 0:
        raise ValueError("the empty word has no index")
    if w.letters[0] == E0:
        raise ValueError(f"word with a leading e0 has no index: {w}")
    n = w.modulus
    heads: list[int] = []
    ks: list[int] = []
    for a in w.letters:
        if a == E0:
            ks[-1] += 1
        else:
            heads.append(a)
            ks.append(1)
    eps = []
    for j, h in enumerate(heads):
        nxt = heads[j + 1] if j + 1 < len(heads) else 0
        eps.append((nxt - h) % n)
    return ZetaArg(n, tuple(ks), tuple(eps))


def dch_symbolic(w: Word) -> list[tuple[Fraction, ZetaArg]]:
    reg = regularize(w)
    return [(c, zeta_of_word(v)) for v, c in reg.sorted_items()]
