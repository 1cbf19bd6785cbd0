"""Depth reduction for unit words and the leading-coefficient pipeline.

For a unit word w = e^(i_1) ... e^(i_s) (letters are roots of unity,
written below by their values), the weight-1 depth derivation has the
closed nearest-neighbour form

    d1(w) = sum_k c(i_k / i_{k+1}) * (w drop i_k)
          - sum_k c(i_{k+1} / i_k) * (w drop i_{k+1})
          + c(i_s) * (w drop i_s),

where c is the coefficient function of the weight-1 generator:
    level 2: c(-1) = 1;
    level 3: c(eps) = c(eps^-1) = 1;
    level 4: c(eps) = c(eps^-1) = 1, c(-1) = 2;
and c(1) = 0.  This is exactly the transpose of the circle action by the
weight-1 generator (the tests enforce equality with the transpose route
on all unit words).  Note the level-4 nearest-neighbour conditions are
ratio conditions i_k = i_{k+1} * eps^(+-1) and i_k = -i_{k+1}; a variant
with the product condition i_k * i_{k+1} = -1 in the paired terms is not
the transpose and is kept out (a regression test documents the
difference).

The pipeline for an exponent tuple (a_1,...,a_r):
  1. build the unit word of zeta(1,...,1; eps^(a_1),...,eps^(a_r)),
  2. regularize if it ends in e^1,
  3. apply d1 exactly r-1 times,
  4. reduce the resulting single letters: e^1 -> 0, and at level 4
     e^(-1) -> e^(eps) + e^(eps^-1) (the distribution relation),
  5. read off beta coefficients and multiply by (-1)^r / r!.

The outputs are the coefficients of [log(1-eps)]^r (named a, or c at
level 2 where it multiplies (log 2)^r) and [log(1-eps^-1)]^r (named b).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .shuffle import ROOT_ONE, regularize
from .words import E0, LinComb, Word, _check_modulus, format_word
from .zeta import ZetaArg, word_of_zeta

# exponent -> coefficient of the weight-1 generator; must stay equal to
# derivation_generator(N, 1) (asserted in tests)
GEN_COEFFS = {
    2: {1: 1},
    3: {1: 1, 2: 1},
    4: {1: 1, 3: 1, 2: 2},
}


def derivation1_direct(modulus: int, w: Word) -> LinComb:
    """Weight-1 depth derivation of a unit word by the closed formula."""
    if w.modulus != modulus:
        raise ValueError("modulus mismatch in derivation1_direct")
    if not w.is_unit or w.weight == 0:
        raise ValueError(f"derivation1_direct needs a nonempty unit word, got {w!r}")
    c = GEN_COEFFS[modulus]
    letters = w.letters
    s = len(letters)
    acc: dict[Word, Fraction] = {}

    def add(drop: int, coeff: int):
        v = Word(modulus, letters[:drop] + letters[drop + 1 :])
        nc = acc.get(v, _ZERO) + coeff
        if nc:
            acc[v] = nc
        elif v in acc:
            del acc[v]

    for k in range(s - 1):
        i, j = letters[k], letters[k + 1]
        cf = c.get((i - j) % modulus)
        if cf:
            add(k, cf)
        cf = c.get((j - i) % modulus)
        if cf:
            add(k + 1, -cf)
    cf = c.get(letters[-1])
    if cf:
        add(s - 1, cf)
    return LinComb(modulus, acc)


_ZERO = Fraction(0)


def iterate_derivation1(modulus: int, x: LinComb, times: int) -> LinComb:
    """Apply the weight-1 derivation linearly `times` times."""
    if times < 0:
        raise ValueError("times must be >= 0")
    if x and times:
        weights = {w.weight for w in x.support()}
        if len(weights) > 1:
            raise ValueError(f"mixed weights in iterate_derivation1: {sorted(weights)}")
        if times > weights.pop() - 1:
            raise ValueError("times exceeds weight - 1")
    for _ in range(times):
        if not x:
            break
        acc: dict[Word, Fraction] = {}
        for w, cw in x.items():
            for v, cv in derivation1_direct(modulus, w).items():
                nc = acc.get(v, _ZERO) + cw * cv
                if nc:
                    acc[v] = nc
                elif v in acc:
                    del acc[v]
        x = LinComb(modulus, acc)
    return x


@dataclass(frozen=True)
class ReducedDepthOne:
    """Reduction of a depth-1 combination to generator coordinates.

    Level 2 uses the single coordinate beta (class of e^(-1)); levels 3
    and 4 use beta_plus (class of e^(eps^-1)) and beta_minus (class of
    e^(eps)).
    """

    modulus: int
    beta: Fraction | None = None
    beta_plus: Fraction | None = None
    beta_minus: Fraction | None = None


def reduce_depth_one(modulus: int, x: LinComb) -> ReducedDepthOne:
    if x.modulus != modulus:
        raise ValueError("modulus mismatch in reduce_depth_one")
    beta = beta_plus = beta_minus = _ZERO
    for w, c in x.items():
        if w.weight != 1 or w.letters[0] == E0:
            raise ValueError(f"reduce_depth_one needs single root letters, got {w!r}")
        a = w.letters[0]
        if a == ROOT_ONE:
            continue  # the class of e^1 is zero
        if modulus == 2:
            beta += c
        elif modulus == 3:
            if a == 1:
                beta_minus += c
            else:
                beta_plus += c
        else:
            if a == 1:
                beta_minus += c
            elif a == 3:
                beta_plus += c
            else:
                # distribution relation: e^(-1) -> e^(eps) + e^(eps^-1)
                beta_minus += c
                beta_plus += c
    if modulus == 2:
        return ReducedDepthOne(modulus, beta=beta)
    return ReducedDepthOne(modulus, beta_plus=beta_plus, beta_minus=beta_minus)


@dataclass(frozen=True)
class LeadingCoeffs:
    """Depth-graded leading coefficients of zeta(1,...,1; exponent tuple).

    c multiplies (log 2)^r at level 2; a and b multiply [log(1-eps)]^r
    and [log(1-eps^-1)]^r at levels 3 and 4.
    """

    modulus: int
    eps: tuple[int, ...]
    r: int
    a: Fraction | None = None
    b: Fraction | None = None
    c: Fraction | None = None

    def to_json_obj(self) -> dict:
        out: dict = {"N": self.modulus, "r": self.r}
        if self.modulus == 2:
            out["c"] = str(self.c)
        else:
            out["a"] = str(self.a)
            out["b"] = str(self.b)
        return out


def _pipeline(modulus: int, eps: tuple[int, ...]) -> tuple[Word, ReducedDepthOne, LeadingCoeffs]:
    _check_modulus(modulus)
    eps = tuple(eps)
    r = len(eps)
    if r == 0:
        raise ValueError("empty exponent tuple")
    z = ZetaArg(modulus, (1,) * r, eps)
    w = word_of_zeta(z)
    x = LinComb.from_word(w)
    if w.letters[-1] == ROOT_ONE:
        x = regularize(x)
    y = iterate_derivation1(modulus, x, r - 1)
    red = reduce_depth_one(modulus, y)
    scale = Fraction((-1) ** r, factorial(r))
    if modulus == 2:
        coeffs = LeadingCoeffs(modulus, eps, r, c=red.beta * scale)
    else:
        coeffs = LeadingCoeffs(
            modulus, eps, r, a=red.beta_plus * scale, b=red.beta_minus * scale
        )
    return w, red, coeffs


def leading_coefficients(modulus: int, eps: tuple[int, ...]) -> LeadingCoeffs:
    return _pipeline(modulus, eps)[2]


@dataclass(frozen=True)
class TableRow:
    modulus: int
    r: int
    eps: tuple[int, ...]
    word: Word
    reduced: ReducedDepthOne
    coeffs: LeadingCoeffs

    def to_json_obj(self) -> dict:
        out: dict = {
            "N": self.modulus,
            "r": self.r,
            "eps": list(self.eps),
            "word": format_word(self.word),
        }
        if self.modulus == 2:
            out["beta"] = str(self.reduced.beta)
            out["c"] = str(self.coeffs.c)
        else:
            out["beta_plus"] = str(self.reduced.beta_plus)
            out["beta_minus"] = str(self.reduced.beta_minus)
            out["a"] = str(self.coeffs.a)
            out["b"] = str(self.coeffs.b)
        return out

    def csv_cells(self) -> list[str]:
        eps = ",".join(str(a) for a in self.eps)
        if self.modulus == 2:
            return [str(self.modulus), str(self.r), eps, "", "", str(self.coeffs.c)]
        return [
            str(self.modulus),
            str(self.r),
            eps,
            str(self.coeffs.a),
            str(self.coeffs.b),
            "",
        ]


def leading_coefficient_table(modulus: int, r: int) -> list[TableRow]:
    """All exponent tuples of length r in lexicographic order."""
    _check_modulus(modulus)
    if r < 1:
        raise ValueError("r must be >= 1")
    from itertools import product

    rows = []
    for eps in product(range(modulus), repeat=r):
        w, red, coeffs = _pipeline(modulus, eps)
        rows.append(TableRow(modulus, r, eps, w, red, coeffs))
    return rows
