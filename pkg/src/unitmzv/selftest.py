"""Acceptance criteria, runnable as a batch (CLI selftest) or one by one
(the acceptance test module).  Each criterion returns a result with a
one-line detail; sweeps are exhaustive where stated and seeded-random
otherwise, so reruns are deterministic."""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import factorial

from .depth import (
    derivation1_direct,
    iterate_derivation1,
    leading_coefficients,
    reduce_depth_one,
)
from .ihara import derivation_transpose
from .numeric import check_fixture, numeric_li1, numeric_word
from .shuffle import regularize, shuffle, shuffle_lincomb
from .words import E0, LinComb, Word, iter_unit_words, iter_words
from .zeta import ZetaArg, word_of_zeta, zeta_of_word


@dataclass(frozen=True)
class CriterionResult:
    name: str
    passed: bool
    detail: str


def _result(name: str, bad: list, detail: str) -> CriterionResult:
    if bad:
        detail = f"{detail}; first failures: {bad[:3]}"
    return CriterionResult(name, not bad, detail)


def c01_canonical_values(max_weight: int = 6) -> CriterionResult:
    """(1,...,1,eps) decomposes to (-1)^r/r! for r = 1..10 at every level."""
    t0 = time.time()
    bad = []
    for n in (2, 3, 4):
        for r in range(1, 11):
            want = Fraction((-1) ** r, factorial(r))
            lc = leading_coefficients(n, (0,) * (r - 1) + (1,))
            if n == 2:
                if lc.c != want:
                    bad.append((n, r, lc))
            else:
                if (lc.a, lc.b) != (want, Fraction(0)):
                    bad.append((n, r, lc))
                rlc = leading_coefficients(n, (0,) * (r - 1) + (n - 1,))
                if (rlc.a, rlc.b) != (Fraction(0), want):
                    bad.append((n, r, "conjugate", rlc))
    elapsed = time.time() - t0
    if elapsed >= 1.0:
        bad.append(("runtime", elapsed))
    return _result(
        "c01-canonical-values", bad, f"r=1..10 at levels 2,3,4 in {elapsed:.3f}s"
    )


def c02_fixtures(max_weight: int = 6) -> CriterionResult:
    """Weight 2 and 3 fixtures: exact coefficients and numeric residuals."""
    bad = []
    exact = [
        (2, (1, 1), {"c": Fraction(1, 2)}),
        (2, (1, 1, 1), {"c": Fraction(-1, 6)}),
        (3, (1, 1), {"a": Fraction(1, 2), "b": Fraction(0)}),
        (4, (1, 1), {"a": Fraction(1, 2), "b": Fraction(0)}),
        (4, (1, 2), {"a": Fraction(1, 2), "b": Fraction(1)}),
    ]
    for n, eps, want in exact:
        lc = leading_coefficients(n, eps)
        got = {k: getattr(lc, k) for k in want}
        if got != want:
            bad.append((n, eps, got))
    residuals = []
    for name in ("n2-w2-mm", "n2-w3-mmm", "n3-w2-ee", "n4-w2-ii", "n4-w2-im"):
        rep = check_fixture(name)
        residuals.append(f"{name}={rep.residual:.1e}")
        if not rep.passed:
            bad.append((name, rep.residual, rep.tolerance))
    return _result("c02-fixtures", bad, "residuals " + " ".join(residuals))


def c03_direct_equals_transpose(max_weight: int = 6) -> CriterionResult:
    """Closed nearest-neighbour formula == transpose route on every unit word."""
    t0 = time.time()
    top = min(6, max_weight)
    bad = []
    count = 0
    for n in (2, 3, 4):
        for wt in range(1, top + 1):
            for w in iter_unit_words(n, wt):
                count += 1
                if derivation1_direct(n, w) != derivation_transpose(n, 1, w):
                    bad.append((n, str(w)))
    elapsed = time.time() - t0
    if elapsed >= 60.0:
        bad.append(("runtime", elapsed))
    return _result(
        "c03-direct-equals-transpose", bad, f"{count} unit words in {elapsed:.2f}s"
    )


def c04_higher_weight_vanishing(max_weight: int = 6) -> CriterionResult:
    """Transpose derivations of weight >= 2 kill every unit word."""
    top = min(6, max_weight)
    bad = []
    count = 0
    for n in (2, 3, 4):
        for wt in range(1, top + 1):
            valid = [m for m in range(2, wt + 1) if n != 2 or m % 2 == 1]
            for m in valid:
                for w in iter_unit_words(n, wt):
                    count += 1
                    if not derivation_transpose(n, m, w).is_zero():
                        bad.append((n, m, str(w)))
    return _result("c04-higher-weight-vanishing", bad, f"{count} cases checked")


def c05_leibniz(max_weight: int = 6) -> CriterionResult:
    """d1(w1 sh w2) = d1(w1) sh w2 + w1 sh d1(w2), 200 random pairs per level."""
    rng = random.Random(97)
    bad = []
    for n in (2, 3, 4):
        for _ in range(200):
            s1 = rng.randint(1, 7)
            s2 = rng.randint(1, 8 - s1)
            w1 = Word(n, tuple(rng.randrange(n) for _ in range(s1)))
            w2 = Word(n, tuple(rng.randrange(n) for _ in range(s2)))
            left = iterate_derivation1(n, shuffle(w1, w2), 1)
            right = shuffle_lincomb(
                derivation1_direct(n, w1), LinComb.from_word(w2)
            ) + shuffle_lincomb(LinComb.from_word(w1), derivation1_direct(n, w2))
            if left != right:
                bad.append((n, str(w1), str(w2)))
    return _result("c05-leibniz", bad, "600 random pairs, combined weight <= 8")


def c06_regularization(max_weight: int = 6) -> CriterionResult:
    """regularize(w sh e^1) = 0 on e0-free words; idempotent; grade preserving."""
    top = min(5, max_weight)
    bad = []
    count = 0
    for n in (2, 3, 4):
        e1 = Word(n, (0,))
        for wt in range(1, top + 1):
            for w in iter_unit_words(n, wt):
                count += 1
                killed = regularize(shuffle(w, e1))
                if not killed.is_zero():
                    bad.append(("kill", n, str(w)))
                reg = regularize(w)
                if regularize(reg) != reg:
                    bad.append(("idempotent", n, str(w)))
                for v in reg.support():
                    if (v.weight, v.depth) != (w.weight, w.depth):
                        bad.append(("grade", n, str(w), str(v)))
    return _result("c06-regularization", bad, f"{count} e0-free words, weight <= {top}")


def c07_round_trips(max_weight: int = 6) -> CriterionResult:
    """word -> index -> word and index -> word -> index identities."""
    top = min(5, max_weight)
    bad = []
    words = indices = 0
    for n in (2, 3, 4):
        for wt in range(1, top + 1):
            for w in iter_words(n, wt):
                if w.letters[0] == E0:
                    continue
                words += 1
                if word_of_zeta(zeta_of_word(w)) != w:
                    bad.append(("word", n, str(w)))
            for r in range(1, wt + 1):
                for ks in _compositions(wt, r):
                    for eps in product(range(n), repeat=r):
                        indices += 1
                        z = ZetaArg(n, ks, eps)
                        if zeta_of_word(word_of_zeta(z)) != z:
                            bad.append(("index", n, z.format()))
    return _result("c07-round-trips", bad, f"{words} words and {indices} indices")


def _compositions(total: int, parts: int):
    if parts == 1:
        yield (total,)
        return
    for head in range(1, total - parts + 2):
        for rest in _compositions(total - head, parts - 1):
            yield (head,) + rest


def c08_conjugation_swap(max_weight: int = 6) -> CriterionResult:
    """Negating the exponent tuple swaps a and b at levels 3 and 4."""
    top = min(5, max_weight)
    bad = []
    count = 0
    for n in (3, 4):
        for r in range(1, top + 1):
            for eps in product(range(n), repeat=r):
                count += 1
                ceps = tuple((-a) % n for a in eps)
                lc = leading_coefficients(n, eps)
                clc = leading_coefficients(n, ceps)
                if (lc.a, lc.b) != (clc.b, clc.a):
                    bad.append((n, eps, lc, clc))
    return _result("c08-conjugation-swap", bad, f"{count} tuples, weight <= {top}")


def c09_spanning(max_weight: int = 6) -> CriterionResult:
    """The pipeline reduces every tuple's depth-1 residue with only the
    relations e^1 -> 0 and (level 4) e^(-1) -> e^(eps) + e^(eps^-1)."""
    top = min(6, max_weight)
    bad = []
    count = 0
    for n in (2, 3, 4):
        for r in range(1, top + 1):
            for eps in product(range(n), repeat=r):
                count += 1
                try:
                    w = word_of_zeta(ZetaArg(n, (1,) * r, eps))
                    x = LinComb.from_word(w)
                    if w.letters[-1] == 0:
                        x = regularize(x)
                    y = iterate_derivation1(n, x, r - 1)
                    for v in y.support():
                        if not (v.is_unit and v.weight == 1):
                            bad.append((n, eps, str(v)))
                    reduce_depth_one(n, y)
                except ValueError as exc:
                    bad.append((n, eps, str(exc)))
    return _result("c09-spanning", bad, f"{count} tuples, weight <= {top}")


def c10_numeric_cross_checks(max_weight: int = 6) -> CriterionResult:
    """Numeric shuffle homomorphism on 20 random pairs and the
    distribution relation for Li1 at level 4."""
    rng = random.Random(2024)
    bad = []
    worst = 0.0
    for _ in range(20):
        n = rng.choice((2, 3, 4))
        s1 = rng.randint(1, 3)
        s2 = rng.randint(1, 3)

        def rand_word(s):
            first = rng.randrange(n)
            rest = tuple(
                E0 if rng.random() < 0.3 else rng.randrange(n) for _ in range(s - 1)
            )
            return Word(n, (first,) + rest)

        w1, w2 = rand_word(s1), rand_word(s2)
        lhs = numeric_word(w1).value * numeric_word(w2).value
        rhs = 0j
        for w, c in shuffle(w1, w2).items():
            rhs += float(c) * numeric_word(w).value
        gap = abs(lhs - rhs)
        worst = max(worst, gap)
        if gap > 1e-5:
            bad.append((n, str(w1), str(w2), gap))
    dist = abs(
        numeric_li1(4, 1).value + numeric_li1(4, 3).value - numeric_li1(4, 2).value
    )
    if dist > 1e-12:
        bad.append(("distribution", dist))
    return _result(
        "c10-numeric-cross-checks",
        bad,
        f"worst shuffle gap {worst:.1e}, distribution gap {dist:.1e}",
    )


CRITERIA = (
    c01_canonical_values,
    c02_fixtures,
    c03_direct_equals_transpose,
    c04_higher_weight_vanishing,
    c05_leibniz,
    c06_regularization,
    c07_round_trips,
    c08_conjugation_swap,
    c09_spanning,
    c10_numeric_cross_checks,
)


def run_selftest(max_weight: int = 6) -> list[CriterionResult]:
    return [fn(max_weight) for fn in CRITERIA]
