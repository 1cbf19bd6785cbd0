"""Floating point evaluation of indices and words, plus fixture checks.

numeric_zeta computes the nested partial sums

    S_j(n) = sum_{m <= n} eps_j^m / m^(k_j) * S_{j-1}(m - 1),   S_0 = 1,

over n <= M in O(r*M), then accelerates the outer partial-sum sequence
P(n) = S_r(n).  Acceleration: t damping rounds

    P <- (P(n+1) - w P(n)) / (1 - w),

with w cycling over the nontrivial N-th roots of unity (for level 2 this
is plain pairwise averaging), each of which kills the matching
oscillatory tail component to leading order; then Richardson
extrapolation in 1/n of the damped sequence at geometrically spaced
indices removes the remaining smooth algebraic tail.  Plain averaging
alone leaves that smooth tail (about 1/(2M) on the weight-2 alternating
fixture, i.e. 2.5e-6 at the default M), which is why the extrapolation
step is part of the scheme.

err_estimate is the absolute difference between the last two Richardson
iterates plus a machine-precision floor.  It is a heuristic, not a
bound.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .depth import LeadingCoeffs, leading_coefficients
from .words import Word, _check_modulus
from .zeta import ZetaArg, dch_symbolic

DEFAULT_TERMS = 200_000
DEFAULT_ACCEL = 8
MIN_TERMS = 1000


@dataclass(frozen=True)
class ComplexVal:
    re: float
    im: float
    err: float

    @property
    def value(self) -> complex:
        return complex(self.re, self.im)

    def to_json_obj(self) -> dict:
        return {"re": self.re, "im": self.im, "err": self.err}


def primitive_root(modulus: int) -> complex:
    _check_modulus(modulus)
    return cmath.exp(2j * cmath.pi / modulus)


def numeric_li1(modulus: int, exponent: int) -> ComplexVal:
    """-log(1 - eps^exponent), principal branch; exact to machine precision."""
    _check_modulus(modulus)
    if exponent % modulus == 0:
        raise ValueError("numeric_li1 diverges at the root 1")
    z = cmath.exp(2j * cmath.pi * (exponent % modulus) / modulus)
    v = -cmath.log(1 - z)
    return ComplexVal(v.real, v.imag, 5e-16 * (1 + abs(v)))


def numeric_zeta(z: ZetaArg, terms: int = DEFAULT_TERMS, accel: int = DEFAULT_ACCEL) -> ComplexVal:
    if not z.is_convergent:
        raise ValueError(f"divergent index: {z.format()}")
    if terms < MIN_TERMS:
        raise ValueError(f"terms must be >= {MIN_TERMS}")
    if accel < 0:
        raise ValueError("accel must be >= 0")
    M = int(terms)
    N = z.modulus
    n = np.arange(1, M + 1, dtype=np.float64)
    prev = None
    for k, a in zip(z.ks, z.eps):
        theta = 2.0 * math.pi * (a % N) / N
        term = np.exp(1j * theta * n) / n ** k
        if prev is not None:
            term = term * prev
        partial = np.cumsum(term)
        prev = np.concatenate(([0.0 + 0.0j], partial[:-1]))
    seq = partial
    roots = [cmath.exp(2j * cmath.pi * e / N) for e in range(1, N)]
    rounds = 0
    for j in range(accel):
        if len(seq) < 32:
            break
        w = roots[j % len(roots)]
        seq = (seq[1:] - w * seq[:-1]) / (1.0 - w)
        rounds += 1
    iterates = _richardson(seq, rounds)
    value = iterates[-1]
    if len(iterates) > 1:
        err = abs(iterates[-1] - iterates[-2]) + 4e-15 * (1 + abs(value))
    else:
        err = abs(value - seq[-1]) + 4e-15 * (1 + abs(value))
    return ComplexVal(float(value.real), float(value.imag), float(err))


def _richardson(seq, rounds: int, nodes: int = 4):
    """Neville extrapolation to 1/n -> 0 at indices L, L/2, L/4, L/8."""
    L = len(seq)
    idxs = []
    for j in range(nodes):
        i = max(L // (2 ** j), 8) - 1
        if not idxs or i < idxs[-1]:
            idxs.append(i)
    # a damped entry at index i mixes raw indices i+1 .. i+1+rounds
    xs = [1.0 / (i + 1 + rounds / 2.0) for i in idxs]
    tab = [complex(seq[i]) for i in idxs]
    iterates = [tab[0]]
    for m in range(1, len(tab)):
        for i in range(len(tab) - m):
            tab[i] = (xs[i + m] * tab[i] - xs[i] * tab[i + 1]) / (xs[i + m] - xs[i])
        iterates.append(tab[0])
    return iterates


def numeric_word(w: Word, terms: int = DEFAULT_TERMS, accel: int = DEFAULT_ACCEL) -> ComplexVal:
    """Value of a word (no leading e0): regularize, then sum index values."""
    if w.weight == 0:
        return ComplexVal(1.0, 0.0, 0.0)
    total = 0j
    err = 0.0
    for c, z in dch_symbolic(w):
        v = numeric_zeta(z, terms, accel)
        total += float(c) * v.value
        err += abs(float(c)) * v.err
    return ComplexVal(total.real, total.imag, err)


@dataclass(frozen=True)
class Fixture:
    """A closed-form comparison point: index, tolerance and the lower
    depth tail (value minus the leading L-power part)."""

    name: str
    modulus: int
    eps: tuple[int, ...]
    tolerance: float
    note: str


FIXTURES = {
    f.name: f
    for f in (
        Fixture("n2-w2-mm", 2, (1, 1), 1e-6,
                "zeta(1,1;-1,-1) = log(2)^2/2 - pi^2/12"),
        Fixture("n2-w3-mmm", 2, (1, 1, 1), 1e-5,
                "zeta(1,1,1;-1,-1,-1) = -log(2)^3/6 + log(2)zeta(2)/2 - zeta(3)/4"),
        Fixture("n3-w2-ee", 3, (1, 1), 1e-6,
                "zeta(1,1;e,e) = (Li1(e)^2 - Li2(e^2))/2, e = exp(2pi i/3)"),
        Fixture("n4-w2-ii", 4, (1, 1), 1e-6,
                "zeta(1,1;i,i) = log(1-i)^2/2 + pi^2/24"),
        Fixture("n4-w2-im", 4, (1, 2), 1e-6,
                "zeta(1,1;i,-1) = log(1-i)^2/2 + log(1+i)^2 + pi^2/12"),
    )
}


def _fixture_tail(name: str) -> complex:
    """Lower depth tail per fixture, via mpmath (elementary symmetric
    function oracle over power sums of eps^m / m)."""
    import mpmath as mp

    mp.mp.dps = 30
    if name == "n2-w2-mm":
        t = -mp.pi ** 2 / 12
    elif name == "n2-w3-mmm":
        t = mp.log(2) * mp.zeta(2) / 2 - mp.zeta(3) / 4
    elif name == "n3-w2-ee":
        e = mp.expj(2 * mp.pi / 3)
        t = -mp.polylog(2, e ** 2) / 2
    elif name == "n4-w2-ii":
        t = mp.pi ** 2 / 24
    elif name == "n4-w2-im":
        t = mp.pi ** 2 / 12
    else:
        raise ValueError(f"unknown fixture {name!r}")
    return complex(t)


@dataclass(frozen=True)
class FixtureReport:
    fixture: str
    predicted: complex
    numeric: complex
    residual: float
    tolerance: float
    passed: bool
    coeffs: LeadingCoeffs

    def to_json_obj(self) -> dict:
        return {
            "fixture": self.fixture,
            "predicted": {"re": self.predicted.real, "im": self.predicted.imag},
            "numeric": {"re": self.numeric.real, "im": self.numeric.imag},
            "residual": self.residual,
            "tolerance": self.tolerance,
            "pass": self.passed,
        }


def check_fixture(name: str, terms: int = DEFAULT_TERMS, accel: int = DEFAULT_ACCEL) -> FixtureReport:
    """Compare the symbolic prediction (leading coefficients times L-powers
    plus the registered tail) against the series evaluation."""
    if name not in FIXTURES:
        raise ValueError(f"unknown fixture {name!r}; known: {sorted(FIXTURES)}")
    f = FIXTURES[name]
    coeffs = leading_coefficients(f.modulus, f.eps)
    r = coeffs.r
    tail = _fixture_tail(name)
    if f.modulus == 2:
        predicted = float(coeffs.c) * math.log(2) ** r + tail
    else:
        eps = primitive_root(f.modulus)
        lp = cmath.log(1 - eps)
        lm = cmath.log(1 - 1 / eps)
        predicted = float(coeffs.a) * lp ** r + float(coeffs.b) * lm ** r + tail
    numeric = numeric_zeta(ZetaArg(f.modulus, (1,) * r, f.eps), terms, accel)
    residual = abs(predicted - numeric.value)
    return FixtureReport(
        fixture=name,
        predicted=predicted,
        numeric=numeric.value,
        residual=residual,
        tolerance=f.tolerance,
        passed=residual <= f.tolerance,
        coeffs=coeffs,
    )
