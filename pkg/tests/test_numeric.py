"""Series evaluation against independent closed forms (mpmath oracle)."""

import cmath
import math
import random

import mpmath as mp
import pytest

from unitmzv.numeric import (
    FIXTURES,
    MIN_TERMS,
    check_fixture,
    numeric_li1,
    numeric_word,
    numeric_zeta,
    primitive_root,
)
from unitmzv.shuffle import shuffle
from unitmzv.words import E0, Word, parse_word
from unitmzv.zeta import ZetaArg

mp.mp.dps = 30


def test_li1_closed_forms():
    v = numeric_li1(2, 1)
    assert abs(v.value - (-math.log(2))) < 1e-15
    v = numeric_li1(4, 1)
    assert abs(v.value - (-cmath.log(1 - 1j))) < 1e-15
    assert abs(v.re + 0.5 * math.log(2)) < 1e-15
    assert abs(v.im - math.pi / 4) < 1e-15


def test_li1_conjugation_and_distribution():
    for n in (3, 4):
        for a in range(1, n):
            left = numeric_li1(n, n - a).value
            right = numeric_li1(n, a).value.conjugate()
            assert abs(left - right) < 1e-14
    gap = numeric_li1(4, 1).value + numeric_li1(4, 3).value - numeric_li1(4, 2).value
    assert abs(gap) < 1e-12


def test_li1_rejects_root_one():
    with pytest.raises(ValueError):
        numeric_li1(2, 0)
    with pytest.raises(ValueError):
        numeric_li1(3, 3)


def test_numeric_zeta_depth_one_polylog():
    cases = [
        (ZetaArg(2, (1,), (1,)), -mp.log(2)),
        (ZetaArg(2, (2,), (1,)), -mp.pi ** 2 / 12),
        (ZetaArg(2, (3,), (1,)), -3 * mp.zeta(3) / 4),
        (ZetaArg(4, (2,), (1,)), mp.polylog(2, mp.mpc(0, 1))),
        (ZetaArg(3, (2,), (2,)), mp.polylog(2, mp.expj(-2 * mp.pi / 3))),
    ]
    for z, truth in cases:
        v = numeric_zeta(z, terms=20000, accel=8)
        assert abs(v.value - complex(truth)) < 1e-9


def test_numeric_zeta_depth_two_and_three_closed_forms():
    v = numeric_zeta(ZetaArg(2, (1, 1), (1, 1)), terms=30000)
    truth = mp.log(2) ** 2 / 2 - mp.pi ** 2 / 12
    assert abs(v.value - complex(truth)) < 1e-6

    v = numeric_zeta(ZetaArg(2, (1, 1, 1), (1, 1, 1)), terms=30000)
    truth = -mp.log(2) ** 3 / 6 + mp.log(2) * mp.zeta(2) / 2 - mp.zeta(3) / 4
    assert abs(v.value - complex(truth)) < 1e-5

    e3 = mp.expj(2 * mp.pi / 3)
    v = numeric_zeta(ZetaArg(3, (1, 1), (1, 1)), terms=30000)
    truth = (mp.log(1 - e3) ** 2 - mp.polylog(2, e3 ** 2)) / 2
    assert abs(v.value - complex(truth)) < 1e-6

    v = numeric_zeta(ZetaArg(4, (1, 1), (1, 1)), terms=30000)
    truth = mp.log(1 - mp.mpc(0, 1)) ** 2 / 2 + mp.pi ** 2 / 24
    assert abs(v.value - complex(truth)) < 1e-6


def test_numeric_zeta_validation():
    with pytest.raises(ValueError):
        numeric_zeta(ZetaArg(2, (1,), (0,)))
    with pytest.raises(ValueError):
        numeric_zeta(ZetaArg(2, (2,), (1,)), terms=MIN_TERMS - 1)
    with pytest.raises(ValueError):
        numeric_zeta(ZetaArg(2, (2,), (1,)), accel=-1)


def test_numeric_conjugation_symmetry():
    rng = random.Random(2718)
    for _ in range(12):
        n = rng.choice((3, 4))
        r = rng.randint(1, 2)
        while True:
            ks = tuple(rng.randint(1, 2) for _ in range(r))
            eps = tuple(rng.randrange(n) for _ in range(r))
            z = ZetaArg(n, ks, eps)
            if z.is_convergent and z.weight <= 3:
                break
        v = numeric_zeta(z, terms=30000)
        vc = numeric_zeta(z.conjugate(), terms=30000)
        assert abs(vc.value - v.value.conjugate()) < 1e-9


def test_numeric_word_values():
    assert numeric_word(Word(2)).value == 1.0
    v = numeric_word(parse_word("1", 2), terms=20000)
    assert abs(v.value - (-math.log(2))) < 1e-9
    v = numeric_word(parse_word("1,0", 2), terms=30000)
    truth = -(mp.log(2) ** 2 / 2 - mp.pi ** 2 / 12)
    assert abs(v.value - complex(truth)) < 1e-6
    with pytest.raises(ValueError):
        numeric_word(Word(2, (E0, 1)))


def test_numeric_word_shuffle_homomorphism():
    w1, w2 = parse_word("1", 2), parse_word("1,1", 2)
    lhs = numeric_word(w1, terms=30000).value * numeric_word(w2, terms=30000).value
    rhs = 0j
    for w, c in shuffle(w1, w2).items():
        rhs += int(c) * numeric_word(w, terms=30000).value
    assert abs(lhs - rhs) < 1e-5


def test_all_fixtures_pass():
    for name in FIXTURES:
        report = check_fixture(name, terms=40000)
        assert report.passed, (name, report.residual)
        assert report.residual < FIXTURES[name].tolerance
    with pytest.raises(ValueError):
        check_fixture("nope")


def test_truncation_stability_on_fixtures():
    for name, f in FIXTURES.items():
        z = ZetaArg(f.modulus, (1,) * len(f.eps), f.eps)
        full = numeric_zeta(z, terms=200_000)
        half = numeric_zeta(z, terms=100_000)
        assert abs(full.value - half.value) <= 10 * full.err


def test_primitive_root():
    assert abs(primitive_root(2) + 1) < 1e-15
    assert abs(primitive_root(4) - 1j) < 1e-15
    with pytest.raises(ValueError):
        primitive_root(6)
