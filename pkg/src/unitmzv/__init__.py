"""Exact depth-graded leading coefficients of unit cyclotomic multiple
zeta values at levels 2, 3 and 4, with a word-algebra substrate, a
numeric cross-check evaluator, a CLI and an HTTP service."""

from .words import (
    E0,
    MODULI,
    LinComb,
    Word,
    format_lincomb,
    format_word,
    iter_unit_words,
    iter_words,
    lc_combine,
    parse_word,
    weight_and_depth,
)
from .shuffle import ROOT_ONE, is_convergent, regularize, shuffle
from .zeta import ZetaArg, dch_symbolic, word_of_zeta, zeta_of_word
from .ihara import (
    circ,
    derivation_generator,
    derivation_transpose,
    star,
    transpose_matrix,
    transpose_matrix_csv,
    twist,
)
from .depth import (
    GEN_COEFFS,
    LeadingCoeffs,
    ReducedDepthOne,
    TableRow,
    derivation1_direct,
    iterate_derivation1,
    leading_coefficient_table,
    leading_coefficients,
    reduce_depth_one,
)
from .numeric import (
    DEFAULT_ACCEL,
    DEFAULT_TERMS,
    FIXTURES,
    ComplexVal,
    FixtureReport,
    check_fixture,
    numeric_li1,
    numeric_word,
    numeric_zeta,
)

__version__ = "0.1.0"

__all__ = [
    "E0",
    "MODULI",
    "ROOT_ONE",
    "LinComb",
    "Word",
    "ZetaArg",
    "ComplexVal",
    "FixtureReport",
    "LeadingCoeffs",
    "ReducedDepthOne",
    "TableRow",
    "FIXTURES",
    "GEN_COEFFS",
    "DEFAULT_ACCEL",
    "DEFAULT_TERMS",
    "check_fixture",
    "circ",
    "dch_symbolic",
    "derivation1_direct",
    "derivation_generator",
    "derivation_transpose",
    "format_lincomb",
    "format_word",
    "is_convergent",
    "iter_unit_words",
    "iter_words",
    "iterate_derivation1",
    "lc_combine",
    "leading_coefficient_table",
    "leading_coefficients",
    "numeric_li1",
    "numeric_word",
    "numeric_zeta",
    "parse_word",
    "reduce_depth_one",
    "regularize",
    "shuffle",
    "star",
    "transpose_matrix",
    "transpose_matrix_csv",
    "twist",
    "weight_and_depth",
    "word_of_zeta",
    "zeta_of_word",
]
