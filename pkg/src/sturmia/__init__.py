"""Exact finite-depth computations on sturmian words over a continued-fraction slope."""

from .errors import SturmiaError
from .factorization import (
    characteristic_factorizations,
    duality_check,
    integer_product,
    product_prefix,
)
from .intercept import (
    AlphaNumber,
    classify,
    complement,
    equivalent,
    from_integer,
    intercept_from_prefix,
    sigma0,
    sigma1,
    sturmian_prefix,
    zero,
)
from .ostrowski import OstrowskiDigits, all_digit_strings, decode, encode, normalize, validate
from .rauzy import RauzyGraph, build_graph, count_turns
from .repetition import (
    dio_estimate,
    repetition_characteristic,
    repetition_closed_form,
    repetition_direct,
    repetition_rows,
)
from .slope import Slope, continuants, convergent_value, interval_locate, parse_slope
from .torsion import (
    b_factorize,
    even_family,
    parity_word,
    self_complementary,
    torsion_search,
)
from .words import (
    characteristic_prefix,
    complexity,
    factor_set,
    mechanical_prefix,
    standard_word,
)

__all__ = [
    "AlphaNumber",
    "OstrowskiDigits",
    "RauzyGraph",
    "Slope",
    "SturmiaError",
    "all_digit_strings",
    "b_factorize",
    "build_graph",
    "characteristic_factorizations",
    "characteristic_prefix",
    "classify",
    "complement",
    "complexity",
    "continuants",
    "convergent_value",
    "count_turns",
    "decode",
    "dio_estimate",
    "duality_check",
    "encode",
    "equivalent",
    "even_family",
    "factor_set",
    "from_integer",
    "integer_product",
    "intercept_from_prefix",
    "interval_locate",
    "mechanical_prefix",
    "normalize",
    "parity_word",
    "parse_slope",
    "product_prefix",
    "repetition_characteristic",
    "repetition_closed_form",
    "repetition_direct",
    "repetition_rows",
    "self_complementary",
    "sigma0",
    "sigma1",
    "standard_word",
    "sturmian_prefix",
    "torsion_search",
    "validate",
    "zero",
]

__version__ = "0.1.0"
