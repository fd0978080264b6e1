from zetaforms.arith.core import (
    ExactInt,
    ExactRational,
    LcmValue,
    bernoulli,
    bernoulli_sequence,
    binomial,
    divisors,
    factorial,
    format_rational,
    lcm_upto,
    mobius,
    pochhammer,
)
from zetaforms.arith.series import (
    inverse_power_series,
    series_mul,
    series_mul_linear,
    series_product,
)

__all__ = [
    "ExactInt",
    "ExactRational",
    "LcmValue",
    "bernoulli",
    "bernoulli_sequence",
    "binomial",
    "divisors",
    "factorial",
    "format_rational",
    "lcm_upto",
    "mobius",
    "pochhammer",
    "inverse_power_series",
    "series_mul",
    "series_mul_linear",
    "series_product",
]
