"""Exact arithmetic and infinite-prime classification for grossone numerals."""

from .core import (
    GROSSONE,
    GROSSONE_EXPONENT,
    ONE,
    ZERO,
    Decomposition,
    GrossNumber,
    Ordering,
    ShapeClass,
    Trilean,
    add,
    classify_shape,
    cmp,
    decompose,
    div,
    divides,
    eval_at,
    is_integer,
    mul,
    neg,
    normalize,
    power,
    sub,
)
from .errors import (
    DivisionByZero,
    GrossError,
    LambdaNotSquare,
    NegativeM,
    NonIntegerExponent,
    NonPositivePoint,
    NotPrimeParameter,
    NotRepresentable,
    ParseError,
    PrimeExceedsBound,
    ZeroToNegativePower,
)
from .finite import finite_analogue_check, is_prime_small, lcm_up_to, twin_sieve
from .parser import eval_ast, evaluate, format_number, parse
from .primes import (
    Composite,
    LambdaCert,
    NotSquare,
    Prime,
    SetId,
    Square,
    TwinPair,
    classify_prime,
    enumerate_A,
    enumerate_B,
    lambda_certify,
    make_twins,
    set_count,
    squareness,
)

G = GROSSONE

__all__ = [name for name in dir() if not name.startswith("_")]
