"""Exact mixed Hodge, E- and Poincaré polynomials of free abelian character varieties
of GL(n,C), SL(n,C) and Sp(n,C)."""

from .errors import (
    CharVarError,
    DegreeOverflow,
    IntegralityViolation,
    InvalidRequest,
    LimitExceeded,
    NotDivisible,
    TheoremViolation,
)
from .exactmath import MultiPoly, TruncatedSeries
from .hodge import (
    GroupFamily,
    ec_gl,
    ec_sl,
    ec_sp,
    euler_char,
    mu_gl,
    mu_sl,
    mu_sp,
    poincare,
)

__version__ = "0.1.0"
