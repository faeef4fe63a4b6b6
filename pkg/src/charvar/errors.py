"""Exception hierarchy shared by the library and the command line front end."""


class CharVarError(Exception):
    """Base class for all errors raised by charvar."""

    exit_code = 1


class InvalidRequest(CharVarError, ValueError):
    exit_code = 2


class LimitExceeded(CharVarError):
    """A size guard (group order, series order, ...) was exceeded."""

    exit_code = 3


class NotDivisible(CharVarError, ArithmeticError):
    exit_code = 4


class IntegralityViolation(CharVarError):
    """A Hodge-number polynomial came out with a non-integral or negative coefficient."""

    exit_code = 4


class TheoremViolation(CharVarError):
    """Two computation routes that must agree did not."""

    exit_code = 4


class DegreeOverflow(CharVarError, ValueError):
    exit_code = 4
