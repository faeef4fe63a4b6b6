"""Generating series of mixed Hodge polynomials of symmetric products.

For a variety ``X`` with mixed Hodge numbers ``h^{k,p,q}``, the series
``sum_n mu(Sym^n X) z^n`` is the product over ``(k, p, q)`` of
``(1 - (-1)^k t^k u^p v^q z)^((-1)^(k+1) h^{k,p,q})``.  Here it is expanded
exactly to a fixed order in ``z``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from .errors import InvalidRequest, LimitExceeded
from .exactmath import MultiPoly, TruncatedSeries, series_from_factor, series_mul, var
from .weyl import _add_into, _det_coeffs, _pow, action_matrix, enumerate_sym

__all__ = [
    "HodgeNumberList",
    "cheah_series",
    "cheah_round",
    "torus_hodge_numbers",
    "mu_via_cheah",
    "identity_sides",
    "identity_check",
]

MAX_IDENTITY_R = 6
MAX_IDENTITY_N = 7


@dataclass(frozen=True)
class HodgeNumberList:
    """Nonzero Hodge numbers ``{(k, p, q): h}`` of a variety of complex dimension ``dim``."""

    entries: tuple
    dim: int

    def __post_init__(self):
        items = self.entries.items() if isinstance(self.entries, dict) else self.entries
        items = tuple(((int(k), int(p), int(q)), int(h)) for (k, p, q), h in items)
        keys = [key for key, _ in items]
        if len(set(keys)) != len(keys):
            raise InvalidRequest("duplicate (k, p, q) entries")
        for (k, p, q), h in items:
            if h <= 0:
                raise InvalidRequest(f"h^{k},{p},{q} must be positive")
            if not (max(p, q) <= k <= 2 * self.dim and max(p, q) <= self.dim):
                raise InvalidRequest(f"(k, p, q) = {(k, p, q)} impossible in dimension {self.dim}")
        object.__setattr__(self, "entries", items)

    def dual(self) -> "HodgeNumberList":
        """Compactly supported numbers of a Poincaré-duality space: ``(2d-k, d-p, d-q)``."""
        d = self.dim
        return HodgeNumberList(tuple(((2 * d - k, d - p, d - q), h) for (k, p, q), h in self.entries), d)

    def mu(self) -> MultiPoly:
        t, u, v = var("t"), var("u"), var("v")
        total = MultiPoly.constant(0, ("t", "u", "v"))
        for (k, p, q), h in self.entries:
            total = total + (t**k * u**p * v**q) * h
        return total


def cheah_series(h: HodgeNumberList, order: int, compact: bool = False) -> TruncatedSeries:
    """Series of ``mu(Sym^n X)`` (or of ``mu^c`` when ``compact``) up to ``z^order``.

    ``h`` holds the ordinary Hodge numbers of ``X``; with ``compact=True`` the
    product is taken over the Poincaré-dual numbers instead.
    """
    if order < 0:
        raise InvalidRequest("order must be nonnegative")
    nums = h.dual() if compact else h
    t, u, v = var("t"), var("u"), var("v")
    result = TruncatedSeries.one(order)
    for (k, p, q), hk in nums.entries:
        c = (t**k * u**p * v**q) * (-1) ** k
        result = series_mul(result, series_from_factor(c, (-1) ** (k + 1) * hk, order))
    return TruncatedSeries([c.with_variables(("t", "u", "v")) for c in result.coefficients], order)


def cheah_round(h_diag, dim: int, order: int) -> TruncatedSeries:
    """Product ``prod_k (1 - (-tx)^k z)^((-1)^(k+1) h^{k,k,k})`` up to ``z^order``, in ``(t, x)``."""
    if order < 0:
        raise InvalidRequest("order must be nonnegative")
    h_diag = list(h_diag.items() if isinstance(h_diag, dict) else h_diag)
    for k, hk in h_diag:
        if not 0 <= k <= 2 * dim:
            raise InvalidRequest(f"h^{k},{k},{k} impossible in dimension {dim}")
    mtx = -(var("t") * var("x"))
    result = TruncatedSeries.one(order)
    for k, hk in h_diag:
        if hk:
            result = series_mul(result, series_from_factor(mtx**k, (-1) ** (k + 1) * hk, order))
    return TruncatedSeries([c.with_variables(("t", "x")) for c in result.coefficients], order)


def torus_hodge_numbers(r: int) -> list:
    """``h^{k,k,k}((C^*)^r) = binomial(r, k)``."""
    return [(k, comb(r, k)) for k in range(r + 1)]


def mu_via_cheah(n: int, r: int) -> MultiPoly:
    """Coefficient of ``z^n`` in the symmetric-product series of ``(C^*)^r``."""
    if n < 1 or r < 1:
        raise InvalidRequest("need n, r >= 1")
    return cheah_round(torus_hodge_numbers(r), r, n)[n]


def identity_sides(r: int, order: int):
    """Both sides of the product/permutation-sum identity as series in ``z`` over ``Q[x]``.

    Left: ``prod_{k=0..r} (1 - x^k z)^((-1)^(k+1) binom(r,k))``.
    Right: ``sum_n z^n/n! sum_{sigma in S_n} det(I - x M_sigma)^r``.
    """
    if not 0 <= r <= MAX_IDENTITY_R or not 0 <= order <= MAX_IDENTITY_N:
        raise LimitExceeded(f"identity check limited to r <= {MAX_IDENTITY_R}, N <= {MAX_IDENTITY_N}")
    x = var("x")
    left = TruncatedSeries.one(order)
    for k in range(r + 1):
        left = series_mul(left, series_from_factor(x**k, (-1) ** (k + 1) * comb(r, k), order))
    right = [MultiPoly.constant(1)]
    for n in range(1, order + 1):
        acc: list = [0]
        for sigma in enumerate_sym(n):
            det = _det_coeffs(action_matrix(sigma).rows, -1)
            _add_into(acc, _pow(det, r), 1)
        right.append(MultiPoly({(k,): Fraction(c, factorial(n)) for k, c in enumerate(acc)}, ("x",)))
    return left, TruncatedSeries(right, order)


def identity_check(r: int, order: int):
    """``(True, None)`` if both sides agree through ``z^order``, else ``(False, first bad n)``."""
    left, right = identity_sides(r, order)
    for n in range(order + 1):
        if left[n] != right[n]:
            return False, n
    return True, None
