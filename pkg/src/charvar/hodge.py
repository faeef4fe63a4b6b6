"""Closed-form Hodge-type polynomials of free abelian character varieties.

Everything is computed in the two-variable convention ``(t, x)`` with
``x = uv``; the three families treated here are round, so ``mu`` only has
monomials ``t^k x^k``.  Use :func:`to_three_vars` to pass to ``(t, u, v)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial, prod

from .combinat import (
    bipartitions,
    class_size_hyperoct,
    delta,
    epsilon,
    p_poly_sl,
    p_poly_sp,
    partitions,
)
from .errors import (
    DegreeOverflow,
    IntegralityViolation,
    InvalidRequest,
    NotDivisible,
    TheoremViolation,
)
from .exactmath import MultiPoly, const, poly_divide_exact, var

__all__ = [
    "GroupFamily",
    "HodgeCharacterTable",
    "mu_gl",
    "mu_sl",
    "mu_sp",
    "mu",
    "ec_gl",
    "ec_sl",
    "ec_sp",
    "ec",
    "e_poly",
    "euler_char",
    "euler_closed_form",
    "poincare",
    "poincare_dual",
    "weight_poly",
    "round_check",
    "generic_quotient_mu",
    "mu_gl_group",
    "to_three_vars",
]

FAMILIES = ("GL", "SL", "SP")

_t = var("t")
_x = var("x")
_tx = _t * _x


@dataclass(frozen=True)
class GroupFamily:
    family: str
    n: int

    def __post_init__(self):
        fam = self.family.upper()
        if fam not in FAMILIES:
            raise InvalidRequest(f"unknown group family {self.family!r}")
        object.__setattr__(self, "family", fam)
        if self.n < 1:
            raise InvalidRequest("rank parameter n must be at least 1")

    def dimension(self, r: int) -> int:
        """Complex dimension of the rank-``r`` free abelian character variety."""
        return (self.n - 1) * r if self.family == "SL" else self.n * r

    def __str__(self):
        return {"GL": "GL", "SL": "SL", "SP": "Sp"}[self.family] + f"({self.n},C)"


def _check(n: int, r: int):
    if n < 1 or r < 1:
        raise InvalidRequest(f"need n, r >= 1 (got n={n}, r={r})")


def _assert_hodge_numbers(p: MultiPoly, what: str) -> MultiPoly:
    for exps, c in p.terms():
        if c.denominator != 1 or c < 0:
            raise IntegralityViolation(f"{what}: coefficient {c} at {exps} is not a Hodge number")
    return p


def mu_gl(n: int, r: int) -> MultiPoly:
    _check(n, r)
    total = const(0)
    for part in partitions(n):
        term = const(1)
        for j, a in enumerate(part.multiplicities, start=1):
            if a:
                term = term * (1 - (-_tx) ** j) ** (a * r)
        total = total + term / delta(part)
    return _assert_hodge_numbers(total.with_variables(("t", "x")), f"mu_GL({n},{r})")


def mu_sl(n: int, r: int) -> MultiPoly:
    """``mu_GL / (1 + tx)^r``, as an exact quotient."""
    _check(n, r)
    try:
        q = poly_divide_exact(mu_gl(n, r), (1 + _tx) ** r)
    except NotDivisible as exc:
        raise TheoremViolation(f"(1+tx)^{r} does not divide mu_GL({n},{r})") from exc
    return _assert_hodge_numbers(q.with_variables(("t", "x")), f"mu_SL({n},{r})")


def mu_sp(n: int, r: int) -> MultiPoly:
    _check(n, r)
    total = const(0)
    for b in bipartitions(n):
        term = const(1)
        for i, a in enumerate(b.first.multiplicities, start=1):
            if a:
                term = term * (1 - (-_tx) ** i) ** a
        for j, a in enumerate(b.second.multiplicities, start=1):
            if a:
                term = term * (1 + (-_tx) ** j) ** a
        total = total + term**r * class_size_hyperoct(b)
    total = total / (2**n * factorial(n))
    return _assert_hodge_numbers(total.with_variables(("t", "x")), f"mu_Sp({n},{r})")


def mu(family: GroupFamily, r: int) -> MultiPoly:
    return {"GL": mu_gl, "SL": mu_sl, "SP": mu_sp}[family.family](family.n, r)


def ec_gl(n: int, r: int) -> MultiPoly:
    _check(n, r)
    total = const(0)
    for part in partitions(n):
        term = const(1)
        for j, a in enumerate(part.multiplicities, start=1):
            if a:
                term = term * (_x**j - 1) ** (a * r)
        total = total + term / delta(part)
    return total.with_variables(("x",))


def ec_sl(n: int, r: int) -> MultiPoly:
    _check(n, r)
    total = const(0)
    for part in partitions(n):
        total = total + p_poly_sl(part) ** r / delta(part)
    return total.with_variables(("x",))


def ec_sp(n: int, r: int) -> MultiPoly:
    _check(n, r)
    total = const(0)
    for b in bipartitions(n):
        total = total + p_poly_sp(b) ** r / epsilon(b)
    return total.with_variables(("x",))


def ec(family: GroupFamily, r: int) -> MultiPoly:
    return {"GL": ec_gl, "SL": ec_sl, "SP": ec_sp}[family.family](family.n, r)


def euler_closed_form(family: GroupFamily, r: int) -> Fraction:
    n = family.n
    if family.family == "GL":
        return Fraction(0)
    if family.family == "SL":
        return Fraction(n) ** (r - 1)
    return sum((Fraction(2 ** ((r - 1) * p.length), delta(p)) for p in partitions(n)), Fraction(0))


def euler_char(family: GroupFamily, r: int) -> int:
    """Euler characteristic as ``E^c(1)``, checked against the family's closed form."""
    _check(family.n, r)
    value = ec(family, r).evaluate({"x": 1})
    expected = euler_closed_form(family, r)
    if value != expected:
        raise TheoremViolation(f"chi of M_{r} {family}: E^c(1) = {value} but closed form gives {expected}")
    if value.denominator != 1:
        raise IntegralityViolation(f"chi of M_{r} {family} = {value} is not an integer")
    return int(value)


def poincare(family: GroupFamily, r: int) -> MultiPoly:
    return mu(family, r).substitute({"x": 1}).with_variables(("t",))


def e_poly(p: MultiPoly) -> MultiPoly:
    """``E = mu(t=-1)``."""
    return p.substitute({"t": -1})


def weight_poly(e: MultiPoly) -> MultiPoly:
    """``W(y) = E(y, y)``; with ``x = uv`` this is ``x -> y^2``."""
    return e.substitute({"x": var("y") ** 2, "u": var("y"), "v": var("y")}).with_variables(("y",))


def poincare_dual(p: MultiPoly, d: int) -> MultiPoly:
    """Reflect exponents ``t^k x^p -> t^(2d-k) x^(d-p)``."""
    extra = set(p.used_variables) - {"t", "x"}
    if extra:
        raise InvalidRequest(f"poincare_dual works in (t, x); got variables {sorted(extra)}")
    out = {}
    for mono, c in p.monomials():
        k, q = mono.get("t", 0), mono.get("x", 0)
        if k > 2 * d or q > d:
            raise DegreeOverflow(f"monomial t^{k} x^{q} exceeds dimension {d}")
        out[(2 * d - k, d - q)] = c
    return MultiPoly(out, ("t", "x"))


def round_check(p: MultiPoly):
    """``(True, None)`` if every monomial is ``t^k x^k``, else ``(False, witness)``."""
    for mono, c in p.monomials():
        if set(mono) - {"t", "x"} or mono.get("t", 0) != mono.get("x", 0):
            return False, MultiPoly.monomial(mono, c)
    return True, None


def to_three_vars(p: MultiPoly) -> MultiPoly:
    return p.substitute({"x": var("u") * var("v")})


@dataclass(frozen=True)
class HodgeCharacterTable:
    """Characters of a finite group on each ``H^{k,p,q}``, listed per conjugacy class.

    ``classes`` is a sequence of ``(class_size, {(k, p, q): chi})``; the first
    class must be the identity class, where ``chi`` is the Hodge number.
    """

    group_order: int
    classes: tuple = field(default_factory=tuple)

    def __post_init__(self):
        classes = tuple((int(size), dict(entries)) for size, entries in self.classes)
        object.__setattr__(self, "classes", classes)
        if not classes:
            raise InvalidRequest("character table has no classes")
        if sum(size for size, _ in classes) != self.group_order:
            raise InvalidRequest("class sizes do not add up to the group order")
        size, ident = classes[0]
        if size != 1:
            raise InvalidRequest("the first class must be the identity class")
        for key, chi in ident.items():
            if Fraction(chi) < 0 or Fraction(chi).denominator != 1:
                raise InvalidRequest(f"identity character at {key} must be a nonnegative integer")


def generic_quotient_mu(table: HodgeCharacterTable) -> MultiPoly:
    """Mixed Hodge polynomial of ``X/F``: the trivial-isotypic part of the character sum."""
    t, u, v = var("t"), var("u"), var("v")
    total = MultiPoly.constant(0, ("t", "u", "v"))
    for size, entries in table.classes:
        for (k, p, q), chi in entries.items():
            total = total + (t**k * u**p * v**q) * (Fraction(chi) * size)
    return _assert_hodge_numbers(total / table.group_order, "quotient mu")


def mu_gl_group(n: int) -> MultiPoly:
    """``prod_{j=1..n} (1 + t^(2j-1) x^j)``: balanced, not round for ``n >= 2``."""
    if n < 1:
        raise InvalidRequest("n must be positive")
    return prod((1 + _t ** (2 * j - 1) * _x**j for j in range(1, n + 1)), start=const(1))
