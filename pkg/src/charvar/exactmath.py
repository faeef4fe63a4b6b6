"""Exact sparse multivariate polynomials and z-adic truncated power series.

Coefficients are :class:`fractions.Fraction` throughout; nothing here ever
touches floating point.  A :class:`MultiPoly` is immutable.  Its variables are
kept in a fixed precedence order (``t, u, v, x, y, z, lam`` and then any other
name alphabetically), and terms are serialized in graded order: ascending
total degree, and inside one degree, larger powers of the earlier variable
first.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import comb
from typing import Iterable, Iterator, Mapping, Sequence, Union

from .errors import CharVarError, NotDivisible

__all__ = [
    "MultiPoly",
    "TruncatedSeries",
    "const",
    "var",
    "poly_add",
    "poly_mul",
    "poly_pow",
    "poly_substitute",
    "poly_divide_exact",
    "series_from_factor",
    "series_mul",
]

PRECEDENCE = ("t", "u", "v", "x", "y", "z", "lam")
MAX_EXPONENT = 2**31 - 1

Scalar = Union[int, Fraction]
Exps = tuple


def _var_key(name: str):
    try:
        return (0, PRECEDENCE.index(name), "")
    except ValueError:
        return (1, 0, name)


def _sorted_vars(names: Iterable[str]) -> tuple:
    return tuple(sorted(set(names), key=_var_key))


def _reindex(terms: Mapping, old: Sequence[str], new: Sequence[str]) -> dict:
    if tuple(old) == tuple(new):
        return dict(terms)
    pos = [new.index(v) for v in old]
    width = len(new)
    out = {}
    for exps, c in terms.items():
        e = [0] * width
        for i, k in zip(pos, exps):
            e[i] = k
        out[tuple(e)] = c
    return out


def _order_key(exps):
    # ascending degree; within a degree, larger leading exponents first
    return (sum(exps), tuple(-e for e in exps))


def _leading_key(exps):
    # graded lexicographic, used to pick leading terms in division
    return (sum(exps), exps)


class MultiPoly:
    """Sparse polynomial with exact rational coefficients."""

    __slots__ = ("_vars", "_terms", "_key")

    def __init__(self, terms: Mapping | None = None, variables: Iterable[str] = ()):
        variables = tuple(variables)
        ordered = _sorted_vars(variables)
        if len(ordered) != len(variables):
            raise ValueError(f"duplicate variable names in {variables!r}")
        clean = {}
        for exps, c in (terms or {}).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != len(variables):
                raise ValueError("exponent vector does not match the variable list")
            for e in exps:
                if e < 0:
                    raise ValueError("negative exponent")
                if e > MAX_EXPONENT:
                    raise OverflowError("exponent exceeds the supported range")
            c = Fraction(c)
            if c:
                clean[exps] = clean.get(exps, 0) + c
        clean = {e: c for e, c in clean.items() if c}
        self._vars = ordered
        self._terms = _reindex(clean, variables, ordered)
        self._key = None

    @classmethod
    def _raw(cls, variables: tuple, terms: dict) -> "MultiPoly":
        # trusted constructor: variables already ordered, terms already clean
        p = object.__new__(cls)
        p._vars = variables
        p._terms = terms
        p._key = None
        return p

    # -- constructors -----------------------------------------------------

    @classmethod
    def constant(cls, c: Scalar, variables: Iterable[str] = ()) -> "MultiPoly":
        variables = _sorted_vars(variables)
        c = Fraction(c)
        return cls._raw(variables, {(0,) * len(variables): c} if c else {})

    @classmethod
    def variable(cls, name: str) -> "MultiPoly":
        return cls._raw((name,), {(1,): Fraction(1)})

    @classmethod
    def monomial(cls, exponents: Mapping[str, int], coeff: Scalar = 1) -> "MultiPoly":
        names = tuple(exponents)
        return cls({tuple(exponents[v] for v in names): coeff}, names)

    @classmethod
    def parse(cls, text: str) -> "MultiPoly":
        """Parse an expression such as ``"1/2*(x+1)^3 - t*x"``.

        Supports ``+ - * / ^`` (``**`` too), parentheses, integer literals and
        identifiers.  Division by a non-constant polynomial is exact division.
        """
        return _Parser(text).parse()

    @classmethod
    def from_json_terms(cls, variables: Sequence[str], terms: Sequence[Mapping]) -> "MultiPoly":
        data = {}
        for item in terms:
            data[tuple(item["exp"])] = Fraction(int(item["num"]), int(item["den"]))
        return cls(data, variables)

    # -- basic accessors --------------------------------------------------

    @property
    def variables(self) -> tuple:
        return self._vars

    @property
    def used_variables(self) -> tuple:
        return tuple(v for i, v in enumerate(self._vars) if any(e[i] for e in self._terms))

    def terms(self) -> list:
        """``(exponent tuple, coefficient)`` pairs in canonical order."""
        return sorted(self._terms.items(), key=lambda kv: _order_key(kv[0]))

    def monomials(self) -> Iterator[tuple]:
        """Yield ``({var: exp}, coeff)`` with zero exponents dropped."""
        for exps, c in self.terms():
            yield {v: e for v, e in zip(self._vars, exps) if e}, c

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_constant(self) -> bool:
        return all(not any(e) for e in self._terms)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return next(iter(self._terms.values()), Fraction(0))

    def coefficient(self, exponents: Mapping[str, int] | None = None) -> Fraction:
        exponents = {v: e for v, e in (exponents or {}).items() if e}
        if any(v not in self._vars for v in exponents):
            return Fraction(0)
        key = tuple(exponents.get(v, 0) for v in self._vars)
        return self._terms.get(key, Fraction(0))

    def degree(self, variable: str | None = None) -> int:
        """Total degree, or the degree in one variable.  The zero polynomial has degree -1."""
        if not self._terms:
            return -1
        if variable is None:
            return max(sum(e) for e in self._terms)
        if variable not in self._vars:
            return 0
        i = self._vars.index(variable)
        return max(e[i] for e in self._terms)

    def coefficients_integral(self) -> bool:
        return all(c.denominator == 1 for c in self._terms.values())

    def with_variables(self, variables: Iterable[str]) -> "MultiPoly":
        """Same polynomial, declared over a (super)set of variables."""
        new = _sorted_vars(tuple(variables) + self._vars)
        return MultiPoly._raw(new, _reindex(self._terms, self._vars, new))

    # -- arithmetic -------------------------------------------------------

    @staticmethod
    def _coerce(other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return MultiPoly.constant(other)
        return NotImplemented

    def _aligned(self, other: "MultiPoly"):
        if self._vars == other._vars:
            return self._vars, self._terms, other._terms
        new = _sorted_vars(self._vars + other._vars)
        return new, _reindex(self._terms, self._vars, new), _reindex(other._terms, other._vars, new)

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        names, a, b = self._aligned(other)
        out = dict(a)
        for e, c in b.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return MultiPoly._raw(names, out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly._raw(self._vars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        names, a, b = self._aligned(other)
        out: dict = {}
        for ea, ca in a.items():
            for eb, cb in b.items():
                e = tuple(x + y for x, y in zip(ea, eb))
                out[e] = out.get(e, 0) + ca * cb
        for e in out:
            if e and max(e) > MAX_EXPONENT:
                raise OverflowError("exponent exceeds the supported range")
        return MultiPoly._raw(names, {e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def scale(self, c: Scalar) -> "MultiPoly":
        c = Fraction(c)
        if not c:
            return MultiPoly._raw(self._vars, {})
        return MultiPoly._raw(self._vars, {e: v * c for e, v in self._terms.items()})

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                raise ZeroDivisionError("polynomial division by zero")
            return self.scale(Fraction(1) / Fraction(other))
        if isinstance(other, MultiPoly):
            return poly_divide_exact(self, other)
        return NotImplemented

    def __pow__(self, e: int):
        return poly_pow(self, e)

    # -- comparison -------------------------------------------------------

    def _canonical(self):
        if self._key is None:
            self._key = frozenset(
                (tuple((v, k) for v, k in zip(self._vars, e) if k), c) for e, c in self._terms.items()
            )
        return self._key

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.constant(other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self._canonical() == other._canonical()

    def __hash__(self):
        return hash(self._canonical())

    # -- evaluation -------------------------------------------------------

    def substitute(self, bindings: Mapping[str, "MultiPoly | Scalar"]) -> "MultiPoly":
        return poly_substitute(self, bindings)

    def evaluate(self, point: Mapping[str, Scalar]) -> Fraction:
        missing = [v for v in self.used_variables if v not in point]
        if missing:
            raise ValueError(f"no value given for {missing}")
        total = Fraction(0)
        vals = [Fraction(point.get(v, 0)) for v in self._vars]
        for exps, c in self._terms.items():
            term = c
            for x, e in zip(vals, exps):
                if e:
                    term *= x**e
            total += term
        return total

    def __call__(self, **point) -> Fraction:
        return self.evaluate(point)

    # -- rendering --------------------------------------------------------

    def to_text(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for exps, c in self.terms():
            mono = "*".join(
                v if e == 1 else f"{v}^{e}" for v, e in zip(self._vars, exps) if e
            )
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            if not parts:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)

    def to_latex(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for exps, c in self.terms():
            mono = " ".join(
                v if e == 1 else f"{v}^{{{e}}}"
                for v, e in zip(self._vars, exps)
                if e
            ).replace("lam", r"\lambda")
            mag = abs(c)
            if mag.denominator == 1:
                num = str(mag.numerator)
            else:
                num = rf"\frac{{{mag.numerator}}}{{{mag.denominator}}}"
            if not mono:
                body = num
            elif mag == 1:
                body = mono
            else:
                body = f"{num} {mono}"
            if not parts:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)

    def to_json_terms(self) -> list:
        return [
            {"exp": list(exps), "num": str(c.numerator), "den": str(c.denominator)}
            for exps, c in self.terms()
        ]

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"MultiPoly({self.to_text()!r})"


def const(c: Scalar) -> MultiPoly:
    return MultiPoly.constant(c)


def var(name: str) -> MultiPoly:
    return MultiPoly.variable(name)


def poly_add(a: MultiPoly, b: MultiPoly) -> MultiPoly:
    return a + b


def poly_mul(a: MultiPoly, b: MultiPoly) -> MultiPoly:
    return a * b


def poly_pow(a: MultiPoly, e: int) -> MultiPoly:
    """``a**e`` by binary exponentiation; ``a**0 == 1``."""
    if not isinstance(e, int) or e < 0:
        raise ValueError(f"exponent must be a nonnegative integer, got {e!r}")
    result = MultiPoly.constant(1, a.variables)
    base = a
    while e:
        if e & 1:
            result = result * base
        e >>= 1
        if e:
            base = base * base
    return result


def poly_substitute(p: MultiPoly, bindings: Mapping[str, MultiPoly | Scalar]) -> MultiPoly:
    """Simultaneously replace variables by polynomials; unbound variables pass through."""
    bound = {v: MultiPoly._coerce(q) for v, q in bindings.items() if v in p.variables}
    if not bound:
        return p
    keep = [i for i, v in enumerate(p.variables) if v not in bound]
    keep_vars = tuple(p.variables[i] for i in keep)
    powers: dict = {}

    def power(v, e):
        key = (v, e)
        if key not in powers:
            powers[key] = poly_pow(bound[v], e)
        return powers[key]

    extra = tuple(v for q in bound.values() for v in q.variables)
    result = MultiPoly.constant(0, keep_vars + extra)
    for exps, c in p._terms.items():
        term = MultiPoly._raw(keep_vars, {tuple(exps[i] for i in keep): c})
        for i, v in enumerate(p.variables):
            if v in bound and exps[i]:
                term = term * power(v, exps[i])
        result = result + term
    return result


def poly_divide_exact(a: MultiPoly, b: MultiPoly) -> MultiPoly:
    """Quotient ``q`` with ``q*b == a``; raises :class:`NotDivisible` otherwise.

    Plain leading-term division in graded-lex order.  For an exact divisor this
    never stalls, since ``LT(q*b) = LT(q)*LT(b)``.
    """
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    names, rem, div = a._aligned(b)
    lead_e = max(div, key=_leading_key)
    lead_c = div[lead_e]
    quot: dict = {}
    rem = dict(rem)
    while rem:
        e = max(rem, key=_leading_key)
        if any(x < y for x, y in zip(e, lead_e)):
            raise NotDivisible(f"{b} does not divide {a}")
        qe = tuple(x - y for x, y in zip(e, lead_e))
        qc = rem[e] / lead_c
        quot[qe] = qc
        for de, dc in div.items():
            t = tuple(x + y for x, y in zip(qe, de))
            s = rem.get(t, 0) - qc * dc
            if s:
                rem[t] = s
            else:
                rem.pop(t, None)
    return MultiPoly._raw(names, quot)


# -- truncated series ---------------------------------------------------------


class TruncatedSeries:
    """Power series in ``z`` known up to and including ``z**order``.

    Coefficients are :class:`MultiPoly` values that do not mention ``z``.
    """

    __slots__ = ("order", "coefficients")

    def __init__(self, coefficients: Sequence[MultiPoly | Scalar], order: int | None = None):
        coeffs = [MultiPoly._coerce(c) for c in coefficients]
        if order is None:
            order = len(coeffs) - 1
        if order < 0:
            raise ValueError("series order must be nonnegative")
        if len(coeffs) > order + 1:
            raise ValueError("more coefficients than the order allows")
        coeffs += [MultiPoly.constant(0)] * (order + 1 - len(coeffs))
        for c in coeffs:
            if "z" in c.used_variables:
                raise ValueError("series coefficients must not mention z")
        self.order = order
        self.coefficients = tuple(coeffs)

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries":
        return cls([1], order)

    def __getitem__(self, n: int) -> MultiPoly:
        return self.coefficients[n]

    def truncate(self, order: int) -> "TruncatedSeries":
        return TruncatedSeries(self.coefficients[: order + 1], min(order, self.order))

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            return series_mul(self, other)
        if isinstance(other, (int, Fraction, MultiPoly)):
            return TruncatedSeries([c * other for c in self.coefficients], self.order)
        return NotImplemented

    __rmul__ = __mul__

    def __add__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        n = min(self.order, other.order)
        return TruncatedSeries([self[i] + other[i] for i in range(n + 1)], n)

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.order == other.order and self.coefficients == other.coefficients

    def __hash__(self):
        return hash((self.order, self.coefficients))

    def to_polynomial(self) -> MultiPoly:
        z = var("z")
        return sum((c * z**i for i, c in enumerate(self.coefficients)), MultiPoly.constant(0))

    def __str__(self):
        body = " + ".join(f"({c})*z^{i}" for i, c in enumerate(self.coefficients) if c)
        return f"{body or '0'} + O(z^{self.order + 1})"

    def __repr__(self):
        return f"TruncatedSeries({[str(c) for c in self.coefficients]!r})"


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product truncated to the smaller of the two orders."""
    n = min(a.order, b.order)
    out = []
    for k in range(n + 1):
        acc = MultiPoly.constant(0)
        for i in range(k + 1):
            if a[i] and b[k - i]:
                acc = acc + a[i] * b[k - i]
        out.append(acc)
    return TruncatedSeries(out, n)


def series_from_factor(c: MultiPoly | Scalar, e: int, order: int) -> TruncatedSeries:
    """Expand ``(1 - c*z)**e`` to the given order; ``e`` may be negative."""
    c = MultiPoly._coerce(c)
    if "z" in c.used_variables:
        raise ValueError("factor coefficient must not mention z")
    coeffs = []
    power = MultiPoly.constant(1)
    for m in range(order + 1):
        if e >= 0:
            if m > e:
                break
            coeffs.append(power.scale(comb(e, m) * (-1) ** m))
        else:
            coeffs.append(power.scale(comb(-e - 1 + m, m)))
        power = power * c
    return TruncatedSeries(coeffs, order)


# -- expression parser --------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\*\*|[-+*/^()]))")


class _Parser:
    def __init__(self, text: str):
        self.text = text.replace("−", "-")
        self.tokens = self._tokenize(self.text)
        self.pos = 0

    @staticmethod
    def _tokenize(text):
        tokens, i = [], 0
        text = text.rstrip()
        while i < len(text):
            m = _TOKEN.match(text, i)
            if not m:
                raise CharVarError(f"cannot parse polynomial near {text[i:]!r}")
            if m.group(1):
                tokens.append(("num", int(m.group(1))))
            elif m.group(2):
                tokens.append(("id", m.group(2)))
            else:
                op = m.group(3)
                tokens.append(("op", "^" if op == "**" else op))
            i = m.end()
        return tokens

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else (None, None)

    def take(self):
        tok = self.peek()
        self.pos += 1
        return tok

    def expect(self, op):
        kind, val = self.take()
        if kind != "op" or val != op:
            raise CharVarError(f"expected {op!r} in {self.text!r}")

    def parse(self) -> MultiPoly:
        if not self.tokens:
            raise CharVarError("empty polynomial expression")
        p = self.expr()
        if self.pos != len(self.tokens):
            raise CharVarError(f"trailing input in {self.text!r}")
        return p

    def expr(self):
        p = self.term()
        while self.peek() in (("op", "+"), ("op", "-")):
            _, op = self.take()
            q = self.term()
            p = p + q if op == "+" else p - q
        return p

    def term(self):
        p = self.unary()
        while self.peek() in (("op", "*"), ("op", "/")):
            _, op = self.take()
            q = self.unary()
            if op == "*":
                p = p * q
            elif q.is_constant():
                p = p / q.constant_value()
            else:
                p = poly_divide_exact(p, q)
        return p

    def unary(self):
        if self.peek() == ("op", "-"):
            self.take()
            return -self.unary()
        if self.peek() == ("op", "+"):
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            kind, val = self.take()
            if kind == "op" and val == "(":
                kind, val = self.take()
                self.expect(")")
            if kind != "num":
                raise CharVarError(f"exponent must be a nonnegative integer in {self.text!r}")
            return poly_pow(base, val)
        return base

    def atom(self):
        kind, val = self.take()
        if kind == "num":
            return MultiPoly.constant(val)
        if kind == "id":
            return MultiPoly.variable(val)
        if kind == "op" and val == "(":
            p = self.expr()
            self.expect(")")
            return p
        raise CharVarError(f"unexpected token {val!r} in {self.text!r}")
