"""Acceptance criteria, one test per criterion.

Run ``pytest tests/test_acceptance.py`` (or execute this file) to get one
PASS/FAIL line per criterion in the terminal summary.
"""

import time
from collections import Counter
from fractions import Fraction
from math import factorial

import pytest

from charvar.cheah import identity_check, mu_via_cheah
from charvar.combinat import bipartitions, class_size_hyperoct, partitions
from charvar.exactmath import MultiPoly, poly_divide_exact, var
from charvar.hodge import (
    GroupFamily,
    HodgeCharacterTable,
    ec,
    ec_gl,
    ec_sl,
    ec_sp,
    generic_quotient_mu,
    mu,
    mu_gl,
    mu_sl,
    mu_sp,
    poincare_dual,
    round_check,
)
from charvar.tables import check_sl_table, check_sp_table
from charvar.weyl import brute_force_mu, enumerate_hyperoct, hyperoct, signed_cycle_type, sym

t, u, v, x = (var(n) for n in "tuvx")
tx = t * x
criterion = pytest.mark.criterion


def _failures(checks):
    return [f"{label}: {detail}" for label, ok, detail in checks if not ok]


@criterion(1, "SL class table for n <= 5")
def test_sl_table():
    rows = list(check_sl_table())
    assert len(rows) == sum(len(partitions(n)) for n in range(2, 6))
    assert _failures(rows) == []


@criterion(2, "B3 and B4 tables with mirrors")
def test_sp_tables():
    rows = list(check_sp_table())
    # every bipartition of 3 and of 4 is covered once
    assert len(rows) == len(bipartitions(3)) + len(bipartitions(4))
    assert _failures(rows) == []


@criterion(3, "closed forms equal Weyl-group averages")
def test_oracle_equivalence():
    start = time.perf_counter()
    for n in range(1, 6):
        for r in range(1, 4):
            assert mu_gl(n, r) == brute_force_mu(sym(n), r), (n, r)
    for n in range(1, 5):
        for r in range(1, 4):
            assert mu_sp(n, r) == brute_force_mu(hyperoct(n), r), (n, r)
    assert time.perf_counter() - start < 120


@criterion(4, "symmetric-product series gives mu_GL")
def test_triple_path():
    for n in range(1, 7):
        for r in range(1, 5):
            assert mu_via_cheah(n, r) == mu_gl(n, r), (n, r)


@criterion(5, "Euler characteristics")
def test_euler_characteristics():
    for n in range(1, 7):
        for r in range(1, 6):
            assert ec_sl(n, r).evaluate({"x": 1}) == n ** (r - 1)
    for n in range(1, 6):
        for r in range(1, 5):
            assert ec_gl(n, r).evaluate({"x": 1}) == 0
    for n in range(1, 5):
        for r in range(1, 5):
            want = sum(Fraction(2 ** ((r - 1) * p.length), _delta(p.parts)) for p in partitions(n))
            got = ec_sp(n, r).evaluate({"x": 1})
            assert got == want and got.denominator == 1


@criterion(6, "explicit SL(4) E-polynomial")
def test_sl4_formula():
    for r in (1, 2, 3):
        expected = (
            Fraction(1, 4) * (x**3 + x**2 + x + 1) ** r
            + Fraction(1, 3) * (x**3 - 1) ** r
            + Fraction(1, 8) * (x**2 - 1) ** r * (x + 1) ** r
            + Fraction(1, 4) * (x - 1) ** (2 * r) * (x + 1) ** r
            + Fraction(1, 24) * (x - 1) ** (3 * r)
        )
        assert ec_sl(4, r) == expected


@criterion(7, "Sp(1) and Sp(2) E-polynomials")
def test_sp_small():
    for r in range(1, 5):
        assert ec_sp(1, r) == Fraction(1, 2) * (x - 1) ** r + Fraction(1, 2) * (x + 1) ** r
        assert ec_sp(2, r) == (
            Fraction(1, 8) * ((x - 1) ** (2 * r) + (x + 1) ** (2 * r))
            + Fraction(1, 4) * (2 * (x**2 - 1) ** r + (x**2 + 1) ** r)
        )


@criterion(8, "rank-two closed forms")
def test_r2_closed_forms():
    for n in range(1, 7):
        s = sum((tx ** (2 * i) for i in range(n)), MultiPoly.constant(0))
        assert mu_gl(n, 2) == (1 + tx) ** 2 * s
        assert mu_sl(n, 2) == s


@criterion(9, "product / permutation-sum identity")
def test_combinatorial_identity():
    start = time.perf_counter()
    for r in range(0, 5):
        for order in range(0, 7):
            assert identity_check(r, order) == (True, None), (r, order)
    assert time.perf_counter() - start < 60


@criterion(10, "structural invariants")
def test_structural_invariants():
    for fam in ("GL", "SL", "SP"):
        for n in range(1, 7):
            for r in range(1, 5):
                g = GroupFamily(fam, n)
                m = mu(g, r)
                assert round_check(m) == (True, None)
                assert all(c.denominator == 1 and c >= 0 for _, c in m.terms())
                expected_dim = (n - 1) * r if fam == "SL" else n * r
                assert ec(g, r).degree("x") == expected_dim
    for n in range(1, 7):
        for r in range(1, 5):
            q = poly_divide_exact(mu_gl(n, r), (1 + tx) ** r)
            assert q * (1 + tx) ** r == mu_gl(n, r)


@criterion(11, "hyperoctahedral class sizes by enumeration")
def test_class_size_exhaustion():
    for n in range(1, 5):
        counts = Counter(signed_cycle_type(g) for g in enumerate_hyperoct(n))
        assert set(counts) == set(bipartitions(n))
        for b, size in counts.items():
            assert size == class_size_hyperoct(b)
        assert sum(class_size_hyperoct(b) for b in bipartitions(n)) == 2**n * factorial(n)


@criterion(12, "P1 x P1 modulo S2 is P2")
def test_generic_quotient():
    table = HodgeCharacterTable(
        2,
        [
            (1, {(0, 0, 0): 1, (2, 1, 1): 2, (4, 2, 2): 1}),
            (1, {(0, 0, 0): 1, (2, 1, 1): 0, (4, 2, 2): 1}),
        ],
    )
    mu_p2 = 1 + t**2 * u * v + t**4 * u**2 * v**2
    assert generic_quotient_mu(table) == mu_p2


def _partition_multiplicities(n, largest=None):
    # plain recursion, kept separate from the package's enumeration
    largest = n if largest is None else largest
    if n == 0:
        yield Counter()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partition_multiplicities(n - first, first):
            yield rest + Counter({first: 1})


def _delta(parts):
    c = Counter(parts)
    out = 1
    for j, a in c.items():
        out *= factorial(a) * j**a
    return out


@criterion(13, "Poincare duality for mu_GL")
def test_duality():
    for n in range(1, 5):
        for r in range(1, 4):
            total = MultiPoly.constant(0)
            for mult in _partition_multiplicities(n):
                term = MultiPoly.constant(1)
                for j, a in mult.items():
                    term = term * ((-tx) ** j - 1) ** (a * r)
                total = total + term / _delta(list(mult.elements()))
            expected = (-t) ** (n * r) * total
            assert poincare_dual(mu_gl(n, r), n * r) == expected, (n, r)


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q"]))
