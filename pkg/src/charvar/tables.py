"""Reference class tables, stored as data for ``verify --suite tables``.

Partitions are written as comma-separated parts (``""`` is the empty
partition) and polynomials as expressions readable by ``MultiPoly.parse``.
Row order is the reference order, not our enumeration order.
"""

from __future__ import annotations

from .combinat import (
    BiPartition,
    Partition,
    delta,
    epsilon,
    p_poly_sl,
    p_poly_sp,
)
from .exactmath import MultiPoly

# n -> [(parts, delta, p(x))]
SL_TABLE = {
    2: [("2", 2, "x+1"), ("1,1", 2, "x-1")],
    3: [("3", 3, "x^2+x+1"), ("2,1", 2, "x^2-1"), ("1,1,1", 6, "(x-1)^2")],
    4: [
        ("4", 4, "x^3+x^2+x+1"),
        ("3,1", 3, "x^3-1"),
        ("2,2", 8, "(x^2-1)*(x+1)"),
        ("2,1,1", 4, "(x-1)^2*(x+1)"),
        ("1,1,1,1", 24, "(x-1)^3"),
    ],
    5: [
        ("5", 5, "(x^5-1)/(x-1)"),
        ("4,1", 4, "x^4-1"),
        ("3,1,1", 6, "(x^3-1)*(x-1)"),
        ("3,2", 6, "(x^3-1)*(x+1)"),
        ("2,2,1", 8, "(x^2-1)^2"),
        ("2,1,1,1", 12, "(x-1)^3*(x+1)"),
        ("1,1,1,1,1", 120, "(x-1)^4"),
    ],
}

# n -> [(first parts, second parts, |k+l|, delta*delta, epsilon, p(x))]
SP_TABLE = {
    3: [
        ("3", "", 1, 3, 6, "x^3-1"),
        ("2,1", "", 2, 2, 8, "(x-1)*(x^2-1)"),
        ("1,1,1", "", 3, 6, 48, "(x-1)^3"),
        ("2", "1", 2, 2, 8, "(x^2-1)*(x+1)"),
        ("1,1", "1", 3, 2, 16, "(x-1)^2*(x+1)"),
        ("1", "2", 2, 2, 8, "(x-1)*(x^2+1)"),
        ("1", "1,1", 3, 2, 16, "(x-1)*(x+1)^2"),
        ("", "3", 1, 3, 6, "x^3+1"),
        ("", "2,1", 2, 2, 8, "(x+1)*(x^2+1)"),
        ("", "1,1,1", 3, 6, 48, "(x+1)^3"),
    ],
    # only k >= l listed; the rest are mirrors
    4: [
        ("4", "", 1, 4, 8, "x^4-1"),
        ("3,1", "", 2, 3, 12, "(x-1)*(x^3-1)"),
        ("2,2", "", 2, 8, 32, "(x^2-1)^2"),
        ("2,1,1", "", 3, 4, 32, "(x-1)^2*(x^2-1)"),
        ("1,1,1,1", "", 4, 24, 384, "(x-1)^4"),
        ("3", "1", 2, 3, 12, "(x^3-1)*(x+1)"),
        ("2,1", "1", 3, 2, 16, "(x-1)*(x^2-1)*(x+1)"),
        ("1,1,1", "1", 4, 6, 96, "(x-1)^3*(x+1)"),
        ("2", "2", 2, 4, 16, "(x^2-1)*(x^2+1)"),
        ("1,1", "2", 3, 4, 32, "(x-1)^2*(x^2+1)"),
        ("2", "1,1", 3, 4, 32, "(x^2-1)*(x+1)^2"),
        ("1,1", "1,1", 4, 4, 64, "(x-1)^2*(x+1)^2"),
    ],
}

_SIGN_SWAP = str.maketrans("+-", "-+")


def sp_rows_with_mirrors(n: int) -> list:
    """Listed rows plus the swapped ``(l, k)`` rows, whose ``p`` has every sign flipped."""
    rows = list(SP_TABLE[n])
    seen = {(a, b) for a, b, *_ in rows}
    for a, b, length, dd, eps, p in SP_TABLE[n]:
        if (b, a) not in seen:
            rows.append((b, a, length, dd, eps, p.translate(_SIGN_SWAP)))
            seen.add((b, a))
    return rows


def check_sl_table():
    """Yield ``(label, ok, detail)`` for every reference SL row."""
    for n, rows in SL_TABLE.items():
        for parts, d, p in rows:
            part = Partition.parse(parts)
            got_d, got_p = delta(part), p_poly_sl(part)
            want_p = MultiPoly.parse(p).with_variables(("x",))
            ok = part.n == n and got_d == d and got_p == want_p
            detail = "" if ok else f"delta {got_d} vs {d}, p {got_p} vs {want_p}"
            yield f"SL n={n} {part}", ok, detail


def check_sp_table():
    """Yield ``(label, ok, detail)`` for every reference (and mirrored) Sp row."""
    for n in SP_TABLE:
        for a, b, length, dd, eps, p in sp_rows_with_mirrors(n):
            bp = BiPartition(Partition.parse(a), Partition.parse(b))
            got = (bp.length, delta(bp.first) * delta(bp.second), epsilon(bp), p_poly_sp(bp))
            want = (length, dd, eps, MultiPoly.parse(p).with_variables(("x",)))
            ok = bp.n == n and got == want
            detail = "" if ok else f"got {tuple(map(str, got))}, expected {tuple(map(str, want))}"
            yield f"Sp n={n} {bp}", ok, detail
