"""Partitions, bipartitions and the class data of S_n and the hyperoctahedral group.

A partition of ``n`` is stored by its multiplicity vector ``(a_1, ..., a_n)``
where ``a_j`` counts the parts equal to ``j``; cycle types of permutations are
naturally of this shape, and so are all the class-sum formulas built on them.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import factorial, prod

from .exactmath import MultiPoly, poly_divide_exact, var

__all__ = [
    "Partition",
    "BiPartition",
    "partitions",
    "bipartitions",
    "delta",
    "class_size_sym",
    "class_size_hyperoct",
    "epsilon",
    "p_poly_sl",
    "p_poly_sp",
]

_SUPERSCRIPT = str.maketrans("0123456789", "⁰¹²³⁴⁵⁶⁷⁸⁹")


@dataclass(frozen=True)
class Partition:
    n: int
    multiplicities: tuple

    def __post_init__(self):
        mult = tuple(int(a) for a in self.multiplicities)
        object.__setattr__(self, "multiplicities", mult)
        if len(mult) != self.n:
            raise ValueError(f"a partition of {self.n} needs {self.n} multiplicities, got {len(mult)}")
        if any(a < 0 for a in mult):
            raise ValueError("multiplicities must be nonnegative")
        if sum(j * a for j, a in enumerate(mult, start=1)) != self.n:
            raise ValueError(f"multiplicities {mult} do not sum to {self.n}")

    @classmethod
    def from_parts(cls, parts) -> "Partition":
        parts = [int(p) for p in parts]
        if any(p <= 0 for p in parts):
            raise ValueError("parts must be positive")
        n = sum(parts)
        mult = [0] * n
        for p in parts:
            mult[p - 1] += 1
        return cls(n, tuple(mult))

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Read comma-separated parts, e.g. ``"3,1,1"``; ``""`` or ``"0"`` is the empty partition."""
        text = text.strip()
        if text in ("", "0", "-", "∅"):
            return cls(0, ())
        return cls.from_parts(int(p) for p in text.split(","))

    @property
    def parts(self) -> tuple:
        """Parts in weakly decreasing order."""
        return tuple(j for j in range(self.n, 0, -1) for _ in range(self.multiplicities[j - 1]))

    @property
    def length(self) -> int:
        """Number of parts (number of cycles of the class)."""
        return sum(self.multiplicities)

    def mult(self, j: int) -> int:
        return self.multiplicities[j - 1] if 1 <= j <= self.n else 0

    def is_empty(self) -> bool:
        return self.n == 0

    def to_text(self) -> str:
        """Bracket notation with superscript multiplicities, e.g. ``[1²3]``."""
        if self.n == 0:
            return "∅"
        body = "".join(
            str(j) + (str(a).translate(_SUPERSCRIPT) if a > 1 else "")
            for j, a in enumerate(self.multiplicities, start=1)
            if a
        )
        return f"[{body}]"

    def to_latex(self) -> str:
        if self.n == 0:
            return r"\emptyset"
        body = "".join(
            str(j) + (f"^{{{a}}}" if a > 1 else "")
            for j, a in enumerate(self.multiplicities, start=1)
            if a
        )
        return f"[{body}]"

    def to_input(self) -> str:
        return ",".join(map(str, self.parts))

    def __str__(self):
        return self.to_text()


EMPTY = Partition(0, ())


@dataclass(frozen=True)
class BiPartition:
    first: Partition
    second: Partition

    def __post_init__(self):
        if self.first.n + self.second.n < 1:
            raise ValueError("a bipartition must have positive size")

    @property
    def n(self) -> int:
        return self.first.n + self.second.n

    @property
    def length(self) -> int:
        """``|k+l|``: total number of parts on both sides."""
        return self.first.length + self.second.length

    def swapped(self) -> "BiPartition":
        return BiPartition(self.second, self.first)

    def to_text(self) -> str:
        return f"({self.first.to_text()},{self.second.to_text()})"

    def to_latex(self) -> str:
        return f"({self.first.to_latex()},{self.second.to_latex()})"

    def __str__(self):
        return self.to_text()


def _parts_desc(n: int, largest: int):
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _parts_desc(n - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def _partitions(n: int) -> tuple:
    return tuple(Partition.from_parts(p) if p else EMPTY for p in _parts_desc(n, n))


def partitions(n: int) -> list:
    """All partitions of ``n`` in lexicographically decreasing order of part lists."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return list(_partitions(n))


def bipartitions(n: int) -> list:
    """All ``(k, l)`` bipartitions of ``n``; ``k`` descending, then partition order on each side."""
    if n < 1:
        raise ValueError("n must be positive")
    return [
        BiPartition(a, b)
        for k in range(n, -1, -1)
        for a in _partitions(k)
        for b in _partitions(n - k)
    ]


def delta(p: Partition) -> int:
    """Centralizer order ``prod_j a_j! j^a_j`` of the class with cycle type ``p``."""
    return prod(factorial(a) * j**a for j, a in enumerate(p.multiplicities, start=1))


def class_size_sym(p: Partition) -> int:
    return factorial(p.n) // delta(p)


def epsilon(b: BiPartition) -> int:
    return 2**b.length * delta(b.first) * delta(b.second)


def class_size_hyperoct(b: BiPartition) -> int:
    n = b.n
    return 2 ** (n - b.length) * factorial(n) // (delta(b.first) * delta(b.second))


def _cyclotomic_product(p: Partition, sign: int) -> MultiPoly:
    x = var("x")
    out = MultiPoly.constant(1, ("x",))
    for j, a in enumerate(p.multiplicities, start=1):
        if a:
            out = out * (x**j + sign) ** a
    return out


def p_poly_sl(p: Partition) -> MultiPoly:
    """``prod_j (x^j - 1)^a_j / (x - 1)``, by exact division."""
    if p.n < 1:
        raise ValueError("p_poly_sl needs a partition of a positive integer")
    return poly_divide_exact(_cyclotomic_product(p, -1), var("x") - 1)


def p_poly_sp(b: BiPartition) -> MultiPoly:
    """``prod_i (x^i - 1)^a_i * prod_j (x^j + 1)^b_j``."""
    return _cyclotomic_product(b.first, -1) * _cyclotomic_product(b.second, 1)
