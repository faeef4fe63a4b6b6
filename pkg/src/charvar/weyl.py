"""Weyl groups of GL/SL (symmetric) and Sp (hyperoctahedral) as explicit matrices.

This module is the brute-force side of every closed-form check: it averages
``det(I + tx A_g)^r`` over all group elements, computing each determinant by
cofactor expansion and never by cycle-type shortcuts.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations, product
from math import factorial
from typing import Iterable, Iterator, Sequence

from .combinat import BiPartition, Partition
from .errors import IntegralityViolation, InvalidRequest, LimitExceeded
from .exactmath import MultiPoly

__all__ = [
    "Permutation",
    "SignedPermutation",
    "ActionMatrix",
    "WeylGroup",
    "sym",
    "hyperoct",
    "enumerate_sym",
    "enumerate_hyperoct",
    "action_matrix",
    "char_det",
    "cycle_type",
    "signed_cycle_type",
    "brute_force_mu",
    "exterior_quotient_mu",
]

MAX_SYM_N = 8
MAX_HYPEROCT_N = 6
MAX_R = 8
MAX_DET_N = 8


@dataclass(frozen=True)
class Permutation:
    """Permutation of ``1..n``; ``images[i-1]`` is the image of ``i``."""

    images: tuple

    def __post_init__(self):
        images = tuple(int(i) for i in self.images)
        object.__setattr__(self, "images", images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"{images} is not a permutation of 1..{len(images)}")

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    @classmethod
    def from_cycles(cls, n: int, cycles: Iterable[Sequence[int]]) -> "Permutation":
        images = list(range(1, n + 1))
        for cyc in cycles:
            for a, b in zip(cyc, list(cyc[1:]) + [cyc[0]]):
                images[a - 1] = b
        return cls(tuple(images))


@dataclass(frozen=True)
class SignedPermutation:
    """Element of the hyperoctahedral group, stored by the signed images of ``1..n``.

    The image of ``-k`` is ``-images[k-1]``.
    """

    images: tuple

    def __post_init__(self):
        images = tuple(int(i) for i in self.images)
        object.__setattr__(self, "images", images)
        if sorted(abs(i) for i in images) != list(range(1, len(images) + 1)):
            raise ValueError(f"{images} is not a signed permutation")

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, k: int) -> int:
        return self.images[k - 1] if k > 0 else -self.images[-k - 1]

    @classmethod
    def from_cycles(cls, n: int, cycles: Iterable[Sequence[int]]) -> "SignedPermutation":
        """Build from cycles on ``{±1..±n}``; each cycle must come with its negative (or be its own)."""
        mapping = {k: k for k in range(-n, n + 1) if k}
        for cyc in cycles:
            for a, b in zip(cyc, list(cyc[1:]) + [cyc[0]]):
                mapping[a] = b
        g = cls(tuple(mapping[k] for k in range(1, n + 1)))
        if any(g(k) != mapping[k] for k in mapping):
            raise ValueError("cycles do not respect the symmetry g(-k) = -g(k)")
        return g


@dataclass(frozen=True)
class ActionMatrix:
    """Signed permutation matrix acting on H^1 of the maximal torus."""

    rows: tuple

    def __post_init__(self):
        rows = tuple(tuple(int(v) for v in row) for row in self.rows)
        object.__setattr__(self, "rows", rows)
        n = len(rows)
        if any(len(row) != n for row in rows):
            raise ValueError("action matrix must be square")
        for line in list(rows) + list(zip(*rows)):
            nz = [v for v in line if v]
            if len(nz) != 1 or nz[0] not in (1, -1):
                raise ValueError("action matrix must be a signed permutation matrix")

    @property
    def n(self) -> int:
        return len(self.rows)

    @classmethod
    def identity(cls, n: int) -> "ActionMatrix":
        return cls(tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    def __matmul__(self, other: "ActionMatrix") -> "ActionMatrix":
        cols = list(zip(*other.rows))
        return ActionMatrix(
            tuple(tuple(sum(a * b for a, b in zip(row, col)) for col in cols) for row in self.rows)
        )

    def inverse(self) -> "ActionMatrix":
        # orthogonal
        return ActionMatrix(tuple(zip(*self.rows)))


@dataclass(frozen=True)
class WeylGroup:
    kind: str  # "sym" or "hyperoct"
    n: int

    def __post_init__(self):
        if self.kind not in ("sym", "hyperoct"):
            raise InvalidRequest(f"unknown Weyl group kind {self.kind!r}")
        limit = MAX_SYM_N if self.kind == "sym" else MAX_HYPEROCT_N
        if not 1 <= self.n <= limit:
            raise LimitExceeded(f"{self.kind}({self.n}) is outside 1..{limit}")

    @property
    def order(self) -> int:
        return factorial(self.n) * (2**self.n if self.kind == "hyperoct" else 1)

    def elements(self):
        if self.kind == "sym":
            return enumerate_sym(self.n)
        return enumerate_hyperoct(self.n)

    def matrices(self) -> Iterator[ActionMatrix]:
        return (action_matrix(g) for g in self.elements())


def sym(n: int) -> WeylGroup:
    return WeylGroup("sym", n)


def hyperoct(n: int) -> WeylGroup:
    return WeylGroup("hyperoct", n)


def enumerate_sym(n: int) -> Iterator[Permutation]:
    if not 1 <= n <= MAX_SYM_N:
        raise LimitExceeded(f"S_{n}: n must lie in 1..{MAX_SYM_N}")
    return (Permutation(p) for p in permutations(range(1, n + 1)))


def enumerate_hyperoct(n: int) -> Iterator[SignedPermutation]:
    if not 1 <= n <= MAX_HYPEROCT_N:
        raise LimitExceeded(f"hyperoctahedral group of rank {n}: n must lie in 1..{MAX_HYPEROCT_N}")
    return (
        SignedPermutation(tuple(s * i for s, i in zip(signs, p)))
        for p in permutations(range(1, n + 1))
        for signs in product((1, -1), repeat=n)
    )


def action_matrix(g: Permutation | SignedPermutation) -> ActionMatrix:
    """Row ``i`` has ``sign(g(i))`` in column ``|g(i)|``."""
    n = g.n
    rows = []
    for img in g.images:
        row = [0] * n
        row[abs(img) - 1] = 1 if img > 0 else -1
        rows.append(tuple(row))
    return ActionMatrix(tuple(rows))


def _mul(a: list, b: list) -> list:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _add_into(acc: list, p: list, sign: int):
    if len(acc) < len(p):
        acc.extend([0] * (len(p) - len(acc)))
    for i, c in enumerate(p):
        acc[i] += sign * c


def _pow(p: list, e: int) -> list:
    result, base = [1], p
    while e:
        if e & 1:
            result = _mul(result, base)
        e >>= 1
        if e:
            base = _mul(base, base)
    return result


def _det_coeffs(rows: Sequence[Sequence[int]], sign: int) -> list:
    """Integer coefficients (in lambda) of ``det(I + sign*lambda*M)`` by Laplace expansion."""
    n = len(rows)
    if n > MAX_DET_N:
        raise LimitExceeded(f"symbolic determinant limited to n <= {MAX_DET_N}")
    entry = [
        [[int(i == j), sign * rows[i][j]] for j in range(n)]
        for i in range(n)
    ]
    full = (1 << n) - 1
    memo = {full: [1]}

    def minor(used: int) -> list:
        if used in memo:
            return memo[used]
        row = bin(used).count("1")
        acc: list = [0]
        pos = 0
        for j in range(n):
            if used >> j & 1:
                continue
            e = entry[row][j]
            if e[0] or e[1]:
                _add_into(acc, _mul(e, minor(used | 1 << j)), -1 if pos & 1 else 1)
            pos += 1
        memo[used] = acc
        return acc

    coeffs = minor(0)
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def _lambda_poly(coeffs: Sequence, name: str = "lam") -> MultiPoly:
    return MultiPoly({(k,): c for k, c in enumerate(coeffs)}, (name,))


def char_det(m: ActionMatrix, sign: str = "-") -> MultiPoly:
    """``det(I + lam*M)`` for ``sign='+'``, ``det(I - lam*M)`` for ``sign='-'``, in variable ``lam``."""
    if sign not in ("+", "-"):
        raise ValueError("sign must be '+' or '-'")
    return _lambda_poly(_det_coeffs(m.rows, 1 if sign == "+" else -1))


def cycle_type(g: Permutation) -> Partition:
    n = g.n
    seen = [False] * (n + 1)
    mult = [0] * n
    for start in range(1, n + 1):
        if seen[start]:
            continue
        length, k = 0, start
        while not seen[k]:
            seen[k] = True
            k = g(k)
            length += 1
        mult[length - 1] += 1
    return Partition(n, tuple(mult))


def signed_cycle_type(g: SignedPermutation) -> BiPartition:
    """Twin-cycle lengths (one per pair) and mirror-cycle half-lengths."""
    n = g.n
    seen = set()
    twins = [0] * n
    mirrors = [0] * n
    for start in range(1, n + 1):
        if start in seen:
            continue
        cycle, k = [], start
        while k not in seen:
            seen.add(k)
            cycle.append(k)
            k = g(k)
        if -start in cycle:
            mirrors[len(cycle) // 2 - 1] += 1
        else:
            twins[len(cycle) - 1] += 1
            seen.update(-c for c in cycle)
    k = sum(j * a for j, a in enumerate(twins, start=1))
    l = n - k
    return BiPartition(Partition(k, tuple(twins[:k])), Partition(l, tuple(mirrors[:l])))


def _matrices(group) -> list:
    if isinstance(group, WeylGroup):
        return list(group.matrices())
    return [m if isinstance(m, ActionMatrix) else ActionMatrix(m) for m in group]


def exterior_quotient_mu(matrices, k0: int, p0: int, r: int) -> MultiPoly:
    """Average of ``det(I + t^k0 x^p0 A_g)^r`` over the listed group matrices."""
    if k0 < 1 or k0 % 2 == 0:
        raise InvalidRequest("k0 must be an odd positive integer")
    if not 1 <= p0 <= k0:
        raise InvalidRequest("p0 must satisfy 1 <= p0 <= k0")
    if r < 1:
        raise InvalidRequest("r must be positive")
    if r > MAX_R:
        raise LimitExceeded(f"r must be at most {MAX_R}")
    mats = _matrices(group=matrices)
    if not mats:
        raise InvalidRequest("empty group")
    total: list = [0]
    for m in mats:
        _add_into(total, _pow(_det_coeffs(m.rows, 1), r), 1)
    order = len(mats)
    terms = {}
    for k, c in enumerate(total):
        q = Fraction(c, order)
        if q.denominator != 1 or q < 0:
            raise IntegralityViolation(f"coefficient {q} of (t^{k0} x^{p0})^{k} is not a Hodge number")
        if q:
            terms[(k * k0, k * p0)] = q
    return MultiPoly(terms, ("t", "x"))


def brute_force_mu(group, r: int) -> MultiPoly:
    """``(1/|W|) sum_g det(I + tx A_g)^r`` summed element by element."""
    return exterior_quotient_mu(group, 1, 1, r)
