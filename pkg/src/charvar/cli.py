"""Command line front end.

Subcommands: ``compute``, ``verify``, ``series`` and ``classes``.  Results go to
stdout, diagnostics to stderr.  Exit codes: 0 success, 2 invalid request,
3 limit exceeded, 4 internal theorem or integrality violation (including a
failed ``verify`` check).
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from math import factorial

from . import hodge
from .cheah import cheah_round, identity_check, mu_via_cheah, torus_hodge_numbers
from .combinat import (
    BiPartition,
    Partition,
    bipartitions,
    class_size_hyperoct,
    class_size_sym,
    delta,
    epsilon,
    p_poly_sl,
    p_poly_sp,
    partitions,
)
from .errors import CharVarError, InvalidRequest, LimitExceeded, TheoremViolation
from .exactmath import MultiPoly
from .hodge import GroupFamily
from .tables import check_sl_table, check_sp_table
from .weyl import MAX_HYPEROCT_N, MAX_SYM_N, brute_force_mu, hyperoct, sym

POLYS = ("mu", "muc", "e", "ec", "poincare", "weight", "euler")
FORMATS = ("text", "json", "latex")
MAX_COMPUTE = 10
MAX_SERIES_ORDER = 10
JSON_SEPARATORS = (",", ":")


@dataclass(frozen=True)
class ComputeRequest:
    family: str
    n: int
    r: int
    poly: str = "mu"
    format: str = "text"
    three_vars: bool = False

    def __post_init__(self):
        if self.family.lower() not in ("gl", "sl", "sp"):
            raise InvalidRequest(f"family must be gl, sl or sp, not {self.family!r}")
        if self.poly not in POLYS:
            raise InvalidRequest(f"poly must be one of {', '.join(POLYS)}")
        if self.format not in FORMATS:
            raise InvalidRequest(f"format must be one of {', '.join(FORMATS)}")
        if self.n < 1 or self.r < 1:
            raise InvalidRequest("n and r must be positive")
        if self.n > MAX_COMPUTE or self.r > MAX_COMPUTE:
            raise LimitExceeded(f"compute is limited to n, r <= {MAX_COMPUTE}")


@dataclass
class PolynomialDocument:
    family: str
    n: int
    r: int
    poly: str
    variables: list
    dimension: int
    terms: list = field(default_factory=list)

    @classmethod
    def from_poly(cls, req: ComputeRequest, p: MultiPoly, variables, dimension: int):
        p = p.with_variables(variables)
        if tuple(p.variables) != tuple(variables):
            raise CharVarError(f"unexpected variables {p.variables} in result")
        return cls(req.family.lower(), req.n, req.r, req.poly, list(variables), dimension, p.to_json_terms())

    def polynomial(self) -> MultiPoly:
        return MultiPoly.from_json_terms(self.variables, self.terms)

    def to_json(self) -> str:
        data = {
            "family": self.family,
            "n": self.n,
            "r": self.r,
            "poly": self.poly,
            "variables": self.variables,
            "dimension": self.dimension,
            "terms": self.terms,
        }
        return json.dumps(data, separators=JSON_SEPARATORS, ensure_ascii=False)

    @classmethod
    def from_json(cls, text: str) -> "PolynomialDocument":
        d = json.loads(text)
        return cls(d["family"], d["n"], d["r"], d["poly"], d["variables"], d["dimension"], d["terms"])

    def to_text(self) -> str:
        return self.polynomial().to_text()

    def to_latex(self) -> str:
        return self.polynomial().to_latex()

    def render(self, fmt: str) -> str:
        return {"text": self.to_text, "json": self.to_json, "latex": self.to_latex}[fmt]()


def cmd_compute(req: ComputeRequest) -> PolynomialDocument:
    fam = GroupFamily(req.family, req.n)
    d = fam.dimension(req.r)
    if req.poly == "euler":
        chi = hodge.euler_char(fam, req.r)
        return PolynomialDocument.from_poly(req, MultiPoly.constant(chi), (), d)

    mu = hodge.mu(fam, req.r)
    if req.poly == "mu":
        p, names = mu, ("t", "x")
    elif req.poly == "muc":
        p, names = hodge.poincare_dual(mu, d), ("t", "x")
    elif req.poly == "e":
        p, names = hodge.e_poly(mu), ("x",)
    elif req.poly == "ec":
        p, names = hodge.e_poly(hodge.poincare_dual(mu, d)), ("x",)
        closed = hodge.ec(fam, req.r)
        if p != closed:
            raise TheoremViolation(f"dual of mu gives {p}, closed form gives {closed}")
    elif req.poly == "poincare":
        p, names = hodge.poincare(fam, req.r), ("t",)
    else:
        p, names = hodge.weight_poly(hodge.e_poly(mu)), ("y",)

    if req.three_vars and "x" in names:
        p = hodge.to_three_vars(p)
        names = tuple(v for v in names if v != "x") + ("u", "v")
    return PolynomialDocument.from_poly(req, p, names, d)


# -- verify ---------------------------------------------------------------------


def _suite_oracle(max_n, max_r):
    if max_n > MAX_HYPEROCT_N:
        raise LimitExceeded(f"oracle suite enumerates the hyperoctahedral group; max-n <= {MAX_HYPEROCT_N}")
    for n in range(1, max_n + 1):
        for r in range(1, max_r + 1):
            a, b = hodge.mu_gl(n, r), brute_force_mu(sym(n), r)
            yield f"mu_GL({n},{r}) = Weyl sum over S_{n}", a == b, f"{a} != {b}"
            a, b = hodge.mu_sp(n, r), brute_force_mu(hyperoct(n), r)
            yield f"mu_Sp({n},{r}) = Weyl sum over hyperoctahedral({n})", a == b, f"{a} != {b}"


def _suite_cheah(max_n, max_r):
    for n in range(1, max_n + 1):
        for r in range(1, max_r + 1):
            a, b = mu_via_cheah(n, r), hodge.mu_gl(n, r)
            yield f"z^{n} coefficient of symmetric-product series = mu_GL({n},{r})", a == b, f"{a} != {b}"


def _suite_identity(max_n, max_r):
    for r in range(0, max_r + 1):
        ok, bad = identity_check(r, max_n)
        yield f"product/permutation-sum identity r={r} to order {max_n}", ok, f"first mismatch at z^{bad}"


def _suite_tables(max_n, max_r):
    yield from check_sl_table()
    yield from check_sp_table()


def _suite_euler(max_n, max_r):
    for fam in ("GL", "SL", "SP"):
        for n in range(1, max_n + 1):
            for r in range(1, max_r + 1):
                g = GroupFamily(fam, n)
                try:
                    chi = hodge.euler_char(g, r)
                    yield f"chi(M_{r} {g}) = {chi}", True, ""
                except TheoremViolation as exc:
                    yield f"chi(M_{r} {g})", False, str(exc)


SUITES = {
    "oracle": _suite_oracle,
    "cheah": _suite_cheah,
    "identity": _suite_identity,
    "tables": _suite_tables,
    "euler": _suite_euler,
}


def cmd_verify(suite: str, max_n: int, max_r: int, out=None) -> bool:
    if suite not in SUITES:
        raise InvalidRequest(f"suite must be one of {', '.join(SUITES)}")
    if max_n < 1 or max_r < 0:
        raise InvalidRequest("max-n must be positive and max-r nonnegative")
    if max_n > MAX_SYM_N or max_r > MAX_SYM_N:
        raise LimitExceeded(f"verify bounds are limited to {MAX_SYM_N}")
    out = out or sys.stdout
    all_ok = True
    for label, ok, detail in SUITES[suite](max_n, max_r):
        all_ok &= ok
        print(f"PASS {label}" if ok else f"FAIL {label}: {detail}", file=out)
    print(f"{suite}: {'all checks passed' if all_ok else 'FAILURES'}", file=out)
    return all_ok


# -- series ---------------------------------------------------------------------


def cmd_series(r: int, order: int, fmt: str = "text") -> str:
    if r < 0 or order < 0:
        raise InvalidRequest("r and order must be nonnegative")
    if order > MAX_SERIES_ORDER:
        raise LimitExceeded(f"series order is limited to {MAX_SERIES_ORDER}")
    s = cheah_round(torus_hodge_numbers(r), r, order)
    if fmt == "json":
        data = {
            "r": r,
            "order": order,
            "variables": ["t", "x"],
            "coefficients": [c.to_json_terms() for c in s.coefficients],
        }
        return json.dumps(data, separators=JSON_SEPARATORS)
    if fmt == "latex":
        return "\n".join(rf"z^{{{k}}}: {c.to_latex()} \\" for k, c in enumerate(s.coefficients))
    return "\n".join(f"z^{k}: {c}" for k, c in enumerate(s.coefficients))


# -- classes --------------------------------------------------------------------


def _class_rows(group: str, n: int, only=None):
    if group == "sym":
        if not 1 <= n <= MAX_SYM_N:
            raise LimitExceeded(f"sym classes limited to 1 <= n <= {MAX_SYM_N}")
        for p in partitions(n):
            if only is None or p == only:
                yield p, {"delta": delta(p), "size": class_size_sym(p), "p": p_poly_sl(p)}
    elif group == "hyperoct":
        if not 1 <= n <= MAX_HYPEROCT_N:
            raise LimitExceeded(f"hyperoct classes limited to 1 <= n <= {MAX_HYPEROCT_N}")
        for b in bipartitions(n):
            if only is None or b == only:
                yield b, {
                    "parts": b.length,
                    "deltadelta": delta(b.first) * delta(b.second),
                    "epsilon": epsilon(b),
                    "size": class_size_hyperoct(b),
                    "p": p_poly_sp(b),
                }
    else:
        raise InvalidRequest("group must be sym or hyperoct")


def _parse_class(group: str, text: str | None):
    if text is None:
        return None
    try:
        if group == "sym":
            return Partition.parse(text)
        first, _, second = text.partition(";")
        return BiPartition(Partition.parse(first), Partition.parse(second))
    except ValueError as exc:
        raise InvalidRequest(str(exc)) from exc


def cmd_classes(group: str, n: int, fmt: str = "text", only: str | None = None) -> str:
    rows = list(_class_rows(group, n, _parse_class(group, only)))
    order = factorial(n) * (2**n if group == "hyperoct" else 1)
    if fmt == "json":
        data = {
            "group": group,
            "n": n,
            "order": order,
            "classes": [
                {
                    "class": key.first.to_input() + ";" + key.second.to_input()
                    if isinstance(key, BiPartition)
                    else key.to_input(),
                    **{k: v.to_json_terms() if isinstance(v, MultiPoly) else v for k, v in cols.items()},
                }
                for key, cols in rows
            ],
        }
        return json.dumps(data, separators=JSON_SEPARATORS, ensure_ascii=False)
    if fmt == "latex":
        lines = []
        for key, cols in rows:
            cells = [key.to_latex()] + [
                f"${v.to_latex()}$" if isinstance(v, MultiPoly) else str(v) for v in cols.values()
            ]
            lines.append(" & ".join(cells) + r" \\")
        return "\n".join(lines)
    header = ["class"] + list(rows[0][1]) if rows else ["class"]
    table = [header] + [[key.to_text()] + [str(v) for v in cols.values()] for key, cols in rows]
    widths = [max(len(row[i]) for row in table) for i in range(len(header))]
    return "\n".join("  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip() for row in table)


# -- entry point ----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="charvar",
        description="Hodge-Deligne, E-, Poincare polynomials of free abelian character varieties.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    c = sub.add_parser("compute", help="compute one polynomial for (family, n, r)")
    c.add_argument("--family", required=True, choices=("gl", "sl", "sp"))
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--r", type=int, required=True)
    c.add_argument("--poly", default="mu", choices=POLYS)
    c.add_argument("--format", default="text", choices=FORMATS)
    c.add_argument("--three-vars", action="store_true", help="expand x = u*v")
    c.add_argument("--max-terms", type=int, default=None, help="refuse results with more terms")

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("--suite", required=True, choices=tuple(SUITES))
    v.add_argument("--max-n", type=int, default=4)
    v.add_argument("--max-r", type=int, default=3)

    s = sub.add_parser("series", help="symmetric-product series of (C^*)^r")
    s.add_argument("--r", type=int, required=True)
    s.add_argument("--order", type=int, default=5)
    s.add_argument("--format", default="text", choices=FORMATS)

    k = sub.add_parser("classes", help="conjugacy class table of S_n or the hyperoctahedral group")
    k.add_argument("--group", required=True, choices=("sym", "hyperoct"))
    k.add_argument("--n", type=int, required=True)
    k.add_argument("--format", default="text", choices=FORMATS)
    k.add_argument(
        "--class",
        dest="only",
        default=None,
        help='single class: parts "3,1,1" for sym, "2,1;1" for hyperoct',
    )
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "compute":
            req = ComputeRequest(args.family, args.n, args.r, args.poly, args.format, args.three_vars)
            doc = cmd_compute(req)
            if args.max_terms is not None and len(doc.terms) > args.max_terms:
                raise LimitExceeded(f"result has {len(doc.terms)} terms, more than --max-terms {args.max_terms}")
            print(doc.render(req.format))
        elif args.command == "verify":
            if not cmd_verify(args.suite, args.max_n, args.max_r):
                return 4
        elif args.command == "series":
            print(cmd_series(args.r, args.order, args.format))
        else:
            print(cmd_classes(args.group, args.n, args.format, args.only))
    except CharVarError as exc:
        print(f"charvar: {type(exc).__name__}: {exc}", file=sys.stderr)
        return exc.exit_code
    return 0


if __name__ == "__main__":
    sys.exit(main())
