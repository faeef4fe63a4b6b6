import json
import re
import subprocess
import sys
from collections import Counter
from io import StringIO

import pytest
from hypothesis import given, settings, strategies as st

from charvar.cli import ComputeRequest, PolynomialDocument, cmd_classes, cmd_compute, cmd_series, cmd_verify, main
from charvar.errors import InvalidRequest, LimitExceeded
from charvar.exactmath import MultiPoly

POLYS = ["mu", "muc", "e", "ec", "poincare", "weight", "euler"]


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out.strip(), err


def latex_to_poly(text: str) -> MultiPoly:
    s = re.sub(r"\\frac\{(\d+)\}\{(\d+)\}", r"(\1/\2)", text)
    s = re.sub(r"\^\{(\d+)\}", r"^\1", s)
    s = re.sub(r"(?<=[\w)]) (?=[\w(])", "*", s)
    return MultiPoly.parse(s)


def term_multiset(p: MultiPoly):
    return Counter((tuple(sorted(m.items())), c) for m, c in p.monomials())


# -- compute ------------------------------------------------------------------


def test_compute_text_example(capsys):
    code, out, _ = run(capsys, "compute", "--family", "gl", "--n", "2", "--r", "2", "--poly", "mu")
    assert code == 0
    assert out == "1 + 2*t*x + 2*t^2*x^2 + 2*t^3*x^3 + t^4*x^4"


def test_compute_sl_ec(capsys):
    # average of (x+1) and (x-1)
    assert run(capsys, "compute", "--family", "sl", "--n", "2", "--r", "1", "--poly", "ec")[1] == "x"


def test_compute_euler(capsys):
    code, out, _ = run(capsys, "compute", "--family", "sl", "--n", "3", "--r", "2", "--poly", "euler")
    assert (code, out) == (0, "3")


def test_json_schema_exact(capsys):
    _, out, _ = run(capsys, "compute", "--family", "sl", "--n", "3", "--r", "2", "--format", "json")
    assert out == (
        '{"family":"sl","n":3,"r":2,"poly":"mu","variables":["t","x"],"dimension":4,'
        '"terms":[{"exp":[0,0],"num":"1","den":"1"},{"exp":[2,2],"num":"1","den":"1"},'
        '{"exp":[4,4],"num":"1","den":"1"}]}'
    )


@pytest.mark.parametrize("poly", POLYS)
@pytest.mark.parametrize("family", ["gl", "sl", "sp"])
def test_formats_agree_and_json_roundtrips(family, poly):
    for three in (False, True):
        req = ComputeRequest(family, 2, 3, poly, "json", three)
        doc = cmd_compute(req)
        text = doc.render("json")
        again = PolynomialDocument.from_json(text)
        assert again.to_json() == text
        p = again.polynomial()
        assert term_multiset(MultiPoly.parse(doc.render("text"))) == term_multiset(p)
        assert term_multiset(latex_to_poly(doc.render("latex"))) == term_multiset(p)


@settings(max_examples=20, deadline=None)
@given(st.sampled_from(["gl", "sl", "sp"]), st.integers(1, 4), st.integers(1, 3), st.sampled_from(["mu", "poincare"]))
def test_mu_and_poincare_have_integer_terms(family, n, r, poly):
    doc = cmd_compute(ComputeRequest(family, n, r, poly, "json"))
    assert all(term["den"] == "1" for term in doc.terms)
    assert doc.terms == sorted(doc.terms, key=lambda term: (sum(term["exp"]), [-e for e in term["exp"]]))


def test_three_vars_output(capsys):
    _, out, _ = run(capsys, "compute", "--family", "sl", "--n", "2", "--r", "2", "--three-vars")
    assert out == "1 + t^2*u^2*v^2"


def test_ec_matches_dual_of_mu():
    doc = cmd_compute(ComputeRequest("sp", 2, 2, "ec"))
    assert doc.polynomial().evaluate({"x": 1}) == 3
    assert doc.dimension == 4


# -- exit codes ----------------------------------------------------------------


def test_exit_code_invalid(capsys):
    code, _, err = run(capsys, "compute", "--family", "gl", "--n", "0", "--r", "1")
    assert code == 2 and "InvalidRequest" in err


def test_exit_code_limit(capsys):
    assert run(capsys, "compute", "--family", "gl", "--n", "20", "--r", "1")[0] == 3
    assert run(capsys, "series", "--r", "1", "--order", "11")[0] == 3
    assert run(capsys, "verify", "--suite", "oracle", "--max-n", "7", "--max-r", "1")[0] == 3
    assert run(capsys, "compute", "--family", "gl", "--n", "3", "--r", "3", "--max-terms", "2")[0] == 3


def test_exit_code_theorem_violation(capsys, monkeypatch):
    import charvar.hodge as hodge

    monkeypatch.setattr(hodge, "euler_closed_form", lambda family, r: -1)
    assert run(capsys, "compute", "--family", "sl", "--n", "2", "--r", "2", "--poly", "euler")[0] == 4


def test_failed_verify_exits_4(capsys, monkeypatch):
    import charvar.cli as cli

    monkeypatch.setitem(cli.SUITES, "tables", lambda n, r: iter([("forced", False, "boom")]))
    code, out, _ = run(capsys, "verify", "--suite", "tables")
    assert code == 4 and "FAIL forced: boom" in out


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "charvar", "compute", "--family", "gl", "--n", "1", "--r", "2"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0 and proc.stdout.strip() == "1 + 2*t*x + t^2*x^2"


def test_request_validation():
    with pytest.raises(InvalidRequest):
        ComputeRequest("so", 2, 2)
    with pytest.raises(LimitExceeded):
        ComputeRequest("gl", 11, 1)


# -- verify / series / classes ------------------------------------------------


@pytest.mark.parametrize("suite,n,r", [("oracle", 3, 2), ("tables", 1, 1), ("identity", 5, 3), ("cheah", 4, 3), ("euler", 4, 3)])
def test_verify_suites_pass(suite, n, r):
    buf = StringIO()
    assert cmd_verify(suite, n, r, out=buf)
    lines = buf.getvalue().splitlines()
    assert lines and not any(line.startswith("FAIL") for line in lines)


def test_series_examples():
    assert cmd_series(1, 3) == "z^0: 1\nz^1: 1 + t*x\nz^2: 1 + t*x\nz^3: 1 + t*x"
    assert cmd_series(0, 4).splitlines() == [f"z^{k}: 1" for k in range(5)]
    data = json.loads(cmd_series(2, 2, "json"))
    coeffs = [MultiPoly.from_json_terms(data["variables"], c) for c in data["coefficients"]]
    t, x = MultiPoly.variable("t"), MultiPoly.variable("x")
    assert coeffs == [1, (1 + t * x) ** 2, (1 + t * x) ** 2 * (1 + t**2 * x**2)]


def test_classes_examples():
    assert cmd_classes("sym", 1).splitlines()[1].split() == ["[1]", "1", "1", "1"]
    data = json.loads(cmd_classes("sym", 4, "json"))
    assert len(data["classes"]) == 5
    assert len(json.loads(cmd_classes("hyperoct", 3, "json"))["classes"]) == 10
    one = json.loads(cmd_classes("sym", 5, "json", only="3,1,1"))["classes"]
    assert [c["class"] for c in one] == ["3,1,1"] and one[0]["delta"] == 6 and one[0]["size"] == 20
    bp = json.loads(cmd_classes("hyperoct", 3, "json", only="2;1"))["classes"]
    assert bp[0]["epsilon"] == 8
    assert r"\frac" not in cmd_classes("hyperoct", 2, "latex")


def test_classes_limits(capsys):
    assert run(capsys, "classes", "--group", "hyperoct", "--n", "9")[0] == 3
    assert run(capsys, "classes", "--group", "sym", "--n", "3", "--class", "x")[0] == 2
