import json
import subprocess
import sys
from pathlib import Path

import pytest
from hypothesis import given, settings, strategies as st

from jordanian.algebras.catalog import sl2h
from jordanian.cli.main import main
from jordanian.cli.parser import (BinOp, Call, Div, Gen, Neg, Num, Param, Pow,
                                  evaluate, parse, to_text, tokenize)
from jordanian.errors import ExprSyntaxError, LegMismatch, UnknownGenerator
from jordanian.kernel.rational import Rational
from jordanian.kernel.series import HSeries
from jordanian.rmatrix import universal_R

GOLDEN = Path(__file__).parent / "golden"


# -- parser -------------------------------------------------------------------------------

def test_comm_example():
    A = sl2h()
    e = parse("comm(Jp, Jm)", A)
    assert e == Call("comm", (Gen("Jp"), Gen("Jm")))
    assert evaluate(e, A, 3) == HSeries.generator(A, "J3", 3)


def test_delta_example():
    A = sl2h()
    g = A.at(2)
    assert evaluate("delta(Jp)", A, 2) == g.Jp @ g.one + g.one @ g.Jp


def test_zero_denominator():
    with pytest.raises(ExprSyntaxError) as err:
        parse("1/0 * Jp")
    assert (err.value.line, err.value.column) == (1, 3)
    with pytest.raises(ExprSyntaxError):
        parse("Jp/0")


def test_precedence():
    assert parse("a + b ox c*d") == BinOp("+", Gen("a"), BinOp(
        "ox", Gen("b"), BinOp("*", Gen("c"), Gen("d"))))
    assert parse("-h^2") == Neg(Pow(Param("h"), 2))
    assert parse("1/2*Jp") == BinOp("*", Num(Rational(1, 2)), Gen("Jp"))
    assert parse("1 / 2") == Div(Num(1), 2)
    assert parse("a - b - c") == BinOp("-", BinOp("-", Gen("a"), Gen("b")), Gen("c"))


def test_syntax_errors():
    for bad in ["", "Jp +", "(Jp", "comm(Jp)", "Jp^Jm", "Jp^2^2", "Jp $ Jm", "Jp / Jm"]:
        with pytest.raises(ExprSyntaxError):
            parse(bad)


def test_unknown_generator():
    with pytest.raises(UnknownGenerator):
        parse("Jp * Np", sl2h())


def test_evaluation_rules():
    A = sl2h()
    g = A.at(4)
    assert evaluate("exp(h*Jp) * exp(-h*Jp)", A, 4) == g.one
    assert evaluate("2*sinh(h*Jp)/2 - sinh(h*Jp)", A, 4) == 0
    assert evaluate("flip(Jp ox J3) - J3 ox Jp", A, 4).is_zero()
    assert evaluate("1 + Jp ox Jp", A, 4) == g.one @ g.one + g.Jp @ g.Jp
    with pytest.raises(LegMismatch):
        evaluate("Jp + Jp ox Jp", A, 4)


def test_R_text_round_trip():
    U = universal_R("sl2h", 4)
    assert evaluate(U.R.format(), U.algebra, 4) == U.R


def test_tokenize_positions():
    toks = tokenize("Jp  ox\n J3")
    assert [(t.kind, t.text) for t in toks] == [("name", "Jp"), ("op", "ox"),
                                                 ("name", "J3"), ("end", "")]


_names = st.sampled_from(["Jp", "J3", "Jm"])
_leaf = st.one_of(
    st.builds(Gen, _names),
    st.just(Param("h")),
    st.builds(lambda p, q: Num(Rational(p, q)), st.integers(0, 9), st.integers(1, 5)))


def _extend(children):
    return st.one_of(
        st.builds(Neg, children),
        st.builds(BinOp, st.sampled_from(["+", "-", "*"]), children, children),
        st.builds(Div, children, st.integers(1, 7)),
        st.builds(Pow, children, st.integers(0, 3)),
        st.builds(lambda a, b: Call("comm", (a, b)), children, children))


@settings(max_examples=200, deadline=None)
@given(st.recursive(_leaf, _extend, max_leaves=8))
def test_print_parse_round_trip(e):
    text = to_text(e)
    back = parse(text)
    assert to_text(back) == text
    A = sl2h()
    assert evaluate(back, A, 2) == evaluate(e, A, 2)


# -- commands ---------------------------------------------------------------------------

def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_verify_sl2h(capsys):
    code, out, _ = run(capsys, "verify", "--algebra", "sl2h", "--order", "6",
                       "--checks", "hopf,quasitri,intertwiner,qybe,triangular",
                       "--format", "json")
    assert code == 0
    report = json.loads(out)
    assert report["schema"] == "jordanian.report/1"
    assert report["status"] == "pass"
    assert {c["name"].split(":")[0] for c in report["checks"]} == {
        "hopf", "quasitri", "intertwiner", "qybe", "triangular"}


def test_verify_is_deterministic(capsys):
    args = ("verify", "--algebra", "p2m", "--order", "4", "--format", "json")
    assert run(capsys, *args)[1] == run(capsys, *args)[1]


def test_eq22_contraction_exit_one(capsys):
    code, out, _ = run(capsys, "contract", "--mu", "1,1,0", "--mode", "eq22",
                       "--order", "4", "--format", "json")
    assert code == 1
    data = json.loads(out)
    assert data["status"] == "non-contractible"
    assert data["diagnostics"]["negative_eps_terms"] > 0


def test_contract_ok(capsys):
    code, out, _ = run(capsys, "contract", "--mu", "011", "--order", "2")
    assert code == 0 and "Delta(J3_hat)" in out
    code, out, _ = run(capsys, "contract", "--poincare", "--order", "3")
    assert code == 0 and "p2m" in out


def test_rmatrix_fund_golden(capsys):
    code, out, _ = run(capsys, "rmatrix", "--algebra", "sl2h", "--rep", "fund",
                       "--format", "json")
    assert code == 0
    data = json.loads(out)
    gold = json.loads((GOLDEN / "R_sl2h_fund.json").read_text())
    assert data["entries"] == gold["entries"] and data["dim"] == 4
    assert all(c["status"] == "pass" for c in data["checks"])


def test_rmatrix_formats(capsys, tmp_path):
    out_file = tmp_path / "r.tex"
    code, _, _ = run(capsys, "rmatrix", "--algebra", "c101", "--order", "2",
                     "--format", "latex", "--out", str(out_file))
    assert code == 0 and out_file.read_text().startswith("R = \\exp")
    code, out, _ = run(capsys, "rmatrix", "--algebra", "so4h", "--order", "2",
                       "--format", "json")
    assert code == 0 and json.loads(out)["route"] == "product-of-copies"


def test_eval_and_list(capsys):
    code, out, _ = run(capsys, "eval", "comm(Jp, Jm)", "--algebra", "sl2h")
    assert (code, out.strip()) == (0, "J3")
    code, out, _ = run(capsys, "list-algebras", "--format", "json")
    assert code == 0 and len(json.loads(out)) == 13
    code, out, _ = run(capsys, "export", "--algebra", "p2m", "--order", "1")
    assert code == 0 and json.loads(out)["name"] == "p2m"


@pytest.mark.parametrize("argv", [
    ["verify", "--algebra", "nope"],
    ["verify", "--algebra", "sl2h", "--checks", "bogus"],
    ["eval", "1/0 * Jp", "--algebra", "sl2h"],
    ["eval", "Np", "--algebra", "sl2h"],
    ["contract"],
    ["contract", "--mu", "2,1,1"],
    ["rmatrix", "--algebra", "sl2h", "--rep", "so4pair"],
    ["rmatrix", "--algebra", "sl2h_pair"],
])
def test_usage_errors_exit_two(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and "error" in err


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "jordanian", "eval", "delta(Jp)",
                           "--algebra", "sl2h"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.strip() == "1 ox Jp + Jp ox 1"
