import json
from pathlib import Path

import pytest

from jordanian.algebras.registry import get_algebra
from jordanian.errors import RepresentationError
from jordanian.kernel.series import HSeries
from jordanian.reps import (PolyMatrix, Rep, evaluate, evaluate_R,
                            fundamental_sl2, get_rep, matrix_classical_limit,
                            matrix_intertwiner, matrix_qybe, matrix_triangular,
                            rep_so4_from_pair, swap_operator)
from jordanian.rmatrix import universal_R

GOLDEN = Path(__file__).parent / "golden"


def golden(name):
    return json.loads((GOLDEN / name).read_text())


def test_fundamental_relations():
    rep = fundamental_sl2()
    m = rep.matrices
    assert m["J3"] * m["Jp"] - m["Jp"] * m["J3"] == m["Jp"].scale(2)
    assert m["Jp"] * m["Jm"] - m["Jm"] * m["Jp"] == m["J3"]
    assert rep.relation_failures() == []


def test_so4_pair_relations():
    rep = rep_so4_from_pair()
    m = rep.matrices
    for t in ("p", "m", "3"):
        J, N = m["J" + t], m["N" + t]
        assert (J * N - N * J).is_zero()
    assert m["Jp"] * m["Jm"] - m["Jm"] * m["Jp"] == m["J3"]
    assert m["Np"] * m["Nm"] - m["Nm"] * m["Np"] == m["J3"]


def test_bad_rep_rejected():
    I = PolyMatrix.identity(2)
    with pytest.raises(RepresentationError):
        Rep("sl2h", 2, {"Jp": I, "J3": I, "Jm": I})
    with pytest.raises(RepresentationError):
        Rep("sl2h", 2, {"Jp": I})


def test_identity_evaluates_to_identity():
    A = get_algebra("sl2h")
    one = HSeries.one(A, 3)
    assert evaluate(one @ one, fundamental_sl2()) == PolyMatrix.identity(4)


def test_fundamental_R_matches_golden():
    Rm = evaluate_R(universal_R("sl2h", 6), fundamental_sl2())
    data = golden("R_sl2h_fund.json")
    assert Rm.dim == data["dim"] == 4
    assert Rm.rows() == data["entries"]
    assert Rm.degree() == 2


def test_so4_R_matches_golden():
    Rm = evaluate_R(universal_R("so4h", 4), rep_so4_from_pair())
    data = golden("R_so4h_so4pair.json")
    assert Rm.dim == 16
    assert Rm.rows() == data["entries"]


@pytest.mark.parametrize("alg,rep,K", [("sl2h", "fund", 6), ("so4h", "so4pair", 4)])
def test_matrix_checks(alg, rep, K):
    r = get_rep(rep)
    Rm = evaluate_R(universal_R(alg, K), r)
    for report in (matrix_qybe(Rm), matrix_triangular(Rm),
                   matrix_classical_limit(Rm), matrix_intertwiner(Rm, r)):
        assert report.passed, report.as_dict()
    assert Rm.at_h(0) == PolyMatrix.identity(Rm.dim)


def test_matrix_triangular_detects_error():
    Rm = evaluate_R(universal_R("sl2h", 6), fundamental_sl2())
    bad = Rm + PolyMatrix.constant([[0, 0, 0, 1]] + [[0] * 4] * 3).scale(1, power=2)
    report = matrix_triangular(bad)
    assert not report.passed and report.first_nonzero_order == 2


def test_swap_and_kron():
    P = swap_operator(2)
    assert P * P == PolyMatrix.identity(4)
    a = PolyMatrix.constant([[1, 2], [0, 1]])
    b = PolyMatrix.constant([[0, 1], [1, 0]])
    assert P * a.kron(b) * P == b.kron(a)


def test_exports():
    Rm = evaluate_R(universal_R("sl2h", 6), fundamental_sl2())
    assert Rm.to_json()["entries"] == Rm.rows()
    assert r"\begin{pmatrix}" in Rm.to_latex()
    assert Rm.to_text().splitlines()[0].split() == ["1", "h", "-h", "h^2"]


def test_unknown_rep():
    with pytest.raises(ValueError):
        get_rep("adjoint")
