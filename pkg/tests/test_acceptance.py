"""Acceptance criteria 1-12, all at exact-zero tolerance.

Each test prints one ``criterion N: PASS|FAIL`` line; the lines are also
collected into the pytest terminal summary (see conftest.py). Run alone with

    pytest tests/test_acceptance.py -v
or  python3 tests/test_acceptance.py
"""

import functools
import time

import pytest

import mutants
from jordanian.algebras.hopf import verify_hopf
from jordanian.algebras.registry import REGISTERED, get_algebra
from jordanian.contraction.api import (classify_contracted_R, contract,
                                       contract_sl2_to_p2)
from jordanian.contraction.fidelity import appendix_report, compare_with_appendix
from jordanian.errors import NonContractible
from jordanian.kernel import division
from jordanian.kernel.analytic import SINH_OVER_X, X_OVER_SINH
from jordanian.reps import (evaluate_R, fundamental_sl2, matrix_classical_limit,
                            matrix_qybe, matrix_triangular, rep_so4_from_pair)
from jordanian import rmatrix
from jordanian.rmatrix import (RSpec, build_exponent, check_intertwiner,
                               check_qybe, check_quasitriangular,
                               check_triangular, run_checks, sl2_exponent_forms,
                               universal_R)
from jordanian.kernel.analytic import series_exp

RESULTS = {}


def criterion(n, title):
    def wrap(fn):
        @functools.wraps(fn)
        def run(*args, **kwargs):
            start = time.perf_counter()
            try:
                detail = fn(*args, **kwargs)
            except BaseException as exc:
                RESULTS[n] = ("FAIL", title, f"{type(exc).__name__}: {exc}"[:200])
                print(f"criterion {n}: FAIL  {title}")
                raise
            took = time.perf_counter() - start
            RESULTS[n] = ("PASS", title, f"{detail + '; ' if detail else ''}{took:.1f}s")
            print(f"criterion {n}: PASS  {title}  ({RESULTS[n][2]})")
        return run
    return wrap


def five_checks(name, K, route=None):
    """Hopf axioms plus the four R checks; returns failing check names."""
    U = universal_R(name, K, route)
    failed = [] if verify_hopf(get_algebra(name), K).passed else ["hopf"]
    failed += [r.name for r in run_checks(U) if not r.passed]
    return failed


@criterion(1, "sl2h universal R passes every check at K=8")
def test_criterion_01_sl2h_R():
    start = time.perf_counter()
    U = universal_R("sl2h", 8)
    q = check_quasitriangular(U)
    assert [p.name for p in q.parts] == ["delta-left", "delta-right"] and q.passed
    inter = check_intertwiner(U, generators=["Jp", "J3", "Jm"])
    assert inter.passed, inter.as_dict()
    assert check_triangular(U).passed
    assert check_qybe(U).passed
    assert verify_hopf(U.algebra, 8).passed
    assert time.perf_counter() - start < 300
    return "quasitri x2, intertwiner J+ J3 J-, triangular, qybe, hopf"


@criterion(2, "the two sl2h exponent forms are identical at K=8")
def test_criterion_02_form_equivalence():
    A = get_algebra("sl2h")
    product_form, x_form, _ = sl2_exponent_forms(A, 8)
    assert product_form.terms == x_form.terms
    assert series_exp(product_form).terms == series_exp(x_form).terms


@criterion(3, "so4h: product of copies equals the closed form at K=6; checks at K=4")
def test_criterion_03_so4h():
    start = time.perf_counter()
    a = build_exponent(RSpec("so4h", "product-of-copies", 6))
    b = build_exponent(RSpec("so4h", "contracted-closed-form", 6))
    assert a[0].terms == b[0].terms and a[1].terms == b[1].terms
    assert series_exp(a[0]).terms == series_exp(b[0]).terms
    assert five_checks("so4h", 4) == []
    assert time.perf_counter() - start < 900
    return f"{len(a[0].terms)} exponent terms compared"


@criterion(4, "Hopf axioms at K=6 for all ten registered algebras")
def test_criterion_04_hopf():
    failing = [n for n in REGISTERED if not verify_hopf(get_algebra(n), 6).passed]
    assert failing == []
    return f"{len(REGISTERED)} algebras"


@criterion(5, "eq23 contractions reproduce the seven appendix structures")
def test_criterion_05_fidelity():
    report = appendix_report(6)
    assert report["unflagged_mismatches"] == []
    allowed = {(5, "Delta(N3_hat)"), (5, "Delta(Nm_hat)"),
               (6, "Delta(N3_hat)"), (6, "Delta(Nm_hat)")}
    assert {(m["item"], m["entry"]) for m in report["mismatches"]} <= allowed
    for m in report["mismatches"]:
        assert m["flagged"] and m["difference"]
    item1 = {d.entry: d for d in compare_with_appendix((1, 1, 0), 6)}
    for entry in ("Delta(J3_hat)", "Delta(Nm_hat)"):
        d = item1[entry]
        assert d.matches and "h" in d.engine
    return (f"{report['entries']} entries, {len(report['mismatches'])} flagged "
            f"mismatches, 0 unflagged")


@criterion(6, "eq22 with mu3=0, mu1 mu2 != 0 is not well defined")
def test_criterion_06_ill_defined():
    out = contract((1, 1, 0), "eq22", 4)
    with pytest.raises(NonContractible) as err:
        out.unwrap()
    bad = err.value.offending
    assert bad and all(b["eps_power"] < 0 for b in bad)
    first = bad[0]
    return f"{len(bad)} terms; first {first['entry']} eps^{first['eps_power']}"


@criterion(7, "contracted R matrices fall into exactly three classes at K=6")
def test_criterion_07_three_classes():
    classes = classify_contracted_R(6)
    assert len(classes) == 3
    by_case = {c.case: {tuple(m) for m in c.mus} for c in classes}
    assert by_case == {1: {(1, 1, 0), (1, 0, 0), (0, 1, 0), (0, 0, 0)},
                       2: {(0, 1, 1), (0, 0, 1)},
                       3: {(1, 0, 1)}}


@criterion(8, "contracted R checks for one member of each class at K=6")
def test_criterion_08_contracted_checks():
    for name in ("c110", "c011", "c101"):
        assert five_checks(name, 6) == [], name
    return "c110, c011, c101"


@criterion(9, "sl2 -> Poincare contraction and the P- intertwiner at K=8")
def test_criterion_09_poincare():
    out = contract_sl2_to_p2(8)
    A = out.unwrap()
    assert verify_hopf(A, 8).passed
    report = check_intertwiner(out.R, generators=["Pm"])
    assert report.passed and [p.name for p in report.parts] == ["Pm", "Pm:conjugation"]


@criterion(10, "4x4 and 16x16 R matrices: QYBE, P R^-1 P = R, identity at h=0")
def test_criterion_10_matrices():
    start = time.perf_counter()
    for alg, K, rep, dim in (("sl2h", 6, fundamental_sl2(), 4),
                             ("so4h", 4, rep_so4_from_pair(), 16)):
        Rm = evaluate_R(universal_R(alg, K), rep)
        assert Rm.dim == dim
        for check in (matrix_qybe, matrix_triangular, matrix_classical_limit):
            assert check(Rm).passed, (alg, check.__name__)
    assert time.perf_counter() - start < 60


@criterion(11, "oracle self-checks: x/sinh x inversion and exact-division round trips")
def test_criterion_11_oracles(monkeypatch):
    assert SINH_OVER_X.check_inverse(X_OVER_SINH, 10)
    calls = []
    real = division.series_div_exact

    def recording(num, den):
        q = real(num, den)
        calls.append((num, den, q))
        return q

    monkeypatch.setattr(rmatrix, "series_div_exact", recording)
    for name, case, K in (("so4h", "so4", 6), ("c011", 2, 6), ("c001", 2, 6),
                          ("c101", 3, 6)):
        rmatrix.closed_form_X(get_algebra(name), case, K)
    assert len(calls) == 8
    for num, den, q in calls:
        assert (q.with_order(num.order) * den).terms == num.terms
    return f"{len(calls)} quotients"


@criterion(12, "each documented mutation fails with a first nonzero order")
def test_criterion_12_mutations():
    report = verify_hopf(mutants.flipped_delta_j3(), 2)
    hom = [a for a in report.failures() if a.name.startswith("delta-hom")]
    assert hom and min(a.first_nonzero_order for a in hom) == 1

    q = check_quasitriangular(mutants.zeroed_h2(universal_R("sl2h", 6)))
    assert not q.passed and q.first_nonzero_order == 2

    reports = run_checks(mutants.wrong_case2_denominator(6))
    failing = {r.name: r.first_nonzero_order for r in reports if not r.passed}
    assert failing and all(o is not None for o in failing.values())
    return ("dJ3 sign: h^1; zeroed h^2: h^2; case-2 denominator: "
            + ", ".join(f"{k} h^{v}" for k, v in failing.items()))


if __name__ == "__main__":
    import sys
    sys.exit(pytest.main([__file__, "-q", "-s"]))
