"""Contraction outcomes, contracted R matrices and their classification."""

from dataclasses import dataclass, field

from ..algebras.catalog import so4h
from ..algebras.export import algebra_to_json, series_to_json
from ..algebras.registry import contracted_name, contracted_so4, p2m
from ..errors import JordanianError, NonContractible
from ..kernel.analytic import series_exp
from ..tensor import flip
from .engine import (APPENDIX_MUS, MuTriple, sl2_to_p2_plan, so4_plan)


@dataclass
class ContractedR:
    """A universal R obtained by contracting a base R: its exponent and the
    element X with exponent = (Delta - Delta') X."""
    R: object
    exponent: object
    X: object

    @property
    def algebra(self):
        return self.R.algebra

    @property
    def inverse(self):
        return series_exp(-self.exponent)


@dataclass
class ContractionOutcome:
    mu: object
    mode: str
    order: int
    algebra: object = None
    R: ContractedR = None
    offending: list = field(default_factory=list)

    @property
    def ok(self):
        return self.algebra is not None and not self.offending

    def unwrap(self):
        if not self.ok:
            raise NonContractible(
                f"contraction {self.mu} ({self.mode}) is not well defined",
                self.offending)
        return self.algebra

    def as_dict(self):
        out = {"mu": list(self.mu) if self.mu is not None else None,
               "mode": self.mode, "order": self.order,
               "status": "ok" if self.ok else "non-contractible"}
        if self.ok:
            out["algebra"] = algebra_to_json(self.algebra, self.order)
            if self.R is not None:
                out["R_exponent"] = series_to_json(self.R.exponent)
        out["diagnostics"] = {"negative_eps_terms": len(self.offending),
                              "offending": self.offending}
        return out


def _base_R(K):
    from ..rmatrix import universal_R
    return universal_R("so4h", K, "product-of-copies")


def _contract_R(plan, base_R, target, label):
    E = plan.contract_element(base_R.exponent, target, label=f"{label} exponent")
    X = plan.contract_element(base_R.X, target, label=f"{label} X")
    return ContractedR(series_exp(E), E, X)


def contract(mu, mode="eq23", K=4, with_R=False, zero_power=2, base="so4h"):
    """Apply a graded contraction of so4h.

    Structure maps are rescaled literally generator by generator; any term
    with a negative eps power makes the outcome non-contractible."""
    if base != "so4h":
        raise ValueError("graded contractions are defined for so4h")
    mu = MuTriple.parse(mu)
    if all(mu):
        alg = so4h()
        R = None
        if with_R:
            U = _base_R(K)
            R = ContractedR(U.R, U.exponent, U.X)
        return ContractionOutcome(mu, mode, K, alg, R)
    plan = so4_plan(mu, mode, zero_power)
    offending = plan.diagnose(K)
    if offending:
        return ContractionOutcome(mu, mode, K, offending=offending)
    if mode == "eq23" and zero_power == 2:
        alg = contracted_so4(mu.key)
    else:
        alg = plan.build(f"{contracted_name(mu)}-{mode}-eps{zero_power}",
                         parameter="h_hat")
    out = ContractionOutcome(mu, mode, K, alg)
    if with_R:
        try:
            out.R = _contract_R(plan, _base_R(K), alg, "R")
        except NonContractible as exc:
            out.algebra = None
            out.offending = exc.offending
    return out


def contract_sl2_to_p2(K=8):
    """P- = eps J-: the Poincare algebra p2m and the carried-over sl2h R,
    which involves only J+ and J3 and must come through unchanged."""
    from ..rmatrix import universal_R
    plan = sl2_to_p2_plan()
    offending = plan.diagnose(K)
    if offending:
        return ContractionOutcome(None, "p2", K, offending=offending)
    alg = p2m()
    U = universal_R("sl2h", K)
    R = _contract_R(plan, U, alg, "R")
    if R.exponent.terms != U.exponent.terms:
        raise NonContractible("the sl2h R changed under the contraction")
    return ContractionOutcome(None, "p2", K, alg, R)


def table_differences(A, B, K):
    """Labels of structure-map entries on which A and B differ (compared
    term by term; both must list the same generators in the same order)."""
    if A.generators != B.generators:
        raise ValueError("algebras declare different generators")
    diffs = []
    for a, b in A.pairs():
        if A.commutator(a, b, K).terms != B.commutator(a, b, K).terms:
            diffs.append(f"[{a},{b}]")
    for g in A.generators:
        if A.coproduct(g, K).terms != B.coproduct(g, K).terms:
            diffs.append(f"Delta({g})")
        if A.antipode(g, K).terms != B.antipode(g, K).terms:
            diffs.append(f"S({g})")
        if A.counit(g) != B.counit(g):
            diffs.append(f"eps({g})")
    return diffs


def mode_agreement(mu, K):
    """eq22 and eq23 differ only by the mu3 factor on h, so they agree
    whenever mu3 = 1."""
    a = contract(mu, "eq22", K).unwrap()
    b = contract(mu, "eq23", K).unwrap()
    return table_differences(a, b, K)


def zero_power_independence(mu, K):
    """Realizing mu_i = 0 as eps**2 or as eps**4 gives the same algebra."""
    a = contract(mu, "eq23", K, zero_power=2).unwrap()
    b = contract(mu, "eq23", K, zero_power=4).unwrap()
    return table_differences(a, b, K)


@dataclass
class RClass:
    case: int
    mus: list
    X: object

    def as_dict(self):
        from ..rmatrix import _X_TEXT
        return {"case": self.case, "mu": [list(m) for m in self.mus],
                "X": _X_TEXT[self.case], "X_series": self.X.format()}


def classify_contracted_R(K=6, mus=APPENDIX_MUS):
    """Partition the contractions by their contracted R, compared through
    the element X of R = exp((Delta - Delta') X) term by term. Each class is
    then matched against the closed-form X of cases 1 to 3."""
    from ..rmatrix import closed_form_X
    groups = []
    for mu in mus:
        out = contract(mu, "eq23", K, with_R=True)
        out.unwrap()
        X = out.R.X
        if (out.R.exponent + flip(out.R.exponent)).terms:
            raise NonContractible(f"contracted exponent for {mu} is not antisymmetric")
        for g in groups:
            if g["X"].terms == X.terms:
                g["mus"].append(mu)
                break
        else:
            groups.append({"X": X, "mus": [mu]})
    classes = []
    for g in groups:
        A = g["X"].algebra
        case = next((c for c in (1, 2, 3)
                     if _closed_form_matches(closed_form_X, A, c, K, g["X"])), None)
        classes.append(RClass(case, g["mus"], g["X"]))
    return classes


def _closed_form_matches(closed_form_X, A, case, K, X):
    try:
        return closed_form_X(A, case, K).terms == X.terms
    except JordanianError:
        return False
