"""Exact verification of the Hopf algebra axioms on generators."""

from dataclasses import dataclass, field

from ..kernel.series import HSeries
from ..tensor import (apply_antipode_leg, apply_counit_leg, coproduct,
                      extend_delta, multiply_legs)


@dataclass
class AxiomResult:
    name: str
    passed: bool
    first_nonzero_order: int = None
    residual: HSeries = None

    @classmethod
    def from_residual(cls, name, residual):
        if residual.is_zero():
            return cls(name, True)
        return cls(name, False, residual.valuation(), residual)

    def as_dict(self, max_terms=20):
        out = {"name": self.name, "status": "pass" if self.passed else "fail"}
        if not self.passed:
            out["first_nonzero_order"] = self.first_nonzero_order
            low = self.residual.coefficient(self.first_nonzero_order)
            out["residual_terms"] = _terms_text(self.residual, low, max_terms)
        return out


def _terms_text(series, coeff, max_terms):
    from ..kernel.display import term_text
    names = series.algebra.generators
    k = series.valuation()
    rows = sorted(coeff.items())
    return [("-" if c < 0 else "+") + term_text(names, k, ws, c)
            for ws, c in rows[:max_terms]]


@dataclass
class HopfReport:
    algebra: str
    order: int
    axioms: list = field(default_factory=list)

    @property
    def passed(self):
        return all(a.passed for a in self.axioms)

    def failures(self):
        return [a for a in self.axioms if not a.passed]

    def status(self, prefix):
        """Combined status of every entry whose name starts with ``prefix``."""
        hits = [a for a in self.axioms if a.name.startswith(prefix)]
        return all(a.passed for a in hits) if hits else None

    def as_dict(self):
        return {"algebra": self.algebra, "order": self.order,
                "status": "pass" if self.passed else "fail",
                "checks": [a.as_dict() for a in self.axioms]}


def verify_hopf(alg, K):
    """Check coassociativity, the counit and antipode axioms on every
    generator, and that the coproduct respects every commutator."""
    if K < 1:
        raise ValueError("verify_hopf needs K >= 1")
    report = HopfReport(alg.name, K)
    one = HSeries.one(alg, K)
    for g in alg.generators:
        x = HSeries.generator(alg, g, K)
        dx = alg.coproduct(g, K)
        report.axioms.append(AxiomResult.from_residual(
            f"coassociativity:{g}",
            extend_delta("left", dx) - extend_delta("right", dx)))
        for side, slot in (("left", 0), ("right", 1)):
            report.axioms.append(AxiomResult.from_residual(
                f"counit-{side}:{g}", apply_counit_leg(dx, slot) - x))
        eps = one.scale(alg.counit(g))
        for side, slot in (("left", 0), ("right", 1)):
            report.axioms.append(AxiomResult.from_residual(
                f"antipode-{side}:{g}",
                multiply_legs(apply_antipode_leg(dx, slot)) - eps))
    for a, b in alg.pairs():
        lhs = coproduct(alg.commutator(a, b, K))
        da, db = alg.coproduct(a, K), alg.coproduct(b, K)
        report.axioms.append(AxiomResult.from_residual(
            f"delta-hom:[{a},{b}]", lhs - (da * db - db * da)))
        # epsilon([a, b]) = 0, read off as the scalar part after contracting
        report.axioms.append(AxiomResult.from_residual(
            f"counit-hom:[{a},{b}]",
            apply_counit_leg(alg.commutator(a, b, K) @ one, 0)))
    return report
