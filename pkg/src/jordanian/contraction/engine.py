"""Graded contractions as epsilon-limits of rescaled structure maps.

A contraction rescales each generator ``X = eps**(-w_X) X_hat`` and the
parameter ``h = eps**c h_hat``. A normal-ordered term ``h**k w`` then carries
``eps**(c*k - sum of letter weights)``; a structure map of ``X_hat`` picks up
an extra ``eps**w_X``. The contracted algebra keeps the ``eps**0`` part and
is well defined only if no negative power survives anywhere.

A vanishing ``mu_i`` is realized as ``eps**zero_power`` (default 2) so that
every square root in the rescalings is an integer power of ``eps``.
"""

from dataclasses import dataclass, field

from ..algebras.definition import AlgebraDef
from ..errors import NonContractible
from ..kernel.display import term_text
from ..kernel.series import HSeries


@dataclass(frozen=True)
class MuTriple:
    mu1: int
    mu2: int
    mu3: int

    def __post_init__(self):
        for m in (self.mu1, self.mu2, self.mu3):
            if m not in (0, 1):
                raise ValueError(f"mu values must be 0 or 1, got {m}")

    @classmethod
    def parse(cls, text):
        if isinstance(text, MuTriple):
            return text
        if isinstance(text, (tuple, list)):
            return cls(*map(int, text))
        parts = text.replace(" ", "").split(",") if "," in text else list(text)
        if len(parts) != 3:
            raise ValueError(f"expected three mu values, got {text!r}")
        return cls(*map(int, parts))

    @property
    def key(self):
        return f"{self.mu1}{self.mu2}{self.mu3}"

    def __iter__(self):
        return iter((self.mu1, self.mu2, self.mu3))

    def __str__(self):
        return f"({self.mu1},{self.mu2},{self.mu3})"


APPENDIX_MUS = tuple(MuTriple(*m) for m in (
    (1, 1, 0), (1, 0, 0), (0, 1, 0), (0, 0, 0), (0, 1, 1), (0, 0, 1), (1, 0, 1)))

MODES = ("eq22", "eq23")


def hat(name):
    return f"{name}_hat"


def so4_weights(mu, mode, zero_power=2):
    """eps-weights of (J3, J±, N±, N3) and of h for the so(4) rescalings:
    J± = J±_hat/sqrt(mu2 mu3), N± = N±_hat/sqrt(mu1 mu2),
    N3 = N3_hat/sqrt(mu1 mu3), h = sqrt(mu1 mu2) h_hat (mode eq22) or
    mu3 sqrt(mu1 mu2) h_hat (mode eq23)."""
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}")
    if zero_power % 2:
        raise ValueError("zero_power must be even")
    z = [0 if m else zero_power for m in MuTriple.parse(mu)]

    def sqrt_of(a, b):
        return (z[a] + z[b]) // 2

    weights = {"J3": 0, "Jp": sqrt_of(1, 2), "Jm": sqrt_of(1, 2),
               "Np": sqrt_of(0, 1), "Nm": sqrt_of(0, 1), "N3": sqrt_of(0, 2)}
    h_weight = sqrt_of(0, 1) + (z[2] if mode == "eq23" else 0)
    return weights, h_weight


class EpsSeries:
    """An h-series whose coefficients are Laurent polynomials in eps:
    terms ``{(k, e, words): coeff}`` standing for coeff h**k eps**e words."""

    def __init__(self, algebra, order, legs, terms):
        self.algebra = algebra
        self.order = order
        self.legs = legs
        self.terms = {k: v for k, v in terms.items() if v}

    @classmethod
    def grade(cls, series, weights, h_weight, extra=0):
        """Rescale ``series`` (weights indexed by PBW position)."""
        terms = {}
        for (k, ws), c in series.terms.items():
            e = h_weight * k + extra - sum(weights[x] for w in ws for x in w)
            terms[(k, e, ws)] = c
        return cls(series.algebra, series.order, series.legs, terms)

    def min_power(self):
        return min((e for (_, e, _) in self.terms), default=None)

    def negative_terms(self):
        return {key: c for key, c in self.terms.items() if key[1] < 0}

    def limit(self, target, label=""):
        """The eps -> 0 limit as a series of ``target`` (same generator
        positions). Raises ``NonContractible`` on negative powers."""
        bad = self.negative_terms()
        if bad:
            raise NonContractible(
                f"{label or 'entry'} has negative eps powers",
                [_describe(self.algebra, label, key, c) for key, c in
                 sorted(bad.items(), key=lambda kv: (kv[0][0], kv[0][1]))])
        return HSeries(target, self.order,
                       {(k, ws): c for (k, e, ws), c in self.terms.items()
                        if e == 0}, self.legs)


def _describe(algebra, label, key, c):
    k, e, ws = key
    return {"entry": label, "h_order": k, "eps_power": e,
            "term": ("-" if c < 0 else "") + term_text(algebra.generators, k, ws, c)}


@dataclass(frozen=True)
class ContractionPlan:
    """Everything needed to contract ``base``: per-generator weights, the
    h weight and the renaming of generators."""
    base: AlgebraDef
    weights: dict
    h_weight: int
    rename: dict = field(default_factory=dict)

    def position_weights(self):
        return [self.weights.get(g, 0) for g in self.base.generators]

    def grade(self, series, extra=0):
        return EpsSeries.grade(series, self.position_weights(), self.h_weight,
                               extra)

    def structure_entries(self, K):
        """Yield ``(label, kind, base value, extra weight)`` for every
        commutator, coproduct and antipode entry of the base at order K."""
        base, w = self.base, self.weights
        for a, b in base.pairs():
            yield (f"[{a},{b}]", "commutator", base.commutator(a, b, K),
                   w.get(a, 0) + w.get(b, 0))
        for g in base.generators:
            yield (f"Delta({g})", "coproduct", base.coproduct(g, K), w.get(g, 0))
        for g in base.generators:
            yield (f"S({g})", "antipode", base.antipode(g, K), w.get(g, 0))

    def diagnose(self, K):
        """Offending terms (negative eps powers) over all structure maps."""
        offending = []
        for label, kind, value, extra in self.structure_entries(K):
            graded = self.grade(value, extra)
            for key, c in sorted(graded.negative_terms().items(),
                                 key=lambda kv: (kv[0][0], kv[0][1])):
                entry = _describe(self.base, label, key, c)
                entry["map"] = kind
                offending.append(entry)
        return offending

    def build(self, name, description="", parameter="h"):
        base = self.base
        rn = self.rename
        names = tuple(rn.get(g, g) for g in base.generators)
        w = self.weights

        def comm_rule(a, b):
            def rule(A, K):
                return self.grade(base.commutator(a, b, K),
                                  w.get(a, 0) + w.get(b, 0)).limit(
                                      A, f"[{a},{b}]")
            return rule

        def map_rule(method, g):
            def rule(A, K):
                return self.grade(getattr(base, method)(g, K),
                                  w.get(g, 0)).limit(A, f"{method}({g})")
            return rule

        commutators = {(rn.get(a, a), rn.get(b, b)): comm_rule(a, b)
                       for a, b in base.pairs()}
        coproducts = {rn.get(g, g): map_rule("coproduct", g)
                      for g in base.generators}
        antipodes = {rn.get(g, g): map_rule("antipode", g)
                     for g in base.generators}
        counits = {rn.get(g, g): (base.counit(g) if w.get(g, 0) == 0 else 0)
                   for g in base.generators}
        return AlgebraDef(name, names, commutators, coproducts, antipodes,
                          counits, parameter=parameter, description=description)

    def contract_element(self, series, target, extra=0, label="element"):
        return self.grade(series, extra).limit(target, label)


def so4_plan(mu, mode="eq23", zero_power=2):
    from ..algebras.catalog import so4h
    weights, h_weight = so4_weights(mu, mode, zero_power)
    base = so4h()
    return ContractionPlan(base, weights, h_weight,
                           {g: hat(g) for g in base.generators})


def sl2_to_p2_plan():
    """P- = eps J-, P+ = J+, J3 = J3 with h unscaled."""
    from ..algebras.catalog import sl2h
    return ContractionPlan(sl2h(), {"Jm": 1}, 0, {"Jp": "Pp", "Jm": "Pm"})
