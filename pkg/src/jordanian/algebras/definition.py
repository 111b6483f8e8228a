"""Declarative Hopf algebra definitions.

An ``AlgebraDef`` is a generator list in PBW order plus four tables of rules.
Each rule is a callable ``rule(algebra, K)`` returning an ``HSeries`` (or a
tensor series for the coproduct) truncated at ``K``. Missing entries default
to: commutator 0, primitive coproduct ``X⊗1 + 1⊗X``, antipode ``-X``,
counit 0. Values are computed lazily and memoized per ``K``.
"""

from dataclasses import dataclass, field, replace
from types import SimpleNamespace

from ..errors import UnknownGenerator
from ..kernel.ordering import DEFAULT_FUEL, NormalOrdering
from ..kernel.rational import ZERO, rat
from ..kernel.series import HSeries


@dataclass(frozen=True, eq=False)
class AlgebraDef:
    name: str
    generators: tuple
    commutators: dict = field(default_factory=dict)
    coproducts: dict = field(default_factory=dict)
    antipodes: dict = field(default_factory=dict)
    counits: dict = field(default_factory=dict)
    parameter: str = "h"
    description: str = ""
    fuel: int = DEFAULT_FUEL

    def __post_init__(self):
        gens = tuple(self.generators)
        if len(set(gens)) != len(gens):
            raise ValueError(f"duplicate generators in {self.name}")
        object.__setattr__(self, "generators", gens)
        pos = {g: i for i, g in enumerate(gens)}
        object.__setattr__(self, "_pos", pos)
        table = {}
        for (a, b), rule in self.commutators.items():
            for g in (a, b):
                if g not in pos:
                    raise UnknownGenerator(g, self.name)
            if a == b:
                raise ValueError(f"[{a},{a}] must not be specified")
            if pos[a] < pos[b]:
                table[(pos[a], pos[b])] = (rule, 1)
            else:
                table[(pos[b], pos[a])] = (rule, -1)
        object.__setattr__(self, "_table", table)
        for name, tbl in (("coproduct", self.coproducts),
                          ("antipode", self.antipodes),
                          ("counit", self.counits)):
            for g in tbl:
                if g not in pos:
                    raise UnknownGenerator(g, self.name)
        object.__setattr__(self, "_memo", {})
        object.__setattr__(self, "engine",
                           NormalOrdering(self._table_entry, self.fuel))

    def __repr__(self):
        return f"AlgebraDef({self.name!r}, generators={list(self.generators)})"

    # -- generators ----------------------------------------------------------
    def index(self, g):
        if isinstance(g, int):
            if 0 <= g < len(self.generators):
                return g
            raise UnknownGenerator(g, self.name)
        try:
            return self._pos[g]
        except KeyError:
            raise UnknownGenerator(g, self.name) from None

    def name_of(self, i):
        return self.generators[i]

    def pairs(self):
        """All unordered generator pairs, in PBW order."""
        n = len(self.generators)
        return [(self.generators[i], self.generators[j])
                for i in range(n) for j in range(i + 1, n)]

    def at(self, K):
        """Namespace of generators, ``h`` and ``one`` at truncation order K."""
        ns = {g: HSeries.generator(self, g, K) for g in self.generators}
        ns["h"] = HSeries.h(self, K)
        ns["one"] = HSeries.one(self, K)
        ns["K"] = K
        return SimpleNamespace(**ns)

    def element(self, text, K):
        from ..cli.parser import evaluate
        return evaluate(text, self, K)

    # -- memo helper -----------------------------------------------------------
    def _cached(self, key, compute):
        hit = self._memo.get(key)
        if hit is None:
            hit = compute()
            self._memo[key] = hit
        return hit

    # -- structure maps --------------------------------------------------------
    def _table_entry(self, i, j, K):
        """Normal form terms of [g_i, g_j] for i < j (engine callback)."""
        s = self.commutator(i, j, K)
        return {(k, ws[0]): c for (k, ws), c in s.terms.items()}

    def commutator(self, a, b, K):
        """``[a, b]`` from the table, normal-ordered, truncated at ``K``."""
        i, j = self.index(a), self.index(b)
        if i == j:
            return HSeries.zero(self, K)
        lo, hi = (i, j) if i < j else (j, i)

        def compute():
            entry = self._table.get((lo, hi))
            if entry is None:
                return HSeries.zero(self, K)
            rule, sign = entry
            val = _at_order(rule(self, K), K)
            return val if sign == 1 else -val

        val = self._cached(("comm", lo, hi, K), compute)
        return val if i < j else -val

    def coproduct(self, g, K):
        i = self.index(g)

        def compute():
            rule = self.coproducts.get(self.generators[i])
            if rule is None:
                x = HSeries.generator(self, i, K)
                one = HSeries.one(self, K)
                return x @ one + one @ x
            return _at_order(rule(self, K), K)

        return self._cached(("delta", i, K), compute)

    def antipode(self, g, K):
        i = self.index(g)

        def compute():
            rule = self.antipodes.get(self.generators[i])
            if rule is None:
                return -HSeries.generator(self, i, K)
            return _at_order(rule(self, K), K)

        return self._cached(("gamma", i, K), compute)

    def counit(self, g):
        i = self.index(g)
        return rat(self.counits.get(self.generators[i], ZERO))

    # -- variants (mutation tests, renamings) -------------------------------
    def variant(self, name, **tables):
        """A copy with some table entries replaced, e.g.
        ``variant("sl2h-bad", coproducts={"J3": rule})``."""
        merged = {}
        for key in ("commutators", "coproducts", "antipodes", "counits"):
            base = dict(getattr(self, key))
            base.update(tables.pop(key, {}))
            merged[key] = base
        return replace(self, name=name, **merged, **tables)


def _at_order(value, K):
    if value.order != K:
        value = value.truncate(K)
    return value
