"""Entry-by-entry comparison of engine contractions with the transcribed
appendix tables."""

from dataclasses import dataclass

from ..algebras.appendix import FLAGGED, ITEM_MU, appendix_tables
from ..algebras.registry import contracted_so4
from ..kernel.series import HSeries
from .engine import MuTriple


@dataclass
class EntryDiff:
    item: int
    kind: str
    entry: str
    matches: bool
    flagged: bool
    engine: str
    appendix: str
    difference: str = ""

    def as_dict(self):
        out = {"item": self.item, "map": self.kind, "entry": self.entry,
               "status": "match" if self.matches else "mismatch",
               "flagged": self.flagged}
        if not self.matches:
            out.update(engine=self.engine, appendix=self.appendix,
                       difference=self.difference)
        return out


def _primitive(A, g, K):
    x = HSeries.generator(A, g, K)
    one = HSeries.one(A, K)
    return x @ one + one @ x


def compare_with_appendix(mu, K):
    """Compare every commutator and coproduct entry (and the antipodes where
    the appendix lists them) of the eq23 contraction at ``mu``."""
    mu = MuTriple.parse(mu)
    item = next(i for i, m in ITEM_MU.items() if m == tuple(mu))
    A = contracted_so4(mu.key)
    comm, delta, gamma = appendix_tables(item)
    diffs = []

    def record(kind, entry, engine, expected, flag_key):
        d = engine - expected
        diffs.append(EntryDiff(item, kind, entry, d.is_zero(),
                               (item, kind, flag_key) in FLAGGED,
                               engine.format(), expected.format(),
                               "" if d.is_zero() else d.format()))

    lookup = {}
    for (a, b), rule in comm.items():
        lookup[(a, b)] = (rule, 1)
        lookup[(b, a)] = (rule, -1)
    for a, b in A.pairs():
        hit = lookup.get((a, b))
        if hit is None:
            expected = HSeries.zero(A, K)
        else:
            rule, sign = hit
            expected = rule(A, K) if sign == 1 else -rule(A, K)
        record("commutator", f"[{a},{b}]", A.commutator(a, b, K), expected, None)
    for g in A.generators:
        rule = delta.get(g)
        expected = rule(A, K) if rule else _primitive(A, g, K)
        record("coproduct", f"Delta({g})", A.coproduct(g, K), expected, g)
    if gamma is not None:
        for g in A.generators:
            record("antipode", f"S({g})", A.antipode(g, K), gamma[g](A, K), g)
    return diffs


def appendix_report(K, mus=None):
    """Diffs for all seven items; ``mismatches`` lists only failing rows."""
    from .engine import APPENDIX_MUS
    rows = []
    for mu in mus or APPENDIX_MUS:
        rows.extend(compare_with_appendix(mu, K))
    return {"order": K,
            "entries": len(rows),
            "mismatches": [r.as_dict() for r in rows if not r.matches],
            "unflagged_mismatches": [r.as_dict() for r in rows
                                     if not r.matches and not r.flagged]}
