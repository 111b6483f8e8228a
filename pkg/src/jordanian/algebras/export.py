"""JSON and LaTeX export of algebra definitions and series.

JSON schema (version 1) of an algebra at order K::

    {"schema": "jordanian.algebra/1", "name", "parameter", "order",
     "generators": [{"name", "position", "counit"}],
     "commutators": [{"pair": [a, b], "value": SERIES}],
     "coproducts": [{"generator": g, "value": SERIES}],
     "antipodes": [{"generator": g, "value": SERIES}]}

A SERIES is ``{"legs": n, "terms": [{"h": k, "words": [[names...], ...],
"coeff": "p/q"}]}`` listing terms in output order (h ascending, then PBW
order slot by slot). Only nonzero commutators are listed.
"""

from ..kernel.display import format_latex, latex_generator
from ..kernel.rational import rat_str

SCHEMA = "jordanian.algebra/1"


def series_to_json(s):
    names = s.algebra.generators
    return {"legs": s.legs,
            "terms": [{"h": k, "words": [[names[i] for i in w] for w in ws],
                       "coeff": rat_str(c)} for (k, ws), c in s.sorted_terms()]}


def series_from_json(data, algebra, order):
    from ..kernel.rational import rat
    from ..kernel.series import HSeries
    terms = {}
    for t in data["terms"]:
        ws = tuple(tuple(algebra.index(x) for x in w) for w in t["words"])
        terms[(t["h"], ws)] = rat(t["coeff"])
    return HSeries(algebra, order, terms, data["legs"])


def algebra_to_json(alg, K):
    return {
        "schema": SCHEMA,
        "name": alg.name,
        "description": alg.description,
        "parameter": alg.parameter,
        "order": K,
        "generators": [{"name": g, "position": i, "counit": rat_str(alg.counit(g))}
                       for i, g in enumerate(alg.generators)],
        "commutators": [{"pair": [a, b], "value": series_to_json(v)}
                        for a, b in alg.pairs()
                        if not (v := alg.commutator(a, b, K)).is_zero()],
        "coproducts": [{"generator": g, "value": series_to_json(alg.coproduct(g, K))}
                       for g in alg.generators],
        "antipodes": [{"generator": g, "value": series_to_json(alg.antipode(g, K))}
                      for g in alg.generators],
    }


def algebra_to_latex(alg, K):
    """Tables laid out as commutators, then coproducts and antipodes."""
    p = r"\hat h" if alg.parameter == "h_hat" else "h"
    lines = [r"\begin{array}{ll}"]
    for a, b in alg.pairs():
        v = alg.commutator(a, b, K)
        if v.is_zero():
            continue
        lines.append(f"[{latex_generator(a)},{latex_generator(b)}] = "
                     f"{format_latex(v, p)} \\\\")
    lines.append(r"\end{array}")
    for g in alg.generators:
        lines.append(f"$$\\Delta {latex_generator(g)} = "
                     f"{format_latex(alg.coproduct(g, K), p)} + O({p}^{{{K + 1}}})$$")
    for g in alg.generators:
        lines.append(f"$$\\gamma({latex_generator(g)}) = "
                     f"{format_latex(alg.antipode(g, K), p)} + O({p}^{{{K + 1}}})$$")
    return "\n".join(lines) + "\n"
