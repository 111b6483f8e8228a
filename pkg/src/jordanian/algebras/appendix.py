"""Hand-transcribed Hopf structures of the seven contracted so(4) algebras.

These tables are kept only as a reference to compare against the
contraction engine, which is authoritative. Rules are written against the
hatted generator names and can be evaluated in any algebra that declares
them (in particular in the engine's contracted algebras).

Generators missing from a coproduct table are listed as primitive, and
commutators missing from a table are zero. Antipodes are given only where
the source lists them (items 5 to 7).
"""

from types import SimpleNamespace

from ..kernel.analytic import cosh, exp, sinh
from ..kernel.rational import Rational

HALF = Rational(1, 2)

HATTED = ("Jp_hat", "Np_hat", "J3_hat", "N3_hat", "Jm_hat", "Nm_hat")

CLASSICAL_NAMES = {
    1: "U(iso(3))", 2: "U(iiso(2))", 3: "U(i'iso(2))",
    4: "U(R+(R^4 +s so(2)))", 5: "U(iso(3))", 6: "U(iiso(2))",
    7: "U(iso(2)+iso(2))",
}

ITEM_MU = {1: (1, 1, 0), 2: (1, 0, 0), 3: (0, 1, 0), 4: (0, 0, 0),
           5: (0, 1, 1), 6: (0, 0, 1), 7: (1, 0, 1)}

# Lines whose printed form is known to be suspect. Item 6's Delta J^j line
# has an unbalanced parenthesis; it is read with the closing parenthesis
# placed as in item 5.
FLAGGED = {(5, "coproduct", "N3_hat"), (5, "coproduct", "Nm_hat"),
           (6, "coproduct", "N3_hat"), (6, "coproduct", "Nm_hat")}


def _ns(A, K):
    g = A.at(K)
    return SimpleNamespace(h=g.h, one=g.one, **{
        name[:-4]: getattr(g, name) for name in HATTED})


def _lift(fn, K_extra=0):
    """Turn ``fn(ns)`` into a table rule ``rule(A, K)``; ``K_extra`` spends
    additional orders where the expression divides by h."""
    def rule(A, K):
        value = fn(_ns(A, K + K_extra))
        return value.div_h() if K_extra else value
    return rule


# -- items 1 to 4 (mu3 = 0) ----------------------------------------------------

def _classical_j3_block():
    return {
        ("J3_hat", "Jp_hat"): _lift(lambda g: 2 * g.Jp),
        ("J3_hat", "Jm_hat"): _lift(lambda g: -2 * g.Jm),
        ("J3_hat", "Np_hat"): _lift(lambda g: 2 * g.Np),
        ("J3_hat", "Nm_hat"): _lift(lambda g: -2 * g.Nm),
    }


def _n3_on_n():
    return {
        ("N3_hat", "Np_hat"): _lift(lambda g: 2 * g.Jp),
        ("N3_hat", "Nm_hat"): _lift(lambda g: -2 * g.Jm),
    }


def _mixed_pm():
    return {
        ("Jp_hat", "Nm_hat"): _lift(lambda g: g.N3),
        ("Jm_hat", "Np_hat"): _lift(lambda g: -g.N3),
    }


def _delta_j3_mu3_zero(g):
    return (g.one @ g.J3 + g.J3 @ g.one
            + HALF * g.h * (g.N3 @ g.Jp - g.Jp @ g.N3))


def _delta_nm_mu3_zero(g):
    return (g.one @ g.Nm + g.Nm @ g.one
            + HALF * g.h * (g.Jm @ g.Jp - g.Jp @ g.Jm))


def _item_1():
    comm = {**_classical_j3_block(), **_n3_on_n(), **_mixed_pm(),
            ("Np_hat", "Nm_hat"): _lift(lambda g: g.J3)}
    delta = {"J3_hat": _lift(_delta_j3_mu3_zero),
             "Nm_hat": _lift(_delta_nm_mu3_zero)}
    return comm, delta, None


def _item_2():
    comm = {**_classical_j3_block(), **_n3_on_n()}
    delta = {"J3_hat": _lift(_delta_j3_mu3_zero),
             "Nm_hat": _lift(_delta_nm_mu3_zero)}
    return comm, delta, None


def _item_3():
    comm = {**_classical_j3_block(), **_mixed_pm()}
    return comm, {"J3_hat": _lift(_delta_j3_mu3_zero)}, None


def _item_4():
    return _classical_j3_block(), {"J3_hat": _lift(_delta_j3_mu3_zero)}, None


# -- items 5 to 7 (mu3 = 1) ------------------------------------------------------

def _b(g):
    return HALF * g.h * g.Np


def _antipodes():
    def conj(x):
        def fn(g):
            return -(exp(g.h * g.Np) * getattr(g, x) * exp(-g.h * g.Np))
        return _lift(fn)
    return {f"{x}_hat": conj(x) for x in ("Jp", "Np", "J3", "N3", "Jm", "Nm")}


def _mu1_zero_brackets():
    def j3_jm(g):
        b = _b(g)
        c, s = cosh(b), sinh(b)
        return (-(g.Jm * c + c * g.Jm)
                - HALF * g.h * (g.Nm * g.Jp * s + g.Jp * s * g.Nm))

    def j3_nm(g):
        c = cosh(_b(g))
        return -(g.Nm * c + c * g.Nm)

    j3_np = _lift(lambda g: 4 * sinh(_b(g)), K_extra=1)
    return {
        ("J3_hat", "Jp_hat"): _lift(lambda g: 2 * g.Jp * cosh(_b(g))),
        ("J3_hat", "Jm_hat"): _lift(j3_jm),
        ("J3_hat", "Np_hat"): j3_np,
        ("J3_hat", "Nm_hat"): _lift(j3_nm),
        ("N3_hat", "Jp_hat"): j3_np,
        ("N3_hat", "Jm_hat"): _lift(j3_nm),
    }


def _mu1_zero_coproducts():
    def delta_j(j, n):
        def fn(g):
            b = _b(g)
            left, right = exp(-b), exp(b)
            J, N = getattr(g, j), getattr(g, n)
            return (left @ J + J @ right
                    - HALF * g.h * (left * g.Jp @ N - N @ (g.Jp * right)))
        return _lift(fn)

    def delta_n(n):
        def fn(g):
            b = _b(g)
            N = getattr(g, n)
            return exp(-b) * g.Jp @ N + N @ exp(b)
        return _lift(fn)

    return {"J3_hat": delta_j("J3", "N3"), "Jm_hat": delta_j("Jm", "Nm"),
            "N3_hat": delta_n("N3"), "Nm_hat": delta_n("Nm")}


def _item_5():
    comm = {**_mu1_zero_brackets(), **_mixed_pm(),
            ("Jp_hat", "Jm_hat"): _lift(lambda g: g.J3)}
    return comm, _mu1_zero_coproducts(), _antipodes()


def _item_6():
    return _mu1_zero_brackets(), _mu1_zero_coproducts(), _antipodes()


def _item_7():
    def raising(own, other):
        def fn(g):
            x, y = HALF * g.h * getattr(g, own), HALF * g.h * getattr(g, other)
            return 4 * sinh(x) * cosh(y)
        return _lift(fn, K_extra=1)

    def lowering(own, other):
        def fn(g):
            a, b = HALF * g.h * g.Jp, _b(g)
            cc = cosh(a) * cosh(b)
            ss = sinh(a) * sinh(b)
            x, y = getattr(g, own), getattr(g, other)
            return -(x * cc + cc * x + y * ss + ss * y)
        return _lift(fn)

    comm = {
        ("J3_hat", "Jp_hat"): raising("Jp", "Np"),
        ("J3_hat", "Jm_hat"): lowering("Jm", "Nm"),
        ("J3_hat", "Np_hat"): raising("Np", "Jp"),
        ("J3_hat", "Nm_hat"): lowering("Nm", "Jm"),
        ("N3_hat", "Np_hat"): raising("Jp", "Np"),
        ("N3_hat", "Nm_hat"): lowering("Jm", "Nm"),
        ("N3_hat", "Jp_hat"): raising("Np", "Jp"),
        ("N3_hat", "Jm_hat"): lowering("Nm", "Jm"),
    }

    def delta(own, other):
        def fn(g):
            a, b = HALF * g.h * g.Jp, _b(g)
            left, right = exp(-b), exp(b)
            x, y = getattr(g, own), getattr(g, other)
            return (left * cosh(a) @ x + x @ (cosh(a) * right)
                    - left * sinh(a) @ y + y @ (sinh(a) * right))
        return _lift(fn)

    coproducts = {"J3_hat": delta("J3", "N3"), "Jm_hat": delta("Jm", "Nm"),
                  "N3_hat": delta("N3", "J3"), "Nm_hat": delta("Nm", "Jm")}
    return comm, coproducts, _antipodes()


_ITEMS = {1: _item_1, 2: _item_2, 3: _item_3, 4: _item_4,
          5: _item_5, 6: _item_6, 7: _item_7}


def appendix_tables(item):
    """``(commutators, coproducts, antipodes)`` of an appendix item; the
    antipode table is ``None`` when the source does not list antipodes."""
    try:
        build = _ITEMS[item]
    except KeyError:
        raise ValueError(f"appendix items are numbered 1 to 7, got {item}") from None
    return build()


def item_for_mu(mu):
    for item, m in ITEM_MU.items():
        if m == tuple(mu):
            return item
    raise ValueError(f"no appendix item for mu={tuple(mu)}")


def appendix_algebra(item):
    """The transcribed tables as a standalone algebra definition."""
    from .definition import AlgebraDef
    comm, delta, gamma = appendix_tables(item)
    return AlgebraDef(f"appendix{item}", HATTED, comm, delta, gamma or {},
                      description=f"transcribed deformation of {CLASSICAL_NAMES[item]}")
