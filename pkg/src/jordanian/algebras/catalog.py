"""Base algebra definitions: Jordanian sl(2), its ±h direct sum, and so(4).

Generators are named ``Jp``/``Jm``/``J3`` for J^+/J^-/J^3 (and ``N*`` for the
second so(4) triple). PBW orders put raising generators first:
``Jp < J3 < Jm`` and ``Jp < Np < J3 < N3 < Jm < Nm``.
"""

from functools import lru_cache

from ..kernel.analytic import cosh, exp, sinh
from ..kernel.rational import Rational
from .definition import AlgebraDef

HALF = Rational(1, 2)


# -- U_h(sl(2)) ---------------------------------------------------------------

def _sl2_tables(p, m, t, sign):
    """Tables of the Jordanian sl(2) on generators (p, m, t) = (J+, J-, J3)
    with deformation parameter ``sign * h``."""

    def comm_t_p(A, K):
        g = A.at(K + 1)
        return (2 * sinh(sign * g.h * getattr(g, p))).div_h() * sign

    def comm_t_m(A, K):
        g = A.at(K)
        c = cosh(sign * g.h * getattr(g, p))
        x = getattr(g, m)
        return -(c * x + x * c)

    def comm_p_m(A, K):
        return getattr(A.at(K), t)

    def coproduct(x):
        def rule(A, K):
            g = A.at(K)
            e = exp(sign * g.h * getattr(g, p))
            e_inv = exp(-sign * g.h * getattr(g, p))
            X = getattr(g, x)
            return X @ e + e_inv @ X
        return rule

    def antipode(x):
        def rule(A, K):
            g = A.at(K)
            e = exp(sign * g.h * getattr(g, p))
            e_inv = exp(-sign * g.h * getattr(g, p))
            return -(e * getattr(g, x) * e_inv)
        return rule

    commutators = {(t, p): comm_t_p, (t, m): comm_t_m, (p, m): comm_p_m}
    coproducts = {m: coproduct(m), t: coproduct(t)}
    antipodes = {x: antipode(x) for x in (p, m, t)}
    return commutators, coproducts, antipodes


@lru_cache(maxsize=None)
def sl2h():
    comm, delta, gamma = _sl2_tables("Jp", "Jm", "J3", 1)
    return AlgebraDef(
        "sl2h", ("Jp", "J3", "Jm"), comm, delta, gamma,
        description="Jordanian deformation U_h(sl(2))")


@lru_cache(maxsize=None)
def sl2h_pair():
    """U_h(sl(2)) ⊕ U_{-h}(sl(2)); the two copies commute."""
    c1, d1, g1 = _sl2_tables("J1p", "J1m", "J13", 1)
    c2, d2, g2 = _sl2_tables("J2p", "J2m", "J23", -1)
    return AlgebraDef(
        "sl2h_pair", ("J1p", "J2p", "J13", "J23", "J1m", "J2m"),
        {**c1, **c2}, {**d1, **d2}, {**g1, **g2},
        description="U_h(sl(2)) ⊕ U_{-h}(sl(2)) in the copy basis")


# -- U_h(so(4)) in the (J, N) basis ----------------------------------------------

def _half_args(g):
    a = g.h * g.Jp * HALF
    b = g.h * g.Np * HALF
    return a, b


def _raising_comm(x_is_j):
    """[J3, J+] (x_is_j) or [J3, N+]: (4/h) sinh(hX+/2) cosh(hY+/2)."""
    def rule(A, K):
        g = A.at(K + 1)
        a, b = _half_args(g)
        s, c = (sinh(a), cosh(b)) if x_is_j else (sinh(b), cosh(a))
        return (4 * s * c).div_h()
    return rule


def _lowering_comm(own, other):
    """[J3, X-] = -X- cc - cc X- - Y- ss - ss Y- with cc, ss the products of
    cosh and sinh of h J+/2 and h N+/2."""
    def rule(A, K):
        g = A.at(K)
        a, b = _half_args(g)
        cc = cosh(a) * cosh(b)
        ss = sinh(a) * sinh(b)
        x, y = getattr(g, own), getattr(g, other)
        return -(x * cc + cc * x + y * ss + ss * y)
    return rule


def _so4_coproduct(own, other):
    def rule(A, K):
        g = A.at(K)
        a, b = _half_args(g)
        left = exp(-b)
        right = exp(b)
        x, y = getattr(g, own), getattr(g, other)
        return (left * cosh(a) @ x + x @ (cosh(a) * right)
                - left * sinh(a) @ y + y @ (sinh(a) * right))
    return rule


def _so4_antipode(x):
    def rule(A, K):
        g = A.at(K)
        e = exp(g.h * g.Np)
        e_inv = exp(-g.h * g.Np)
        return -(e * getattr(g, x) * e_inv)
    return rule


def so4_tables():
    comm = {
        ("J3", "Jp"): _raising_comm(True),
        ("J3", "Np"): _raising_comm(False),
        ("J3", "Jm"): _lowering_comm("Jm", "Nm"),
        ("J3", "Nm"): _lowering_comm("Nm", "Jm"),
        ("N3", "Np"): _raising_comm(True),
        ("N3", "Jp"): _raising_comm(False),
        ("N3", "Nm"): _lowering_comm("Jm", "Nm"),
        ("N3", "Jm"): _lowering_comm("Nm", "Jm"),
        ("Jp", "Jm"): lambda A, K: A.at(K).J3,
        ("Np", "Nm"): lambda A, K: A.at(K).J3,
        ("Jp", "Nm"): lambda A, K: A.at(K).N3,
        ("Jm", "Np"): lambda A, K: -A.at(K).N3,
    }
    delta = {
        "J3": _so4_coproduct("J3", "N3"),
        "Jm": _so4_coproduct("Jm", "Nm"),
        "N3": _so4_coproduct("N3", "J3"),
        "Nm": _so4_coproduct("Nm", "Jm"),
    }
    gamma = {x: _so4_antipode(x) for x in ("Jp", "Np", "J3", "N3", "Jm", "Nm")}
    return comm, delta, gamma


SO4_GENERATORS = ("Jp", "Np", "J3", "N3", "Jm", "Nm")


@lru_cache(maxsize=None)
def so4h():
    comm, delta, gamma = so4_tables()
    return AlgebraDef("so4h", SO4_GENERATORS, comm, delta, gamma,
                      description="U_h(so(4)) = U_h(sl(2)) ⊕ U_{-h}(sl(2))")
