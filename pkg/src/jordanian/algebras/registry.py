"""The ten registered algebras plus auxiliary ones used by R constructions.

Registered: sl2h, so4h, p2m and the seven eq23 contractions of so4h, named
``c`` followed by the mu digits (``c110`` is mu = (1,1,0)). Auxiliary:
``sl2h_pair`` (the ±h copy basis of so4h), ``iso2h`` and ``iso2h_pair``.
"""

from functools import lru_cache

from ..contraction.engine import (APPENDIX_MUS, ContractionPlan, MuTriple,
                                  sl2_to_p2_plan, so4_plan)
from ..errors import JordanianError, UnknownAlgebra
from .appendix import CLASSICAL_NAMES, item_for_mu
from .catalog import sl2h, sl2h_pair, so4h

REGISTERED = ("sl2h", "so4h", "p2m") + tuple(f"c{m.key}" for m in APPENDIX_MUS)
AUXILIARY = ("sl2h_pair", "iso2h", "iso2h_pair")


def contracted_name(mu):
    return f"c{MuTriple.parse(mu).key}"


@lru_cache(maxsize=None)
def contracted_so4(key):
    mu = MuTriple.parse(key)
    item = item_for_mu(tuple(mu))
    return so4_plan(mu, "eq23").build(
        contracted_name(mu), parameter="h_hat",
        description=f"contraction {mu} of so4h, a deformation of "
                    f"{CLASSICAL_NAMES[item]}")


@lru_cache(maxsize=None)
def p2m():
    return sl2_to_p2_plan().build(
        "p2m", description="Jordanian Poincare algebra from P- = eps J-")


def iso2_plan():
    """J± = J±_hat/eps with h = eps h_hat, so that h J+ is unchanged."""
    return ContractionPlan(sl2h(), {"Jp": 1, "Jm": 1}, 1)


def iso2_pair_plan():
    return ContractionPlan(sl2h_pair(),
                           {"J1p": 1, "J1m": 1, "J2p": 1, "J2m": 1}, 1)


@lru_cache(maxsize=None)
def iso2h():
    return iso2_plan().build("iso2h", parameter="h_hat",
                             description="Jordanian U(iso(2))")


@lru_cache(maxsize=None)
def iso2h_pair():
    return iso2_pair_plan().build(
        "iso2h_pair", parameter="h_hat",
        description="U_h(iso(2)) ⊕ U_{-h}(iso(2)) in the copy basis")


@lru_cache(maxsize=None)
def checked_so4h():
    """so4h after confirming its tables against the copy basis (order 2)."""
    from .basis import so4_self_check
    bad = so4_self_check(2)
    if bad:
        raise JordanianError(f"so4h tables disagree with the copy basis: {bad}")
    return so4h()


_BUILDERS = {"sl2h": sl2h, "so4h": checked_so4h, "p2m": p2m,
             "sl2h_pair": sl2h_pair, "iso2h": iso2h, "iso2h_pair": iso2h_pair}


def get_algebra(name):
    """Look up a registered or auxiliary algebra by name."""
    if name in _BUILDERS:
        return _BUILDERS[name]()
    if name in REGISTERED:
        return contracted_so4(name[1:])
    raise UnknownAlgebra(name)


def registry():
    """The ten registered algebra definitions, in a fixed order."""
    return [get_algebra(name) for name in REGISTERED]


def algebra_names(include_auxiliary=False):
    return REGISTERED + (AUXILIARY if include_auxiliary else ())
