"""Exact division of h-series inside a commutative subring.

Both operands must be built from pairwise commuting generators, so each
h-coefficient is an ordinary multivariate polynomial (a sorted word is a
multiset of letters). The quotient is computed order by order with exact
polynomial long division; any nonzero remainder raises ``NotDivisible``.
"""

from ..errors import NonCommutativeInput, NotDivisible, OrderMismatch
from .rational import ZERO
from .series import HSeries


def _exponents(word, letters):
    return tuple(word.count(x) for x in letters)


def _word(expo, letters):
    return tuple(x for x, n in zip(letters, expo) for _ in range(n))


def _lead(poly):
    # graded lexicographic order on exponent vectors
    return max(poly, key=lambda e: (sum(e), e))


def poly_divide(num, den):
    """Exact quotient of commutative polynomials ``{exponents: coeff}``."""
    if not den:
        raise ZeroDivisionError("division by the zero polynomial")
    num = dict(num)
    lead = _lead(den)
    lc = den[lead]
    quot = {}
    while num:
        m = _lead(num)
        if any(a < b for a, b in zip(m, lead)):
            raise NotDivisible("nonzero remainder in polynomial division")
        q_expo = tuple(a - b for a, b in zip(m, lead))
        q = num[m] / lc
        quot[q_expo] = quot.get(q_expo, ZERO) + q
        for e, c in den.items():
            key = tuple(a + b for a, b in zip(q_expo, e))
            v = num.get(key, ZERO) - q * c
            if v:
                num[key] = v
            else:
                num.pop(key, None)
    return quot


def _poly_mul(a, b):
    out = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            key = tuple(x + y for x, y in zip(e1, e2))
            out[key] = out.get(key, ZERO) + c1 * c2
    return {k: v for k, v in out.items() if v}


def _poly_sub(a, b):
    out = dict(a)
    for k, v in b.items():
        out[k] = out.get(k, ZERO) - v
    return {k: v for k, v in out.items() if v}


def check_commuting(algebra, letters, order):
    letters = sorted(letters)
    for i, a in enumerate(letters):
        for b in letters[i + 1:]:
            if algebra.commutator(a, b, order):
                raise NonCommutativeInput(
                    f"{algebra.generators[a]} and {algebra.generators[b]} "
                    f"do not commute in {algebra.name}")


def series_div_exact(num, den):
    """Quotient ``q`` with ``q * den == num``.

    With ``v`` the h-valuation of ``den`` and ``K`` the common order, the
    quotient is determined to order ``K - v`` and returned at that order.
    """
    if num.algebra is not den.algebra:
        raise OrderMismatch("operands belong to different algebras")
    if num.legs != 1 or den.legs != 1:
        raise NonCommutativeInput("division is defined for single-leg series")
    if num.order != den.order:
        raise OrderMismatch(f"order {num.order} vs {den.order}")
    if den.is_zero():
        raise ZeroDivisionError("division by the zero series")
    alg, K = num.algebra, num.order
    letters = sorted(num.letters() | den.letters())
    check_commuting(alg, letters, K)
    v = den.valuation()
    if v > K:
        raise NotDivisible("denominator vanishes at this truncation order")

    def coeff_poly(s, k):
        return {_exponents(ws[0], letters): c for ws, c in s.coefficient(k).items()}

    for k in range(v):
        if num.coefficient(k):
            raise NotDivisible(f"numerator has an h^{k} term below the "
                               f"denominator's valuation {v}")
    den_c = [coeff_poly(den, k) for k in range(K + 1)]
    quot = []
    for k in range(K - v + 1):
        rem = coeff_poly(num, k + v)
        for i in range(k):
            rem = _poly_sub(rem, _poly_mul(quot[i], den_c[k + v - i]))
        try:
            quot.append(poly_divide(rem, den_c[v]))
        except NotDivisible as exc:
            raise NotDivisible(f"nonzero remainder at h^{k + v}") from exc
    terms = {}
    for k, q in enumerate(quot):
        for e, c in q.items():
            terms[(k, (_word(e, letters),))] = c
    result = HSeries(alg, K - v, terms)
    if result.with_order(K) * den != num:
        raise NotDivisible("quotient does not multiply back to the numerator")
    return result
