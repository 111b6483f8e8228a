"""Analytic functions as exact Taylor coefficient rules, applied to series."""

from functools import lru_cache
from math import factorial

from ..errors import NonNilpotentArgument, NotDivisible
from .rational import ONE, ZERO, Rational
from .series import HSeries


class AnalyticFn:
    """A power series ``sum coeff(k) x**k`` with exact rational coefficients.

    ``degree`` is set for polynomials; only those may be applied to an
    argument with a nonzero h^0 part.
    """

    def __init__(self, name, rule, degree=None):
        self.name = name
        self.degree = degree
        self._coeff = lru_cache(maxsize=None)(lambda k: Rational(rule(k)))

    def coeff(self, k):
        if k < 0:
            raise ValueError("negative Taylor index")
        if self.degree is not None and k > self.degree:
            return ZERO
        return self._coeff(k)

    def coeffs(self, n):
        """The first ``n + 1`` coefficients."""
        return [self.coeff(k) for k in range(n + 1)]

    def __repr__(self):
        return f"AnalyticFn({self.name})"

    def __mul__(self, other):
        return AnalyticFn(
            f"({self.name})*({other.name})",
            lambda k: sum((self.coeff(i) * other.coeff(k - i)
                           for i in range(k + 1)), ZERO))

    def derivative(self):
        return AnalyticFn(f"d/dx {self.name}",
                          lambda k: (k + 1) * self.coeff(k + 1))

    def divide_by_x(self, n=1):
        """``f(x) / x**n``; the low coefficients must vanish."""
        for k in range(n):
            if self.coeff(k):
                raise NotDivisible(f"{self.name} has a nonzero x^{k} term")
        return AnalyticFn(f"{self.name}/x^{n}", lambda k: self.coeff(k + n))

    def reciprocal(self):
        """``1/f`` by the recursion r_0 = 1/f_0,
        r_n = -(1/f_0) sum_{i=1..n} f_i r_{n-i}."""
        f0 = self.coeff(0)
        if not f0:
            raise NotDivisible(f"{self.name} vanishes at 0")
        cache = [ONE / f0]

        def rule(n):
            while len(cache) <= n:
                m = len(cache)
                cache.append(-sum((self.coeff(i) * cache[m - i]
                                   for i in range(1, m + 1)), ZERO) / f0)
            return cache[n]

        return AnalyticFn(f"1/({self.name})", rule)

    def check_inverse(self, other, K):
        """True iff ``self * other == 1 + O(x**(K+1))``."""
        prod = self * other
        return all(prod.coeff(k) == (ONE if k == 0 else ZERO)
                   for k in range(K + 1))


EXP = AnalyticFn("exp", lambda k: Rational(1, factorial(k)))
SINH = AnalyticFn("sinh", lambda k: Rational(k % 2, factorial(k)))
COSH = AnalyticFn("cosh", lambda k: Rational((k + 1) % 2, factorial(k)))
SINH_OVER_X = SINH.divide_by_x()
SINH_OVER_X.name = "sinh(x)/x"
X_OVER_SINH = SINH_OVER_X.reciprocal()
X_OVER_SINH.name = "x/sinh(x)"


def analytic_apply(f, x):
    """``sum_k f.coeff(k) x**k`` truncated at ``x.order``."""
    if f.degree is None and x.coefficient(0):
        raise NonNilpotentArgument(
            f"{f.name} applied to a series with a nonzero h^0 part")
    out = HSeries.scalar(x.algebra, x.order, f.coeff(0), x.legs)
    power = x
    k = 1
    while power and (f.degree is None or k <= f.degree):
        c = f.coeff(k)
        if c:
            out = out + power.scale(c)
        power = power * x
        k += 1
    return out


def series_exp(x):
    return analytic_apply(EXP, x)


def sinh(x):
    return analytic_apply(SINH, x)


def cosh(x):
    return analytic_apply(COSH, x)


def exp(x):
    return analytic_apply(EXP, x)


def x_over_sinh(x):
    return analytic_apply(X_OVER_SINH, x)


LOG1P = AnalyticFn("log(1+x)",
                   lambda k: Rational((-1) ** (k + 1), k) if k else ZERO)


def series_log(x):
    """``log x`` for ``x = 1 + O(h)``."""
    return analytic_apply(LOG1P, x - 1)
