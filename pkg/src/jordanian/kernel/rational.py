"""Exact rational scalars.

``Rational`` is gmpy2's ``mpq`` when available (several times faster than
``fractions.Fraction`` in the inner loops), otherwise ``Fraction``. Both keep
values in lowest terms with a positive denominator.
"""

from fractions import Fraction

try:
    from gmpy2 import mpq as Rational
except ImportError:  # pragma: no cover
    Rational = Fraction

ZERO = Rational(0)
ONE = Rational(1)


def rat(value):
    """Coerce an int, Fraction, mpq or ``"p/q"`` string to ``Rational``."""
    if isinstance(value, str):
        text = value.strip()
        if "/" in text:
            p, q = text.split("/", 1)
            p, q = int(p), int(q)
            if q == 0:
                raise ZeroDivisionError(f"zero denominator in {value!r}")
            return Rational(p, q)
        return Rational(int(text))
    if isinstance(value, Fraction):
        return Rational(value.numerator, value.denominator)
    return Rational(value)


def rat_str(value):
    """Serialize as ``"p/q"`` (the denominator is always written)."""
    q = rat(value)
    return f"{int(q.numerator)}/{int(q.denominator)}"


def as_fraction(value):
    q = rat(value)
    return Fraction(int(q.numerator), int(q.denominator))
