"""Truncated h-series with normal-ordered noncommutative coefficients.

An ``HSeries`` is ``sum c * h**k * (w_1 ⊗ ... ⊗ w_n)`` over finitely many
terms, with ``k <= order`` and every word ``w_i`` PBW normal-ordered in the
owning algebra. ``legs == 1`` is a plain algebra element; ``legs`` 2 and 3
are elements of the tensor square and cube (see :mod:`jordanian.tensor`).
Values are immutable once built.
"""

from fractions import Fraction

from ..errors import AlgebraMismatch, LegMismatch, OrderMismatch
from .rational import ONE, Rational, rat

SCALARS = (int, Rational, Fraction)

MAX_LEGS = 3


def _acc(out, key, value):
    total = out.get(key)
    out[key] = value if total is None else total + value


class HSeries:
    __slots__ = ("algebra", "order", "legs", "terms", "_sorted")

    def __init__(self, algebra, order, terms=None, legs=1):
        if order < 0:
            raise ValueError("truncation order must be nonnegative")
        if not 1 <= legs <= MAX_LEGS:
            raise ValueError(f"legs must be between 1 and {MAX_LEGS}")
        self.algebra = algebra
        self.order = order
        self.legs = legs
        self.terms = {k: v for k, v in (terms or {}).items()
                      if v and k[0] <= order}
        self._sorted = None

    # -- constructors -----------------------------------------------------
    @classmethod
    def scalar(cls, algebra, order, value=1, legs=1, power=0):
        key = (power, ((),) * legs)
        return cls(algebra, order, {key: rat(value)}, legs)

    @classmethod
    def one(cls, algebra, order, legs=1):
        return cls.scalar(algebra, order, 1, legs)

    @classmethod
    def zero(cls, algebra, order, legs=1):
        return cls(algebra, order, {}, legs)

    @classmethod
    def h(cls, algebra, order, legs=1):
        return cls.scalar(algebra, order, 1, legs, power=1)

    @classmethod
    def generator(cls, algebra, name, order):
        i = algebra.index(name)
        return cls(algebra, order, {(0, ((i,),)): ONE})

    @classmethod
    def from_words(cls, algebra, words, order, strategy=None):
        """Normal-order a linear combination ``{word: coeff}``.

        Words may be given as tuples of generator names or positions.
        ``strategy`` selects the generic rewriter ("leftmost"/"rightmost");
        the default uses the memoized product path.
        """
        eng = algebra.engine
        out = {}
        for word, c in words.items():
            idx = tuple(algebra.index(x) for x in word)
            if strategy is None:
                nf = eng.order_word(idx, order)
            else:
                nf = eng.rewrite_word(idx, order, strategy)
            for (j, w), c2 in nf.items():
                _acc(out, (j, (w,)), rat(c) * c2)
        return cls(algebra, order, out)

    # -- basic protocol ------------------------------------------------------
    def _like(self, terms, order=None, legs=None):
        return HSeries(self.algebra, self.order if order is None else order,
                       terms, self.legs if legs is None else legs)

    def sorted_terms(self):
        """Terms in output order: h ascending, then PBW-lexicographic words,
        slot by slot."""
        if self._sorted is None:
            self._sorted = sorted(self.terms.items(),
                                  key=lambda kv: (kv[0][0], kv[0][1]))
        return self._sorted

    def __iter__(self):
        return iter(self.sorted_terms())

    def __len__(self):
        return len(self.terms)

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        if isinstance(other, HSeries):
            return (self.algebra is other.algebra and self.order == other.order
                    and self.legs == other.legs and self.terms == other.terms)
        if isinstance(other, SCALARS):
            return self.terms == HSeries.scalar(self.algebra, self.order,
                                                other, self.legs).terms
        return NotImplemented

    __hash__ = None

    def _check(self, other):
        if other.algebra is not self.algebra:
            raise AlgebraMismatch(
                f"{self.algebra.name} vs {other.algebra.name}")
        if other.order != self.order:
            raise OrderMismatch(f"order {self.order} vs {other.order}")
        if other.legs != self.legs:
            raise LegMismatch(f"{self.legs} legs vs {other.legs}")

    def _coerce(self, other):
        if isinstance(other, HSeries):
            self._check(other)
            return other
        return HSeries.scalar(self.algebra, self.order, other, self.legs)

    # -- ring operations -------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, (HSeries,) + SCALARS):
            return NotImplemented
        other = self._coerce(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            _acc(out, k, v)
        return self._like(out)

    __radd__ = __add__

    def __neg__(self):
        return self._like({k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, (HSeries,) + SCALARS):
            return NotImplemented
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c):
        c = rat(c)
        return self._like({k: v * c for k, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, SCALARS):
            return self.scale(other)
        if not isinstance(other, HSeries):
            return NotImplemented
        a, b = self, other
        # a single-leg series in h alone (no words) is central in every
        # tensor power, so it may multiply elements with more legs
        if a.legs != b.legs:
            if a.legs == 1 and a.is_scalar():
                a = a.lift_legs(b.legs)
            elif b.legs == 1 and b.is_scalar():
                b = b.lift_legs(a.legs)
        a._check(b)
        return a._like(_multiply(a, b))

    def is_scalar(self):
        """True when no term carries a generator (a polynomial in h)."""
        return all(not any(ws) for (_, ws) in self.terms)

    def lift_legs(self, legs):
        if not self.is_scalar():
            raise LegMismatch("only h-polynomials can be lifted to more legs")
        return self._like({(k, ((),) * legs): c for (k, _), c in
                           self.terms.items()}, legs=legs)

    def __rmul__(self, other):
        if isinstance(other, SCALARS):
            return self.scale(other)
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, SCALARS):
            return self.scale(Rational(1) / rat(other))
        return NotImplemented

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("only nonnegative integer powers")
        out = HSeries.one(self.algebra, self.order, self.legs)
        base = self
        while n:
            if n & 1:
                out = out * base
            n >>= 1
            if n:
                base = base * base
        return out

    def __matmul__(self, other):
        """Tensor product: concatenates legs."""
        if not isinstance(other, HSeries):
            return NotImplemented
        if other.algebra is not self.algebra:
            raise AlgebraMismatch(f"{self.algebra.name} vs {other.algebra.name}")
        if other.order != self.order:
            raise OrderMismatch(f"order {self.order} vs {other.order}")
        legs = self.legs + other.legs
        if legs > MAX_LEGS:
            raise LegMismatch(f"at most {MAX_LEGS} tensor legs")
        K = self.order
        out = {}
        for (k1, w1), c1 in self.terms.items():
            for (k2, w2), c2 in other.terms.items():
                if k1 + k2 <= K:
                    _acc(out, (k1 + k2, w1 + w2), c1 * c2)
        return self._like(out, legs=legs)

    def commutator(self, other):
        return self * other - other * self

    # -- h bookkeeping -----------------------------------------------------
    def truncate(self, order):
        if order > self.order:
            raise OrderMismatch(
                f"cannot extend a series known to order {self.order} "
                f"to order {order}")
        return self._like(self.terms, order=order)

    def with_order(self, order):
        """Truncate, or pad with (exact) zero information; padding is only
        valid when the caller knows the higher coefficients vanish."""
        return self._like(self.terms, order=order)

    def valuation(self):
        """Lowest h-power present (``None`` for the zero series)."""
        return min((k for k, _ in self.terms), default=None)

    def degree(self):
        return max((k for k, _ in self.terms), default=None)

    def coefficient(self, k):
        """The h^k coefficient as ``{words: coeff}``."""
        return {w: c for (j, w), c in self.terms.items() if j == k}

    def shift(self, n):
        """Multiply by h**n. Negative ``n`` divides exactly and lowers the
        order by ``-n``; it requires the low coefficients to vanish."""
        if n >= 0:
            return self._like({(k + n, w): c for (k, w), c in self.terms.items()})
        v = self.valuation()
        if v is not None and v < -n:
            raise ValueError(f"series has an h^{v} term; cannot divide by h^{-n}")
        return self._like({(k + n, w): c for (k, w), c in self.terms.items()},
                          order=self.order + n)

    def div_h(self):
        return self.shift(-1)

    def set_h_zero(self):
        return self._like({k: c for k, c in self.terms.items() if k[0] == 0})

    def drop_order(self, k):
        """Copy with the h^k coefficient removed (mutation testing)."""
        return self._like({key: c for key, c in self.terms.items() if key[0] != k})

    def map_terms(self, fn):
        """Rebuild from ``fn((k, words), c) -> iterable of ((k, words), c)``."""
        out = {}
        for key, c in self.terms.items():
            for key2, c2 in fn(key, c):
                _acc(out, key2, c2)
        return self._like(out)

    def letters(self):
        return {x for (_, ws) in self.terms for w in ws for x in w}

    # -- display -------------------------------------------------------------
    def format(self):
        from .display import format_series
        return format_series(self)

    def __str__(self):
        return self.format()

    def __repr__(self):
        return (f"<HSeries {self.algebra.name} legs={self.legs} "
                f"K={self.order}: {self.format()}>")


def _multiply(a, b):
    """Slotwise normal-ordered product of two series with equal legs."""
    eng = a.algebra.engine
    K = a.order
    legs = a.legs
    left = sorted(a.terms.items(), key=lambda kv: kv[0][0])
    right = sorted(b.terms.items(), key=lambda kv: kv[0][0])
    out = {}
    for (k1, ws1), c1 in left:
        for (k2, ws2), c2 in right:
            k = k1 + k2
            if k > K:
                break
            c = c1 * c2
            if legs == 1:
                for (j, w), c3 in eng.mul_words(ws1[0], ws2[0], K - k).items():
                    _acc(out, (k + j, (w,)), c * c3)
                continue
            partial = [(k, (), c)]
            for s in range(legs):
                prod = eng.mul_words(ws1[s], ws2[s], K - k)
                nxt = []
                for kk, pre, cc in partial:
                    for (j, w), c3 in prod.items():
                        if kk + j <= K:
                            nxt.append((kk + j, pre + (w,), cc * c3))
                partial = nxt
            for kk, ws, cc in partial:
                _acc(out, (kk, ws), cc)
    return out
