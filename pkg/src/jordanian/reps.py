"""Finite-dimensional representations and represented R matrices over Q[h].

Represented raising generators are nilpotent, so every series used here has
an image that is a polynomial in h. Images are computed at increasing
truncation orders until they stop changing; an exponent whose image is not
a nilpotent matrix is rejected.
"""

from dataclasses import dataclass
from functools import lru_cache
from math import isqrt

from .algebras.registry import get_algebra
from .errors import NonNilpotentExponent, RepresentationError, TruncationTooLow
from .kernel.rational import ONE, ZERO, rat, rat_str
from .tensor import flip


def _padd(a, b, sign=1):
    out = dict(a)
    for k, c in b.items():
        v = out.get(k, ZERO) + sign * c
        if v:
            out[k] = v
        else:
            out.pop(k, None)
    return out


def _pmul(a, b):
    out = {}
    for i, x in a.items():
        for j, y in b.items():
            out[i + j] = out.get(i + j, ZERO) + x * y
    return {k: v for k, v in out.items() if v}


class PolyMatrix:
    """A square matrix over Q[h], stored sparsely as
    ``{(row, col): {power: coeff}}``."""

    __slots__ = ("dim", "entries")

    def __init__(self, dim, entries=None):
        self.dim = dim
        self.entries = {k: dict(p) for k, p in (entries or {}).items() if p}

    @classmethod
    def identity(cls, dim):
        return cls(dim, {(i, i): {0: ONE} for i in range(dim)})

    @classmethod
    def zero(cls, dim):
        return cls(dim)

    @classmethod
    def constant(cls, rows):
        """From a nested list of rationals."""
        d = len(rows)
        return cls(d, {(i, j): {0: rat(v)} for i, row in enumerate(rows)
                       for j, v in enumerate(row) if rat(v)})

    @classmethod
    def from_lists(cls, rows):
        """From nested lists of coefficient lists (index = power of h)."""
        d = len(rows)
        return cls(d, {(i, j): {k: rat(c) for k, c in enumerate(p) if rat(c)}
                       for i, row in enumerate(rows) for j, p in enumerate(row)})

    def _same(self, other):
        if self.dim != other.dim:
            raise ValueError(f"dimension {self.dim} vs {other.dim}")

    def __add__(self, other):
        self._same(other)
        out = dict(self.entries)
        for k, p in other.entries.items():
            out[k] = _padd(out.get(k, {}), p)
        return PolyMatrix(self.dim, out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def __neg__(self):
        return self.scale(-1)

    def scale(self, c, power=0):
        c = rat(c)
        return PolyMatrix(self.dim, {k: {e + power: v * c for e, v in p.items()}
                                     for k, p in self.entries.items()} if c else {})

    def __mul__(self, other):
        if not isinstance(other, PolyMatrix):
            return self.scale(other)
        self._same(other)
        rows = {}
        for (l, j), p in other.entries.items():
            rows.setdefault(l, []).append((j, p))
        out = {}
        for (i, l), a in self.entries.items():
            for j, b in rows.get(l, ()):
                out[(i, j)] = _padd(out.get((i, j), {}), _pmul(a, b))
        return PolyMatrix(self.dim, out)

    __rmul__ = scale

    def __eq__(self, other):
        return (isinstance(other, PolyMatrix) and self.dim == other.dim
                and self.entries == other.entries)

    __hash__ = None

    def is_zero(self):
        return not self.entries

    def kron(self, other):
        d = other.dim
        out = {}
        for (i, j), a in self.entries.items():
            for (k, l), b in other.entries.items():
                out[(i * d + k, j * d + l)] = _pmul(a, b)
        return PolyMatrix(self.dim * d, out)

    def degree(self):
        return max((e for p in self.entries.values() for e in p), default=-1)

    def at_h(self, value):
        """Specialize h to a rational value (a constant matrix)."""
        v = rat(value)
        out = {}
        for k, p in self.entries.items():
            s = sum((c * v ** e for e, c in p.items()), ZERO)
            if s:
                out[k] = {0: s}
        return PolyMatrix(self.dim, out)

    def nilpotent_power(self):
        """Smallest n with M**n = 0, or None if M is not nilpotent."""
        power, n = self, 1
        while not power.is_zero():
            if n > self.dim:
                return None
            power = power * self
            n += 1
        return n

    def inverse_unipotent(self):
        """Exact inverse of I + N with N nilpotent."""
        N = self - PolyMatrix.identity(self.dim)
        if N.nilpotent_power() is None:
            raise NonNilpotentExponent("matrix is not unipotent")
        out = PolyMatrix.identity(self.dim)
        term = PolyMatrix.identity(self.dim)
        while True:
            term = term * N.scale(-1)
            if term.is_zero():
                return out
            out = out + term

    def rows(self):
        """Nested lists of coefficient lists (index = power of h)."""
        out = []
        for i in range(self.dim):
            row = []
            for j in range(self.dim):
                p = self.entries.get((i, j), {})
                deg = max(p, default=-1)
                row.append([rat_str(p.get(e, ZERO)) for e in range(deg + 1)])
            out.append(row)
        return out

    def to_json(self):
        return {"dim": self.dim, "parameter": "h", "entries": self.rows()}

    def to_latex(self, parameter="h"):
        def poly(p):
            if not p:
                return "0"
            parts = []
            for e in sorted(p):
                c = p[e]
                mag = abs(c)
                num = "" if (mag == 1 and e) else (
                    str(int(mag.numerator)) if mag.denominator == 1
                    else f"\\frac{{{int(mag.numerator)}}}{{{int(mag.denominator)}}}")
                var = "" if e == 0 else (parameter if e == 1 else f"{parameter}^{{{e}}}")
                sign = "-" if c < 0 else ("+" if parts else "")
                parts.append(f"{sign}{num}{var}")
            return "".join(parts)
        body = " \\\\\n".join(" & ".join(poly(self.entries.get((i, j), {}))
                                         for j in range(self.dim))
                              for i in range(self.dim))
        return "\\begin{pmatrix}\n" + body + "\n\\end{pmatrix}\n"

    def to_text(self, parameter="h"):
        """One line per row, entries as polynomials in h."""
        def poly(p):
            parts = []
            for e in sorted(p):
                c = p[e]
                coeff = str(int(c.numerator)) if c.denominator == 1 else \
                    f"{int(c.numerator)}/{int(c.denominator)}"
                var = "" if e == 0 else (parameter if e == 1 else f"{parameter}^{e}")
                parts.append(coeff if not var else
                             (var if c == 1 else "-" + var if c == -1 else f"{coeff}*{var}"))
            return " + ".join(parts).replace("+ -", "- ") or "0"
        cells = [[poly(self.entries.get((i, j), {})) for j in range(self.dim)]
                 for i in range(self.dim)]
        width = max(len(c) for row in cells for c in row)
        return "\n".join("  ".join(c.rjust(width) for c in row) for row in cells)

    def __repr__(self):
        return f"<PolyMatrix {self.dim}x{self.dim} degree={self.degree()}>"


def swap_operator(n):
    """P(v ⊗ w) = w ⊗ v on C^n ⊗ C^n."""
    return PolyMatrix(n * n, {(j * n + i, i * n + j): {0: ONE}
                              for i in range(n) for j in range(n)})


@dataclass
class Rep:
    algebra: str
    dim: int
    matrices: dict

    def __post_init__(self):
        alg = get_algebra(self.algebra)
        for g in alg.generators:
            if g not in self.matrices:
                raise RepresentationError(f"no matrix for generator {g}")
        bad = self.relation_failures()
        if bad:
            raise RepresentationError(f"relations violated: {bad}")

    @property
    def alg(self):
        return get_algebra(self.algebra)

    def word_matrix(self, word):
        return _word_matrix(self, word)

    def relation_failures(self):
        alg = self.alg
        bad = []
        for a, b in alg.pairs():
            A, B = self.matrices[a], self.matrices[b]
            try:
                image = evaluate_stable(lambda K: alg.commutator(a, b, K), self)
            except TruncationTooLow:
                bad.append(f"[{a},{b}] (image does not terminate)")
                continue
            if image != A * B - B * A:
                bad.append(f"[{a},{b}]")
        return bad

    def __hash__(self):
        return id(self)


def _word_matrix(rep, word):
    names = rep.alg.generators
    out = PolyMatrix.identity(rep.dim)
    for x in word:
        out = out * rep.matrices[names[x]]
    return out


def evaluate(series, rep):
    """Image of a (1, 2 or 3 leg) series: a matrix of size dim**legs."""
    cache = {}

    def wm(w):
        hit = cache.get(w)
        if hit is None:
            hit = cache[w] = _word_matrix(rep, w)
        return hit

    n = rep.dim ** series.legs
    out = PolyMatrix.zero(n)
    for (k, ws), c in series.terms.items():
        m = wm(ws[0])
        for w in ws[1:]:
            m = m.kron(wm(w))
        out = out + m.scale(c, power=k)
    return out


def evaluate_stable(build, rep, start=None, step=2, limit=None):
    """Evaluate ``build(K)`` at increasing K until two consecutive images
    agree and the image has degree at most K - step."""
    K = start or 2 * rep.dim
    limit = limit or K + 6 * step
    prev = evaluate(build(K), rep)
    while K < limit:
        K += step
        cur = evaluate(build(K), rep)
        if cur == prev and cur.degree() <= K - 2 * step:
            return cur
        prev = cur
    raise TruncationTooLow(f"image still changing at order {K}")


def _exp_nilpotent(M):
    n = M.nilpotent_power()
    if n is None:
        raise NonNilpotentExponent("represented exponent is not nilpotent")
    out = PolyMatrix.identity(M.dim)
    term = PolyMatrix.identity(M.dim)
    k = 1
    while True:
        term = (term * M).scale(rat(1) / k)
        if term.is_zero():
            return out
        out = out + term
        k += 1


def represented_exponent(R, rep):
    """Image of the exponent of R. With a UniversalR the exponent is rebuilt
    at growing orders until its image is stable; for a bare exponent series
    its top two orders must have vanishing image."""
    from .rmatrix import RSpec, build_exponent
    spec = getattr(R, "spec", None)
    if spec is not None:
        def build(K):
            return build_exponent(RSpec(spec.algebra, spec.route, K))[0]
        return evaluate_stable(build, rep, start=max(spec.order, 2))
    E = getattr(R, "exponent", R)
    M = evaluate(E, rep)
    if M.degree() > E.order - 2:
        raise TruncationTooLow("exponent image reaches the truncation order")
    return M


def evaluate_R(R, rep):
    """Exact image of R = exp(E) as exp of the nilpotent image of E."""
    return _exp_nilpotent(represented_exponent(R, rep))


def _embed_matrices(Rm, n):
    I = PolyMatrix.identity(n)
    R12 = Rm.kron(I)
    R23 = I.kron(Rm)
    P23 = I.kron(swap_operator(n))
    R13 = P23 * R12 * P23
    return R12, R13, R23


def _root(d):
    n = isqrt(d)
    if n * n != d:
        raise ValueError("R matrix dimension must be a square")
    return n


def matrix_qybe(Rm):
    from .rmatrix import CheckReport
    n = _root(Rm.dim)
    R12, R13, R23 = _embed_matrices(Rm, n)
    residual = R12 * R13 * R23 - R23 * R13 * R12
    return CheckReport("matrix-qybe", [_matrix_result("r12r13r23", residual)])


def matrix_triangular(Rm):
    from .rmatrix import CheckReport
    P = swap_operator(_root(Rm.dim))
    residual = P * Rm.inverse_unipotent() * P - Rm
    return CheckReport("matrix-triangular", [_matrix_result("swap-inverse", residual)])


def matrix_intertwiner(Rm, rep):
    """Rm (rho⊗rho)(Delta g) Rm^-1 = (rho⊗rho)(Delta' g) for every generator."""
    from .rmatrix import CheckReport
    alg = rep.alg
    Rinv = Rm.inverse_unipotent()
    parts = []
    for g in alg.generators:
        d = evaluate_stable(lambda K: alg.coproduct(g, K), rep)
        d_flip = evaluate_stable(lambda K: flip(alg.coproduct(g, K)), rep)
        parts.append(_matrix_result(g, Rm * d * Rinv - d_flip))
    return CheckReport("matrix-intertwiner", parts)


def matrix_classical_limit(Rm):
    from .rmatrix import CheckReport
    return CheckReport("classical-limit", [
        _matrix_result("h=0", Rm.at_h(0) - PolyMatrix.identity(Rm.dim))])


@dataclass
class MatrixResult:
    name: str
    passed: bool
    first_nonzero_order: int = None
    residual: PolyMatrix = None

    def as_dict(self):
        out = {"name": self.name, "status": "pass" if self.passed else "fail"}
        if not self.passed:
            out["first_nonzero_order"] = self.first_nonzero_order
        return out


def _matrix_result(name, residual):
    if residual.is_zero():
        return MatrixResult(name, True)
    low = min(e for p in residual.entries.values() for e in p)
    return MatrixResult(name, False, low, residual)


# -- concrete representations ------------------------------------------------------

_SIGMA = {"p": [[0, 1], [0, 0]], "m": [[0, 0], [1, 0]], "3": [[1, 0], [0, -1]]}


@lru_cache(maxsize=None)
def fundamental_sl2():
    """The 2-dimensional representation of sl2h: (J+)^2 = 0 collapses
    sinh(hJ+)/h to J+ and cosh(hJ+) to 1."""
    return Rep("sl2h", 2, {f"J{t}": PolyMatrix.constant(m) for t, m in _SIGMA.items()})


@lru_cache(maxsize=None)
def rep_so4_from_pair():
    """C^2 ⊗ C^2 with J_1 = sigma ⊗ 1, J_2 = 1 ⊗ sigma, J = J_1 + J_2 and
    N = J_1 - J_2."""
    I = PolyMatrix.identity(2)
    mats = {}
    for t, m in _SIGMA.items():
        s = PolyMatrix.constant(m)
        j1, j2 = s.kron(I), I.kron(s)
        mats[f"J{t}"] = j1 + j2
        mats[f"N{t}"] = j1 - j2
    return Rep("so4h", 4, mats)


REPS = {"fund": ("sl2h", fundamental_sl2), "so4pair": ("so4h", rep_so4_from_pair)}


def get_rep(name):
    try:
        return REPS[name][1]()
    except KeyError:
        raise ValueError(f"unknown representation {name!r}; "
                         f"choose from {sorted(REPS)}") from None
