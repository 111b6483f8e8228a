"""Regenerate the golden represented R matrices with sympy.

This is an independent oracle: it never imports the package. It evaluates
R = exp(phi(h Delta J+) (J3 ⊗ sinh hJ+ - sinh hJ+ ⊗ J3)), phi(x) = x/sinh x,
directly on matrices, using sympy's own Taylor coefficients and the fact
that the represented arguments are nilpotent. The so(4) matrix is the
product of the R matrices of the two copies (parameters +h and -h) acting
on C^2 ⊗ C^2.

Run from the repository root:  python3 tests/golden/make_golden.py
"""

import json
from pathlib import Path

import sympy as sp

h, x = sp.symbols("h x")
HERE = Path(__file__).parent


def taylor(expr, n):
    s = sp.series(expr, x, 0, n + 1).removeO()
    return [sp.Rational(s.coeff(x, k)) for k in range(n + 1)]


def apply_fn(coeffs, M):
    """sum c_k M^k for nilpotent M; the coefficient list must be long
    enough to reach the nilpotency index."""
    out = sp.zeros(*M.shape)
    P = sp.eye(M.shape[0])
    for k, c in enumerate(coeffs):
        if k:
            P = (P * M).applyfunc(sp.expand)
        if P.is_zero_matrix:
            return out
        out += c * P
    assert P.is_zero_matrix, "coefficient list too short"
    return out


def kron(A, B):
    return sp.kronecker_product(A, B)


def copy_R(Jp, J3, sign):
    """R for one sl(2) copy with parameter sign*h, on V ⊗ V."""
    n = Jp.shape[0]
    I = sp.eye(n)
    N = 2 * n * n + 2
    phi = taylor(x / sp.sinh(x), N)
    sinh = taylor(sp.sinh(x), N)
    expc = taylor(sp.exp(x), N)
    dJp = kron(Jp, I) + kron(I, Jp)
    s = apply_fn(sinh, sign * h * Jp)
    E = apply_fn(phi, sign * h * dJp) * (kron(J3, s) - kron(s, J3))
    E = E.applyfunc(sp.expand)
    return apply_fn(expc, E).applyfunc(sp.expand)


def rows(M):
    out = []
    for i in range(M.shape[0]):
        row = []
        for j in range(M.shape[1]):
            e = sp.expand(M[i, j])
            if e == 0:
                row.append([])
                continue
            coeffs = sp.Poly(e, h).all_coeffs()[::-1]
            row.append([f"{sp.Rational(c).p}/{sp.Rational(c).q}" for c in coeffs])
        out.append(row)
    return out


def dump(name, M, provenance):
    data = {"provenance": provenance, "dim": M.shape[0], "parameter": "h",
            "entries": rows(M)}
    (HERE / name).write_text(json.dumps(data, indent=1) + "\n")


def main():
    Jp = sp.Matrix([[0, 1], [0, 0]])
    J3 = sp.Matrix([[1, 0], [0, -1]])
    dump("R_sl2h_fund.json", copy_R(Jp, J3, 1),
         "sympy evaluation of the sl2h R on the 2-dim representation "
         "(tests/golden/make_golden.py)")
    I2 = sp.eye(2)
    R1 = copy_R(kron(Jp, I2), kron(J3, I2), 1)
    R2 = copy_R(kron(I2, Jp), kron(I2, J3), -1)
    dump("R_so4h_so4pair.json", (R1 * R2).applyfunc(sp.expand),
         "sympy product of the +h and -h copy R matrices on C^2 ⊗ C^2 "
         "(tests/golden/make_golden.py)")


if __name__ == "__main__":
    main()
