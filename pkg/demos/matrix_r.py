"""Evaluate R in the 2-dim sl(2) representation and check it as a 4x4 matrix."""

from jordanian.reps import (evaluate_R, fundamental_sl2, matrix_classical_limit,
                            matrix_qybe, matrix_triangular)
from jordanian.rmatrix import universal_R

Rm = evaluate_R(universal_R("sl2h", 6), fundamental_sl2())
print(Rm.to_text())
for check in (matrix_qybe, matrix_triangular, matrix_classical_limit):
    print(check.__name__, "pass" if check(Rm).passed else "FAIL")
