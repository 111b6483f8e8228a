"""Build the Jordanian sl(2) R-matrix to order 6 and run every check on it."""

from jordanian.algebras.hopf import verify_hopf
from jordanian.rmatrix import exponent_form, run_checks, universal_R, RSpec

K = 6
U = universal_R("sl2h", K)
print("X =", exponent_form(RSpec("sl2h", order=K)).X_text)
print("R through h^2:")
print(" ", U.R.truncate(2).format())

print("hopf axioms:", "pass" if verify_hopf(U.algebra, K).passed else "FAIL")
for report in run_checks(U):
    print(f"{report.name:>16}: {'pass' if report.passed else 'FAIL'}")
