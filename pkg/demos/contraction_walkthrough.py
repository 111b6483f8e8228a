"""Contract the so(4) deformation along each mu triple.

The eq23 scaling gives a well defined Hopf algebra for every triple; eq22
breaks down when mu3 = 0 and at least one other mu is nonzero.
"""

from jordanian.contraction.api import classify_contracted_R, contract

for mu in [(1, 1, 0), (1, 0, 0), (0, 1, 0), (0, 0, 0), (0, 1, 1), (0, 0, 1), (1, 0, 1)]:
    ok22 = contract(mu, "eq22", 3).ok
    ok23 = contract(mu, "eq23", 3).ok
    print(mu, "eq22:", "ok" if ok22 else "singular", " eq23:", "ok" if ok23 else "singular")

bad = contract((1, 1, 0), "eq22", 4).offending[0]
print("\nfirst singular term for (1,1,0) eq22:",
      bad["entry"], bad["term"], f"eps^{bad['eps_power']}")

A = contract((1, 1, 0), "eq23", 2).unwrap()
print("\nDelta(J3_hat) =", A.coproduct("J3_hat", 2).format())

print("\nR-matrix classes:")
for c in classify_contracted_R(4):
    print(f"  case {c.case}: {sorted(tuple(m) for m in c.mus)}")
