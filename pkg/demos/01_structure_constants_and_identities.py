"""Build algebras from structure constants and check their identities.

Everything is exact rational arithmetic: an identity either holds with
zero residual or fails with a concrete witness tuple.
"""

from fractions import Fraction

import currentalg as ca

# The nonabelian 2-dimensional Lie algebra: [X1, X2] = X2.
def show(vec):
    return "(" + ", ".join(str(c) for c in vec) + ")"


g = ca.r2()
print(f"{g.name}: dim {g.dim} over {g.field}")
print("  [X1, X2] =", show(g.multiply((1, 0), (0, 1))))
print("  Jacobi:", "pass" if ca.check_identities(g).passed else "fail")

# The split commutative algebra with three orthogonal idempotents.
A = ca.m1(3)
print(f"\n{A.name}: e_i^2 = e_i, e_i e_j = 0")
print("  associativity:", "pass" if ca.check_identities(A).passed else "fail")
print("  (e1+e2+e3) * e2 =", show(A.multiply((1, 1, 1), (0, 1, 0))))

# A corrupted table: [X1,X2] = X1, [X1,X3] = X2 violates Jacobi.
bad = ca.Algebra("broken", ca.LIE, ca.Q, 3,
                 {(1, 2): (1, 0, 0), (1, 3): (0, 1, 0)})
report = ca.check_identities(bad)
print(f"\n{bad.name}: passed={report.passed}")
print("  witness (i, j, k, coordinate):", report.violations[0])

# Basis change transports constants exactly: mu_f(x,y) = f^-1(mu(fx, fy)).
f = ca.Matrix([[1, 2], [0, Fraction(1, 3)]])
moved = ca.change_basis(g, f)
back = ca.change_basis(moved, ca.inverse(f))
print("\nchange_basis round-trip recovers the table:", back == g)

# Scalar extension to Q(i) keeps the constants and widens the field tag.
print("complexified r2 still satisfies Jacobi:",
      ca.check_identities(ca.complexify(g)).passed)
