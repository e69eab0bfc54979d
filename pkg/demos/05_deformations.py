"""Infinitesimal and truncated polynomial deformations.

A degree-2 cochain phi deforms a bracket mu to mu + t phi + ...; the
Jacobi identity is checked order by order in t, exactly, and the first
obstruction is reported with a witness basis triple.
"""

import currentalg as ca
from currentalg import ChevalleyCochain, TruncatedDeformation

# Deforming the abelian bracket by the r2 bracket is a Lie bracket for
# every t, so every order vanishes.
ab = ca.abelian(2)
phi = ca.bracket_cochain(ca.r2())
report = ca.truncated_deformation_check(
    TruncatedDeformation(base=ab, cochains=(phi,), order=3))
print("abelian2 deformed by the r2 bracket:", report)

# First-order condition = cocycle condition, via two independent routes
# (coboundary vanishing vs the t-coefficient of the Jacobiator).
print("phi is an infinitesimal deformation:", ca.infinitesimal_check(ab, phi))

# On heisenberg(3), phi(X1, X3) = X1 is obstructed at order 1.
h = ca.heisenberg(3)
bad = ChevalleyCochain(2, 3, {(1, 3): (1, 0, 0)})
print("\nheisenberg(3) with phi(X1,X3) = X1:")
print("  infinitesimal_check:", ca.infinitesimal_check(h, bad))
report = ca.truncated_deformation_check(
    TruncatedDeformation(base=h, cochains=(bad,), order=2))
print("  truncated check:", report)

# Over an abelian base the order-2 obstruction is the Jacobiator of phi
# itself: deforming by a non-Lie candidate fails at order exactly 2.
non_lie = ChevalleyCochain(2, 3, {(1, 2): (1, 0, 0), (1, 3): (0, 1, 0)})
report = ca.truncated_deformation_check(
    TruncatedDeformation(base=ca.abelian(3), cochains=(non_lie,), order=2))
print("\nabelian3 deformed by a Jacobi-violating candidate:", report)
