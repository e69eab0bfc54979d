"""Cohomology dimensions and rigidity certificates, all by exact rank.

H^2 = 0 certifies rigidity; the converse fails in general, so a nonzero
H^2 only ever yields the verdict "Inconclusive".
"""

import currentalg as ca

for g in (ca.r2(), ca.sl2(), ca.abelian(2), ca.heisenberg(3)):
    h1 = ca.chevalley_dims(g, 1)
    h2 = ca.chevalley_dims(g, 2)
    cert = ca.rigidity_certificate(g)
    print(f"{g.name:<12} H1 = {h1.dim_H}  H2 = {h2.dim_H}  "
          f"orbit dim = {cert.orbit_dim}  verdict = {cert.verdict}")

# Harrison H^2 controls commutative deformations of the second factor.
print()
for A in (ca.m1(1), ca.m1(2), ca.null_algebra(1), ca.real_rigid(2, 1)):
    print(f"Harrison H2({A.name}) = {ca.harrison_h2(A).dim_H}")

# Rigidity in the product variety needs both factor H^2 spaces to vanish.
print()
for A in (ca.m1(2), ca.null_algebra(1)):
    cert = ca.rigid_in_Lpq(ca.r2(), A)
    print(f"r2 (x) {A.name}: rigid in the product variety? {cert.verdict}")

# The derivation algebra two ways: the Leibniz linear system and the
# degree-1 cocycle space agree; inner derivations have codim = dim H^1.
g = ca.heisenberg(3)
der = ca.derivation_space(g)
inner = ca.inner_derivations(g)
print(f"\n{g.name}: dim Der = {der.dim}, inner = {inner.dim}, "
      f"H1 = {ca.chevalley_dims(g, 1).dim_H}")

# The H^1 dimension formula for current algebras, both sides computed
# independently; mismatches would be reported, never silently patched.
rep = ca.h1_current_formula(ca.abelian(2), ca.m1(2))
print(f"\nH1(abelian2 (x) M1^2): lhs = {rep.lhs_dim}, "
      f"summands = {rep.summand_dims}, rhs = {rep.rhs_dim}, "
      f"matches = {rep.matches}")
