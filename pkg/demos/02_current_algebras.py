"""Current Lie algebras: the bracket [X (x) a, Y (x) b] = [X,Y] (x) ab.

Tensoring the rigid 2-dimensional Lie algebra with the split 2-dimensional
commutative algebra gives two commuting copies of the factor, visible as
an exact equality of constant tables after one index permutation.
"""

import currentalg as ca

g, A = ca.r2(), ca.m1(2)
cur = ca.current_algebra(g, A)
print(f"{cur.name}: dim {cur.dim}")
print("passes Jacobi:", ca.check_identities(cur).passed)

# The product-variety Jacobi relations, evaluated straight from the two
# constant tables (no flat algebra in sight), vanish identically.
print("product-form Jacobi residuals:", ca.jacobi_pq_residuals(g, A))

# Reorder the flat basis by idempotent blocks: (X1e1, X2e1, X1e2, X2e2).
perm = ca.permutation_matrix((1, 3, 2, 4))
print("equals r2 x r2 after the block permutation:",
      ca.change_basis(cur, perm) == ca.direct_sum(g, g))

# Tensor-split derivations: f1 (x) f2 obeys Leibniz iff the two-factor
# condition holds on all basis 4-tuples.  ad X1 (x) id is a derivation,
# id (x) id is not.
ad_x1 = g.ad_matrix(g.basis_vector(1))
print("\nad X1 (x) id is a derivation:",
      ca.is_tensor_derivation(g, A, ad_x1, ca.Matrix.identity(2)))
print("id (x) id is a derivation:",
      ca.is_tensor_derivation(g, A, ca.Matrix.identity(2),
                              ca.Matrix.identity(2)))

# dim Der(r2 (x) M1^q) = 2q: one copy of Der(r2) per idempotent.
for q in (1, 2, 3):
    flat = ca.current_algebra(g, ca.m1(q))
    print(f"dim Der(r2 (x) M1^{q}) =", len(ca.derivations(flat)))
