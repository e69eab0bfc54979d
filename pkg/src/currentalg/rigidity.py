"""Rigidity certificates and deformation checks.

The only rigidity verdicts are ``RigidByH2Zero`` and ``Inconclusive``:
H^2 = 0 is sufficient for rigidity but not necessary, so a nonzero H^2
never certifies non-rigidity.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .algebra import (
    ASSOC_COMM,
    LIE,
    Algebra,
    AlgebraError,
    require_identities,
)
from .cohomology import (
    ChevalleyCochain,
    CohomologyDims,
    chevalley_delta,
    chevalley_dims,
    derivation_space,
    harrison_h2,
)
from .linalg import vec_add, vec_is_zero, vec_zero

RIGID_BY_H2_ZERO = "RigidByH2Zero"
INCONCLUSIVE = "Inconclusive"


@dataclass(frozen=True)
class RigidityCertificate:
    verdict: str
    h2_dims: CohomologyDims
    orbit_dim: int


def rigidity_certificate(g: Algebra) -> RigidityCertificate:
    """H^2-based certificate plus the orbit dimension n^2 - dim Der."""
    if g.kind != LIE:
        raise AlgebraError("rigidity_certificate needs a Lie algebra")
    require_identities(g)
    h2 = chevalley_dims(g, 2)
    orbit = g.dim ** 2 - derivation_space(g).dim
    verdict = RIGID_BY_H2_ZERO if h2.dim_H == 0 else INCONCLUSIVE
    return RigidityCertificate(verdict=verdict, h2_dims=h2, orbit_dim=orbit)


@dataclass(frozen=True)
class LpqCertificate:
    """Rigidity within the product variety: both factor H^2 spaces vanish."""

    verdict: str
    h2_lie: CohomologyDims
    h2_harrison: CohomologyDims


def rigid_in_Lpq(g: Algebra, A: Algebra) -> LpqCertificate:
    if g.kind != LIE or A.kind != ASSOC_COMM:
        raise AlgebraError("rigid_in_Lpq needs a (Lie, assoc-comm) pair")
    require_identities(g)
    require_identities(A)
    h2_lie = chevalley_dims(g, 2)
    h2_har = harrison_h2(A)
    verdict = (RIGID_BY_H2_ZERO
               if h2_lie.dim_H == 0 and h2_har.dim_H == 0 else INCONCLUSIVE)
    return LpqCertificate(verdict=verdict, h2_lie=h2_lie, h2_harrison=h2_har)


def _jacobiator_t1(g: Algebra, phi: ChevalleyCochain, i: int, j: int, k: int):
    """Order-t coefficient of the Jacobi sum of mu + t*phi on (e_i,e_j,e_k)."""
    total = None
    for (a, b, c) in ((i, j, k), (j, k, i), (k, i, j)):
        term = vec_add(
            g.multiply(phi.value((a, b)), g.basis_vector(c)),
            phi.eval_mixed(g.basis_product(a, b), (c,)),
        )
        total = term if total is None else vec_add(total, term)
    return total


def infinitesimal_check(g: Algebra, phi: ChevalleyCochain) -> bool:
    """Is phi a 2-cocycle?  Two routes must agree:

    the coboundary d(phi) vanishes, and the t^1 coefficient of the
    Jacobiator of mu + t*phi vanishes on every basis triple (they differ by
    an overall sign).
    """
    if g.kind != LIE:
        raise AlgebraError("infinitesimal_check needs a Lie algebra")
    if phi.degree != 2 or phi.dim != g.dim:
        raise AlgebraError("phi must be a degree-2 cochain on g")
    d = chevalley_delta(g, phi)
    for (i, j, k) in _triples(g.dim):
        t1 = _jacobiator_t1(g, phi, i, j, k)
        if not vec_is_zero(vec_add(t1, d.value((i, j, k)))):
            raise AssertionError(
                "coboundary and Jacobiator coefficient disagree; "
                "sign convention bug")
    return d.is_zero()


def _triples(n: int):
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            for k in range(j + 1, n + 1):
                yield (i, j, k)


@dataclass(frozen=True)
class TruncatedDeformation:
    """mu + t phi_1 + t^2 phi_2 + ... over K[t]/(t^(order+1))."""

    base: Algebra
    cochains: tuple
    order: int

    def __post_init__(self):
        if self.order < 1:
            raise AlgebraError("truncation order must be >= 1")
        for c in self.cochains:
            if not isinstance(c, ChevalleyCochain) or c.degree != 2:
                raise AlgebraError("deformation terms must be degree-2 cochains")
            if c.dim != self.base.dim:
                raise AlgebraError("deformation term dimension mismatch")


@dataclass(frozen=True)
class DeformationReport:
    ok_up_to: int
    first_obstruction: Optional[tuple]  # (order, (i, j, k)) or None


def truncated_deformation_check(d: TruncatedDeformation) -> DeformationReport:
    """Jacobiator of the deformed bracket, order by order mod t^(N+1).

    Reports the highest order through which every coefficient vanishes and
    the first violating (order, basis triple) otherwise.  Order 0 is the
    Jacobi identity of the base bracket itself.
    """
    g = d.base
    n, N = g.dim, d.order

    def bracket_poly(i: int, j: int) -> list:
        coeffs = [g.basis_product(i, j)]
        for m, phi in enumerate(d.cochains, start=1):
            if m > N:
                break
            coeffs.append(phi.value((i, j)))
        while len(coeffs) < N + 1:
            coeffs.append(vec_zero(n))
        return coeffs[:N + 1]

    def bracket_poly_mixed(u: list, k: int) -> list:
        # u is a polynomial vector; bracket with basis e_k, truncated.
        out = [list(vec_zero(n)) for _ in range(N + 1)]
        for m, vec in enumerate(u):
            for l, c in enumerate(vec, start=1):
                if c == 0:
                    continue
                inner = bracket_poly(l, k)
                for m2, w in enumerate(inner):
                    if m + m2 > N:
                        break
                    for s in range(n):
                        if w[s] != 0:
                            out[m + m2][s] += c * w[s]
        return [tuple(row) for row in out]

    worst = None
    for (i, j, k) in _triples(n):
        total = [list(vec_zero(n)) for _ in range(N + 1)]
        for (a, b, c) in ((i, j, k), (j, k, i), (k, i, j)):
            term = bracket_poly_mixed(bracket_poly(a, b), c)
            for m in range(N + 1):
                for s in range(n):
                    total[m][s] += term[m][s]
        for m in range(N + 1):
            if not vec_is_zero(tuple(total[m])):
                if worst is None or (m, (i, j, k)) < worst:
                    worst = (m, (i, j, k))
                break
    if worst is None:
        return DeformationReport(ok_up_to=N, first_obstruction=None)
    return DeformationReport(ok_up_to=worst[0] - 1, first_obstruction=worst)
