"""Chevalley-Eilenberg and Hochschild/Harrison cohomology in low degrees.

Sign convention for the Chevalley coboundary with adjoint coefficients:

    (d phi)(x_0, ..., x_k) = sum_i (-1)^i [x_i, phi(..., x_i omitted, ...)]
        + sum_{i<j} (-1)^(i+j) phi([x_i, x_j], ..., x_i, x_j omitted, ...)

which satisfies d.d = 0 and makes Z^1 exactly the derivation algebra.
Cochain bases are ordered lexicographically on index tuples with the value
coordinate innermost, so coboundary matrices have reproducible shapes.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Mapping, Optional, Sequence

from . import scalars
from .algebra import ASSOC_COMM, LIE, Algebra, AlgebraError, require_identities
from .current import current_algebra
from .linalg import (
    Matrix,
    Subspace,
    _entry,
    kernel_basis,
    rank,
    vec_add,
    vec_is_zero,
    vec_scale,
    vec_sub,
    vec_zero,
)
from .structure import center, subspace_product


def increasing_tuples(n: int, k: int) -> list:
    return list(combinations(range(1, n + 1), k))


def _sort_with_sign(tup):
    """(sorted tuple, permutation sign); sign 0 on repeated indices."""
    items = list(tup)
    if len(set(items)) != len(items):
        return tuple(items), 0
    sign = 1
    for i in range(len(items)):
        for j in range(i + 1, len(items)):
            if items[i] > items[j]:
                items[i], items[j] = items[j], items[i]
                sign = -sign
    return tuple(items), sign


class ChevalleyCochain:
    """Alternating k-cochain (k <= 3) with coefficients in the algebra.

    Values are stored on strictly increasing index tuples only; evaluation
    on any other tuple applies the permutation sign, and repeated indices
    give zero.  A 0-cochain is a single vector stored at the empty tuple.
    """

    __slots__ = ("degree", "dim", "data")

    def __init__(self, degree: int, dim: int, data: Mapping = ()):
        if degree not in (0, 1, 2, 3):
            raise AlgebraError("supported cochain degrees are 0..3")
        self.degree = degree
        self.dim = dim
        table = {}
        items = data.items() if hasattr(data, "items") else data
        for tup, vec in items:
            tup = tuple(tup)
            if len(tup) != degree:
                raise AlgebraError(f"tuple {tup} has wrong arity for degree {degree}")
            if any(not 1 <= i <= dim for i in tup):
                raise AlgebraError(f"tuple {tup} out of range 1..{dim}")
            if list(tup) != sorted(set(tup)):
                raise AlgebraError(f"tuple {tup} must be strictly increasing")
            vec = tuple(_entry(x) for x in vec)
            if len(vec) != dim:
                raise AlgebraError("cochain values must have the algebra dimension")
            if not vec_is_zero(vec):
                table[tup] = vec
        self.data = dict(sorted(table.items()))

    @classmethod
    def zero(cls, degree: int, dim: int) -> "ChevalleyCochain":
        return cls(degree, dim)

    def value(self, tup) -> tuple:
        stup, sign = _sort_with_sign(tuple(tup))
        if sign == 0:
            return vec_zero(self.dim)
        vec = self.data.get(stup)
        if vec is None:
            return vec_zero(self.dim)
        return vec if sign == 1 else vec_scale(-1, vec)

    def eval_mixed(self, first_vec: Sequence, rest: Sequence[int]) -> tuple:
        """phi(v, e_r1, ..., e_rk-1) for a vector in the first slot."""
        acc = vec_zero(self.dim)
        for l, c in enumerate(first_vec, start=1):
            if c != 0:
                acc = vec_add(acc, vec_scale(c, self.value((l, *rest))))
        return acc

    def __add__(self, other: "ChevalleyCochain") -> "ChevalleyCochain":
        if (self.degree, self.dim) != (other.degree, other.dim):
            raise AlgebraError("cochain shapes differ")
        keys = set(self.data) | set(other.data)
        return ChevalleyCochain(
            self.degree, self.dim,
            {k: vec_add(self.value(k), other.value(k)) for k in keys})

    def scale(self, c) -> "ChevalleyCochain":
        return ChevalleyCochain(
            self.degree, self.dim,
            {k: vec_scale(c, v) for k, v in self.data.items()})

    def is_zero(self) -> bool:
        return not self.data

    def __eq__(self, other):
        if not isinstance(other, ChevalleyCochain):
            return NotImplemented
        return (self.degree, self.dim, self.data) == (
            other.degree, other.dim, other.data)

    def __repr__(self):
        return f"ChevalleyCochain(deg {self.degree}, dim {self.dim}, {len(self.data)} entries)"


class SymmetricCochain:
    """Symmetric bilinear map with values in the algebra, stored on i <= j."""

    __slots__ = ("dim", "data")

    def __init__(self, dim: int, data: Mapping = ()):
        self.dim = dim
        table = {}
        items = data.items() if hasattr(data, "items") else data
        for (i, j), vec in items:
            if not (1 <= i <= dim and 1 <= j <= dim):
                raise AlgebraError(f"pair {(i, j)} out of range 1..{dim}")
            key = (min(i, j), max(i, j))
            vec = tuple(_entry(x) for x in vec)
            if len(vec) != dim:
                raise AlgebraError("cochain values must have the algebra dimension")
            if key in table and table[key] != vec:
                raise AlgebraError(f"inconsistent duplicate entry at {key}")
            if not vec_is_zero(vec):
                table[key] = vec
        self.data = dict(sorted(table.items()))

    @classmethod
    def zero(cls, dim: int) -> "SymmetricCochain":
        return cls(dim)

    def value(self, i: int, j: int) -> tuple:
        return self.data.get((min(i, j), max(i, j)), vec_zero(self.dim))

    def eval_mixed(self, first_vec: Sequence, j: int) -> tuple:
        acc = vec_zero(self.dim)
        for l, c in enumerate(first_vec, start=1):
            if c != 0:
                acc = vec_add(acc, vec_scale(c, self.value(l, j)))
        return acc

    def eval_pair(self, x: Sequence, y: Sequence) -> tuple:
        """Bilinear evaluation on two coordinate vectors."""
        acc = vec_zero(self.dim)
        for i, ci in enumerate(x, start=1):
            if ci == 0:
                continue
            for j, cj in enumerate(y, start=1):
                if cj != 0:
                    acc = vec_add(acc, vec_scale(ci * cj, self.value(i, j)))
        return acc

    def is_zero(self) -> bool:
        return not self.data

    def __repr__(self):
        return f"SymmetricCochain(dim {self.dim}, {len(self.data)} entries)"


def bracket_cochain(g: Algebra) -> ChevalleyCochain:
    """The multiplication of a Lie algebra as a degree-2 cochain."""
    if g.kind != LIE:
        raise AlgebraError("bracket_cochain needs a Lie algebra")
    return ChevalleyCochain(2, g.dim, dict(g.table))

def multiplication_cochain(A: Algebra) -> SymmetricCochain:
    """The multiplication of a commutative algebra as a symmetric cochain."""
    if A.kind != ASSOC_COMM:
        raise AlgebraError("multiplication_cochain needs an assoc-comm algebra")
    return SymmetricCochain(A.dim, dict(A.table))


# ---------------------------------------------------------------------------
# Chevalley coboundary and dimensions
# ---------------------------------------------------------------------------

def chevalley_delta(g: Algebra, c: ChevalleyCochain) -> ChevalleyCochain:
    """Adjoint-coefficient coboundary, degrees 0 -> 1 -> 2 -> 3."""
    if g.kind != LIE:
        raise AlgebraError("chevalley_delta needs a Lie algebra")
    if c.dim != g.dim:
        raise AlgebraError("cochain dimension does not match the algebra")
    if c.degree > 2:
        raise AlgebraError("coboundary implemented for degrees 0..2 only")
    k = c.degree
    out = {}
    for tup in increasing_tuples(g.dim, k + 1):
        val = vec_zero(g.dim)
        for pos in range(k + 1):
            rest = tup[:pos] + tup[pos + 1:]
            term = g.multiply(g.basis_vector(tup[pos]), c.value(rest))
            val = vec_add(val, term if pos % 2 == 0 else vec_scale(-1, term))
        for p1 in range(k + 1):
            for p2 in range(p1 + 1, k + 1):
                w = g.basis_product(tup[p1], tup[p2])
                rest = tuple(x for q, x in enumerate(tup) if q not in (p1, p2))
                term = c.eval_mixed(w, rest)
                val = vec_add(val, term if (p1 + p2) % 2 == 0
                              else vec_scale(-1, term))
        if not vec_is_zero(val):
            out[tup] = val
    return ChevalleyCochain(k + 1, g.dim, out)


def cochain_to_flat(c: ChevalleyCochain) -> tuple:
    coords = []
    for tup in increasing_tuples(c.dim, c.degree):
        coords.extend(c.value(tup))
    return tuple(coords)


def cochain_from_flat(degree: int, dim: int, flat: Sequence) -> ChevalleyCochain:
    tuples = increasing_tuples(dim, degree)
    if len(flat) != len(tuples) * dim:
        raise AlgebraError("flat vector has the wrong length")
    data = {}
    for pos, tup in enumerate(tuples):
        data[tup] = tuple(flat[pos * dim:(pos + 1) * dim])
    return ChevalleyCochain(degree, dim, data)


def chevalley_delta_matrix(g: Algebra, k: int) -> Matrix:
    """Matrix of the degree-k coboundary in the ordered tuple bases."""
    n = g.dim
    cols = []
    for tup in increasing_tuples(n, k):
        for s in range(1, n + 1):
            basis_cochain = ChevalleyCochain(k, n, {tup: g.basis_vector(s)})
            cols.append(cochain_to_flat(chevalley_delta(g, basis_cochain)))
    target_dim = len(increasing_tuples(n, k + 1)) * n
    if not cols:
        return Matrix.zeros(target_dim, 0)
    if target_dim == 0:
        # zero map into the zero space: keep the column count visible
        return Matrix.zeros(1, len(cols))
    return Matrix.from_columns(cols)


@dataclass(frozen=True)
class CohomologyDims:
    dim_Z: int
    dim_B: int
    dim_H: int

    def __post_init__(self):
        if self.dim_H != self.dim_Z - self.dim_B or self.dim_H < 0:
            raise AlgebraError("inconsistent cohomology dimensions")


def chevalley_dims(g: Algebra, k: int) -> CohomologyDims:
    """dim Z^k, dim B^k, dim H^k for k in {1, 2}, by exact rank."""
    if g.kind != LIE:
        raise AlgebraError("chevalley_dims needs a Lie algebra")
    if k not in (1, 2):
        raise AlgebraError("chevalley_dims supports k in {1, 2}")
    n = g.dim
    ck_dim = len(increasing_tuples(n, k)) * n
    z = ck_dim - rank(chevalley_delta_matrix(g, k))
    b = rank(chevalley_delta_matrix(g, k - 1))
    return CohomologyDims(dim_Z=z, dim_B=b, dim_H=z - b)


# ---------------------------------------------------------------------------
# Derivations
# ---------------------------------------------------------------------------

def derivations(alg: Algebra) -> list:
    """Echelon basis of {f : f(xy) = f(x)y + x f(y)} via the Leibniz system.

    Works for both kinds; for Lie algebras this is Z^1 computed through an
    independent code path (no coboundary matrices involved).
    Operators are flattened row-major: unknown (r, c) at (r-1)*n + (c-1).
    """
    n = alg.dim
    rows = []
    for i in range(1, n + 1):
        for j in range(i, n + 1):
            if alg.kind == LIE and i == j:
                continue
            w = alg.basis_product(i, j)
            for s in range(1, n + 1):
                row = [scalars.zero(alg.field)] * (n * n)
                # + f(e_i e_j)_s
                for c0 in range(1, n + 1):
                    if w[c0 - 1] != 0:
                        row[(s - 1) * n + (c0 - 1)] += w[c0 - 1]
                # - (f(e_i) e_j)_s  and  - (e_i f(e_j))_s
                for r in range(1, n + 1):
                    coeff = alg.basis_product(r, j)[s - 1]
                    if coeff != 0:
                        row[(r - 1) * n + (i - 1)] -= coeff
                    coeff = alg.basis_product(i, r)[s - 1]
                    if coeff != 0:
                        row[(r - 1) * n + (j - 1)] -= coeff
                rows.append(row)
    if not rows:
        basis = [tuple(v) for v in Matrix.identity(n * n).rows]
    else:
        basis = kernel_basis(Matrix(rows))
    return [Matrix.from_flat(v, n, n) for v in basis]


def derivation_space(alg: Algebra) -> Subspace:
    """The derivations as a subspace of flattened operators."""
    return Subspace(alg.dim ** 2, [m.flatten() for m in derivations(alg)])


def inner_derivations(g: Algebra) -> Subspace:
    """span{ad e_i} in the same flattened-operator coordinates."""
    if g.kind != LIE:
        raise AlgebraError("inner_derivations needs a Lie algebra")
    return Subspace(
        g.dim ** 2,
        [g.ad_matrix(g.basis_vector(i)).flatten() for i in range(1, g.dim + 1)],
    )


# ---------------------------------------------------------------------------
# Hochschild / Harrison
# ---------------------------------------------------------------------------

def hochschild_delta1(A: Algebra, f: Matrix) -> SymmetricCochain:
    """(d f)(a, b) = a f(b) - f(ab) + f(a) b; symmetric since A is commutative."""
    if A.kind != ASSOC_COMM:
        raise AlgebraError("hochschild_delta1 needs an assoc-comm algebra")
    data = {}
    for i in range(1, A.dim + 1):
        for j in range(i, A.dim + 1):
            ei, ej = A.basis_vector(i), A.basis_vector(j)
            val = vec_add(
                vec_sub(A.multiply(ei, f.apply(ej)),
                        f.apply(A.basis_product(i, j))),
                A.multiply(f.apply(ei), ej),
            )
            data[(i, j)] = val
    return SymmetricCochain(A.dim, data)


def hochschild_delta2(A: Algebra, psi: SymmetricCochain) -> dict:
    """(d psi)(a,b,c) = a psi(b,c) - psi(ab,c) + psi(a,bc) - psi(a,b) c.

    Returns the full trilinear table {(i,j,k): vector}, zero entries kept out.
    """
    if A.kind != ASSOC_COMM:
        raise AlgebraError("hochschild_delta2 needs an assoc-comm algebra")
    out = {}
    n = A.dim
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            for k in range(1, n + 1):
                val = A.multiply(A.basis_vector(i), psi.value(j, k))
                val = vec_sub(val, psi.eval_mixed(A.basis_product(i, j), k))
                val = vec_add(val, psi.eval_mixed(A.basis_product(j, k), i))
                val = vec_sub(val, A.multiply(psi.value(i, j), A.basis_vector(k)))
                if not vec_is_zero(val):
                    out[(i, j, k)] = val
    return out


def symmetric_to_flat(c: SymmetricCochain) -> tuple:
    coords = []
    for i, j in combinations_with_diag(c.dim):
        coords.extend(c.value(i, j))
    return tuple(coords)


def combinations_with_diag(n: int) -> list:
    return [(i, j) for i in range(1, n + 1) for j in range(i, n + 1)]


def harrison_h2(A: Algebra) -> CohomologyDims:
    """Harrison H^2: symmetric Hochschild 2-cocycles modulo 1-coboundaries.

    Coboundaries of 1-cochains are automatically symmetric over a
    commutative algebra, so no intersection step is needed.
    """
    if A.kind != ASSOC_COMM:
        raise AlgebraError("harrison_h2 needs an assoc-comm algebra")
    n = A.dim
    pairs = combinations_with_diag(n)
    cocycle_cols = []
    for (i, j) in pairs:
        for s in range(1, n + 1):
            basis_cochain = SymmetricCochain(n, {(i, j): A.basis_vector(s)})
            defect = hochschild_delta2(A, basis_cochain)
            col = []
            for a in range(1, n + 1):
                for b in range(1, n + 1):
                    for c in range(1, n + 1):
                        col.extend(defect.get((a, b, c), vec_zero(n)))
            cocycle_cols.append(tuple(col))
    z = len(cocycle_cols) - rank(Matrix.from_columns(cocycle_cols))
    cob_cols = []
    for r in range(1, n + 1):
        for c in range(1, n + 1):
            f = Matrix([[1 if (ri, ci) == (r - 1, c - 1) else 0
                         for ci in range(n)] for ri in range(n)])
            cob_cols.append(symmetric_to_flat(hochschild_delta1(A, f)))
    b = rank(Matrix.from_columns(cob_cols))
    return CohomologyDims(dim_Z=z, dim_B=b, dim_H=z - b)


# ---------------------------------------------------------------------------
# Decomposable 2-cochains of a current Lie algebra
# ---------------------------------------------------------------------------

class DecomposableDelta:
    """Verbatim evaluator of the cyclic-sum coboundary expression for
    psi1 (x) phi2 + phi3 (x) psi4 over g (x) A.

    All four blocks are summed with plus signs, exactly as displayed;
    each block is a cyclic sum over simultaneous permutations of the g and
    A arguments.  Values are flat p*q tensors in the g-major layout.
    """

    _CYCLES = ((0, 1, 2), (1, 2, 0), (2, 0, 1))

    def __init__(self, g: Algebra, A: Algebra, psi1: ChevalleyCochain,
                 phi2: SymmetricCochain, phi3: SymmetricCochain,
                 psi4: SymmetricCochain):
        if psi1.degree != 2 or psi1.dim != g.dim:
            raise AlgebraError("psi1 must be a degree-2 cochain on g")
        if phi3.dim != g.dim:
            raise AlgebraError("phi3 must live on g")
        if phi2.dim != A.dim or psi4.dim != A.dim:
            raise AlgebraError("phi2 and psi4 must live on A")
        self.g, self.A = g, A
        self.psi1, self.phi2, self.phi3, self.psi4 = psi1, phi2, phi3, psi4

    def _outer(self, xs, ys):
        return tuple(x * y for x in xs for y in ys)

    def evaluate(self, g_tuple: Sequence[int], a_tuple: Sequence[int]) -> tuple:
        g, A = self.g, self.A
        total = vec_zero(g.dim * A.dim)
        for cyc in self._CYCLES:
            (x1, x2, x3) = (g_tuple[c] for c in cyc)
            (a1, a2, a3) = (a_tuple[c] for c in cyc)
            e3, f3 = g.basis_vector(x3), A.basis_vector(a3)
            blocks = (
                self._outer(g.multiply(self.psi1.value((x1, x2)), e3),
                            A.multiply(self.phi2.value(a1, a2), f3)),
                self._outer(g.multiply(self.phi3.value(x1, x2), e3),
                            A.multiply(self.psi4.value(a1, a2), f3)),
                self._outer(self.psi1.eval_mixed(g.basis_product(x1, x2), (x3,)),
                            self.phi2.eval_mixed(A.basis_product(a1, a2), a3)),
                self._outer(self.phi3.eval_mixed(g.basis_product(x1, x2), x3),
                            self.psi4.eval_mixed(A.basis_product(a1, a2), a3)),
            )
            for b in blocks:
                total = vec_add(total, b)
        return total

    def first_nonzero(self) -> Optional[tuple]:
        p, q = self.g.dim, self.A.dim
        for gt in _all_triples(p):
            for at in _all_triples(q):
                if not vec_is_zero(self.evaluate(gt, at)):
                    return gt, at
        return None

    def is_zero_on_basis(self) -> bool:
        return self.first_nonzero() is None


def _all_triples(n: int) -> list:
    return [(i, j, k)
            for i in range(1, n + 1)
            for j in range(1, n + 1)
            for k in range(1, n + 1)]


def delta_on_decomposable(g: Algebra, A: Algebra, psi1: ChevalleyCochain,
                          phi2: SymmetricCochain, phi3: SymmetricCochain,
                          psi4: SymmetricCochain) -> DecomposableDelta:
    return DecomposableDelta(g, A, psi1, phi2, phi3, psi4)


class BulletProduct:
    """mu2 * psi4 as the cyclic trilinear map sum mu2(psi4(a1,a2), a3)."""

    def __init__(self, A: Algebra, psi4: SymmetricCochain):
        if A.kind != ASSOC_COMM:
            raise AlgebraError("bullet needs an assoc-comm algebra")
        if psi4.dim != A.dim:
            raise AlgebraError("cochain dimension does not match the algebra")
        self.A, self.psi4 = A, psi4

    def evaluate(self, a1: int, a2: int, a3: int) -> tuple:
        A = self.A
        args = (a1, a2, a3)
        total = vec_zero(A.dim)
        for cyc in DecomposableDelta._CYCLES:
            b1, b2, b3 = (args[c] for c in cyc)
            total = vec_add(
                total,
                A.multiply(self.psi4.value(b1, b2), A.basis_vector(b3)))
        return total

    def is_zero_on_basis(self) -> bool:
        return all(vec_is_zero(self.evaluate(*t))
                   for t in _all_triples(self.A.dim))


def bullet(A: Algebra, psi4: SymmetricCochain) -> BulletProduct:
    return BulletProduct(A, psi4)


# ---------------------------------------------------------------------------
# The H^1 dimension formula for current Lie algebras
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class H1CurrentFormula:
    """Both sides of the H^1 dimension formula for g (x) A.

    rhs = h1(g)*dim A + dim Hom(g,g)*dim Der(A)
        + dim Hom(g/[g,g], Z(g)) * dim(End(A)/(L_A + Der A)),
    with the embedded copy of A read as the left-multiplication operators.
    A mismatch is reported, never hidden.
    """

    lhs_dim: int
    summand_dims: tuple
    rhs_dim: int

    @property
    def difference(self) -> int:
        return self.rhs_dim - self.lhs_dim

    @property
    def matches(self) -> bool:
        return self.lhs_dim == self.rhs_dim


def h1_current_formula(g: Algebra, A: Algebra) -> H1CurrentFormula:
    require_identities(g)
    require_identities(A)
    flat = current_algebra(g, A)
    lhs = chevalley_dims(flat, 1).dim_H

    h1_g = chevalley_dims(g, 1).dim_H
    s1 = h1_g * A.dim

    der_a = derivation_space(A)
    s2 = g.dim ** 2 * der_a.dim

    derived_dim = subspace_product(g, Subspace.full(g.dim),
                                   Subspace.full(g.dim)).dim
    hom_quot_center = (g.dim - derived_dim) * center(g).dim
    lmults = Subspace(
        A.dim ** 2,
        [A.left_mult_matrix(A.basis_vector(a)).flatten()
         for a in range(1, A.dim + 1)],
    )
    end_quot = A.dim ** 2 - (lmults + der_a).dim
    s3 = hom_quot_center * end_quot

    return H1CurrentFormula(lhs_dim=lhs, summand_dims=(s1, s2, s3),
                            rhs_dim=s1 + s2 + s3)
