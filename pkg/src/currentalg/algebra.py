"""Finite-dimensional algebras presented by structure constants.

Two kinds are supported: Lie algebras (antisymmetric bracket) and
associative commutative algebras.  Tables are stored symmetry-reduced:
only i < j entries for Lie, only i <= j for assoc-comm.  Basis indices are
1-based throughout; vector coordinates are 0-based tuples.

Passing :func:`check_identities` is deliberately *not* a construction
invariant: deformed or corrupted candidates are representable, and the
identity check is a separately testable predicate.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Optional, Sequence

from . import scalars
from .linalg import Matrix, inverse, vec_add, vec_is_zero, vec_scale, vec_sub, vec_zero

LIE = "lie"
ASSOC_COMM = "assoc-comm"
KINDS = (LIE, ASSOC_COMM)


class AlgebraError(ValueError):
    """Malformed algebra data or incompatible operands."""


class IdentityError(AlgebraError):
    """An operation required the defining identities and they fail."""


class Algebra:
    """An algebra over Q or Q(i) given by its structure constant table.

    ``products`` maps 1-based index pairs (i, j) to coefficient vectors of
    e_i * e_j.  Entries may be given in any order; the constructor folds them
    onto the symmetry-reduced key set and rejects inconsistent duplicates.
    Instances are immutable by convention; all operations return new values.
    """

    __slots__ = ("name", "kind", "field", "dim", "table", "basis_labels")

    def __init__(self, name: str, kind: str, field: str, dim: int,
                 products: Mapping[tuple, Sequence] = (),
                 basis_labels: Optional[Sequence[str]] = None):
        if kind not in KINDS:
            raise AlgebraError(f"unknown kind {kind!r}")
        if field not in scalars.FIELDS:
            raise AlgebraError(f"unknown field {field!r}")
        if not isinstance(dim, int) or dim < 1:
            raise AlgebraError("dim must be a positive integer")
        if basis_labels is not None:
            basis_labels = tuple(basis_labels)
            if len(basis_labels) != dim:
                raise AlgebraError("basis labels must match the dimension")
        self.name = name
        self.kind = kind
        self.field = field
        self.dim = dim
        self.basis_labels = basis_labels
        table: dict[tuple, tuple] = {}
        items = products.items() if hasattr(products, "items") else products
        for (i, j), coeffs in items:
            self._check_index(i), self._check_index(j)
            vec = scalars.coerce_vector(field, coeffs)
            if len(vec) != dim:
                raise AlgebraError(f"product ({i},{j}) has length {len(vec)}, want {dim}")
            if kind == LIE:
                if i == j:
                    if not vec_is_zero(vec):
                        raise AlgebraError(f"[e{i},e{i}] must vanish for a Lie algebra")
                    continue
                key, val = ((i, j), vec) if i < j else ((j, i), vec_scale(-1, vec))
            else:
                key, val = ((min(i, j), max(i, j)), vec)
            if key in table and table[key] != val:
                raise AlgebraError(f"inconsistent duplicate entry for product {key}")
            table[key] = val
        self.table = {k: v for k, v in sorted(table.items()) if not vec_is_zero(v)}

    def _check_index(self, i):
        if not isinstance(i, int) or not 1 <= i <= self.dim:
            raise AlgebraError(f"basis index {i!r} out of range 1..{self.dim}")

    # -- products ----------------------------------------------------------

    def basis_product(self, i: int, j: int) -> tuple:
        """e_i * e_j with the stored symmetry class filled back in."""
        self._check_index(i), self._check_index(j)
        if self.kind == LIE:
            if i == j:
                return vec_zero(self.dim)
            if i < j:
                return self.table.get((i, j), vec_zero(self.dim))
            return vec_scale(-1, self.table.get((j, i), vec_zero(self.dim)))
        key = (min(i, j), max(i, j))
        return self.table.get(key, vec_zero(self.dim))

    def multiply(self, x: Sequence, y: Sequence) -> tuple:
        """Bilinear extension of the structure constants."""
        if len(x) != self.dim or len(y) != self.dim:
            raise AlgebraError("vector length does not match algebra dimension")
        x = scalars.coerce_vector(self.field, x)
        y = scalars.coerce_vector(self.field, y)
        acc = vec_zero(self.dim)
        for i, xi in enumerate(x, start=1):
            if xi == 0:
                continue
            for j, yj in enumerate(y, start=1):
                if yj == 0:
                    continue
                prod = self.basis_product(i, j)
                if not vec_is_zero(prod):
                    acc = vec_add(acc, vec_scale(xi * yj, prod))
        return acc

    def basis_vector(self, i: int) -> tuple:
        self._check_index(i)
        one = scalars.one(self.field)
        zero = scalars.zero(self.field)
        return tuple(one if k == i else zero for k in range(1, self.dim + 1))

    def left_mult_matrix(self, a: Sequence) -> Matrix:
        """L_a, columns a * e_j."""
        return Matrix.from_columns(
            [self.multiply(a, self.basis_vector(j)) for j in range(1, self.dim + 1)]
        )

    def ad_matrix(self, x: Sequence) -> Matrix:
        """ad x = [x, .] for Lie kind (same as L_x; kept for readability)."""
        if self.kind != LIE:
            raise AlgebraError("ad is defined for Lie kind")
        return self.left_mult_matrix(x)

    # -- equality is structural on canonical tables; names are labels only --

    def same_constants(self, other: "Algebra") -> bool:
        return (self.kind, self.field, self.dim, self.table) == (
            other.kind, other.field, other.dim, other.table)

    def __eq__(self, other):
        if not isinstance(other, Algebra):
            return NotImplemented
        return self.same_constants(other)

    def __hash__(self):
        return hash((self.kind, self.field, self.dim,
                     tuple(sorted(self.table.items()))))

    def renamed(self, name: str) -> "Algebra":
        return Algebra(name, self.kind, self.field, self.dim, self.table,
                       basis_labels=self.basis_labels)

    def __repr__(self):
        return (f"Algebra({self.name!r}, kind={self.kind}, field={self.field}, "
                f"dim={self.dim}, {len(self.table)} products)")


@dataclass(frozen=True)
class IdentityReport:
    """Residuals of the defining identities.

    ``violations`` lists (i, j, k, s): the s-coordinate of the Jacobi sum on
    (e_i, e_j, e_k) for Lie kind (i < j < k suffices because the bracket is
    antisymmetric by construction), or of the associator (e_i e_j) e_k -
    e_i (e_j e_k) for assoc-comm kind.
    """

    kind: str
    passed: bool
    violations: tuple


def check_identities(alg: Algebra) -> IdentityReport:
    """Exact residual check: Jacobi for Lie, associativity for assoc-comm."""
    n = alg.dim
    violations = []
    if alg.kind == LIE:
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                for k in range(j + 1, n + 1):
                    jac = vec_add(
                        vec_add(
                            alg.multiply(alg.basis_product(i, j), alg.basis_vector(k)),
                            alg.multiply(alg.basis_product(j, k), alg.basis_vector(i)),
                        ),
                        alg.multiply(alg.basis_product(k, i), alg.basis_vector(j)),
                    )
                    violations.extend(
                        (i, j, k, s) for s, c in enumerate(jac, start=1) if c != 0
                    )
    else:
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                for k in range(1, n + 1):
                    assoc = vec_sub(
                        alg.multiply(alg.basis_product(i, j), alg.basis_vector(k)),
                        alg.multiply(alg.basis_vector(i), alg.basis_product(j, k)),
                    )
                    violations.extend(
                        (i, j, k, s) for s, c in enumerate(assoc, start=1) if c != 0
                    )
    return IdentityReport(kind=alg.kind, passed=not violations,
                          violations=tuple(violations))


def require_identities(alg: Algebra) -> None:
    report = check_identities(alg)
    if not report.passed:
        raise IdentityError(
            f"{alg.name}: defining identities fail at {len(report.violations)} "
            f"tuples, first {report.violations[0]}"
        )


def change_basis(alg: Algebra, f: Matrix) -> Algebra:
    """Transport of structure: mu_f(x, y) = f^{-1}(mu(f x, f y))."""
    if f.shape != (alg.dim, alg.dim):
        raise AlgebraError("basis-change matrix has the wrong shape")
    f_inv = inverse(f)
    cols = f.columns()
    products = {}
    for i in range(1, alg.dim + 1):
        for j in range(i, alg.dim + 1):
            if alg.kind == LIE and i == j:
                continue
            w = alg.multiply(cols[i - 1], cols[j - 1])
            products[(i, j)] = f_inv.apply(w)
    return Algebra(alg.name, alg.kind, alg.field, alg.dim, products)


def direct_sum(a: Algebra, b: Algebra, name: Optional[str] = None) -> Algebra:
    """Product algebra: block-diagonal constants, cross products zero."""
    if a.kind != b.kind:
        raise AlgebraError("direct_sum needs matching kinds")
    if a.field != b.field:
        raise AlgebraError("direct_sum needs matching fields")
    dim = a.dim + b.dim
    zero = scalars.zero(a.field)
    products = {}
    for (i, j), vec in a.table.items():
        products[(i, j)] = vec + (zero,) * b.dim
    for (i, j), vec in b.table.items():
        products[(i + a.dim, j + a.dim)] = (zero,) * a.dim + vec
    return Algebra(name or f"{a.name}+{b.name}", a.kind, a.field, dim, products)


def complexify(alg: Algebra) -> Algebra:
    """Scalar extension Q -> Q(i): identical table, field tag widened."""
    if alg.field == scalars.QI:
        raise AlgebraError(f"{alg.name} is already over Qi")
    return Algebra(alg.name, alg.kind, scalars.QI, alg.dim, alg.table)


def is_derivation(alg: Algebra, f: Matrix) -> bool:
    """Leibniz rule f(xy) = f(x)y + x f(y) on all (reduced) basis pairs."""
    if f.shape != (alg.dim, alg.dim):
        raise AlgebraError("operator shape does not match algebra dimension")
    for i in range(1, alg.dim + 1):
        for j in range(i, alg.dim + 1):
            if alg.kind == LIE and i == j:
                continue
            lhs = f.apply(alg.basis_product(i, j))
            rhs = vec_add(
                alg.multiply(f.apply(alg.basis_vector(i)), alg.basis_vector(j)),
                alg.multiply(alg.basis_vector(i), f.apply(alg.basis_vector(j))),
            )
            if lhs != rhs:
                return False
    return True
