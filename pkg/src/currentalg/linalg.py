"""Exact dense linear algebra over Q and Q(i).

Row-reduction is plain Gauss-Jordan on field elements; Fraction keeps every
entry in lowest terms, so no separate fraction-free pass is needed at the
matrix sizes this package works with.  Everything returns canonical reduced
echelon representatives, which makes subspace equality a plain ``==``.

Vectors are tuples of scalars with 0-based coordinates.  Basis indices in the
algebra layer are 1-based; the translation happens there, not here.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .scalars import GaussianRational, Scalar, ScalarError

_ZERO = Fraction(0)
_ONE = Fraction(1)


class SingularMatrixError(ValueError):
    """Inversion was requested for a singular matrix."""


def _entry(x) -> Scalar:
    if isinstance(x, (Fraction, GaussianRational)):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise ScalarError(f"matrix entries must be exact scalars, got {type(x).__name__}")


class Matrix:
    """Immutable dense matrix of exact scalars."""

    __slots__ = ("rows",)

    def __init__(self, rows: Iterable[Iterable]):
        self.rows = tuple(tuple(_entry(x) for x in row) for row in rows)
        if self.rows:
            w = len(self.rows[0])
            if any(len(r) != w for r in self.rows):
                raise ValueError("ragged rows")

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls([[_ONE if i == j else _ZERO for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "Matrix":
        return cls([[_ZERO] * ncols for _ in range(nrows)])

    @classmethod
    def from_columns(cls, cols: Sequence[Sequence]) -> "Matrix":
        return cls(list(zip(*cols))) if cols else cls([])

    @classmethod
    def from_flat(cls, flat: Sequence, nrows: int, ncols: int) -> "Matrix":
        if len(flat) != nrows * ncols:
            raise ValueError("flat length does not match shape")
        return cls([flat[i * ncols : (i + 1) * ncols] for i in range(nrows)])

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def __getitem__(self, i):
        return self.rows[i]

    def column(self, j) -> tuple:
        return tuple(r[j] for r in self.rows)

    def columns(self) -> list:
        return [self.column(j) for j in range(self.ncols)]

    def flatten(self) -> tuple:
        """Row-major flattening; the convention used for operator subspaces."""
        return tuple(x for row in self.rows for x in row)

    def __add__(self, other: "Matrix") -> "Matrix":
        return Matrix(
            [
                [a + b for a, b in zip(r1, r2)]
                for r1, r2 in zip(self.rows, other.rows)
            ]
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        return Matrix(
            [
                [a - b for a, b in zip(r1, r2)]
                for r1, r2 in zip(self.rows, other.rows)
            ]
        )

    def __neg__(self) -> "Matrix":
        return Matrix([[-a for a in r] for r in self.rows])

    def scale(self, c) -> "Matrix":
        return Matrix([[c * a for a in r] for r in self.rows])

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch in matrix product")
        cols = other.columns()
        return Matrix(
            [[_dot(row, col) for col in cols] for row in self.rows]
        )

    def apply(self, vec: Sequence) -> tuple:
        if len(vec) != self.ncols:
            raise ValueError("vector length does not match column count")
        return tuple(_dot(row, vec) for row in self.rows)

    def transpose(self) -> "Matrix":
        return Matrix(list(zip(*self.rows))) if self.rows else Matrix([])

    def kron(self, other: "Matrix") -> "Matrix":
        """Kronecker product; (A kron B)[(i-1)q+a, (j-1)q+b] = A[i,j] B[a,b]."""
        out = []
        for arow in self.rows:
            for brow in other.rows:
                out.append([a * b for a in arow for b in brow])
        return Matrix(out)

    def __pow__(self, k: int) -> "Matrix":
        if self.nrows != self.ncols:
            raise ValueError("powers need a square matrix")
        if k < 0:
            raise ValueError("negative matrix powers are not supported")
        result = Matrix.identity(self.nrows)
        base = self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base if k > 1 else base
            k >>= 1
        return result

    def trace(self):
        return sum((self.rows[i][i] for i in range(self.nrows)), _ZERO)

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.rows for x in row)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in row) for row in self.rows)
        return f"Matrix[{body}]"


def _dot(u, v):
    acc = _ZERO
    for a, b in zip(u, v):
        if a != 0 and b != 0:
            acc = acc + a * b
    return acc


def vec_add(u, v):
    return tuple(a + b for a, b in zip(u, v))

def vec_sub(u, v):
    return tuple(a - b for a, b in zip(u, v))

def vec_scale(c, u):
    return tuple(c * a for a in u)

def vec_zero(n):
    return (_ZERO,) * n

def vec_is_zero(u):
    return all(a == 0 for a in u)


def rref(rows) -> tuple[list, list]:
    """Reduced row echelon form.  Returns (rows, pivot column indices)."""
    m = [list(r) for r in rows]
    if not m:
        return [], []
    nrows, ncols = len(m), len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, nrows) if m[i][c] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = m[r][c]
        m[r] = [x / inv for x in m[r]]
        for i in range(nrows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return [tuple(row) for row in m], pivots


def rank(M: Matrix) -> int:
    return len(rref(M.rows)[1])


def kernel_basis(M: Matrix) -> list[tuple]:
    """Canonical basis of {x : Mx = 0}, one vector per free column."""
    rows, pivots = rref(M.rows)
    n = M.ncols
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        v = [_ZERO] * n
        v[f] = _ONE
        for r, p in enumerate(pivots):
            v[p] = -rows[r][f]
        basis.append(tuple(v))
    return basis


def solve(M: Matrix, b: Sequence) -> Optional[tuple]:
    """One particular solution of Mx = b (free variables 0), or None."""
    if len(b) != M.nrows:
        raise ValueError("right-hand side length does not match row count")
    aug = [list(row) + [bb] for row, bb in zip(M.rows, (_entry(x) for x in b))]
    rows, pivots = rref(aug)
    n = M.ncols
    if n in pivots:
        return None  # pivot in the augmented column: inconsistent
    x = [_ZERO] * n
    for r, p in enumerate(pivots):
        x[p] = rows[r][n]
    return tuple(x)


def inverse(M: Matrix) -> Matrix:
    n = M.nrows
    if n != M.ncols:
        raise SingularMatrixError("only square matrices are invertible")
    aug = [list(row) + [_ONE if i == j else _ZERO for j in range(n)]
           for i, row in enumerate(M.rows)]
    rows, pivots = rref(aug)
    if pivots[:n] != list(range(n)) or len(pivots) != n:
        raise SingularMatrixError("matrix is singular")
    return Matrix([row[n:] for row in rows[:n]])


class Subspace:
    """A subspace of K^n held as a canonical RREF row basis.

    Canonical form makes equality decidable by direct comparison.
    """

    __slots__ = ("ambient", "basis")

    def __init__(self, ambient: int, vectors: Iterable[Sequence] = ()):
        vecs = [tuple(_entry(x) for x in v) for v in vectors]
        for v in vecs:
            if len(v) != ambient:
                raise ValueError("vector length does not match ambient dimension")
        rows, _ = rref(vecs)
        self.ambient = ambient
        self.basis = tuple(r for r in rows if not vec_is_zero(r))

    @classmethod
    def zero(cls, ambient: int) -> "Subspace":
        return cls(ambient)

    @classmethod
    def full(cls, ambient: int) -> "Subspace":
        return cls(ambient, Matrix.identity(ambient).rows)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def is_zero(self) -> bool:
        return not self.basis

    def _reduce(self, v):
        w = list(_entry(x) for x in v)
        coords = []
        for row in self.basis:
            p = next(i for i, x in enumerate(row) if x != 0)
            c = w[p]
            coords.append(c)
            if c != 0:
                for i in range(len(w)):
                    if row[i] != 0:
                        w[i] = w[i] - c * row[i]
        return w, coords

    def contains(self, v) -> bool:
        w, _ = self._reduce(v)
        return vec_is_zero(w)

    def coordinates(self, v) -> Optional[tuple]:
        """Coefficients of v in the stored basis, or None if outside."""
        w, coords = self._reduce(v)
        return tuple(coords) if vec_is_zero(w) else None

    def __add__(self, other: "Subspace") -> "Subspace":
        if self.ambient != other.ambient:
            raise ValueError("ambient dimensions differ")
        return Subspace(self.ambient, self.basis + other.basis)

    def constraint_matrix(self) -> Matrix:
        """Matrix N with kernel exactly this subspace (rows span the annihilator)."""
        if not self.basis:
            return Matrix.identity(self.ambient)
        return Matrix(kernel_basis(Matrix(self.basis)))

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient == other.ambient and self.basis == other.basis

    def __hash__(self):
        return hash((self.ambient, self.basis))

    def __repr__(self):
        return f"Subspace(dim {self.dim} of K^{self.ambient})"


# ---------------------------------------------------------------------------
# Polynomials (dense, ascending coefficients) and operator analysis
# ---------------------------------------------------------------------------

def poly_trim(p: Sequence) -> tuple:
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return tuple(p)


def poly_is_zero(p) -> bool:
    return not poly_trim(p)


def poly_degree(p) -> int:
    return len(poly_trim(p)) - 1


def poly_add(p, q):
    n = max(len(p), len(q))
    p = list(p) + [_ZERO] * (n - len(p))
    q = list(q) + [_ZERO] * (n - len(q))
    return poly_trim([a + b for a, b in zip(p, q)])


def poly_scale(c, p):
    return poly_trim([c * a for a in p])


def poly_mul(p, q):
    p, q = poly_trim(p), poly_trim(q)
    if not p or not q:
        return ()
    out = [_ZERO] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j, b in enumerate(q):
            out[i + j] = out[i + j] + a * b
    return poly_trim(out)


def poly_divmod(p, q):
    p, q = list(poly_trim(p)), poly_trim(q)
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    quot = [_ZERO] * max(0, len(p) - len(q) + 1)
    lead = q[-1]
    while len(p) >= len(q):
        c = p[-1] / lead
        d = len(p) - len(q)
        quot[d] = c
        for i, b in enumerate(q):
            p[d + i] = p[d + i] - c * b
        p = list(poly_trim(p))
        if not p:
            break
    return poly_trim(quot), poly_trim(p)


def poly_monic(p):
    p = poly_trim(p)
    if not p:
        return p
    lead = p[-1]
    return tuple(a / lead for a in p)


def poly_gcd(p, q):
    a, b = poly_trim(p), poly_trim(q)
    while b:
        _, r = poly_divmod(a, b)
        a, b = b, r
    return poly_monic(a)


def poly_ext_gcd(p, q):
    """(g, s, t) with s*p + t*q = g, g monic."""
    r0, r1 = poly_trim(p), poly_trim(q)
    s0, s1 = (_ONE,), ()
    t0, t1 = (), (_ONE,)
    while r1:
        qt, r = poly_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, poly_add(s0, poly_scale(-1, poly_mul(qt, s1)))
        t0, t1 = t1, poly_add(t0, poly_scale(-1, poly_mul(qt, t1)))
    if not r0:
        return (), s0, t0
    lead = r0[-1]
    inv = 1 / lead
    return poly_monic(r0), poly_scale(inv, s0), poly_scale(inv, t0)


def poly_derivative(p):
    p = poly_trim(p)
    return poly_trim([i * a for i, a in enumerate(p)][1:])


def poly_str(p, var: str = "t") -> str:
    p = poly_trim(p)
    if not p:
        return "0"
    parts = []
    for i in range(len(p) - 1, -1, -1):
        c = p[i]
        if c == 0:
            continue
        if i == 0:
            mono = str(c)
        else:
            base = var if i == 1 else f"{var}^{i}"
            if c == 1:
                mono = base
            elif c == -1:
                mono = f"-{base}"
            else:
                mono = f"{c}*{base}"
        parts.append(mono)
    out = parts[0]
    for mono in parts[1:]:
        out += f" - {mono[1:]}" if mono.startswith("-") else f" + {mono}"
    return out


def min_poly(M: Matrix) -> tuple:
    """Monic minimal polynomial, ascending coefficients, via Krylov on powers."""
    n = M.nrows
    if n != M.ncols:
        raise ValueError("minimal polynomial needs a square matrix")
    if n == 0:
        return (_ONE,)
    powers = [Matrix.identity(n)]
    flats = [powers[0].flatten()]
    for k in range(1, n + 1):
        powers.append(powers[-1] @ M)
        target = powers[-1].flatten()
        coeffs = solve(Matrix.from_columns(flats), target)
        if coeffs is not None:
            return poly_trim([-c for c in coeffs] + [_ONE])
        flats.append(target)
    raise AssertionError("minimal polynomial must have degree <= n")


@dataclass(frozen=True)
class OperatorReport:
    min_poly: tuple
    is_nilpotent: bool
    is_semisimple: bool


def operator_analysis(M: Matrix) -> OperatorReport:
    """Minimal polynomial plus nilpotency / semisimplicity flags.

    Semisimplicity via squarefreeness of the minimal polynomial is valid in
    characteristic 0 only, which is all this package supports.
    """
    p = min_poly(M)
    nilpotent = all(c == 0 for c in p[:-1])
    g = poly_gcd(p, poly_derivative(p))
    semisimple = poly_degree(g) == 0
    return OperatorReport(min_poly=p, is_nilpotent=nilpotent, is_semisimple=semisimple)
