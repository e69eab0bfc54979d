import random
from fractions import Fraction

import pytest

from currentalg import (
    GaussianRational,
    Matrix,
    SingularMatrixError,
    Subspace,
    inverse,
    kernel_basis,
    min_poly,
    operator_analysis,
    rank,
    solve,
)
from currentalg.linalg import poly_degree, poly_ext_gcd, poly_gcd, poly_mul, poly_str

from conftest import rand_matrix

F = Fraction


def test_kernel_examples():
    # kernel([[1,1],[2,2]]) = span{(1,-1)}
    k = Subspace(2, kernel_basis(Matrix([[1, 1], [2, 2]])))
    assert k == Subspace(2, [(1, -1)])
    assert kernel_basis(Matrix.identity(3)) == []


def test_rank_plus_nullity_random():
    rng = random.Random(11)
    for _ in range(25):
        rows = rng.randint(1, 5)
        cols = rng.randint(1, 5)
        m = Matrix([[F(rng.randint(-3, 3)) for _ in range(cols)]
                    for _ in range(rows)])
        assert rank(m) + len(kernel_basis(m)) == cols


def test_solve_particular_and_inconsistent():
    m = Matrix([[1, 1], [2, 2]])
    assert solve(m, (1, 2)) is not None
    assert solve(m, (1, 3)) is None
    sol = solve(Matrix([[2, 0], [0, 4]]), (1, 1))
    assert sol == (F(1, 2), F(1, 4))


def test_inverse_round_trip_and_singular():
    rng = random.Random(5)
    for _ in range(10):
        m = rand_matrix(rng, 4)
        try:
            mi = inverse(m)
        except SingularMatrixError:
            continue
        assert m @ mi == Matrix.identity(4)
    with pytest.raises(SingularMatrixError):
        inverse(Matrix([[1, 1], [1, 1]]))


def test_subspace_canonical_equality():
    a = Subspace(3, [(1, 2, 3), (0, 1, 1)])
    b = Subspace(3, [(1, 0, 1), (2, 5, 7)])
    assert a == b
    assert a.contains((3, 7, 10))
    assert not a.contains((0, 0, 1))
    assert (a + Subspace(3, [(0, 0, 1)])).dim == 3


def test_subspace_coordinates_and_constraints():
    s = Subspace(3, [(1, 0, 1), (0, 1, 2)])
    assert s.coordinates((2, 3, 8)) == (F(2), F(3))
    assert s.coordinates((0, 0, 1)) is None
    n = s.constraint_matrix()
    assert all(not any(n.apply(v)) for v in s.basis)
    assert Subspace(3, kernel_basis(n)) == s


def test_matrix_kron_layout():
    a = Matrix([[1, 2], [3, 4]])
    b = Matrix([[0, 1], [1, 0]])
    k = a.kron(b)
    # (i-1)*q + a layout: entry ((1,2),(2,1)) = a[0][1] * b[1][0]
    assert k[0 * 2 + 1][1 * 2 + 0] == a[0][1] * b[1][0]
    assert k.shape == (4, 4)


def test_min_poly_and_operator_analysis():
    nilp = operator_analysis(Matrix([[0, 1], [0, 0]]))
    assert nilp.min_poly == (F(0), F(0), F(1))  # t^2
    assert nilp.is_nilpotent and not nilp.is_semisimple

    proj = operator_analysis(Matrix([[1, 0], [0, 0]]))
    assert proj.min_poly == (F(0), F(-1), F(1))  # t^2 - t
    assert proj.is_semisimple and not proj.is_nilpotent

    rot = operator_analysis(Matrix([[0, 1], [-1, 0]]))
    assert rot.min_poly == (F(1), F(0), F(1))  # t^2 + 1
    assert rot.is_semisimple

    assert operator_analysis(Matrix.identity(3)).min_poly == (F(-1), F(1))


def test_min_poly_gaussian_entries():
    i = GaussianRational(0, 1)
    m = Matrix([[i]])
    assert min_poly(m) == (GaussianRational(0, -1), Fraction(1))  # t - i


def test_poly_helpers():
    # (t-1)(t+1) = t^2 - 1
    assert poly_mul((F(-1), F(1)), (F(1), F(1))) == (F(-1), F(0), F(1))
    g = poly_gcd((F(-1), F(0), F(1)), (F(1), F(1)))
    assert g == (F(1), F(1))
    gg, s, t = poly_ext_gcd((F(0), F(1)), (F(1), F(1)))  # t and t+1
    assert gg == (F(1),)
    assert poly_degree(gg) == 0
    assert poly_str((F(0), F(-1), F(1))) == "t^2 - t"


def test_matrix_power():
    m = Matrix([[1, 1], [0, 1]])
    assert m ** 0 == Matrix.identity(2)
    assert m ** 3 == Matrix([[1, 3], [0, 1]])
