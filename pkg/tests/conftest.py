"""Shared fixtures: catalog algebras and seeded random generators."""

from __future__ import annotations

import random
from fractions import Fraction
from pathlib import Path

import pytest

import currentalg as ca

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


@pytest.fixture(scope="session")
def fixture_dir() -> Path:
    return FIXTURES


def catalog_lie_algebras():
    return [
        ca.r2(),
        ca.abelian(1),
        ca.abelian(2),
        ca.abelian(3),
        ca.heisenberg(3),
        ca.sl2(),
        ca.t_oplus_a(2, 1),
        ca.make("t_oplus_a", n=3, s=1),
    ]


def catalog_assoc_algebras():
    return [
        ca.m1(1),
        ca.m1(2),
        ca.m1(3),
        ca.null_algebra(1),
        ca.null_algebra(2),
        ca.real_rigid(2, 1),
        ca.real_rigid(3, 1),
        ca.real_rigid(4, 2),
    ]


def rand_fraction(rng: random.Random, span: int = 3) -> Fraction:
    return Fraction(rng.randint(-span, span), rng.randint(1, 3))


def rand_matrix(rng: random.Random, n: int, span: int = 3) -> ca.Matrix:
    return ca.Matrix([[rand_fraction(rng, span) for _ in range(n)]
                      for _ in range(n)])


def rand_invertible(rng: random.Random, n: int) -> ca.Matrix:
    while True:
        m = ca.Matrix([[Fraction(rng.randint(-3, 3)) for _ in range(n)]
                       for _ in range(n)])
        try:
            ca.inverse(m)
            return m
        except ca.SingularMatrixError:
            continue


def rand_vector(rng: random.Random, n: int, span: int = 3):
    return tuple(rand_fraction(rng, span) for _ in range(n))


def rand_chevalley2(rng: random.Random, n: int) -> ca.ChevalleyCochain:
    data = {}
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            if rng.random() < 0.7:
                data[(i, j)] = rand_vector(rng, n, 2)
    return ca.ChevalleyCochain(2, n, data)


def rand_chevalley(rng: random.Random, n: int, degree: int) -> ca.ChevalleyCochain:
    from itertools import combinations

    data = {}
    for tup in combinations(range(1, n + 1), degree):
        if rng.random() < 0.7:
            data[tup] = rand_vector(rng, n, 2)
    return ca.ChevalleyCochain(degree, n, data)


def rand_symmetric(rng: random.Random, n: int) -> ca.SymmetricCochain:
    data = {}
    for i in range(1, n + 1):
        for j in range(i, n + 1):
            if rng.random() < 0.7:
                data[(i, j)] = rand_vector(rng, n, 2)
    return ca.SymmetricCochain(n, data)


def random_assoc_comm_algebras(rng: random.Random, dim: int, want: int,
                               max_tries: int = 20000) -> list:
    """Random commutative tables with small entries that pass associativity."""
    found = []
    for _ in range(max_tries):
        if len(found) >= want:
            break
        products = {}
        for i in range(1, dim + 1):
            for j in range(i, dim + 1):
                vec = [0] * dim
                for s in range(dim):
                    r = rng.random()
                    if r < 0.25:
                        vec[s] = rng.choice((-1, 1))
                products[(i, j)] = tuple(vec)
        alg = ca.Algebra(f"rand{dim}", ca.ASSOC_COMM, ca.Q, dim, products)
        if ca.check_identities(alg).passed:
            found.append(alg)
    return found
