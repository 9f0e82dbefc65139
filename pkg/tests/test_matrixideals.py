import random

import pytest

from conftest import random_polynomial, random_vector

from semimod.errors import ZeroCovectorError
from semimod.fields import QQ
from semimod.groebner import SubmodulePresentation, submodule_member
from semimod.matrixideals import (
    LeftIdealPresentation,
    ideal_with_rows_in,
    matrix_member,
    matrix_semiprime_member,
    max_left_ideal_member,
    row_module,
)
from semimod.poly import PolyMatrix, PolyRing, VectorPoly, identity_matrix
from semimod.submodules import HyperplaneSubmodule, hyperplane_member


@pytest.fixture
def R():
    return PolyRing(QQ, ("x", "y"))


@pytest.fixture
def twisted_matrix_ideal(R):
    x, y = R.variables()
    G = PolyMatrix(R, [[x * x, x * y], [x * y, y * y]])
    return LeftIdealPresentation(R, 2, [G])


def random_matrix(rng, ring, n, max_degree=2):
    return PolyMatrix(
        ring,
        [
            [random_polynomial(rng, ring, max_degree) for _ in range(n)]
            for _ in range(n)
        ],
    )


# ---------------------------------------------------------------------------
# row-module correspondence
# ---------------------------------------------------------------------------

def test_row_module_generators(R, twisted_matrix_ideal):
    x, y = R.variables()
    N = row_module(twisted_matrix_ideal)
    assert N.generators == [
        VectorPoly(R, [x * x, x * y]),
        VectorPoly(R, [x * y, y * y]),
    ]


def test_row_module_of_identity_is_unit(R):
    rng = random.Random(139)
    ideal = LeftIdealPresentation(R, 2, [identity_matrix(R, 2)])
    N = row_module(ideal)
    for _ in range(5):
        assert submodule_member(random_vector(rng, R, 2), N).member


def test_row_module_of_zero_matrix_is_zero(R):
    zero = PolyMatrix(R, [[R.zero(), R.zero()], [R.zero(), R.zero()]])
    N = row_module(LeftIdealPresentation(R, 2, [zero]))
    assert N.generators == []


def test_ideal_with_rows_in_zero_module(R):
    zero_module = SubmodulePresentation.zero(R, 2)
    ideal = ideal_with_rows_in(zero_module)
    zero = PolyMatrix(R, [[R.zero(), R.zero()], [R.zero(), R.zero()]])
    assert matrix_member(zero, ideal).member
    assert not matrix_member(identity_matrix(R, 2), ideal).member


def test_stacked_generator_is_member(R, twisted_matrix_ideal):
    x, y = R.variables()
    N = row_module(twisted_matrix_ideal)
    X = PolyMatrix(R, [[x * x, x * y], [x * y, y * y]])
    assert matrix_member(X, ideal_with_rows_in(N)).member


def test_round_trips_on_random_ideals(R):
    rng = random.Random(149)
    for _ in range(10):
        n = rng.choice([2, 3])
        gens = [random_matrix(rng, R, n) for _ in range(rng.randint(1, 2))]
        ideal = LeftIdealPresentation(R, n, gens)
        back = ideal_with_rows_in(row_module(ideal))
        for _ in range(4):
            probe = random_matrix(rng, R, n, max_degree=1)
            assert matrix_member(probe, ideal).member == matrix_member(probe, back).member
        module = row_module(ideal)
        module_back = row_module(ideal_with_rows_in(module))
        for _ in range(4):
            probe_vec = random_vector(rng, R, n)
            assert (
                submodule_member(probe_vec, module).member
                == submodule_member(probe_vec, module_back).member
            )


# ---------------------------------------------------------------------------
# membership
# ---------------------------------------------------------------------------

def test_generator_is_member(R, twisted_matrix_ideal):
    G = twisted_matrix_ideal.generators[0]
    assert matrix_member(G, twisted_matrix_ideal).member


def test_left_multiples_are_members(R, twisted_matrix_ideal):
    rng = random.Random(151)
    G = twisted_matrix_ideal.generators[0]
    for _ in range(6):
        A = random_matrix(rng, R, 2, max_degree=1)
        assert matrix_member(A @ G, twisted_matrix_ideal).member


def test_identity_not_in_diagonal_ideal():
    R1 = PolyRing(QQ, ("x",))
    x = R1.variable(0)
    ideal = LeftIdealPresentation(
        R1, 2, [PolyMatrix(R1, [[x, R1.zero()], [R1.zero(), x]])]
    )
    assert not matrix_member(identity_matrix(R1, 2), ideal).member


# ---------------------------------------------------------------------------
# semiprime closure of left ideals
# ---------------------------------------------------------------------------

def test_matrix_semiprime_member_positive(R, twisted_matrix_ideal):
    x, y = R.variables()
    F = PolyMatrix(R, [[x, y], [R.zero(), R.zero()]])
    verdict = matrix_semiprime_member(F, twisted_matrix_ideal.generators)
    assert verdict.member


def test_matrix_semiprime_member_generator(R, twisted_matrix_ideal):
    G = twisted_matrix_ideal.generators[0]
    assert matrix_semiprime_member(G, [G]).member


def test_matrix_semiprime_member_negative_with_witness():
    R1 = PolyRing(QQ, ("x",))
    x = R1.variable(0)
    G = PolyMatrix(R1, [[x, R1.zero()], [R1.zero(), x]])
    verdict = matrix_semiprime_member(identity_matrix(R1, 2), [G])
    assert not verdict.member
    assert verdict.witness is not None
    assert [str(c) for c in verdict.witness.point] == ["0"]


def test_matrix_semiprime_member_swapped_row_fails(R, twisted_matrix_ideal):
    # the swapped row (y, x) pairs to a1^2 - a2^2 on the kernel direction
    # (-a2, a1), so it does not vanish everywhere; expect the first small
    # witness (0, 1) with direction (1, 0)
    x, y = R.variables()
    F = PolyMatrix(R, [[y, x], [R.zero(), R.zero()]])
    verdict = matrix_semiprime_member(F, twisted_matrix_ideal.generators)
    assert not verdict.member
    assert verdict.witness is not None
    assert [str(c) for c in verdict.witness.point] == ["0", "1"]
    assert [str(c) for c in verdict.witness.vector] == ["1", "0"]


def test_rowwise_equivalence(R):
    # independent computation of both sides of the correspondence
    rng = random.Random(157)
    from semimod.closure import semiprime_member

    for _ in range(6):
        gens = [random_matrix(rng, R, 2, max_degree=1)]
        F = random_matrix(rng, R, 2, max_degree=1)
        module = row_module(LeftIdealPresentation(R, 2, gens))
        rows_ok = all(
            semiprime_member(row, module, search_witness=False).member
            for row in F.row_vectors()
        )
        assert matrix_semiprime_member(F, gens, search_witness=False).member == rows_ok


# ---------------------------------------------------------------------------
# maximal left ideals from a point and covector
# ---------------------------------------------------------------------------

def test_max_left_ideal_member_vanishing_matrix(R):
    x, y = R.variables()
    X = PolyMatrix(R, [[x, R.zero()], [R.zero(), y]])
    assert max_left_ideal_member(X, (0, 0), (1, 1))
    assert max_left_ideal_member(X, (0, 0), (2, -1))


def test_max_left_ideal_member_identity(R):
    assert not max_left_ideal_member(identity_matrix(R, 2), (1, 1), (1, 0))
    with pytest.raises(ZeroCovectorError):
        max_left_ideal_member(identity_matrix(R, 2), (1, 1), (0, 0))


def test_max_left_ideal_matches_rowwise_hyperplanes(R):
    rng = random.Random(163)
    for _ in range(10):
        point = (rng.randint(-2, 2), rng.randint(-2, 2))
        covector = (rng.randint(-2, 2), rng.choice([1, -1]))
        C = HyperplaneSubmodule(R, point, covector)
        X = random_matrix(rng, R, 2, max_degree=1)
        rowwise = all(hyperplane_member(row, C) for row in X.row_vectors())
        assert max_left_ideal_member(X, point, covector) == rowwise


def test_prime_intersection_sampling(R, twisted_matrix_ideal):
    # a member of the semiprime closure lies in every sampled maximal left
    # ideal that contains the generators
    rng = random.Random(167)
    x, y = R.variables()
    F = PolyMatrix(R, [[x, y], [R.zero(), R.zero()]])
    gens = twisted_matrix_ideal.generators
    assert matrix_semiprime_member(F, gens, search_witness=False).member
    for _ in range(30):
        point = (rng.randint(-2, 2), rng.randint(-2, 2))
        covector = (rng.randint(-2, 2), rng.choice([1, -1, 2]))
        if all(max_left_ideal_member(g, point, covector) for g in gens):
            assert max_left_ideal_member(F, point, covector)
