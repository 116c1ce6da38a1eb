"""Tests for exact sparse linear algebra over F_p."""

import random

import numpy as np
import pytest

from bvh.errors import DimensionMismatchError, NotInSubspaceError
from bvh.linalg import (
    FpMatrix,
    FpSubspaceBasis,
    QuotientSpace,
    dense_rank,
    quotient_coordinates,
    rank_kernel_image,
    row_reduce,
    solve_in_span,
)


@pytest.mark.parametrize("p", [2, 3, 5])
def test_rank_matches_dense_oracle(p):
    rng = random.Random(p)
    for _ in range(20):
        rows, cols = rng.randint(1, 8), rng.randint(1, 8)
        dense = np.array([[rng.randrange(p) for _ in range(cols)] for _ in range(rows)])
        matrix = FpMatrix.from_dense(dense, p)
        result = rank_kernel_image(matrix)
        assert result.rank == dense_rank(dense, p)
        assert len(result.kernel_basis) == cols - result.rank
        assert result.image_basis.dimension == result.rank
        for k in result.kernel_basis:
            assert matrix.apply(k) == {}


@pytest.mark.parametrize("p", [2, 3])
def test_echelon_form_invariants(p):
    basis = row_reduce([{0: 1, 2: 1}, {1: 1, 2: 1}, {0: 1, 1: 1}], 3, p)
    assert basis.is_echelon()
    assert basis.dimension == (2 if p == 2 else 3)


def test_membership_and_coordinates():
    basis = FpSubspaceBasis.from_vectors([{0: 1, 1: 2}, {2: 1}], 3, 3)
    assert basis.contains({0: 2, 1: 1, 2: 1})
    assert not basis.contains({1: 1})
    assert basis.coordinates({0: 2, 1: 1}) == [2, 0]
    assert solve_in_span(basis, {1: 1}) is None


def test_solve_rejects_out_of_range():
    basis = FpSubspaceBasis(3, 2)
    with pytest.raises(DimensionMismatchError):
        solve_in_span(basis, {5: 1})


def test_tracked_insertion():
    basis = FpSubspaceBasis.from_vectors([{0: 1}, {0: 1, 1: 1}], 2, 3, track=True)
    assert basis.inserted_coordinates({1: 1}) == [2, 1]


def test_quotient_space():
    cocycles = FpSubspaceBasis.from_vectors([{0: 1}, {1: 1}, {2: 1}], 4, 2)
    coboundaries = FpSubspaceBasis.from_vectors([{0: 1, 1: 1}], 4, 2)
    quotient = QuotientSpace(cocycles, coboundaries)
    assert quotient.dimension == 2
    a = quotient.coordinates({0: 1})
    b = quotient.coordinates({1: 1})
    assert a == b
    assert quotient.coordinates({0: 1, 1: 1}) == [0, 0]
    assert quotient_coordinates(cocycles, coboundaries, {0: 1}) == a
    lifted = quotient.lift(a)
    assert quotient.coordinates(lifted) == a
    with pytest.raises(NotInSubspaceError):
        quotient.coordinates({3: 1})


def test_bad_modulus():
    with pytest.raises(DimensionMismatchError):
        FpMatrix(1, 1, 4)


def test_transpose_and_dense_round_trip():
    dense = np.array([[1, 0, 2], [0, 1, 1]])
    matrix = FpMatrix.from_dense(dense, 3)
    assert np.array_equal(matrix.transpose().to_dense(), dense.T)
    assert matrix.column_vectors()[2] == {0: 2, 1: 1}
