"""Tests for Lie algebras from structure constants and the Lie algebra HH¹(kG)."""

import numpy as np
import pytest

from bvh.catalog import construct_group, cyclic, extraspecial, heisenberg, modular
from bvh.errors import LieAxiomError, UnsupportedGroupError
from bvh.lie import (
    LieAlgebra,
    build_hh1_lie,
    center_subalgebra_closed,
    construct_nonnilpotent_witness,
    construct_nonsoluble_witness,
    derived_series_analysis,
    extraspecial_expectation,
    frattini_center_abelian,
    is_extraspecial,
    require_lie_axioms,
    verify_lie_axioms,
)
from bvh.models import CheckStatus, WitnessKind


def _algebra(p, d, brackets):
    """Structure constants from {(i, j): {k: c}} for i < j, made antisymmetric."""
    constants = np.zeros((d, d, d), dtype=np.int64)
    for (i, j), image in brackets.items():
        for k, c in image.items():
            constants[i, j, k] = c
            constants[j, i, k] = -c
    return LieAlgebra(p, constants)


def test_sl2_over_f3_is_not_soluble():
    # e, f, h
    sl2 = _algebra(3, 3, {(0, 1): {2: 1}, (0, 2): {0: 1}, (1, 2): {1: 2}})
    assert verify_lie_axioms(sl2).status == CheckStatus.PASSED
    report = derived_series_analysis(sl2)
    assert report.derived_series_dims == [3]
    assert not report.soluble
    assert report.derived_length is None
    assert not report.nilpotent


def test_heisenberg_algebra_series():
    algebra = _algebra(2, 3, {(0, 1): {2: 1}})
    report = derived_series_analysis(algebra)
    assert report.derived_series_dims == [3, 1, 0]
    assert report.derived_length == 2
    assert report.lower_central_dims == [3, 1, 0]
    assert report.nilpotent


def test_abelian_algebra():
    report = derived_series_analysis(LieAlgebra(5, np.zeros((4, 4, 4), dtype=np.int64)))
    assert report.derived_series_dims == [4, 0]
    assert report.derived_length == 1


def test_non_nilpotent_soluble_algebra():
    # [x, y] = y
    report = derived_series_analysis(_algebra(2, 2, {(0, 1): {1: 1}}))
    assert report.soluble and report.derived_length == 2
    assert report.lower_central_dims == [2, 1]
    assert not report.nilpotent


def test_corrupted_constants_fail_axioms():
    constants = np.zeros((2, 2, 2), dtype=np.int64)
    constants[0, 1, 0] = 1
    algebra = LieAlgebra(3, constants)
    result = verify_lie_axioms(algebra)
    assert result.status == CheckStatus.FAILED
    assert result.witness == str((0, 1))
    with pytest.raises(LieAxiomError):
        derived_series_analysis(algebra)


def test_jacobi_violation_is_reported():
    algebra = _algebra(3, 3, {(0, 1): {1: 1}, (1, 2): {0: 1}})
    result = verify_lie_axioms(algebra)
    assert result.status == CheckStatus.FAILED
    assert result.detail == "Jacobi identity fails"
    with pytest.raises(LieAxiomError):
        require_lie_axioms(algebra)


def test_alternating_violation_is_reported():
    constants = np.zeros((2, 2, 2), dtype=np.int64)
    constants[1, 1, 0] = 1
    result = verify_lie_axioms(LieAlgebra(2, constants))
    assert result.status == CheckStatus.FAILED
    assert result.witness == str((1, 1))


def test_document_round_trip():
    algebra = _algebra(3, 3, {(0, 1): {2: 1}, (0, 2): {0: 1}, (1, 2): {1: 2}})
    again = LieAlgebra.from_document(algebra.to_document())
    assert np.array_equal(again.constants, algebra.constants)


def test_hh1_dimensions(d8, q8, c4):
    assert build_hh1_lie(d8, 2).dimension == 9
    assert build_hh1_lie(q8, 2).dimension == 7
    assert build_hh1_lie(c4, 2).dimension == 4


@pytest.mark.parametrize(
    "spec, p, length",
    [
        ("quaternion:8", 2, 2),
        ("dihedral:8", 2, 3),
        ("modular:3", 3, 3),
        ("extraspecial:3:27:expP", 3, 2),
    ],
)
def test_derived_length_of_hh1(spec, p, length):
    group = construct_group(spec)
    lie = build_hh1_lie(group, p)
    report = derived_series_analysis(lie.algebra)
    assert report.soluble
    assert report.derived_length == length
    assert report.derived_length == extraspecial_expectation(group)


@pytest.mark.heavy
@pytest.mark.parametrize("kind", ["plus", "minus"])
def test_derived_length_of_order_32_extraspecial(kind):
    group = extraspecial(2, 32, kind)
    report = derived_series_analysis(build_hh1_lie(group, 2).algebra)
    assert report.derived_length == 2


@pytest.mark.parametrize("spec, p", [("cyclic:3", 3), ("elementary-abelian:2:2", 2)])
def test_hh1_not_soluble(spec, p):
    lie = build_hh1_lie(construct_group(spec), p)
    assert not derived_series_analysis(lie.algebra).soluble


def test_sl2_witness():
    c3 = cyclic(3)
    witness = construct_nonsoluble_witness(c3, 3)
    assert witness.kind == WitnessKind.SL2_TRIPLE
    assert witness.verified
    assert set(witness.elements) == {"e", "f", "h"}
    assert len(witness.relations) == 3


def test_self_reproducing_witness(klein):
    witness = construct_nonsoluble_witness(klein, 2)
    assert witness.kind == WitnessKind.SELF_REPRODUCING_SUBSPACE
    assert witness.verified
    assert witness.relations == ["[U,U] ⊇ U"]


def test_witness_hypothesis_not_met(c2, d8):
    witness = construct_nonsoluble_witness(c2, 2)
    assert witness.kind == WitnessKind.HYPOTHESIS_NOT_MET
    assert witness.relations == ["|Z : Z∩Φ| = 2"]
    assert construct_nonsoluble_witness(d8, 2).relations == ["|Z : Z∩Φ| = 1"]

    lie = build_hh1_lie(c2, 2)
    assert lie.dimension == 2
    assert derived_series_analysis(lie.algebra).soluble


def test_witness_needs_p_group(klein):
    with pytest.raises(UnsupportedGroupError):
        construct_nonsoluble_witness(klein, 3)
    with pytest.raises(UnsupportedGroupError):
        construct_nonnilpotent_witness(construct_group("symmetric:3"), 2)


@pytest.mark.parametrize("fixture", ["c4", "klein", "d8", "q8"])
def test_hh1_is_never_nilpotent(request, fixture):
    group = request.getfixturevalue(fixture)
    lie = build_hh1_lie(group, 2)
    witness = construct_nonnilpotent_witness(group, 2, lie)
    assert witness.verified
    assert np.array_equal(lie.bracket(witness.x, witness.y), witness.y)
    assert not derived_series_analysis(lie.algebra).nilpotent


@pytest.mark.parametrize("fixture", ["klein", "d8", "q8"])
def test_central_subalgebras(request, fixture):
    lie = build_hh1_lie(request.getfixturevalue(fixture), 2)
    assert center_subalgebra_closed(lie)
    assert frattini_center_abelian(lie)


def test_lie_axioms_hold_on_hh1(d8):
    assert verify_lie_axioms(build_hh1_lie(d8, 2).algebra).status == CheckStatus.PASSED


def test_extraspecial_expectation(d8, q8, klein):
    assert extraspecial_expectation(d8) == 3
    assert extraspecial_expectation(q8) == 2
    assert extraspecial_expectation(modular(3)) == 3
    assert extraspecial_expectation(heisenberg(3)) == 2
    assert extraspecial_expectation(extraspecial(2, 32, "plus")) == 2
    assert extraspecial_expectation(klein) is None
    assert not is_extraspecial(cyclic(8))
