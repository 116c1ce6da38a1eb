"""Tests for the centraliser decomposition of HH^*(kG)."""

import itertools
import random

import pytest

from bvh.catalog import construct_group, cyclic, symmetric
from bvh.cohomology import cohomology_space, identify_named_classes
from bvh.errors import DimensionMismatchError, InvalidGroupError
from bvh.groups import centraliser, conjugacy_classes
from bvh.hochschild import (
    HHElement,
    bracket_degree_one,
    check_hypothesis_cent,
    gerstenhaber_bracket,
    hh_basis,
    hh_bv_delta,
    hh_space,
    hh_unit,
    sw_product,
)
from bvh.models import CheckStatus, HypothesisClause
from bvh.verification import VerificationSuite


def test_dihedral_hh1(d8):
    space = hh_space(d8, 2, 1)
    assert space.dimension == 9
    assert sorted(space.to_report().components.values()) == [1, 2, 2, 2, 2]


def test_quaternion_hh1(q8):
    space = hh_space(q8, 2, 1)
    assert space.dimension == 7
    assert sorted(space.to_report().components.values()) == [1, 1, 1, 2, 2]


@pytest.mark.parametrize("fixture, homs", [("c4", 1), ("klein", 2)])
def test_abelian_hh1(request, fixture, homs):
    group = request.getfixturevalue(fixture)
    assert hh_space(group, 2, 1).dimension == group.order * homs


def test_unit_law(d8):
    one = hh_unit(d8, 2)
    for x in hh_basis(hh_space(d8, 2, 1)):
        assert sw_product(one, x) == x
        assert sw_product(x, one) == x


def test_graded_commutativity_odd_prime():
    c3 = cyclic(3)
    basis = hh_basis(hh_space(c3, 3, 1))
    for x, y in itertools.product(basis, repeat=2):
        assert sw_product(x, y) == -sw_product(y, x)
    for x in basis:
        assert sw_product(x, x).is_zero()


@pytest.mark.parametrize("fixture", ["klein", "c4"])
def test_bracket_agrees_with_direct_evaluation(request, fixture):
    group = request.getfixturevalue(fixture)
    basis = hh_basis(hh_space(group, 2, 1))
    for x, y in itertools.product(basis, repeat=2):
        assert gerstenhaber_bracket(x, y, check=True) == bracket_degree_one(x, y)


def test_bracket_on_dihedral_sample(d8):
    basis = hh_basis(hh_space(d8, 2, 1))
    for x in basis[:3]:
        for y in basis:
            gerstenhaber_bracket(x, y, check=True)


def test_bracket_is_antisymmetric(q8):
    basis = hh_basis(hh_space(q8, 2, 1))
    for x, y in itertools.combinations(basis, 2):
        assert bracket_degree_one(x, y) == -bracket_degree_one(y, x)
    for x in basis:
        assert bracket_degree_one(x, x).is_zero()


def test_bv_delta_lowers_degree(d8):
    unit = hh_unit(d8, 2)
    with pytest.raises(DimensionMismatchError):
        hh_bv_delta(unit)
    for x in hh_basis(hh_space(d8, 2, 1)):
        assert hh_bv_delta(x).degree == 0


def test_elements_are_keyed_by_representatives(d8):
    unit = hh_unit(d8, 2)
    (c,) = unit.components.values()
    with pytest.raises(InvalidGroupError):
        HHElement(d8, 2, 0, {3: c})
    with pytest.raises(DimensionMismatchError):
        HHElement(d8, 2, 1, {d8.identity: c})


def test_hypothesis_on_abelian_group(klein):
    a, b = klein.generators["a"], klein.generators["b"]
    reports = check_hypothesis_cent(klein, a, b)
    assert len(reports) == 1
    assert reports[0].clause == HypothesisClause.EQUAL_CENTRALISERS


def test_hypothesis_at_identity(d8):
    for h in (d8.identity, d8.generators["g"], d8.element("gamma")):
        for report in check_hypothesis_cent(d8, d8.identity, h):
            assert report.clause == HypothesisClause.EQUAL_CENTRALISERS


def test_hypothesis_rotation_pairs(d8):
    r = d8.mul[d8.generators["g"]][d8.generators["h"]]
    reports = check_hypothesis_cent(d8, r, r)
    assert reports
    assert all(report.clause != HypothesisClause.EQUAL_CENTRALISERS
               for report in reports if report.u == d8.label(d8.identity))


def test_hypothesis_needs_p_group():
    s3 = symmetric(3)
    with pytest.raises(InvalidGroupError):
        check_hypothesis_cent(s3, s3.identity, s3.identity)


def test_product_is_associative(d8):
    rng = random.Random(2)
    bases = {n: hh_basis(hh_space(d8, 2, n)) for n in (0, 1)}
    for shape in [(1, 1, 1), (0, 1, 1), (1, 0, 1)]:
        for _ in range(4):
            x, y, z = (rng.choice(bases[n]) for n in shape)
            assert sw_product(sw_product(x, y), z) == sw_product(x, sw_product(y, z))


@pytest.mark.parametrize("spec", ["cyclic:4", "elementary-abelian:2:2", "dihedral:8",
                                  "quaternion:8", "symmetric:3"])
@pytest.mark.parametrize("n", [2, 3])
def test_bv_delta_squares_to_zero(spec, n):
    group = construct_group(spec)
    for x in hh_basis(hh_space(group, 2, n)):
        assert hh_bv_delta(hh_bv_delta(x)).is_zero()


def test_bracket_is_a_derivation_of_the_product(d8):
    rng = random.Random(5)
    basis = hh_basis(hh_space(d8, 2, 1))
    for _ in range(6):
        x, y, z = (rng.choice(basis) for _ in range(3))
        lhs = gerstenhaber_bracket(x, sw_product(y, z), check=False)
        rhs = (sw_product(gerstenhaber_bracket(x, y, check=False), z)
               + sw_product(y, gerstenhaber_bracket(x, z, check=False)))
        assert lhs == rhs


def test_bv_delta_on_dihedral_center(d8):
    gamma = d8.element("gamma")
    named = identify_named_classes(d8, 2)
    result = hh_bv_delta(HHElement(d8, 2, 2, {gamma: named["z"]}))
    assert list(result.components) == [gamma]
    assert result.component(gamma) == named["x"] + named["y"]


def test_bv_delta_at_noncentral_quaternion_class(q8):
    r = next(g for g in conjugacy_classes(q8).representatives
             if centraliser(q8, g).order == 4)
    cr = centraliser(q8, r)
    x = HHElement(q8, 2, 1, {r: cohomology_space(cr, 2, 1).basis()[0]})
    result = hh_bv_delta(x)
    assert result.component(r) == cohomology_space(cr, 2, 0).basis()[0]


def test_hypothesis_transfers_vanish_on_heisenberg():
    group = construct_group("extraspecial:3:27:expP")
    g, h = group.generators["g"], group.generators["h"]
    assert centraliser(group, g).intersection(centraliser(group, h)).order == 3
    assert centraliser(group, group.mul[g][h]).order == 9
    reports = check_hypothesis_cent(group, g, h)
    assert len(reports) == 1
    assert reports[0].clause == HypothesisClause.TRANSFERS_VANISH


@pytest.mark.parametrize("spec", ["quaternion:8", "cyclic:8"])
def test_bracket_agrees_on_every_pair(spec):
    group = construct_group(spec)
    basis = hh_basis(hh_space(group, 2, 1))
    for x, y in itertools.product(basis, repeat=2):
        assert gerstenhaber_bracket(x, y, check=True) == bracket_degree_one(x, y)


@pytest.mark.parametrize(
    "spec",
    [
        "elementary-abelian:2:3",
        pytest.param("semidihedral:16", marks=pytest.mark.heavy),
        pytest.param("quaternion:16", marks=pytest.mark.heavy),
    ],
)
def test_bracket_consistency_in_suite(spec):
    group = construct_group(spec)
    results = VerificationSuite.check_hochschild(group, 2, random.Random(0))
    consistency = next(r for r in results if r.name == "hh-bracket-consistency")
    assert consistency.status == CheckStatus.PASSED
