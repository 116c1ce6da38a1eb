"""Tests for Cayley-table groups and subgroup machinery."""

import pytest

from bvh.catalog import cyclic, dihedral, quaternion, symmetric
from bvh.errors import HomomorphismError, InvalidGroupError, SubgroupError
from bvh.groups import (
    Group,
    Subgroup,
    center,
    centraliser,
    characteristic_subgroups,
    conjugacy_classes,
    conjugator,
    derived_subgroup,
    direct_product,
    double_cosets,
    frattini_subgroup,
    group_homomorphism,
    normaliser,
    p_part,
    prime_power,
    quotient_group,
    right_transversal,
    subgroup_generated,
    sylow_subgroup,
)


def test_prime_power():
    assert prime_power(8) == (2, 3)
    assert prime_power(27) == (3, 3)
    assert prime_power(6) is None
    assert prime_power(1) is None


def test_invalid_tables_are_rejected():
    with pytest.raises(InvalidGroupError):
        Group([[0, 1], [0, 1]])
    with pytest.raises(InvalidGroupError):
        Group([[0, 1], [1, 0]], identity=1)
    with pytest.raises(InvalidGroupError):
        Group([[0]], max_order=0)


def test_inverse_and_power(c4):
    g = c4.generators["g"]
    assert c4.inv(g) == 3
    assert c4.power(g, 4) == c4.identity
    assert c4.power(g, -1) == 3
    assert c4.element_order(g) == 4


def test_dihedral_characteristic_subgroups(d8):
    gamma = d8.element("gamma")
    assert center(d8).elements == (d8.identity, gamma)
    assert derived_subgroup(d8) == center(d8)
    assert frattini_subgroup(d8) == center(d8)


def test_class_sizes_and_centralisers(d8, q8):
    for group in (d8, q8):
        classes = conjugacy_classes(group)
        assert len(classes.representatives) == 5
        orders = sorted(centraliser(group, r).order for r in classes.representatives)
        assert orders == [4, 4, 4, 8, 8]
        for r in classes.representatives:
            assert r == min(classes.class_elements[r])


def test_conjugator_is_smallest(d8):
    classes = conjugacy_classes(d8)
    for r in classes.representatives:
        for c in classes.class_elements[r]:
            w = conjugator(d8, c, r)
            assert d8.conj(w, c) == r
            assert all(d8.conj(v, c) != r for v in range(w))


def test_double_cosets_partition(d8):
    h = centraliser(d8, d8.generators["g"])
    k = centraliser(d8, d8.generators["h"])
    total = sum(
        h.order * k.order // h.intersection(k.conjugate(u)).order
        for u in double_cosets(d8, h, k)
    )
    assert total == d8.order


def test_right_transversal_splits(d8):
    rotations = subgroup_generated(d8, [d8.mul[d8.generators["g"]][d8.generators["h"]]])
    reps, split = right_transversal(rotations, d8.whole())
    assert len(reps) == 2
    for x in range(d8.order):
        h, r = split[x]
        assert h in rotations and r in reps
        assert d8.mul[h][r] == x


def test_subgroup_validation(c4):
    with pytest.raises(SubgroupError):
        Subgroup(c4, [0, 1])


def test_p_part_of_cyclic_six():
    c6 = cyclic(6)
    assert p_part(c6, 1, 2) == 3
    assert p_part(c6, 1, 3) == 4
    assert p_part(c6, 2, 2) == c6.identity


def test_sylow_subgroups():
    assert sylow_subgroup(symmetric(3), 2).order == 2
    assert sylow_subgroup(symmetric(3), 3).order == 3
    assert sylow_subgroup(symmetric(4), 2).order == 8


def test_homomorphism_onto_quotient():
    q16 = quaternion(16)
    d8 = dihedral(8)
    images = {
        q16.generators["g"]: d8.generators["g"],
        q16.generators["h"]: d8.generators["h"],
    }
    projection = group_homomorphism(q16, d8, images)
    assert projection[q16.named["gamma"]] == d8.identity
    assert sorted(set(projection)) == list(range(8))


def test_homomorphism_relation_violation(c4):
    c2 = cyclic(2)
    with pytest.raises(HomomorphismError):
        group_homomorphism(c2, c4, {1: 1})


def test_direct_product_structure(c4):
    c2 = cyclic(2)
    product = direct_product(c2, c4)
    assert product.order == 8
    assert product.is_abelian()
    pair = product.product.pair(1, 1)
    assert product.product.left_projection[pair] == 1
    assert product.product.right_projection[pair] == 1


def test_quotient_by_center(d8):
    quotient, projection = quotient_group(d8, center(d8))
    assert quotient.order == 4
    assert quotient.is_abelian()
    assert projection[d8.element("gamma")] == quotient.identity


def test_element_resolution(d8):
    assert d8.element("gamma") == d8.named["gamma"]
    assert d8.element("g") == d8.generators["g"]
    assert d8.element(d8.label(3)) == 3
    with pytest.raises(InvalidGroupError):
        d8.element("nope")


def test_characteristic_subgroups_of_dihedral(d8):
    subgroups = characteristic_subgroups(d8)
    assert subgroups.center.order == 2
    assert subgroups.derived.members == subgroups.center.members
    assert subgroups.frattini.members == subgroups.center.members


def test_characteristic_subgroups_without_frattini():
    subgroups = characteristic_subgroups(symmetric(3), with_frattini=False)
    assert subgroups.frattini is None
    assert subgroups.derived.order == 3
    assert subgroups.center.order == 1


def test_normaliser(d8):
    assert normaliser(d8, center(d8)).order == 8
    reflection = subgroup_generated(d8, [d8.generators["g"]])
    assert normaliser(d8, reflection).order == 4
