"""Tests for normalized cochains and the cochain-level maps."""

import random

import pytest

from bvh.catalog import elementary_abelian
from bvh.cochains import (
    Cochain,
    bockstein,
    coboundary,
    cocycle_from_extension,
    conjugate_cochain,
    cross_product,
    cup,
    delta_g_cochain,
    extension_commutator,
    extension_from_cocycle,
    hom_cochain,
    is_cocycle,
    pullback,
    random_cochain,
    restrict,
    transfer,
    transfer_value,
)
from bvh.cohomology import class_of
from bvh.errors import (
    DimensionMismatchError,
    NotACocycleError,
    NotCentralError,
    SubgroupError,
)
from bvh.groups import centraliser, direct_product, subgroup_generated


def _parity_hom(group, p=2):
    """a ↦ exponent of a mod p on a cyclic catalog group."""
    g = group.generators["g"]
    values, a = {}, group.identity
    for k in range(group.order):
        values[a] = k % p
        a = group.mul[a][g]
    return hom_cochain(group.whole(), p, values)


@pytest.mark.parametrize("degree", [0, 1, 2])
def test_coboundary_squares_to_zero(d8, degree):
    rng = random.Random(degree)
    phi = random_cochain(d8.whole(), degree, 2, rng)
    assert coboundary(coboundary(phi)).is_zero()


@pytest.mark.parametrize("degree", [1, 2])
def test_delta_commutes_with_coboundary(d8, degree):
    rng = random.Random(10 + degree)
    gamma = d8.element("gamma")
    phi = random_cochain(d8.whole(), degree, 2, rng)
    lhs = delta_g_cochain(coboundary(phi), gamma)
    assert lhs == coboundary(delta_g_cochain(phi, gamma))


def test_delta_on_two_cochains_is_a_commutator_form(klein):
    rng = random.Random(3)
    alpha = random_cochain(klein.whole(), 2, 2, rng)
    for g in klein.whole().nonidentity:
        hom = delta_g_cochain(alpha, g)
        for h in klein.whole().nonidentity:
            assert hom(h) == (alpha(g, h) - alpha(h, g)) % 2


def test_delta_errors(d8):
    phi = random_cochain(d8.whole(), 1, 2, random.Random(0))
    with pytest.raises(NotCentralError):
        delta_g_cochain(phi, d8.generators["g"])
    with pytest.raises(DimensionMismatchError):
        delta_g_cochain(Cochain.constant(d8.whole(), 2), d8.element("gamma"))


def test_delta_at_identity_is_zero(d8):
    phi = random_cochain(d8.whole(), 2, 2, random.Random(1))
    assert delta_g_cochain(phi, d8.identity).is_zero()


def test_homs_are_cocycles(c4):
    y = _parity_hom(c4)
    assert is_cocycle(y)
    assert not is_cocycle(Cochain(c4.whole(), 1, 2, {(1,): 1}))


def test_bockstein_of_degree_one(c2, c4):
    assert not class_of(bockstein(_parity_hom(c2))).is_zero()
    assert class_of(bockstein(_parity_hom(c4))).is_zero()


def test_bockstein_requires_cocycle(c4):
    phi = Cochain(c4.whole(), 1, 2, {(1,): 1})
    with pytest.raises(NotACocycleError):
        bockstein(phi)


def test_cup_values(klein):
    whole = klein.whole()
    a, b = klein.generators["a"], klein.generators["b"]
    x = hom_cochain(whole, 2, {a: 1, klein.mul[a][b]: 1})
    y = hom_cochain(whole, 2, {b: 1, klein.mul[a][b]: 1})
    product = cup(x, y)
    assert product.degree == 2
    assert product(a, b) == 1
    assert product(b, a) == 0
    assert is_cocycle(product)


def test_restriction_and_transfer_of_constants(d8):
    rotations = centraliser(d8, d8.mul[d8.generators["g"]][d8.generators["h"]])
    one = Cochain.constant(d8.whole(), 3)
    restricted = restrict(one, rotations)
    assert restricted.domain == rotations
    assert transfer(restricted, d8.whole()).scalar() == 2
    with pytest.raises(SubgroupError):
        restrict(restricted, d8.whole())


def test_transfer_value_matches_transfer(d8):
    rotations = centraliser(d8, d8.mul[d8.generators["g"]][d8.generators["h"]])
    phi = random_cochain(rotations, 2, 2, random.Random(7))
    full = transfer(phi, d8.whole())
    for a in d8.whole().nonidentity:
        for b in d8.whole().nonidentity:
            assert transfer_value(phi, d8.whole(), (a, b)) == full(a, b)


def test_conjugation_moves_domain(d8):
    g = d8.generators["g"]
    h = d8.generators["h"]
    cg = centraliser(d8, g)
    phi = random_cochain(cg, 1, 2, random.Random(2))
    moved = conjugate_cochain(phi, h)
    assert moved.domain == cg.conjugate(h)
    for a in cg.nonidentity:
        assert moved(d8.conj(h, a)) == phi(a)


def test_pullback_along_projection(c2, c4):
    projection = [k % 2 for k in range(4)]
    y = _parity_hom(c2)
    assert pullback(y, projection, c4.whole()) == _parity_hom(c4)


def test_cross_product_lands_on_product(c2):
    product = direct_product(c2, c2)
    y = _parity_hom(c2)
    cross = cross_product(y, y, product)
    assert cross.degree == 2
    assert cross.domain == product.whole()
    assert is_cocycle(cross)
    assert cross(product.product.pair(1, 0), product.product.pair(0, 1)) == 1


def test_extension_of_c2_by_square_is_c4(c2):
    y = _parity_hom(c2)
    ext = extension_from_cocycle(c2, cup(y, y))
    assert ext.extension.order == 4
    assert max(ext.extension.element_order(a) for a in range(4)) == 4


def test_extension_commutators_in_dihedral_extension():
    klein = elementary_abelian(2, 2)
    whole = klein.whole()
    a, b = klein.generators["a"], klein.generators["b"]
    ab = klein.mul[a][b]
    x = hom_cochain(whole, 2, {a: 1, ab: 1})
    y = hom_cochain(whole, 2, {b: 1, ab: 1})
    ext = extension_from_cocycle(klein, cup(x, y))
    assert not ext.extension.is_abelian()
    assert extension_commutator(ext, a, b) == 1
    assert extension_commutator(ext, a, ab) == 1
    assert extension_commutator(ext, a, a) == 0


def test_extension_rejects_non_cocycles(c4):
    with pytest.raises(NotACocycleError):
        extension_from_cocycle(c4, Cochain(c4.whole(), 2, 2, {(1, 1): 1}))


def test_cocycle_from_cyclic_extension(c2, c4):
    projection = [k % 2 for k in range(4)]
    alpha = cocycle_from_extension(c4, c2, projection, 2, 2)
    assert alpha(1, 1) == 1
    assert class_of(alpha) == class_of(cup(_parity_hom(c2), _parity_hom(c2)))


def test_checked_construction_rejects_bad_tuples(c4):
    with pytest.raises(DimensionMismatchError):
        Cochain(c4.whole(), 2, 2, {(1,): 1}, check=True)
    with pytest.raises(DimensionMismatchError):
        Cochain(subgroup_generated(c4, [2]), 1, 2, {(1,): 1}, check=True)
