"""Δ_g of random 2-cocycles against commutators in the extensions they define."""

import random

import pytest

from bvh.catalog import construct_group, dihedral
from bvh.cochains import coboundary, extension_from_cocycle, random_cochain
from bvh.cohomology import cohomology_space
from bvh.commands.extension import extension_cocycles
from bvh.delta import delta_from_extension


def _random_cocycle(group, p, rng):
    space = cohomology_space(group, p, 2)
    alpha = coboundary(random_cochain(group.whole(), 1, p, rng))
    for phi in space.representatives:
        alpha = alpha + phi.scale(rng.randrange(p))
    return alpha


@pytest.mark.parametrize(
    "spec, p",
    [("elementary-abelian:2:2", 2), ("cyclic:4", 2), ("elementary-abelian:3:2", 3)],
)
def test_random_cocycles_agree_with_commutators(spec, p):
    group = construct_group(spec)
    rng = random.Random(spec)
    for _ in range(50):
        ext = extension_from_cocycle(group, _random_cocycle(group, p, rng))
        for g in group.whole().nonidentity:
            assert delta_from_extension(ext, g).agrees


def test_extension_cocycles_lists_named_classes_first():
    d8 = dihedral(8)
    cocycles = extension_cocycles(d8, 2)
    names = list(cocycles)
    assert names[0] == "z"
    assert names[1:] == ["basis[0]", "basis[1]", "basis[2]"]


def test_extension_cocycles_without_named_classes():
    group = construct_group("elementary-abelian:3:2")
    assert list(extension_cocycles(group, 3)) == ["basis[0]", "basis[1]", "basis[2]"]
