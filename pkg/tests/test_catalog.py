"""Tests for catalog constructions and the group-spec grammar."""

import json

import pytest

from bvh.catalog import construct_group, extraspecial, heisenberg, modular, semidihedral
from bvh.errors import InvalidGroupError
from bvh.groups import center, derived_subgroup, frattini_subgroup, prime_power


@pytest.mark.parametrize(
    "spec, order, abelian",
    [
        ("cyclic:9", 9, True),
        ("elementary-abelian:3:2", 9, True),
        ("abelian:2:4", 8, True),
        ("dihedral:16", 16, False),
        ("quaternion:16", 16, False),
        ("semidihedral:16", 16, False),
        ("modular:3", 27, False),
        ("extraspecial:3:27:expP", 27, False),
        ("extraspecial:2:32:plus", 32, False),
        ("symmetric:3", 6, False),
        ("cyclic:2*cyclic:4", 8, True),
        ("central:dihedral:8*quaternion:8", 32, False),
    ],
)
def test_construct_group(spec, order, abelian):
    group = construct_group(spec)
    assert group.order == order
    assert group.is_abelian() is abelian


@pytest.mark.parametrize(
    "spec", ["dihedral:12", "cyclic:x", "nosuch:4", "extraspecial:2:16"]
)
def test_bad_specs(spec):
    with pytest.raises(InvalidGroupError):
        construct_group(spec)


@pytest.mark.parametrize(
    "group",
    [
        heisenberg(3),
        modular(3),
        extraspecial(2, 32, "plus"),
        extraspecial(2, 32, "minus"),
    ],
)
def test_extraspecial_groups(group):
    z = center(group)
    assert z.order == prime_power(group.order)[0]
    assert z == derived_subgroup(group) == frattini_subgroup(group)


def test_semidihedral_gamma_is_central():
    sd16 = semidihedral(16)
    gamma = sd16.element("gamma")
    assert center(sd16).elements == (sd16.identity, gamma)


def test_modular_two_is_dihedral():
    group = modular(2)
    assert group.order == 8
    assert sorted(group.element_order(a) for a in range(8)) == [1, 2, 2, 2, 2, 2, 4, 4]


def test_group_document(tmp_path):
    path = tmp_path / "c3.json"
    path.write_text(json.dumps({
        "name": "table-c3",
        "order": 3,
        "identity": 0,
        "mul": [[0, 1, 2], [1, 2, 0], [2, 0, 1]],
    }))
    group = construct_group(f"@{path}")
    assert group.name == "table-c3"
    assert group.order == 3
    assert group.is_abelian()


def test_group_document_rejects_non_group(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"name": "bad", "order": 2, "mul": [[0, 0], [1, 1]]}))
    with pytest.raises(InvalidGroupError):
        construct_group(f"@{path}")
