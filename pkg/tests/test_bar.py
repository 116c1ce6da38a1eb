"""Tests for the bar differential and the homotopy for a central element."""

import pytest

from bvh.bar import bar_differential, bar_homotopy, verify_homotopy_identity
from bvh.catalog import construct_group
from bvh.errors import NotCentralError
from bvh.models import CheckStatus
from bvh.verification import VerificationSuite


@pytest.mark.parametrize("n", [0, 1, 2, 3])
def test_homotopy_identity_on_dihedral(d8, n):
    report = verify_homotopy_identity(d8, d8.element("gamma"), n)
    assert report.passed
    assert report.checked == 7**n


@pytest.mark.parametrize("n", [1, 2])
def test_homotopy_identity_on_cyclic(c4, n):
    for g in range(1, 4):
        assert verify_homotopy_identity(c4, g, n).passed


def test_homotopy_needs_central_element(d8):
    with pytest.raises(NotCentralError):
        verify_homotopy_identity(d8, d8.generators["g"], 1)


def test_bar_differential_squares_to_zero(q8):
    e = q8.identity
    g, h = q8.generators["g"], q8.generators["h"]
    chain = {(e, g, h, g): 1, (g, h, h): 1}
    assert bar_differential(q8, bar_differential(q8, chain)) == {}


def test_homotopy_drops_identity_insertions(c4):
    assert bar_homotopy(c4, c4.identity, {(c4.identity, 1): 1}) == {}


@pytest.mark.parametrize(
    "spec",
    [
        "cyclic:8",
        "quaternion:8",
        "elementary-abelian:2:3",
        "dihedral:16",
        "quaternion:16",
        "semidihedral:16",
        "cyclic:9",
        "elementary-abelian:3:2",
        pytest.param("elementary-abelian:2:4", marks=pytest.mark.heavy),
    ],
)
def test_homotopy_identity_across_catalog(spec):
    result = VerificationSuite.check_homotopy_identity(construct_group(spec), 3)
    assert result.status == CheckStatus.PASSED
    assert "degrees [0, 1, 2, 3]" in result.detail
