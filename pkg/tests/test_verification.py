"""Tests for the invariant suite."""

import random

import pytest

from bvh.catalog import cyclic, symmetric
from bvh.models import CheckStatus
from bvh.store import store
from bvh.verification import VerificationSuite


def _statuses(results):
    return {r.name: r.status for r in results}


def test_suite_passes_on_cyclic_four(c4):
    results = VerificationSuite.run(c4, 2, 3, seed=0)
    assert not [r for r in results if r.status is CheckStatus.FAILED]
    statuses = _statuses(results)
    assert statuses["homotopy-identity"] == CheckStatus.PASSED
    assert statuses["lie-axioms"] == CheckStatus.PASSED
    assert statuses["lie-extraspecial"] == CheckStatus.SKIPPED


@pytest.mark.parametrize("fixture", ["klein", "d8"])
def test_suite_passes_on_small_two_groups(request, fixture):
    group = request.getfixturevalue(fixture)
    results = VerificationSuite.run(group, 2, 2, seed=1)
    assert all(r.status is not CheckStatus.FAILED for r in results)


def test_nonsoluble_witness_check(klein):
    statuses = _statuses(VerificationSuite.check_lie(klein, 2))
    assert statuses["lie-nonsoluble-witness"] == CheckStatus.PASSED


def test_lie_checks_skip_on_non_p_groups():
    results = VerificationSuite.check_lie(symmetric(3), 2)
    assert {r.status for r in results} == {CheckStatus.SKIPPED}


def test_homotopy_skipped_above_order_cap():
    result = VerificationSuite.check_homotopy_identity(cyclic(32), 2)
    assert result.status is CheckStatus.SKIPPED


def test_rank_oracle_passes():
    for p in (2, 3, 7):
        assert VerificationSuite.check_rank_oracle(p, random.Random(p)).status \
            is CheckStatus.PASSED


def test_budget_errors_become_skips(d8):
    store.clear()
    store.configure(work_budget=50)
    results = VerificationSuite.run(d8, 2, 3, seed=0)
    assert all(r.status is not CheckStatus.FAILED for r in results)
    assert any(r.status is CheckStatus.SKIPPED for r in results)


def test_product_bracket_and_naturality_checks_on_dihedral(d8):
    statuses = _statuses(VerificationSuite.run(d8, 2, 3, seed=2))
    for name in ("hh-associative", "hh-delta-square", "hh-bracket-leibniz",
                 "delta-naturality"):
        assert statuses[name] == CheckStatus.PASSED


@pytest.mark.parametrize("n, p", [(4, 2), (6, 2), (6, 3)])
def test_naturality_check_on_cyclic_groups(n, p):
    result = VerificationSuite.check_naturality(cyclic(n), p, 3)
    assert result.status == CheckStatus.PASSED
    assert result.detail.startswith("2 maps")


def test_naturality_skips_without_center():
    result = VerificationSuite.check_naturality(symmetric(3), 2, 2)
    assert result.status == CheckStatus.SKIPPED


def test_leibniz_needs_degree_three(klein):
    result = VerificationSuite.check_bracket_leibniz(klein, 2, 2, random.Random(0))
    assert result.status == CheckStatus.SKIPPED
    result = VerificationSuite.check_bracket_leibniz(klein, 2, 3, random.Random(0))
    assert result.status == CheckStatus.PASSED


def test_hh_checks_on_klein(klein):
    rng = random.Random(3)
    assert VerificationSuite.check_sw_associativity(klein, 2, 2, rng).status == (
        CheckStatus.PASSED
    )
    result = VerificationSuite.check_hh_delta_square(klein, 2, 3)
    assert result.status == CheckStatus.PASSED
    assert "degrees [2, 3]" in result.detail
