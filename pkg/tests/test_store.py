"""Tests for the memo of cohomology spaces and its work limits."""

import threading

import pytest

from bvh.cohomology import cohomology_space
from bvh.errors import BudgetExceededError
from bvh.store import SpaceStore, store


def test_budget_is_enforced():
    limits = SpaceStore(work_budget=10, heavy_threshold=5)
    limits.check_limits("ok", 10, 5)
    with pytest.raises(BudgetExceededError) as info:
        limits.check_limits("big", 11, 0)
    assert info.value.required == 11
    assert info.value.allowed == 10


def test_heavy_flag_unlocks_large_builds():
    limits = SpaceStore(work_budget=100, heavy_threshold=5)
    with pytest.raises(BudgetExceededError):
        limits.check_limits("rows", 1, 6)
    limits.configure(heavy=True)
    limits.check_limits("rows", 1, 6)


def test_allows_matches_check_limits():
    limits = SpaceStore(work_budget=100, heavy_threshold=5)
    assert limits.allows(100, 5)
    assert not limits.allows(101, 0)
    assert not limits.allows(10, 6)
    limits.configure(heavy=True)
    assert limits.allows(10, 6)
    assert not limits.allows(101, 6)


def test_builder_runs_once_under_contention():
    memo = SpaceStore(work_budget=1, heavy_threshold=1)
    calls = []

    def build():
        calls.append(1)
        return object()

    results = []
    threads = [
        threading.Thread(target=lambda: results.append(memo.get_or_build("k", build)))
        for _ in range(8)
    ]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert len(calls) == 1
    assert len({id(r) for r in results}) == 1
    assert "k" in memo and len(memo) == 1
    memo.clear()
    assert len(memo) == 0


def test_cohomology_spaces_are_memoised(d8):
    first = cohomology_space(d8, 2, 2)
    assert cohomology_space(d8, 2, 2) is first


def test_small_budget_rejects_space(d8):
    store.clear()
    store.configure(work_budget=10)
    with pytest.raises(BudgetExceededError):
        cohomology_space(d8, 2, 3)
