"""Normalized bar resolution chains and the homotopy s with δs + sδ = g - 1."""

import itertools
import logging
from typing import Optional

from bvh.errors import NotCentralError
from bvh.groups import Group

logger = logging.getLogger(__name__)

Chain = dict[tuple[int, ...], int]


class HomotopyReport:
    """Outcome of checking δ_{n+1}s_n + s_{n-1}δ_n = (g - 1)·id in one degree."""

    def __init__(
        self, degree: int, checked: int, witness: Optional[tuple[int, ...]] = None
    ):
        self.degree = degree
        self.checked = checked
        self.witness = witness

    @property
    def passed(self) -> bool:
        return self.witness is None

    def __repr__(self) -> str:
        status = "passed" if self.passed else f"failed at {self.witness}"
        return f"HomotopyReport(degree={self.degree}, checked={self.checked}, {status})"


def _add(target: Chain, key: tuple[int, ...], coefficient: int, identity: int) -> None:
    # tuples with the identity after position 0 vanish in the normalized complex
    if identity in key[1:]:
        return
    value = target.get(key, 0) + coefficient
    if value:
        target[key] = value
    else:
        target.pop(key, None)


def bar_differential(group: Group, chain: Chain) -> Chain:
    """δ_k(a_0..a_k) = Σ_{i<k} (-1)^i (..a_i a_{i+1}..) + (-1)^k (a_0..a_{k-1})."""
    mul, identity = group.mul, group.identity
    out: Chain = {}
    for t, c in chain.items():
        k = len(t) - 1
        if k == 0:
            continue
        for i in range(k):
            merged = t[:i] + (mul[t[i]][t[i + 1]],) + t[i + 2:]
            _add(out, merged, c if i % 2 == 0 else -c, identity)
        _add(out, t[:k], c if k % 2 == 0 else -c, identity)
    return out


def bar_homotopy(group: Group, g: int, chain: Chain) -> Chain:
    """s_k(a_0..a_k) = Σ_{i=0}^{k} (-1)^i (a_0..a_i, g, a_{i+1}..a_k)."""
    identity = group.identity
    out: Chain = {}
    for t, c in chain.items():
        for i in range(len(t)):
            _add(out, t[:i + 1] + (g,) + t[i + 1:], c if i % 2 == 0 else -c, identity)
    return out


def verify_homotopy_identity(group: Group, g: int, n: int) -> HomotopyReport:
    """Expand both sides on every basis chain (1, a_1..a_n) and compare exactly."""
    if not group.is_central(g):
        raise NotCentralError(f"{group.label(g)} is not central in {group.name}")
    identity = group.identity
    nonidentity = [a for a in range(group.order) if a != identity]
    checked = 0
    for rest in itertools.product(nonidentity, repeat=n):
        basis = {(identity,) + rest: 1}
        lhs = bar_differential(group, bar_homotopy(group, g, basis))
        if n > 0:
            for t, c in bar_homotopy(group, g, bar_differential(group, basis)).items():
                _add(lhs, t, c, identity)
        rhs: Chain = {}
        _add(rhs, (g,) + rest, 1, identity)
        _add(rhs, (identity,) + rest, -1, identity)
        checked += 1
        if lhs != rhs:
            logger.error(
                f"Homotopy identity fails for {group.name}, "
                f"g={group.label(g)} at {rest}"
            )
            return HomotopyReport(n, checked, witness=rest)
    logger.debug(
        f"Homotopy identity holds for {group.name} in degree {n} ({checked} chains)"
    )
    return HomotopyReport(n, checked)
