"""Group catalog: the p-groups used throughout, built from multiplication rules.

Group specs follow the grammar ``family:param[:param]`` (``semidihedral:16``,
``extraspecial:3:27:expP``), products ``A*B``, central products
``central:A*B`` and raw tables ``@file.json``.
"""

import itertools
import json
import logging
from collections.abc import Callable, Hashable, Mapping, Sequence
from pathlib import Path
from typing import Optional

from pydantic import ValidationError

from bvh.errors import InvalidGroupError
from bvh.groups import (
    Group,
    center,
    direct_product,
    is_prime,
    prime_power,
    quotient_group,
    subgroup_generated,
)
from bvh.models import GroupFamily
from bvh.schemas import RawGroupDocument

logger = logging.getLogger(__name__)


def _from_rule(
    elements: Sequence[Hashable],
    rule: Callable[[Hashable, Hashable], Hashable],
    name: str,
    generators: Mapping[str, Hashable],
    named: Optional[Mapping[str, Hashable]] = None,
    prime_hint: Optional[int] = None,
) -> Group:
    """Tabulate ``rule`` on ``elements``; the first element must be the identity."""
    index = {x: i for i, x in enumerate(elements)}
    mul = [[index[rule(x, y)] for y in elements] for x in elements]
    return Group(
        mul,
        identity=0,
        name=name,
        prime_hint=prime_hint,
        generators={k: index[v] for k, v in generators.items()},
        named={k: index[v] for k, v in (named or {}).items()},
    )


def _power_of_two_exponent(order: int, family: str, minimum: int) -> int:
    pk = prime_power(order)
    if pk is None or pk[0] != 2 or pk[1] < minimum:
        raise InvalidGroupError(
            f"{family} groups need order 2^n with n >= {minimum}, got {order}"
        )
    return pk[1]


# ============= Abelian Groups =============


def cyclic(n: int) -> Group:
    if n < 1:
        raise InvalidGroupError(f"cyclic order must be positive, got {n}")
    pk = prime_power(n)
    return _from_rule(
        list(range(n)),
        lambda a, b: (a + b) % n,
        name=f"cyclic:{n}",
        generators={"g": 1} if n > 1 else {},
        prime_hint=pk[0] if pk else None,
    )


def abelian(orders: Sequence[int]) -> Group:
    """Direct product of cyclic groups with generators a, b, c, ..."""
    if not orders or any(n < 1 for n in orders):
        raise InvalidGroupError(f"invalid cyclic factor orders {list(orders)}")
    elements = list(itertools.product(*(range(n) for n in orders)))
    names = "abcdefghij"
    generators = {}
    for i, n in enumerate(orders):
        if n > 1:
            generators[names[i]] = tuple(int(j == i) for j in range(len(orders)))
    total = 1
    for n in orders:
        total *= n
    pk = prime_power(total)
    return _from_rule(
        elements,
        lambda x, y: tuple((a + b) % n for a, b, n in zip(x, y, orders)),
        name="abelian:" + ":".join(map(str, orders)),
        generators=generators,
        prime_hint=pk[0] if pk else None,
    )


def elementary_abelian(p: int, k: int) -> Group:
    if not is_prime(p) or k < 1:
        raise InvalidGroupError(
            f"elementary abelian needs prime p and k >= 1, got {p}, {k}"
        )
    group = abelian([p] * k)
    group.name = f"elementary-abelian:{p}:{k}"
    return group


# ============= 2-Groups of Maximal Class =============


def dihedral(order: int) -> Group:
    """⟨g, h | g^2 = h^2 = 1, (gh)^{order/2} = 1⟩ with γ = (gh)^{order/4} central."""
    _power_of_two_exponent(order, "dihedral", 3)
    m = order // 2
    # (a, b) = s^a r^b with r = gh, s = g
    elements = [(a, b) for a in range(2) for b in range(m)]
    return _from_rule(
        elements,
        lambda x, y: ((x[0] + y[0]) % 2, ((-1) ** y[0] * x[1] + y[1]) % m),
        name=f"dihedral:{order}",
        generators={"g": (1, 0), "h": (1, 1)},
        named={"gamma": (0, m // 2)},
        prime_hint=2,
    )


def quaternion(order: int) -> Group:
    """Generalised quaternion group: ĝ² = ĥ² = (ĝĥ)^{order/4}, the involution γ."""
    _power_of_two_exponent(order, "quaternion", 3)
    m = order // 4

    # (i, j) = a^i b^j with b a b^{-1} = a^{-1}, b^2 = a^m
    def rule(x, y):
        i, j = x
        k, t = y
        if j == 0:
            return ((i + k) % (2 * m), t)
        if t == 0:
            return ((i - k) % (2 * m), 1)
        return ((i - k + m) % (2 * m), 0)

    elements = [(i, j) for j in range(2) for i in range(2 * m)]
    return _from_rule(
        elements,
        rule,
        name=f"quaternion:{order}",
        generators={"g": (0, 1), "h": ((m - 1) % (2 * m), 1)},
        named={"gamma": (m, 0)},
        prime_hint=2,
    )


def semidihedral(order: int) -> Group:
    """⟨g, h | g^2 = 1, h^{order/2} = 1, ghg = h^{order/4 - 1}⟩, γ = h^{order/4}."""
    _power_of_two_exponent(order, "semidihedral", 4)
    m = order // 2
    twist = m // 2 - 1
    elements = [(a, b) for a in range(2) for b in range(m)]
    return _from_rule(
        elements,
        lambda x, y: ((x[0] + y[0]) % 2, (x[1] * twist ** y[0] + y[1]) % m),
        name=f"semidihedral:{order}",
        generators={"g": (1, 0), "h": (0, 1)},
        named={"gamma": (0, m // 2)},
        prime_hint=2,
    )


# ============= Extraspecial Groups =============


def heisenberg(p: int) -> Group:
    """Extraspecial group of order p^3 and exponent p (p odd)."""
    if not is_prime(p) or p == 2:
        raise InvalidGroupError(
            f"exponent-p extraspecial groups need odd prime p, got {p}"
        )
    elements = list(itertools.product(range(p), repeat=3))
    return _from_rule(
        elements,
        lambda x, y: (
            (x[0] + y[0]) % p,
            (x[1] + y[1]) % p,
            (x[2] + y[2] + x[0] * y[1]) % p,
        ),
        name=f"extraspecial:{p}:{p ** 3}:expP",
        generators={"g": (1, 0, 0), "h": (0, 1, 0)},
        named={"z": (0, 0, 1)},
        prime_hint=p,
    )


def modular(p: int) -> Group:
    """Z/p^2 ⋊ Z/p with h g h^{-1} = g^{1+p}; for p = 2 this is D_8."""
    if not is_prime(p):
        raise InvalidGroupError(f"modular group needs a prime, got {p}")
    q = p * p
    elements = [(a, b) for b in range(p) for a in range(q)]
    return _from_rule(
        elements,
        lambda x, y: ((x[0] + pow(1 + p, x[1], q) * y[0]) % q, (x[1] + y[1]) % p),
        name=f"modular:{p}",
        generators={"g": (1, 0), "h": (0, 1)},
        named={"z": (p, 0)},
        prime_hint=p,
    )


def central_product(left: Group, right: Group, name: str = "") -> Group:
    """(G x H)/⟨(z, w^{-1})⟩ for the smallest central elements z, w of prime order."""

    def central_generator(group: Group) -> int:
        for z in center(group).nonidentity:
            if is_prime(group.element_order(z)):
                return z
        raise InvalidGroupError(f"{group.name} has trivial center")

    z = central_generator(left)
    w = central_generator(right)
    if left.element_order(z) != right.element_order(w):
        raise InvalidGroupError("central product needs central elements of equal order")
    product = direct_product(left, right, max_order=left.order * right.order)
    pair = product.product.pair
    amalgam = subgroup_generated(product, [pair(z, right.inverse[w])])
    quotient, _ = quotient_group(
        product, amalgam, name=name or f"central:{left.name}*{right.name}"
    )
    return quotient


def extraspecial(p: int, order: int, kind: Optional[str] = None) -> Group:
    """Extraspecial group of order p^{1+2m} as a central product of order-p^3 factors.

    kind: ``expP``/``expP2`` for odd p (exponent p or p^2), ``plus``/``minus``
    for p = 2 (D_8 or Q_8 in the first factor).
    """
    pk = prime_power(order)
    if pk is None or pk[0] != p or pk[1] < 3 or pk[1] % 2 == 0:
        raise InvalidGroupError(f"extraspecial order must be {p}^(1+2m), got {order}")
    m = (pk[1] - 1) // 2
    if p == 2:
        kind = kind or "plus"
        if kind not in ("plus", "minus"):
            raise InvalidGroupError(
                f"extraspecial 2-groups are 'plus' or 'minus', got {kind}"
            )
        first = dihedral(8) if kind == "plus" else quaternion(8)
        factor = dihedral
        factor_arg = 8
    else:
        kind = kind or "expP"
        if kind not in ("expP", "expP2"):
            raise InvalidGroupError(
                f"odd extraspecial groups are 'expP' or 'expP2', got {kind}"
            )
        first = heisenberg(p) if kind == "expP" else modular(p)
        factor = heisenberg
        factor_arg = p
    group = first
    for _ in range(m - 1):
        group = central_product(group, factor(factor_arg))
    group.name = f"extraspecial:{p}:{order}:{kind}"
    return group


def symmetric(n: int) -> Group:
    if not 1 <= n <= 4:
        raise InvalidGroupError(f"symmetric groups are available for n <= 4, got {n}")
    elements = list(itertools.permutations(range(n)))
    generators = {}
    if n > 1:
        generators["s"] = (1, 0) + tuple(range(2, n))
        generators["t"] = tuple(range(1, n)) + (0,)
    return _from_rule(
        elements,
        lambda x, y: tuple(x[i] for i in y),
        name=f"symmetric:{n}",
        generators=generators,
    )


# ============= Spec Parsing =============


def _ints(params: Sequence[str], count: Optional[int], family: str) -> list[int]:
    if count is not None and len(params) != count:
        raise InvalidGroupError(
            f"{family} takes {count} parameter(s), got {len(params)}"
        )
    try:
        return [int(x) for x in params]
    except ValueError as exc:
        raise InvalidGroupError(
            f"non-integer parameter for {family}: {params}"
        ) from exc


def load_group_document(path: Path) -> Group:
    """Build a group from a raw JSON table document."""
    try:
        document = RawGroupDocument.model_validate(json.loads(path.read_text()))
    except (OSError, json.JSONDecodeError, ValidationError) as exc:
        raise InvalidGroupError(f"cannot read group document {path}: {exc}") from exc
    if len(document.mul) != document.order:
        raise InvalidGroupError("table size does not match the declared order")
    pk = prime_power(document.order)
    return Group(
        document.mul,
        identity=document.identity,
        labels=document.labels,
        name=document.name,
        prime_hint=pk[0] if pk else None,
    )


def construct_group(spec: str) -> Group:
    """Build a validated group from a catalog spec string or ``@file.json``."""
    spec = spec.strip()
    if spec.startswith("@"):
        return load_group_document(Path(spec[1:]))
    if spec.startswith(f"{GroupFamily.CENTRAL.value}:"):
        parts = spec.split(":", 1)[1].split("*")
        if len(parts) < 2:
            raise InvalidGroupError("central products need at least two factors")
        group = construct_group(parts[0])
        for part in parts[1:]:
            group = central_product(group, construct_group(part))
        group.name = spec
        return group
    if "*" in spec:
        parts = spec.split("*")
        group = construct_group(parts[0])
        for part in parts[1:]:
            group = direct_product(group, construct_group(part))
        group.name = spec
        return group

    family, *params = spec.split(":")
    family = family.replace("_", "-")
    logger.debug(f"Constructing catalog group {spec}")
    if family == GroupFamily.CYCLIC:
        (n,) = _ints(params, 1, family)
        return cyclic(n)
    if family == GroupFamily.ELEMENTARY_ABELIAN:
        p, k = _ints(params, 2, family)
        return elementary_abelian(p, k)
    if family == GroupFamily.ABELIAN:
        return abelian(_ints(params, None, family))
    if family == GroupFamily.DIHEDRAL:
        (n,) = _ints(params, 1, family)
        return dihedral(n)
    if family == GroupFamily.QUATERNION:
        (n,) = _ints(params, 1, family)
        return quaternion(n)
    if family == GroupFamily.SEMIDIHEDRAL:
        (n,) = _ints(params, 1, family)
        return semidihedral(n)
    if family == GroupFamily.EXTRASPECIAL:
        if len(params) not in (2, 3):
            raise InvalidGroupError("extraspecial takes p:order[:kind]")
        p, order = _ints(params[:2], 2, family)
        return extraspecial(p, order, params[2] if len(params) == 3 else None)
    if family == GroupFamily.MODULAR:
        (p,) = _ints(params, 1, family)
        return modular(p)
    if family == GroupFamily.SYMMETRIC:
        (n,) = _ints(params, 1, family)
        return symmetric(n)
    raise InvalidGroupError(f"unknown group family {family!r} in spec {spec!r}")
