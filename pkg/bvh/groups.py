"""Finite groups as exact Cayley tables, and the subgroup machinery built on them."""

import logging
from collections import deque
from collections.abc import Iterable, Mapping, Sequence
from typing import Optional, Union

from bvh.config import settings
from bvh.errors import HomomorphismError, InvalidGroupError, SubgroupError

logger = logging.getLogger(__name__)

ElementRef = Union[int, str]


def prime_power(n: int) -> Optional[tuple[int, int]]:
    """Return (p, k) with n = p^k, k >= 1, or None when n is not a prime power."""
    if n < 2:
        return None
    p = next(d for d in range(2, n + 1) if n % d == 0)
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return (p, k) if n == 1 else None


def is_prime(n: int) -> bool:
    return n >= 2 and all(n % d for d in range(2, int(n**0.5) + 1))


def word_labels(
    mul: Sequence[Sequence[int]], identity: int, generators: Mapping[str, int]
) -> list[str]:
    """Label elements by shortest words in the generators (breadth-first, stable).

    Runs of one generator are written as powers, e.g. ``g*h^2``. Elements the
    generators do not reach keep their index as label.
    """
    words: dict[int, list[tuple[str, int]]] = {identity: []}
    queue = deque([identity])
    while queue:
        a = queue.popleft()
        for name, s in generators.items():
            b = mul[a][s]
            if b in words:
                continue
            word = list(words[a])
            if word and word[-1][0] == name:
                word[-1] = (name, word[-1][1] + 1)
            else:
                word.append((name, 1))
            words[b] = word
            queue.append(b)

    labels = []
    for a in range(len(mul)):
        if a not in words:
            labels.append(str(a))
        elif not words[a]:
            labels.append("1")
        else:
            labels.append(
                "*".join(n if e == 1 else f"{n}^{e}" for n, e in words[a])
            )
    return labels


class Group:
    """A finite group given by its multiplication table.

    Elements are the indices ``0..order-1``. Derived data (inverses, element
    orders, centralisers, conjugacy classes) is computed lazily and cached;
    the table itself never changes after construction.
    """

    def __init__(
        self,
        mul: Sequence[Sequence[int]],
        identity: int = 0,
        labels: Optional[Sequence[str]] = None,
        name: str = "",
        prime_hint: Optional[int] = None,
        generators: Optional[Mapping[str, int]] = None,
        named: Optional[Mapping[str, int]] = None,
        max_order: Optional[int] = None,
        validate: bool = True,
    ):
        self.mul: tuple[tuple[int, ...], ...] = tuple(tuple(row) for row in mul)
        self.order = len(self.mul)
        self.identity = identity
        self.name = name or f"table:{self.order}"
        self.generators: dict[str, int] = dict(generators or {})
        self.named: dict[str, int] = dict(named or {})
        self.prime_hint = prime_hint

        limit = max_order if max_order is not None else settings.MAX_GROUP_ORDER
        if self.order > limit:
            raise InvalidGroupError(
                f"group order {self.order} exceeds the maximum of {limit}"
            )
        if validate:
            self._validate()

        self.inverse = [row.index(identity) for row in self.mul]
        if labels is None:
            labels = word_labels(self.mul, identity, self.generators)
        if len(labels) != self.order:
            raise InvalidGroupError("one label per element is required")
        self.labels = list(labels)
        self.key = hash((self.order, self.identity, self.mul))
        self._cache: dict = {}

    def _validate(self) -> None:
        n = self.order
        if n == 0:
            raise InvalidGroupError("empty multiplication table")
        full = list(range(n))
        for a, row in enumerate(self.mul):
            if len(row) != n or sorted(row) != full:
                raise InvalidGroupError(f"row {a} is not a permutation of the elements")
        for b in range(n):
            if sorted(self.mul[a][b] for a in range(n)) != full:
                raise InvalidGroupError(
                    f"column {b} is not a permutation of the elements"
                )
        e = self.identity
        if not 0 <= e < n:
            raise InvalidGroupError(f"identity index {e} out of range")
        if any(self.mul[e][a] != a or self.mul[a][e] != a for a in range(n)):
            raise InvalidGroupError(f"element {e} is not a two-sided identity")
        mul = self.mul
        for a in range(n):
            row_a = mul[a]
            for b in range(n):
                if mul[row_a[b]] != tuple(row_a[x] for x in mul[b]):
                    raise InvalidGroupError(
                        f"multiplication is not associative at ({a}, {b}, ·)"
                    )

    def __repr__(self) -> str:
        return f"Group({self.name!r}, order={self.order})"

    # ---- element arithmetic ----

    def op(self, a: int, b: int) -> int:
        return self.mul[a][b]

    def inv(self, a: int) -> int:
        return self.inverse[a]

    def power(self, a: int, k: int) -> int:
        if k < 0:
            a, k = self.inverse[a], -k
        result = self.identity
        for _ in range(k):
            result = self.mul[result][a]
        return result

    def conj(self, u: int, a: int) -> int:
        """Return u a u^{-1}."""
        return self.mul[self.mul[u][a]][self.inverse[u]]

    def commutator(self, a: int, b: int) -> int:
        """Return a b a^{-1} b^{-1}."""
        mul, inv = self.mul, self.inverse
        return mul[mul[mul[a][b]][inv[a]]][inv[b]]

    def element_order(self, a: int) -> int:
        orders = self._cache.get("orders")
        if orders is None:
            orders = []
            for x in range(self.order):
                k, y = 1, x
                while y != self.identity:
                    y = self.mul[y][x]
                    k += 1
                orders.append(k)
            self._cache["orders"] = orders
        return orders[a]

    def is_central(self, a: int) -> bool:
        row = self.mul[a]
        return all(row[x] == self.mul[x][a] for x in range(self.order))

    def is_abelian(self) -> bool:
        return all(self.is_central(a) for a in range(self.order))

    def element(self, ref: ElementRef) -> int:
        """Resolve an element given by index, named alias, generator or label."""
        if isinstance(ref, int):
            if 0 <= ref < self.order:
                return ref
            raise InvalidGroupError(f"element index {ref} out of range")
        if ref in self.named:
            return self.named[ref]
        if ref in self.generators:
            return self.generators[ref]
        if ref in self.labels:
            return self.labels.index(ref)
        if ref.isdigit():
            return self.element(int(ref))
        raise InvalidGroupError(f"unknown element {ref!r} in {self.name}")

    def label(self, a: int) -> str:
        return self.labels[a]

    def whole(self) -> "Subgroup":
        return Subgroup(self, range(self.order), check=False)

    def trivial(self) -> "Subgroup":
        return Subgroup(self, [self.identity], check=False)


class Subgroup:
    """A subgroup of a parent group, stored as a sorted tuple of element indices."""

    __slots__ = ("parent", "elements", "members", "nonidentity", "_key")

    def __init__(self, parent: Group, elements: Iterable[int], check: bool = True):
        self.parent = parent
        self.elements = tuple(sorted(set(elements)))
        self.members = frozenset(self.elements)
        self.nonidentity = tuple(a for a in self.elements if a != parent.identity)
        self._key = (parent.key, self.elements)
        if check:
            self._validate()

    def _validate(self) -> None:
        g = self.parent
        if g.identity not in self.members:
            raise SubgroupError("subgroup must contain the identity")
        for a in self.elements:
            if g.inverse[a] not in self.members:
                raise SubgroupError(f"element {a} has no inverse in the subgroup")
            row = g.mul[a]
            if any(row[b] not in self.members for b in self.elements):
                raise SubgroupError(f"subgroup is not closed under products with {a}")

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def key(self) -> tuple:
        return self._key

    def __contains__(self, a: int) -> bool:
        return a in self.members

    def __iter__(self):
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Subgroup) and self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    def __le__(self, other: "Subgroup") -> bool:
        return self.parent.key == other.parent.key and self.members <= other.members

    def __repr__(self) -> str:
        return f"Subgroup(order={self.order} of {self.parent.name})"

    def is_whole(self) -> bool:
        return self.order == self.parent.order

    def index_in(self, other: "Subgroup") -> int:
        return other.order // self.order

    def intersection(self, other: "Subgroup") -> "Subgroup":
        return Subgroup(self.parent, self.members & other.members, check=False)

    def is_central_element(self, a: int) -> bool:
        """Whether ``a`` lies in this subgroup and commutes with all of it."""
        if a not in self.members:
            return False
        mul = self.parent.mul
        return all(mul[a][x] == mul[x][a] for x in self.elements)

    def conjugate(self, u: int) -> "Subgroup":
        """Return u H u^{-1}."""
        return Subgroup(self.parent, (self.parent.conj(u, a) for a in self.elements),
                        check=False)

    def is_normal(self) -> bool:
        g = self.parent
        return all(
            g.conj(u, a) in self.members for u in range(g.order) for a in self.elements
        )


class ConjugacyData:
    """Conjugacy classes with smallest-index representatives."""

    def __init__(self, representatives: list[int], class_of: list[int],
                 class_elements: dict[int, list[int]]):
        self.representatives = representatives
        self.class_of = class_of
        self.class_elements = class_elements

    def __len__(self) -> int:
        return len(self.representatives)

    def size(self, rep: int) -> int:
        return len(self.class_elements[rep])


class CharacteristicSubgroups:
    """Center, derived subgroup and (for p-groups) Frattini subgroup."""

    def __init__(self, center: Subgroup, derived: Subgroup,
                 frattini: Optional[Subgroup]):
        self.center = center
        self.derived = derived
        self.frattini = frattini


class ProductStructure:
    """Bookkeeping for G x H: pairing, projections and embeddings."""

    def __init__(self, left: Group, right: Group):
        self.left = left
        self.right = right
        m = right.order
        self.left_projection = [a // m for a in range(left.order * m)]
        self.right_projection = [a % m for a in range(left.order * m)]
        self.left_embedding = [a * m + right.identity for a in range(left.order)]
        self.right_embedding = [left.identity * m + b for b in range(m)]

    def pair(self, a: int, b: int) -> int:
        return a * self.right.order + b


# ============= Subgroup construction =============


def subgroup_generated(g: Group, elements: Iterable[int]) -> Subgroup:
    """Closure of ``elements`` under multiplication."""
    gens = sorted(set(elements))
    members = {g.identity}
    queue = deque([g.identity])
    while queue:
        a = queue.popleft()
        for s in gens:
            b = g.mul[a][s]
            if b not in members:
                members.add(b)
                queue.append(b)
    return Subgroup(g, members, check=False)


def centraliser(g: Group, a: int) -> Subgroup:
    """C_G(a) = {x : xa = ax}; cached per element."""
    cache = g._cache.setdefault("centralisers", {})
    if a not in cache:
        row = g.mul[a]
        cache[a] = Subgroup(
            g, (x for x in range(g.order) if row[x] == g.mul[x][a]), check=False
        )
    return cache[a]


def subgroup_centraliser(h: Subgroup, a: int) -> Subgroup:
    """C_H(a) for a subgroup H."""
    mul = h.parent.mul
    return Subgroup(h.parent, (x for x in h.elements if mul[x][a] == mul[a][x]),
                    check=False)


def normaliser(g: Group, h: Subgroup) -> Subgroup:
    return Subgroup(
        g,
        (u for u in range(g.order) if all(g.conj(u, a) in h for a in h.elements)),
        check=False,
    )


def center(g: Group) -> Subgroup:
    if "center" not in g._cache:
        g._cache["center"] = Subgroup(
            g, (a for a in range(g.order) if g.is_central(a)), check=False
        )
    return g._cache["center"]


def derived_subgroup(g: Group) -> Subgroup:
    if "derived" not in g._cache:
        elements = range(g.order)
        commutators = {g.commutator(a, b) for a in elements for b in elements}
        g._cache["derived"] = subgroup_generated(g, commutators)
    return g._cache["derived"]


def commutator_power_subgroup(g: Group, p: int) -> Subgroup:
    """[G,G] G^p, the kernel of G -> Hom(G, F_p)^*; defined for any finite G."""
    cache = g._cache.setdefault("commutator_power", {})
    if p not in cache:
        powers = {g.power(a, p) for a in range(g.order)}
        cache[p] = subgroup_generated(g, set(derived_subgroup(g).elements) | powers)
    return cache[p]


def subgroup_commutator_power(h: Subgroup, p: int) -> Subgroup:
    """[H,H] H^p for a subgroup H; equals Φ(H) when H is a p-group."""
    g = h.parent
    key = ("commutator_power", h.key, p)
    if key not in g._cache:
        elements = {g.commutator(a, b) for a in h.elements for b in h.elements}
        elements |= {g.power(a, p) for a in h.elements}
        g._cache[key] = subgroup_generated(g, elements)
    return g._cache[key]


def frattini_subgroup(g: Group) -> Subgroup:
    """Φ(G) for a p-group, computed as [G,G]·G^p."""
    pk = prime_power(g.order)
    if g.order == 1:
        return g.trivial()
    if pk is None:
        raise InvalidGroupError(
            f"Frattini subgroup requested for {g.name} "
            f"of non-prime-power order {g.order}"
        )
    return commutator_power_subgroup(g, pk[0])


def characteristic_subgroups(
    g: Group, with_frattini: bool = True
) -> CharacteristicSubgroups:
    frattini = frattini_subgroup(g) if with_frattini else None
    return CharacteristicSubgroups(center(g), derived_subgroup(g), frattini)


def conjugacy_classes(g: Group) -> ConjugacyData:
    """Partition into classes; each representative is the smallest member."""
    if "classes" in g._cache:
        return g._cache["classes"]
    class_of = [-1] * g.order
    reps: list[int] = []
    members: dict[int, list[int]] = {}
    for a in range(g.order):
        if class_of[a] >= 0:
            continue
        orbit = sorted({g.conj(u, a) for u in range(g.order)})
        reps.append(a)
        members[a] = orbit
        for b in orbit:
            class_of[b] = a
    data = ConjugacyData(reps, class_of, members)
    g._cache["classes"] = data
    return data


def conjugator(g: Group, a: int, b: int) -> int:
    """Smallest w with w a w^{-1} = b."""
    for w in range(g.order):
        if g.conj(w, a) == b:
            return w
    raise InvalidGroupError(f"{g.label(a)} and {g.label(b)} are not conjugate")


def double_cosets(g: Group, h: Subgroup, k: Subgroup) -> list[int]:
    """One representative (the smallest index) per double coset H u K."""
    for s in (h, k):
        if s.parent.key != g.key:
            raise SubgroupError("double cosets need subgroups of the same group")
    key = ("double_cosets", h.key, k.key)
    if key in g._cache:
        return g._cache[key]
    seen = [False] * g.order
    reps = []
    for u in range(g.order):
        if seen[u]:
            continue
        reps.append(u)
        for x in h.elements:
            xu = g.mul[x][u]
            for y in k.elements:
                seen[g.mul[xu][y]] = True
    g._cache[key] = reps
    return reps


def right_transversal(
    h: Subgroup, big: Subgroup
) -> tuple[list[int], dict[int, tuple[int, int]]]:
    """Right coset representatives of H in L and the split x = h·r for x in L.

    Returns the sorted representatives (smallest element of each coset Hr) and a
    map x -> (h, r).
    """
    g = h.parent
    key = ("transversal", h.key, big.key)
    if key in g._cache:
        return g._cache[key]
    if not h.members <= big.members:
        raise SubgroupError("transfer needs H to be a subgroup of L")
    split: dict[int, tuple[int, int]] = {}
    reps = []
    for x in big.elements:
        if x in split:
            continue
        coset = [g.mul[y][x] for y in h.elements]
        r = min(coset)
        reps.append(r)
        r_inv = g.inverse[r]
        for z in coset:
            split[z] = (g.mul[z][r_inv], r)
    result = (sorted(reps), split)
    g._cache[key] = result
    return result


# ============= Elements and maps =============


def p_part(g: Group, a: int, p: int) -> int:
    """The power a^k whose order is the p-part of the order of a."""
    n = g.element_order(a)
    q = 1
    while n % p == 0:
        n //= p
        q *= p
    # a = a_p a_p' with a_p = a^(m·n) where m ≡ n^{-1} mod q
    if q == 1:
        return g.identity
    m = pow(n, -1, q)
    return g.power(a, (m * n) % (q * n))


def sylow_subgroup(g: Group, p: int) -> Subgroup:
    """A Sylow p-subgroup, found by climbing normalisers from a cyclic p-subgroup."""
    target = 1
    n = g.order
    while n % p == 0:
        n //= p
        target *= p
    if target == 1:
        return g.trivial()

    def p_element(a: int) -> bool:
        return prime_power(g.element_order(a)) is not None and (
            g.element_order(a) % p == 0
        )

    candidates = [a for a in range(g.order) if p_element(a)]
    start = max(candidates, key=lambda a: (g.element_order(a), -a))
    sylow = subgroup_generated(g, [start])
    while sylow.order < target:
        norm = normaliser(g, sylow)
        for x in norm.elements:
            if x in sylow:
                continue
            y = x
            for _ in range(target.bit_length()):
                y = g.power(y, p)
                if y in sylow:
                    break
            if y in sylow:
                sylow = subgroup_generated(g, sylow.elements + (x,))
                break
        else:  # pragma: no cover - Sylow theory guarantees progress
            raise InvalidGroupError("normaliser climbing stalled")
    logger.debug(f"Sylow {p}-subgroup of {g.name} has order {sylow.order}")
    return sylow


def group_homomorphism(
    source: Group, target: Group, generator_images: Mapping[int, int]
) -> list[int]:
    """Extend generator images to a total homomorphism, or raise HomomorphismError."""
    images = {source.identity: target.identity}
    queue = deque([source.identity])
    while queue:
        a = queue.popleft()
        for s, t in generator_images.items():
            b = source.mul[a][s]
            value = target.mul[images[a]][t]
            if b not in images:
                images[b] = value
                queue.append(b)
            elif images[b] != value:
                raise HomomorphismError(
                    f"images violate a relation at {source.label(b)} in {source.name}"
                )
    if len(images) != source.order:
        raise HomomorphismError("generator images are not given on a generating set")
    return [images[a] for a in range(source.order)]


def direct_product(left: Group, right: Group, max_order: Optional[int] = None) -> Group:
    """G x H with element (a, b) at index a·|H| + b and projections recorded."""
    m = right.order
    n = left.order * m
    mul = [
        [
            left.mul[a // m][c // m] * m + right.mul[a % m][c % m]
            for c in range(n)
        ]
        for a in range(n)
    ]
    labels = [f"({left.labels[a // m]},{right.labels[a % m]})" for a in range(n)]
    generators = {f"{k}1": v * m + right.identity for k, v in left.generators.items()}
    generators.update(
        {f"{k}2": left.identity * m + v for k, v in right.generators.items()}
    )
    hint = left.prime_hint if left.prime_hint == right.prime_hint else None
    product = Group(
        mul,
        identity=left.identity * m + right.identity,
        labels=labels,
        name=f"{left.name}*{right.name}",
        prime_hint=hint,
        generators=generators,
        max_order=max_order,
        validate=False,
    )
    product.product = ProductStructure(left, right)
    return product


def quotient_group(
    g: Group, normal: Subgroup, name: str = ""
) -> tuple[Group, list[int]]:
    """G/N with cosets indexed by their smallest element; returns (Q, projection)."""
    if not normal.is_normal():
        raise SubgroupError("quotient needs a normal subgroup")
    coset_min = [min(g.mul[a][x] for x in normal.elements) for a in range(g.order)]
    reps = sorted(set(coset_min))
    index = {r: i for i, r in enumerate(reps)}
    projection = [index[coset_min[a]] for a in range(g.order)]
    mul = [[projection[g.mul[r][s]] for s in reps] for r in reps]
    generators = {k: projection[v] for k, v in g.generators.items()}
    quotient = Group(
        mul,
        identity=projection[g.identity],
        labels=[g.labels[r] for r in reps],
        name=name or f"{g.name}/N",
        prime_hint=g.prime_hint,
        generators=generators,
        validate=False,
    )
    return quotient, projection
