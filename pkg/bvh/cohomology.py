"""H^n(H, F_p) as cocycles modulo coboundaries, with class arithmetic and named classes.

Coordinates of a degree-n cochain on H index the n-tuples of non-identity
elements of H lexicographically (mixed radix with base |H| - 1).
"""

import itertools
import logging
from collections import deque
from collections.abc import Iterator, Sequence
from typing import Optional, Union

from bvh.catalog import quaternion
from bvh.cochains import (
    Cochain,
    bockstein,
    cocycle_from_extension,
    conjugate_cochain,
    cup,
    delta_g_cochain,
    domain_tuples,
    restrict,
    transfer,
)
from bvh.errors import (
    DimensionMismatchError,
    NotACocycleError,
    NotInSubspaceError,
    SubgroupError,
    UnsupportedGroupError,
)
from bvh.groups import (
    Group,
    Subgroup,
    group_homomorphism,
    subgroup_commutator_power,
    subgroup_generated,
)
from bvh.linalg import FpMatrix, FpSubspaceBasis, QuotientSpace, SparseVector
from bvh.store import store

logger = logging.getLogger(__name__)

Domain = Union[Group, Subgroup]


def as_subgroup(domain: Domain) -> Subgroup:
    return domain.whole() if isinstance(domain, Group) else domain


class CohomologySpace:
    """Basis of H^n(H, F_p): cocycles Z^n, coboundaries B^n and a fixed complement."""

    def __init__(self, domain: Subgroup, p: int, degree: int,
                 cocycles: FpSubspaceBasis, coboundaries: FpSubspaceBasis):
        self.domain = domain
        self.p = p
        self.degree = degree
        self.cocycles = cocycles
        self.coboundaries = coboundaries
        self._position = {a: i for i, a in enumerate(domain.nonidentity)}
        self._base = len(domain.nonidentity)
        self.quotient = QuotientSpace(cocycles, coboundaries)
        self.representatives = [self.cochain_of(v) for v in self.quotient.complement]

    @property
    def key(self) -> tuple:
        return (self.domain.key, self.p, self.degree)

    @property
    def dimension(self) -> int:
        return self.quotient.dimension

    def __repr__(self) -> str:
        return (f"CohomologySpace(H^{self.degree}, p={self.p}, dim={self.dimension}, "
                f"{self.domain})")

    # ---- coordinates ----

    def index(self, t: Sequence[int]) -> int:
        i = 0
        for x in t:
            i = i * self._base + self._position[x]
        return i

    def tuple_at(self, index: int) -> tuple[int, ...]:
        digits = []
        for _ in range(self.degree):
            index, r = divmod(index, self._base)
            digits.append(self.domain.nonidentity[r])
        return tuple(reversed(digits))

    def vector_of(self, phi: Cochain) -> SparseVector:
        if phi.domain != self.domain or phi.degree != self.degree or phi.p != self.p:
            raise DimensionMismatchError(f"cochain does not belong to {self!r}")
        return {self.index(t): a for t, a in phi.values.items()}

    def cochain_of(self, v: SparseVector) -> Cochain:
        return Cochain(self.domain, self.degree, self.p,
                       {self.tuple_at(i): a for i, a in v.items()})

    # ---- classes ----

    def class_of(self, phi: Cochain) -> "CohomologyClass":
        try:
            coords = self.quotient.coordinates(self.vector_of(phi))
        except NotInSubspaceError as exc:
            raise NotACocycleError(
                f"cochain of degree {phi.degree} is not a cocycle"
            ) from exc
        return CohomologyClass(self, coords)

    def class_from_coordinates(self, coordinates: Sequence[int]) -> "CohomologyClass":
        if len(coordinates) != self.dimension:
            raise DimensionMismatchError(
                f"expected {self.dimension} coordinates, got {len(coordinates)}"
            )
        return CohomologyClass(self, coordinates)

    def zero(self) -> "CohomologyClass":
        return CohomologyClass(self, [0] * self.dimension)

    def basis(self) -> list["CohomologyClass"]:
        return [
            CohomologyClass(self, [int(i == j) for j in range(self.dimension)])
            for i in range(self.dimension)
        ]

    def representative_of(self, coordinates: Sequence[int]) -> Cochain:
        return self.cochain_of(self.quotient.lift(coordinates))


class CohomologyClass:
    """A class in H^n(H, F_p), stored by coordinates on the space's complement basis."""

    __slots__ = ("space", "coordinates")

    def __init__(self, space: CohomologySpace, coordinates: Sequence[int]):
        self.space = space
        self.coordinates = tuple(c % space.p for c in coordinates)

    @property
    def degree(self) -> int:
        return self.space.degree

    @property
    def p(self) -> int:
        return self.space.p

    @property
    def domain(self) -> Subgroup:
        return self.space.domain

    @property
    def representative(self) -> Cochain:
        return self.space.representative_of(self.coordinates)

    def is_zero(self) -> bool:
        return not any(self.coordinates)

    def _compatible(self, other: "CohomologyClass") -> None:
        if self.space.key != other.space.key:
            raise DimensionMismatchError("classes live in different cohomology spaces")

    def __add__(self, other: "CohomologyClass") -> "CohomologyClass":
        self._compatible(other)
        return CohomologyClass(
            self.space, [a + b for a, b in zip(self.coordinates, other.coordinates)]
        )

    def __neg__(self) -> "CohomologyClass":
        return self.scale(-1)

    def __sub__(self, other: "CohomologyClass") -> "CohomologyClass":
        return self + (-other)

    def scale(self, c: int) -> "CohomologyClass":
        return CohomologyClass(self.space, [a * c for a in self.coordinates])

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, CohomologyClass)
            and self.space.key == other.space.key
            and self.coordinates == other.coordinates
        )

    def __hash__(self) -> int:
        return hash((self.space.key, self.coordinates))

    def __repr__(self) -> str:
        return f"CohomologyClass(H^{self.degree}, {list(self.coordinates)})"


# ============= Space Construction =============


def _coboundary_rows(domain: Subgroup, n: int, position: dict[int, int],
                     base: int) -> Iterator[SparseVector]:
    """Rows of d: C^n -> C^{n+1}, one per (n+1)-tuple in coordinate order."""
    mul = domain.parent.mul
    identity = domain.parent.identity
    sign = 1 if n % 2 else -1

    def index(t):
        i = 0
        for x in t:
            i = i * base + position[x]
        return i

    for t in domain_tuples(domain, n + 1):
        row: SparseVector = {}
        c = index(t[1:])
        row[c] = row.get(c, 0) + sign
        for i in range(n):
            prod = mul[t[i]][t[i + 1]]
            if prod != identity:
                c = index(t[:i] + (prod,) + t[i + 2:])
                row[c] = row.get(c, 0) + (sign if i % 2 else -sign)
        c = index(t[:n])
        row[c] = row.get(c, 0) + sign * sign
        yield row


def _build_space(domain: Subgroup, p: int, n: int) -> CohomologySpace:
    base = len(domain.nonidentity)
    position = {a: i for i, a in enumerate(domain.nonidentity)}
    dim = base ** n
    relations = FpSubspaceBasis.from_vectors(
        _coboundary_rows(domain, n, position, base), dim, p
    )
    cocycles = FpSubspaceBasis.from_vectors(relations.kernel_vectors(), dim, p)
    if n == 0:
        coboundaries = FpSubspaceBasis(dim, p)
    else:
        previous = list(_coboundary_rows(domain, n - 1, position, base))
        matrix = FpMatrix.from_rows(previous, base ** (n - 1), p)
        coboundaries = FpSubspaceBasis.from_vectors(matrix.column_vectors(), dim, p)
    space = CohomologySpace(domain, p, n, cocycles, coboundaries)
    logger.info(
        f"Built H^{n}({domain.parent.name} subgroup of order {domain.order}, F_{p}): "
        f"dim Z={cocycles.dimension}, dim B={coboundaries.dimension}, "
        f"dim H={space.dimension}"
    )
    return space


def cohomology_space(domain: Domain, p: int, n: int) -> CohomologySpace:
    """Memoised H^n(H, F_p); raises BudgetExceededError when over the work limits."""
    if n < 0:
        raise DimensionMismatchError(f"negative degree {n}")
    domain = as_subgroup(domain)
    key = ("cohomology", domain.key, p, n)
    if key not in store:
        size = max(len(domain.nonidentity), 1) ** (n + 1)
        store.check_limits(f"H^{n} of {domain!r}", size, size)
    return store.get_or_build(key, lambda: _build_space(domain, p, n))


def class_of(phi: Cochain) -> CohomologyClass:
    return cohomology_space(phi.domain, phi.p, phi.degree).class_of(phi)


def poincare_dims(domain: Domain, p: int, max_degree: int) -> list[int]:
    return [cohomology_space(domain, p, n).dimension for n in range(max_degree + 1)]


# ============= Class-Level Maps =============


def cup_class(a: CohomologyClass, b: CohomologyClass) -> CohomologyClass:
    return class_of(cup(a.representative, b.representative))


def bockstein_class(c: CohomologyClass) -> CohomologyClass:
    return class_of(bockstein(c.representative))


def restrict_class(c: CohomologyClass, subgroup: Subgroup) -> CohomologyClass:
    return class_of(restrict(c.representative, subgroup))


def transfer_class(c: CohomologyClass, target: Subgroup) -> CohomologyClass:
    return class_of(transfer(c.representative, target))


def conjugate_class(c: CohomologyClass, u: int) -> CohomologyClass:
    return class_of(conjugate_cochain(c.representative, u))


# ============= Degree One =============


class HomBasis:
    """Basis of Hom(H, F_p) dual to generators t_1..t_r of H/[H,H]H^p.

    Generators are chosen greedily, seeds first, then by element index. A hom's
    coordinates are its values (f(t_1), ..., f(t_r)).
    """

    def __init__(self, domain: Subgroup, p: int, seeds: Sequence[int] = ()):
        self.domain = domain
        self.p = p
        g = domain.parent
        kernel = subgroup_commutator_power(domain, p)
        self.kernel = kernel
        span = kernel
        generators = []
        for a in list(seeds) + list(domain.elements):
            if a not in domain:
                raise SubgroupError(f"seed {g.label(a)} is not in the domain")
            if a not in span:
                generators.append(a)
                span = subgroup_generated(g, span.elements + (a,))
        self.generators = generators
        r = len(generators)
        exponents: dict[int, tuple[int, ...]] = {a: (0,) * r for a in kernel.elements}
        queue = deque(kernel.elements)
        while queue:
            a = queue.popleft()
            for i, t in enumerate(generators):
                b = g.mul[a][t]
                if b not in exponents:
                    e = list(exponents[a])
                    e[i] = (e[i] + 1) % p
                    exponents[b] = tuple(e)
                    queue.append(b)
        self._exponents = exponents

    @property
    def dimension(self) -> int:
        return len(self.generators)

    def exponents(self, a: int) -> tuple[int, ...]:
        """Coordinates of the image of a in H/[H,H]H^p."""
        return self._exponents[a]

    def hom(self, coordinates: Sequence[int]) -> Cochain:
        values = {}
        for a in self.domain.nonidentity:
            v = sum(c * e for c, e in zip(coordinates, self._exponents[a])) % self.p
            if v:
                values[(a,)] = v
        return Cochain(self.domain, 1, self.p, values)

    def homs(self) -> list[Cochain]:
        r = self.dimension
        return [self.hom([int(i == j) for j in range(r)]) for i in range(r)]

    def coordinates(self, phi: Cochain) -> list[int]:
        if phi.degree != 1 or phi.domain != self.domain:
            raise DimensionMismatchError(
                "expected a degree-1 cochain on the basis domain"
            )
        return [phi(t) for t in self.generators]


def h1_homs(
    domain: Domain, p: int, generators: Optional[Sequence[int]] = None
) -> HomBasis:
    """Hom(H, F_p); on a whole catalog group the seeds default to its generators."""
    domain = as_subgroup(domain)
    if generators is None:
        generators = (
            list(domain.parent.generators.values()) if domain.is_whole() else []
        )
    key = ("homs", domain.key, p, tuple(generators))
    cache = domain.parent._cache
    if key not in cache:
        cache[key] = HomBasis(domain, p, generators)
    return cache[key]


# ============= Named Classes =============


def _family(group: Group) -> str:
    return group.name.split(":")[0]


def _cyclic_classes(group: Group, p: int) -> dict[str, CohomologyClass]:
    n = group.order
    if n == 1 or n % p:
        raise UnsupportedGroupError(
            f"{group.name} has no mod-{p} cohomology in degree one"
        )
    g = group.generators["g"]
    exponent = {}
    a = group.identity
    for k in range(n):
        exponent[a] = k
        a = group.mul[a][g]
    y = h1_homs(group, p, [g]).homs()[0]
    # carry cocycle of the extension Z/p -> Z/pn -> Z/n
    whole = group.whole()
    carry = Cochain(whole, 2, p, {
        (a, b): 1
        for a in whole.nonidentity for b in whole.nonidentity
        if exponent[a] + exponent[b] >= n
    })
    return {"y": class_of(y), "x": class_of(carry)}


def _dihedral_extension_class(group: Group) -> CohomologyClass:
    """Class of the central extension Q_{2|G|} -> D_{|G|}, ĝ -> g, ĥ -> h."""
    cover = quaternion(2 * group.order)
    images = {cover.generators["g"]: group.generators["g"],
              cover.generators["h"]: group.generators["h"]}
    projection = group_homomorphism(cover, group, images)
    alpha = cocycle_from_extension(cover, group, projection, cover.named["gamma"], 2)
    return class_of(alpha)


def _first_outside(space: CohomologySpace, span: Sequence[CohomologyClass],
                   accept=None) -> Optional[CohomologyClass]:
    """Smallest class by coordinates that is outside span and passes accept."""
    spanned = {space.zero()}
    for c in span:
        spanned |= {s + c.scale(k) for s in spanned for k in range(1, space.p)}
    for coordinates in itertools.product(range(space.p), repeat=space.dimension):
        c = space.class_from_coordinates(coordinates)
        if c not in spanned and (accept is None or accept(c)):
            return c
    return None


def _semidihedral_classes(group: Group, max_degree: Optional[int]
                          ) -> dict[str, CohomologyClass]:
    """x, y in degree one, z in degree three and w in degree four.

    H^* = F_2[x,y,z,w]/(x^3, xy, xz, z^2 + y^2w). z is the smallest class of H^3
    outside ⟨y^3⟩; w is the smallest class of H^4 outside ⟨y^4, yz⟩ killed by
    Δ_γ, and is only built when H^4 fits the work limits.
    """
    homs = h1_homs(group, 2)
    a, b = (class_of(phi) for phi in homs.homs())
    candidates = [a, b, a + b]
    nilpotent = [c for c in candidates if cup_class(cup_class(c, c), c).is_zero()]
    if len(nilpotent) != 1:
        raise UnsupportedGroupError(
            f"expected one degree-1 class cubing to zero, found {len(nilpotent)}"
        )
    x = nilpotent[0]
    annihilated = [c for c in candidates if c != x and cup_class(x, c).is_zero()]
    if len(annihilated) != 1:
        raise UnsupportedGroupError(
            f"expected one class y with x·y = 0, found {len(annihilated)}"
        )
    y = annihilated[0]
    named = {"x": x, "y": y}
    if max_degree is not None and max_degree < 3:
        return named

    y2 = cup_class(y, y)
    y3 = cup_class(y2, y)
    z = _first_outside(cohomology_space(group, 2, 3), [y3])
    if z is None:
        raise UnsupportedGroupError("H^3 is spanned by y^3")
    named["z"] = z

    if max_degree is not None and max_degree < 4:
        return named
    size = (group.order - 1) ** 5
    if not store.allows(size, size):
        logger.info(f"Skipping w for {group.name}: H^4 needs the heavy flag")
        return named
    gamma = group.named["gamma"]
    w = _first_outside(
        cohomology_space(group, 2, 4),
        [cup_class(y3, y), cup_class(y, z)],
        accept=lambda c: class_of(delta_g_cochain(c.representative, gamma)).is_zero(),
    )
    if w is None:
        raise UnsupportedGroupError(
            "no class of H^4 outside ⟨y^4, yz⟩ is killed by Δ_γ"
        )
    named["w"] = w
    logger.debug(f"Semidihedral named classes {named}")
    return named


def identify_named_classes(group: Group, p: int, max_degree: Optional[int] = None
                           ) -> dict[str, CohomologyClass]:
    """Named generators of H^*(G, F_p) for cyclic groups and 2-groups of maximal class.

    Classes above max_degree are left out.
    """
    family = _family(group)
    if family == "cyclic":
        named = _cyclic_classes(group, p)
    elif p != 2 or family not in ("dihedral", "quaternion", "semidihedral"):
        raise UnsupportedGroupError(f"no named classes for {group.name} over F_{p}")
    elif family == "semidihedral":
        if group.order != 16:
            raise UnsupportedGroupError(
                "named classes are available for semidihedral:16 only"
            )
        named = _semidihedral_classes(group, max_degree)
    else:
        x, y = (class_of(phi) for phi in h1_homs(group, p).homs())
        named = {"x": x, "y": y}
        if family == "dihedral" and (max_degree is None or max_degree >= 2):
            named["z"] = _dihedral_extension_class(group)
    if max_degree is None:
        return named
    return {name: c for name, c in named.items() if c.degree <= max_degree}
