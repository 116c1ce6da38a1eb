"""Normalized inhomogeneous bar cochains with trivial F_p coefficients.

A degree-n cochain is a map on n-tuples of non-identity elements of its
domain subgroup; tuples containing the identity are zero. All maps below
(coboundary, Δ_g, cup, restriction, transfer, conjugation, pullback,
Bockstein) act directly on these value tables.
"""

import itertools
import logging
import random
from collections.abc import Callable, Iterator, Mapping, Sequence
from typing import Optional

from bvh.errors import (
    DimensionMismatchError,
    HomomorphismError,
    NotACocycleError,
    NotCentralError,
    SubgroupError,
)
from bvh.groups import Group, Subgroup, direct_product, right_transversal
from bvh.schemas import CochainDocument

logger = logging.getLogger(__name__)

Tuple = tuple[int, ...]


def domain_tuples(domain: Subgroup, n: int) -> Iterator[Tuple]:
    """All n-tuples of non-identity elements, in lexicographic index order."""
    return itertools.product(domain.nonidentity, repeat=n)


class Cochain:
    """Normalized n-cochain on a subgroup with values in F_p."""

    __slots__ = ("domain", "degree", "p", "values")

    def __init__(self, domain: Subgroup, degree: int, p: int,
                 values: Optional[Mapping[Tuple, int]] = None, check: bool = False):
        self.domain = domain
        self.degree = degree
        self.p = p
        self.values: dict[Tuple, int] = {
            t: a % p for t, a in (values or {}).items() if a % p
        }
        if check:
            identity = domain.parent.identity
            for t in self.values:
                if len(t) != degree:
                    raise DimensionMismatchError(f"tuple {t} has the wrong length")
                if any(x == identity or x not in domain for x in t):
                    raise DimensionMismatchError(
                        f"tuple {t} leaves the normalized domain"
                    )

    # ---- constructors ----

    @classmethod
    def zero(cls, domain: Subgroup, degree: int, p: int) -> "Cochain":
        return cls(domain, degree, p)

    @classmethod
    def constant(cls, domain: Subgroup, p: int, value: int = 1) -> "Cochain":
        return cls(domain, 0, p, {(): value})

    @classmethod
    def from_function(cls, domain: Subgroup, degree: int, p: int,
                      fn: Callable[..., int]) -> "Cochain":
        values = {t: fn(*t) for t in domain_tuples(domain, degree)}
        return cls(domain, degree, p, values)

    @classmethod
    def from_document(cls, document: CochainDocument, domain: Subgroup) -> "Cochain":
        return cls(domain, document.degree, document.p,
                   {tuple(t): a for t, a in document.values}, check=True)

    def to_document(self) -> CochainDocument:
        return CochainDocument(
            group=self.group.name,
            p=self.p,
            degree=self.degree,
            values=[(list(t), a) for t, a in sorted(self.values.items())],
        )

    # ---- access and arithmetic ----

    @property
    def group(self) -> Group:
        return self.domain.parent

    def __call__(self, *args: int) -> int:
        return self.values.get(tuple(args), 0)

    def scalar(self) -> int:
        return self.values.get((), 0)

    def is_zero(self) -> bool:
        return not self.values

    def _compatible(self, other: "Cochain") -> None:
        if (self.domain != other.domain or self.degree != other.degree
                or self.p != other.p):
            raise DimensionMismatchError("cochains live in different spaces")

    def __add__(self, other: "Cochain") -> "Cochain":
        self._compatible(other)
        values = dict(self.values)
        for t, a in other.values.items():
            values[t] = values.get(t, 0) + a
        return Cochain(self.domain, self.degree, self.p, values)

    def __neg__(self) -> "Cochain":
        return self.scale(-1)

    def __sub__(self, other: "Cochain") -> "Cochain":
        return self + (-other)

    def scale(self, c: int) -> "Cochain":
        return Cochain(self.domain, self.degree, self.p,
                       {t: a * c for t, a in self.values.items()})

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Cochain)
            and self.domain == other.domain
            and self.degree == other.degree
            and self.p == other.p
            and self.values == other.values
        )

    def __hash__(self) -> int:
        return hash((self.domain, self.degree, self.p, frozenset(self.values.items())))

    def __repr__(self) -> str:
        return (f"Cochain(degree={self.degree}, p={self.p}, "
                f"support={len(self.values)}, domain={self.domain})")


def random_cochain(
    domain: Subgroup, degree: int, p: int, rng: random.Random
) -> Cochain:
    return Cochain(domain, degree, p,
                   {t: rng.randrange(p) for t in domain_tuples(domain, degree)})


def hom_cochain(domain: Subgroup, p: int, values: Mapping[int, int]) -> Cochain:
    """Degree-1 cochain from its values on elements."""
    return Cochain(domain, 1, p, {(a,): v for a, v in values.items()})


# ============= Coboundary and Bockstein =============


def _integral_coboundary(
    domain: Subgroup, n: int, values: Mapping[Tuple, int]
) -> dict[Tuple, int]:
    """Integer values of d on integer-valued normalized cochains."""
    mul = domain.parent.mul
    identity = domain.parent.identity
    sign = 1 if n % 2 else -1  # (-1)^(n+1)
    last = sign
    get = values.get
    out: dict[Tuple, int] = {}
    if not values:
        return out
    for t in domain_tuples(domain, n + 1):
        total = get(t[1:], 0)
        for i in range(n):
            prod = mul[t[i]][t[i + 1]]
            if prod != identity:
                term = get(t[:i] + (prod,) + t[i + 2:], 0)
                if term:
                    total += term if i % 2 else -term
        total += last * get(t[:n], 0)
        if total:
            out[t] = sign * total
    return out


def coboundary(phi: Cochain) -> Cochain:
    """Coboundary with the sign (-1)^{n+1} in front of the bar differential.

    (dφ)(a_1..a_{n+1}) = (-1)^{n+1}[φ(a_2..) + Σ_i (-1)^i φ(..a_i a_{i+1}..)
    + (-1)^{n+1}φ(a_1..a_n)].
    """
    return Cochain(phi.domain, phi.degree + 1, phi.p,
                   _integral_coboundary(phi.domain, phi.degree, phi.values))


def is_cocycle(phi: Cochain) -> bool:
    return coboundary(phi).is_zero()


def bockstein(phi: Cochain) -> Cochain:
    """Lift to integers in [0, p), apply the integral coboundary, divide by p."""
    if not is_cocycle(phi):
        raise NotACocycleError("Bockstein needs a cocycle")
    raw = _integral_coboundary(phi.domain, phi.degree, phi.values)
    p = phi.p
    return Cochain(phi.domain, phi.degree + 1, p, {t: a // p for t, a in raw.items()})


# ============= Δ_g =============


def delta_g_cochain(phi: Cochain, g: int) -> Cochain:
    """(Δ_gφ)(a_1..a_{n-1}) = Σ_{i=0}^{n-1} (-1)^i φ(a_1..a_i, g, a_{i+1}..a_{n-1})."""
    if phi.degree < 1:
        raise DimensionMismatchError("Δ_g needs a cochain of degree at least one")
    if not phi.domain.is_central_element(g):
        raise NotCentralError(
            f"{phi.group.label(g)} is not central in the domain of the cochain"
        )
    out: dict[Tuple, int] = {}
    if g != phi.group.identity:
        for t, a in phi.values.items():
            for i, x in enumerate(t):
                if x == g:
                    s = t[:i] + t[i + 1:]
                    out[s] = out.get(s, 0) + (-a if i % 2 else a)
    return Cochain(phi.domain, phi.degree - 1, phi.p, out)


# ============= Products =============


def cup(phi: Cochain, psi: Cochain) -> Cochain:
    """Alexander-Whitney cup: (φ⌣ψ)(a_1..a_{m+n}) = φ(a_1..a_m)ψ(a_{m+1}..a_{m+n})."""
    if phi.domain != psi.domain or phi.p != psi.p:
        raise DimensionMismatchError("cup needs cochains on the same domain and prime")
    return Cochain(
        phi.domain,
        phi.degree + psi.degree,
        phi.p,
        {s + t: a * b for s, a in phi.values.items() for t, b in psi.values.items()},
    )


def pullback(phi: Cochain, mapping: Sequence[int], source: Subgroup) -> Cochain:
    """f^*φ for a homomorphism given as an element map from ``source``'s group."""
    target_identity = phi.group.identity
    if any(mapping[a] not in phi.domain for a in source.elements):
        raise HomomorphismError("homomorphism does not land in the cochain's domain")
    values = {}
    for t in domain_tuples(source, phi.degree):
        image = tuple(mapping[x] for x in t)
        if target_identity not in image:
            a = phi.values.get(image, 0)
            if a:
                values[t] = a
    return Cochain(source, phi.degree, phi.p, values)


def cross_product(
    phi: Cochain, psi: Cochain, product: Optional[Group] = None
) -> Cochain:
    """φ × ψ on G × H: pull both back along the projections and cup."""
    if phi.p != psi.p:
        raise DimensionMismatchError("cross product needs a common prime")
    if not (phi.domain.is_whole() and psi.domain.is_whole()):
        raise SubgroupError("cross product is defined on whole groups")
    if product is None:
        product = direct_product(phi.group, psi.group)
    structure = product.product
    whole = product.whole()
    left = pullback(phi, structure.left_projection, whole)
    right = pullback(psi, structure.right_projection, whole)
    return cup(left, right)


# ============= Restriction, Transfer, Conjugation =============


def restrict(phi: Cochain, subgroup: Subgroup) -> Cochain:
    if not subgroup <= phi.domain:
        raise SubgroupError("restriction target is not a subgroup of the domain")
    members = subgroup.members
    return Cochain(
        subgroup,
        phi.degree,
        phi.p,
        {t: a for t, a in phi.values.items() if all(x in members for x in t)},
    )


def _transfer_at(
    phi: Cochain, reps: Sequence[int], split: Mapping[int, tuple[int, int]], t: Tuple
) -> int:
    mul = phi.group.mul
    identity = phi.group.identity
    get = phi.values.get
    total = 0
    for r in reps:
        hs = []
        current = r
        for x in t:
            h, current = split[mul[current][x]]
            if h == identity:
                break
            hs.append(h)
        else:
            total += get(tuple(hs), 0)
    return total


def transfer(phi: Cochain, target: Subgroup) -> Cochain:
    """Tr_H^L φ with r_{i-1} g_i = h_i r_i over smallest right coset representatives."""
    if phi.domain == target:
        return Cochain(target, phi.degree, phi.p, phi.values)
    reps, split = right_transversal(phi.domain, target)
    if phi.degree == 0:
        return Cochain(target, 0, phi.p, {(): phi.scalar() * len(reps)})
    values = {}
    if phi.values:
        for t in domain_tuples(target, phi.degree):
            a = _transfer_at(phi, reps, split, t)
            if a % phi.p:
                values[t] = a
    return Cochain(target, phi.degree, phi.p, values)


def transfer_value(phi: Cochain, target: Subgroup, t: Tuple) -> int:
    """(Tr_H^L φ)(t) for a single tuple, without tabulating the whole transfer."""
    if phi.domain == target:
        return phi.values.get(t, 0)
    reps, split = right_transversal(phi.domain, target)
    if phi.degree == 0:
        return phi.scalar() * len(reps) % phi.p
    return _transfer_at(phi, reps, split, t) % phi.p


def conjugate_cochain(phi: Cochain, u: int) -> Cochain:
    """u^*φ on uHu^{-1}: (u^*φ)(a_1..a_n) = φ(u^{-1}a_1u, ..., u^{-1}a_nu)."""
    g = phi.group
    if u == g.identity:
        return phi
    return Cochain(
        phi.domain.conjugate(u),
        phi.degree,
        phi.p,
        {tuple(g.conj(u, x) for x in t): a for t, a in phi.values.items()},
    )


# ============= Central Extensions =============


class ExtensionCocycle:
    """Central extension 0 -> F_p -> K -> G -> 1 built from a normalized 2-cocycle.

    K has elements (λ, a) stored at index λ·|G| + a, with
    (λ, a)(μ, b) = (λ + μ + α(a, b), ab).
    """

    def __init__(self, base: Group, alpha: Cochain, extension: Group):
        self.base = base
        self.alpha = alpha
        self.extension = extension
        self.p = alpha.p
        n = base.order
        self.section = list(range(n))
        self.kernel_generator = n + base.identity
        self.projection = [k % n for k in range(extension.order)]

    def lift(self, a: int) -> int:
        return self.section[a]


def extension_from_cocycle(base: Group, alpha: Cochain) -> ExtensionCocycle:
    if alpha.degree != 2 or not alpha.domain.is_whole():
        raise DimensionMismatchError("extensions need a 2-cochain on the whole group")
    if not is_cocycle(alpha):
        raise NotACocycleError("extension data is not a 2-cocycle")
    n, p = base.order, alpha.p
    mul = [
        [
            ((k // n + m // n + alpha(k % n, m % n)) % p) * n + base.mul[k % n][m % n]
            for m in range(p * n)
        ]
        for k in range(p * n)
    ]
    labels = [f"({k // n},{base.labels[k % n]})" for k in range(p * n)]
    extension = Group(
        mul,
        identity=base.identity,
        labels=labels,
        name=f"ext({base.name})",
        prime_hint=base.prime_hint,
        max_order=p * n,
    )
    logger.debug(f"Built extension of {base.name} of order {extension.order}")
    return ExtensionCocycle(base, alpha, extension)


def extension_commutator(ext: ExtensionCocycle, g: int, h: int) -> int:
    """[ĝ, ĥ] = ĝĥĝ^{-1}ĥ^{-1} read as an element of the kernel F_p."""
    if not ext.base.is_central(g):
        raise NotCentralError(f"{ext.base.label(g)} is not central")
    c = ext.extension.commutator(ext.lift(g), ext.lift(h))
    n = ext.base.order
    if c % n != ext.base.identity:  # pragma: no cover - central g forces this
        raise NotCentralError("commutator of lifts left the kernel")
    return c // n


def cocycle_from_extension(extension: Group, base: Group, projection: Sequence[int],
                           kernel_generator: int, p: int) -> Cochain:
    """α(a, b) with ŝ(a)ŝ(b)ŝ(ab)^{-1} = z^{α(a,b)} for the smallest-index section ŝ."""
    section = [-1] * base.order
    for k in range(extension.order):
        a = projection[k]
        if section[a] < 0:
            section[a] = k
    section[base.identity] = extension.identity
    powers = {}
    z = extension.identity
    for lam in range(p):
        powers[z] = lam
        z = extension.mul[z][kernel_generator]
    values = {}
    mul = extension.mul
    nonidentity = base.whole().nonidentity
    for a in nonidentity:
        for b in nonidentity:
            ab = extension.inverse[section[base.mul[a][b]]]
            x = mul[mul[section[a]][section[b]]][ab]
            if x not in powers:
                raise HomomorphismError(
                    "kernel of the projection is not generated by z"
                )
            values[(a, b)] = powers[x]
    return Cochain(base.whole(), 2, p, values)
