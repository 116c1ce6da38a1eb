"""HH^*(kG) through the centraliser decomposition ⊕_g H^*(C_G(g), k).

Components are keyed by conjugacy class representatives. A term landing at an
element c is moved to its representative r by the smallest w with w c w^{-1} = r.
"""

import logging
from typing import Optional

from bvh.cochains import (
    Cochain,
    conjugate_cochain,
    cup,
    restrict,
    transfer,
    transfer_value,
)
from bvh.cohomology import CohomologyClass, class_of, cohomology_space, h1_homs
from bvh.delta import delta_class
from bvh.errors import BracketMismatchError, DimensionMismatchError, InvalidGroupError
from bvh.groups import (
    Group,
    Subgroup,
    centraliser,
    conjugacy_classes,
    conjugator,
    double_cosets,
    frattini_subgroup,
    prime_power,
    subgroup_commutator_power,
)
from bvh.models import HypothesisClause
from bvh.schemas import HHDegreeReport, HHElementDocument, HypothesisReport

logger = logging.getLogger(__name__)


class HHSpace:
    """HH^n(kG) as the list of component spaces H^n(C_G(g), F_p)."""

    def __init__(
        self, group: Group, p: int, degree: int, components: dict[int, object]
    ):
        self.group = group
        self.p = p
        self.degree = degree
        self.components = components

    @property
    def representatives(self) -> list[int]:
        return list(self.components)

    @property
    def dimension(self) -> int:
        return sum(space.dimension for space in self.components.values())

    def zero(self) -> "HHElement":
        return HHElement(self.group, self.p, self.degree, {})

    def to_report(self) -> HHDegreeReport:
        return HHDegreeReport(
            degree=self.degree,
            dimension=self.dimension,
            components={
                self.group.label(g): space.dimension
                for g, space in self.components.items()
            },
        )

    def __repr__(self) -> str:
        return f"HHSpace(HH^{self.degree}({self.group.name}), dim={self.dimension})"


class HHElement:
    """Element of HH^n(kG): one class per conjugacy representative, zero when absent."""

    __slots__ = ("group", "p", "degree", "components")

    def __init__(self, group: Group, p: int, degree: int,
                 components: dict[int, CohomologyClass]):
        self.group = group
        self.p = p
        self.degree = degree
        reps = conjugacy_classes(group).representatives
        for g, c in components.items():
            if g not in reps:
                raise InvalidGroupError(
                    f"{group.label(g)} is not a class representative"
                )
            if c.degree != degree or c.domain != centraliser(group, g):
                raise DimensionMismatchError(
                    f"component at {group.label(g)} is not in H^{degree}(C_G(g))"
                )
        self.components = {
            g: c for g, c in sorted(components.items()) if not c.is_zero()
        }

    def component(self, g: int) -> Optional[CohomologyClass]:
        return self.components.get(g)

    def is_zero(self) -> bool:
        return not self.components

    def _compatible(self, other: "HHElement") -> None:
        if (self.group.key, self.p, self.degree) != (
            other.group.key, other.p, other.degree
        ):
            raise DimensionMismatchError("HH elements of different groups or degrees")

    def __add__(self, other: "HHElement") -> "HHElement":
        self._compatible(other)
        merged = dict(self.components)
        for g, c in other.components.items():
            merged[g] = merged[g] + c if g in merged else c
        return HHElement(self.group, self.p, self.degree, merged)

    def __neg__(self) -> "HHElement":
        return self.scale(-1)

    def __sub__(self, other: "HHElement") -> "HHElement":
        return self + (-other)

    def scale(self, c: int) -> "HHElement":
        return HHElement(self.group, self.p, self.degree,
                         {g: x.scale(c) for g, x in self.components.items()})

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, HHElement)
            and self.group.key == other.group.key
            and self.degree == other.degree
            and self.components == other.components
        )

    def __hash__(self) -> int:
        return hash((self.group.key, self.degree, tuple(self.components.items())))

    def to_document(self) -> HHElementDocument:
        return HHElementDocument(
            group=self.group.name,
            p=self.p,
            degree=self.degree,
            components={
                self.group.label(g): list(c.coordinates)
                for g, c in self.components.items()
            },
        )

    def __repr__(self) -> str:
        parts = ", ".join(
            f"{self.group.label(g)}: {list(c.coordinates)}"
            for g, c in self.components.items()
        )
        return f"HHElement(degree={self.degree}, {{{parts}}})"


def hh_space(group: Group, p: int, n: int) -> HHSpace:
    components = {
        g: cohomology_space(centraliser(group, g), p, n)
        for g in conjugacy_classes(group).representatives
    }
    space = HHSpace(group, p, n, components)
    logger.debug(f"{space!r}")
    return space


def hh_element(group: Group, p: int, degree: int,
               cochains: dict[int, Cochain]) -> HHElement:
    """HH element from cocycles given per class representative."""
    classes = {g: class_of(phi) for g, phi in cochains.items()}
    return HHElement(group, p, degree, classes)


def hh_unit(group: Group, p: int) -> HHElement:
    one = cohomology_space(group.whole(), p, 0).basis()[0]
    return HHElement(group, p, 0, {group.identity: one})


def hh_basis(space: HHSpace) -> list[HHElement]:
    return [
        HHElement(space.group, space.p, space.degree, {g: c})
        for g, component in space.components.items()
        for c in component.basis()
    ]


# ============= Products =============


def _to_representative(group: Group, c: int, phi: Cochain) -> tuple[int, Cochain]:
    r = conjugacy_classes(group).class_of[c]
    return r, conjugate_cochain(phi, conjugator(group, c, r))


def _accumulate(out: dict[int, Cochain], r: int, phi: Cochain) -> None:
    out[r] = out[r] + phi if r in out else phi


def sw_product(x: HHElement, y: HHElement) -> HHElement:
    """Σ_u Tr_{C(g)∩C(uhu^{-1})}^{C(guhu^{-1})}(Res x · Res u^*y) per component."""
    if x.group.key != y.group.key or x.p != y.p:
        raise DimensionMismatchError(
            "SW product needs elements over the same group and prime"
        )
    group = x.group
    out: dict[int, Cochain] = {}
    for g, cx in x.components.items():
        cg = centraliser(group, g)
        phi = cx.representative
        for h, cy in y.components.items():
            ch = centraliser(group, h)
            psi = cy.representative
            for u in double_cosets(group, cg, ch):
                h1 = group.conj(u, h)
                meet = cg.intersection(centraliser(group, h1))
                c = group.mul[g][h1]
                product = cup(restrict(phi, meet),
                              restrict(conjugate_cochain(psi, u), meet))
                term = transfer(product, centraliser(group, c))
                r, term = _to_representative(group, c, term)
                _accumulate(out, r, term)
    return hh_element(group, x.p, x.degree + y.degree, out)


def hh_bv_delta(x: HHElement) -> HHElement:
    """Componentwise Δ_g inside C_G(g), where g is central."""
    if x.degree < 1:
        raise DimensionMismatchError("Δ lowers degree; HH^0 has no image")
    return HHElement(x.group, x.p, x.degree - 1,
                     {g: delta_class(g, c) for g, c in x.components.items()})


# ============= Brackets =============


def gerstenhaber_bracket(x: HHElement, y: HHElement, check: bool = True) -> HHElement:
    """[x,y] = (-1)^{|x|}(Δ(xy) - Δ(x)y) - xΔ(y).

    For two degree-one inputs the result is compared with the direct expansion
    and a disagreement raises BracketMismatchError.
    """
    a, b = x.degree, y.degree
    if a + b < 1:
        raise DimensionMismatchError(
            "the bracket of two degree-0 elements has degree -1"
        )
    sign = -1 if a % 2 else 1
    result = hh_bv_delta(sw_product(x, y)).scale(sign)
    if a >= 1:
        result = result - sw_product(hh_bv_delta(x), y).scale(sign)
    if b >= 1:
        result = result - sw_product(x, hh_bv_delta(y))
    if check and a == 1 and b == 1:
        direct = bracket_degree_one(x, y)
        if direct != result:
            logger.error(f"Bracket mismatch: BV identity {result!r}, direct {direct!r}")
            raise BracketMismatchError(
                f"BV-identity bracket {result!r} differs from "
                f"direct evaluation {direct!r}"
            )
    return result


def bracket_degree_one_cochains(group: Group, p: int, g: int, x: Cochain, h: int,
                                y: Cochain) -> dict[int, Cochain]:
    """Direct [x, y] for homs x on C(g) and y on C(h), as homs per class representative.

    Per double coset u, with h' = uhu^{-1}, K = C(g)∩C(h'), c = gh', L = C(c):
    -Δ_c Tr_K^L(x·u^*y) + Tr_K^L(x(g)·u^*y - y(h)·x), then moved to c's representative.
    Δ_c of the transfer is read off single transfer values, so no degree-2
    space is built.
    """
    identity = group.identity
    cg, ch = centraliser(group, g), centraliser(group, h)
    xg, yh = x(g), y(h)
    out: dict[int, Cochain] = {}
    for u in double_cosets(group, cg, ch):
        h1 = group.conj(u, h)
        meet = cg.intersection(centraliser(group, h1))
        c = group.mul[g][h1]
        big = centraliser(group, c)
        x_res = restrict(x, meet)
        y_res = restrict(conjugate_cochain(y, u), meet)
        product = cup(x_res, y_res)
        linear = transfer(y_res.scale(xg) - x_res.scale(yh), big)
        values = {}
        for a in big.nonidentity:
            v = linear(a)
            if c != identity and product.values:
                v -= transfer_value(product, big, (c, a))
                v += transfer_value(product, big, (a, c))
            values[(a,)] = v
        r, term = _to_representative(group, c, Cochain(big, 1, p, values))
        _accumulate(out, r, term)
    return {r: phi for r, phi in out.items() if not phi.is_zero()}


def bracket_degree_one(x: HHElement, y: HHElement) -> HHElement:
    if x.degree != 1 or y.degree != 1:
        raise DimensionMismatchError("the direct bracket takes two degree-1 elements")
    out: dict[int, Cochain] = {}
    for g, cx in x.components.items():
        for h, cy in y.components.items():
            terms = bracket_degree_one_cochains(
                x.group, x.p, g, cx.representative, h, cy.representative
            )
            for r, phi in terms.items():
                _accumulate(out, r, phi)
    return hh_element(x.group, x.p, 1, out)


# ============= Centraliser Hypothesis =============


def _transfers_vanish(group: Group, p: int, g: int, h: int, u: int,
                      meet: Subgroup, big: Subgroup) -> bool:
    """Tr_K^L(Res x · Res u^*y) = 0 for x, y of degree zero or one."""
    cg, ch = centraliser(group, g), centraliser(group, h)
    h1 = group.conj(u, h)
    frattini = frattini_subgroup(group)
    if (subgroup_commutator_power(cg, p) == frattini
            and subgroup_commutator_power(centraliser(group, h1), p) == frattini):
        return True
    xs = [Cochain.constant(cg, p)] + h1_homs(cg, p, []).homs()
    ys = [Cochain.constant(ch, p)] + h1_homs(ch, p, []).homs()
    for phi in xs:
        for psi in ys:
            product = cup(
                restrict(phi, meet), restrict(conjugate_cochain(psi, u), meet)
            )
            if not class_of(transfer(product, big)).is_zero():
                return False
    return True


def check_hypothesis_cent(group: Group, g: int, h: int,
                          p: Optional[int] = None) -> list[HypothesisReport]:
    """Per double coset u: (i) equal centralisers, (ii) vanishing transfers, or neither.

    Clause (ii) is checked on classes of degree at most one.
    """
    if p is None:
        pk = prime_power(group.order)
        if pk is None:
            raise InvalidGroupError(f"{group.name} is not a p-group")
        p = pk[0]
    cg, ch = centraliser(group, g), centraliser(group, h)
    reports = []
    for u in double_cosets(group, cg, ch):
        h1 = group.conj(u, h)
        meet = cg.intersection(centraliser(group, h1))
        big = centraliser(group, group.mul[g][h1])
        if meet == big:
            clause = HypothesisClause.EQUAL_CENTRALISERS
        elif _transfers_vanish(group, p, g, h, u, meet, big):
            clause = HypothesisClause.TRANSFERS_VANISH
        else:
            clause = HypothesisClause.NEITHER
        reports.append(HypothesisReport(
            g=group.label(g), h=group.label(h), u=group.label(u), clause=clause
        ))
    return reports
