"""The imprimitive finite groups G(m,p,2) and their unitary embedding.

Elements are stored as exponent pairs (a1, a2) modulo m plus a swap bit; the
group law is the semidirect product in which the swap exchanges the two
exponents.  Matrices are materialized on demand: the diagonal part maps to
diag(zeta^a1, zeta^a2, 1) and the swap to the permutation of the first two
coordinates, which fixes every form diag(1, 1, beta).

The torsion census classifies every element after rescaling to determinant
one and cross-checks the structural facts about reflections in these groups
(order constraints, diagonality of odd-order reflections, behaviour of
order-p elements, and agreement between the classical eigenvalue-1 notion of
a reflection and the signature-based one).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field as dc_field

from .cyclo import CycloField
from .elliptic import (COMPLEX_REFLECTION, REGULAR_ELLIPTIC, classify, element_order,
                       normalize_to_su)
from .errors import ConductorExtensionError
from .matrices import CycloMatrix, HermitianForm


@dataclass(frozen=True, order=True)
class Gmp2Element:
    a1: int
    a2: int
    swap: int

    @property
    def is_identity(self) -> bool:
        return self.a1 == 0 and self.a2 == 0 and self.swap == 0


class Gmp2Group:
    """G(m,p,2) with its full element list, sorted by (a1, a2, swap)."""

    __slots__ = ("m", "p", "elements", "_index")

    def __init__(self, m: int, p: int, elements):
        self.m = m
        self.p = p
        self.elements = tuple(sorted(elements))
        self._index = {e: i for i, e in enumerate(self.elements)}

    @property
    def order(self) -> int:
        return len(self.elements)

    def identity(self) -> Gmp2Element:
        return Gmp2Element(0, 0, 0)

    def mul(self, e: Gmp2Element, f: Gmp2Element) -> Gmp2Element:
        b1, b2 = (f.a2, f.a1) if e.swap else (f.a1, f.a2)
        return Gmp2Element((e.a1 + b1) % self.m, (e.a2 + b2) % self.m, e.swap ^ f.swap)

    def inv(self, e: Gmp2Element) -> Gmp2Element:
        if e.swap:
            return Gmp2Element((-e.a2) % self.m, (-e.a1) % self.m, 1)
        return Gmp2Element((-e.a1) % self.m, (-e.a2) % self.m, 0)

    def power(self, e: Gmp2Element, k: int) -> Gmp2Element:
        out = self.identity()
        for _ in range(k):
            out = self.mul(out, e)
        return out

    def __contains__(self, e: Gmp2Element) -> bool:
        return e in self._index

    def __iter__(self):
        return iter(self.elements)


def build_group(m: int, p: int) -> Gmp2Group:
    """Enumerate G(m,p,2); order must come out to 2 m^2 / p."""
    if p < 2:
        raise ValueError(f"p must be >= 2, got {p}")
    if m % p:
        raise ValueError(f"p = {p} does not divide m = {m}")
    step = m // p
    elems = [Gmp2Element(a1, a2, s)
             for a1 in range(m) for a2 in range(m) for s in (0, 1)
             if ((a1 + a2) * step) % m == 0]
    group = Gmp2Group(m, p, elems)
    expected = 2 * m * m // p
    if group.order != expected:
        raise ArithmeticError(f"enumeration found {group.order} elements, expected {expected}")
    _closure_spot_check(group)
    return group


def _closure_spot_check(group: Gmp2Group, limit: int = 400) -> None:
    """Deterministic sample of products and inverses staying inside the group."""
    els = group.elements
    n = len(els)
    stride = max(1, (n * n) // limit)
    count = 0
    for idx in range(0, n * n, stride):
        e, f = els[idx // n], els[idx % n]
        if group.mul(e, f) not in group or group.inv(e) not in group:
            raise ArithmeticError("group enumeration is not closed")
        count += 1
    assert count > 0


def embed_u21(e: Gmp2Element, m: int, target: CycloField) -> CycloMatrix:
    """Matrix of an element of G(m,p,2) inside the target cyclotomic field."""
    if target.conductor % m:
        raise ConductorExtensionError(
            f"group conductor {m} does not divide field conductor {target.conductor}")
    step = target.conductor // m
    z1 = target.zeta(e.a1 * step)
    z2 = target.zeta(e.a2 * step)
    zero, one = target.zero(), target.one()
    if e.swap:
        return CycloMatrix(((zero, z1, zero), (z2, zero, zero), (zero, zero, one)))
    return CycloMatrix(((z1, zero, zero), (zero, z2, zero), (zero, zero, one)))


def special_subgroup(G: Gmp2Group, target: CycloField | None = None) -> tuple[Gmp2Element, ...]:
    """Elements whose embedded matrix has exact determinant 1."""
    if target is None:
        from .cyclo import field_make

        target = field_make(G.m if G.m >= 3 else 3 * G.m)
    one = target.one()
    return tuple(e for e in G.elements if embed_u21(e, G.m, target).det() == one)


def order_p_element(p: int, target: CycloField) -> CycloMatrix:
    """diag(zeta_p, zeta_p^-1, 1): the distinguished order-p element.

    Rejects p = 2, where the eigenvalues cannot be distinct.
    """
    from .numth import is_prime

    if p == 2:
        raise ValueError("p = 2 has no order-p element with three distinct eigenvalues")
    if not is_prime(p):
        raise ValueError(f"p must be an odd prime, got {p}")
    if target.conductor % p:
        raise ConductorExtensionError(f"{p} does not divide conductor {target.conductor}")
    step = target.conductor // p
    return embed_u21(Gmp2Element(1, p - 1, 0), p, target)


def _classical_reflection_flag(e: Gmp2Element, m: int) -> bool:
    """Non-identity element whose 2x2 unitary part has eigenvalue 1."""
    if e.is_identity:
        return False
    if e.swap:
        return (e.a1 + e.a2) % m == 0
    return e.a1 == 0 or e.a2 == 0


@dataclass(frozen=True)
class CensusRow:
    element: Gmp2Element
    order: int
    tag: str
    classical_reflection: bool


@dataclass
class CensusReport:
    m: int
    p: int
    rows: tuple[CensusRow, ...]
    checks: dict = dc_field(default_factory=dict)
    violations: list = dc_field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(self.checks.values())


def torsion_census(G: Gmp2Group, H: HermitianForm) -> CensusReport:
    """Order and classification of every element, with structural cross-checks."""
    field = H.field
    if field.conductor % G.m:
        raise ConductorExtensionError(
            f"group conductor {G.m} does not divide form conductor {field.conductor}")
    cap = 3 * field.conductor**2
    # precondition: the embedded group preserves H
    for e in G.elements:
        g = embed_u21(e, G.m, field)
        if g * H.matrix * g.conj_transpose() != H.matrix:
            raise ValueError(f"embedded element {e} does not preserve the form")
    rows = []
    for e in G.elements:
        g = embed_u21(e, G.m, field)
        order = element_order(g, cap)
        gn = normalize_to_su(g)
        Hn = H.extend(gn.field.conductor)
        verdict = classify(gn, Hn)
        rows.append(CensusRow(e, order, verdict.tag,
                              _classical_reflection_flag(e, G.m)))
    report = CensusReport(G.m, G.p, tuple(rows))
    _census_checks(G, report)
    return report


def _census_checks(G: Gmp2Group, report: CensusReport) -> None:
    m, p = G.m, G.p
    by_element = {row.element: row for row in report.rows}
    reflections = [r for r in report.rows if r.tag == COMPLEX_REFLECTION]

    ok = True
    for r in reflections:
        if r.order != 2 and (m // p) % r.order != 0:
            ok = False
            report.violations.append(
                f"reflection {r.element} has order {r.order}, neither 2 nor dividing {m // p}")
    report.checks["reflection_orders"] = ok

    ok = True
    for r in reflections:
        if r.order != 2 and r.element.swap:
            ok = False
            report.violations.append(
                f"odd-order reflection {r.element} is not diagonal")
    report.checks["odd_reflections_diagonal"] = ok

    if p >= 3 and p % 2 == 1 and math.gcd(m // p, p) == 1:
        ok = True
        for r in report.rows:
            if r.order != p:
                continue
            for k in range(1, p):
                power = G.power(r.element, k)
                if by_element[power].tag == COMPLEX_REFLECTION:
                    ok = False
                    report.violations.append(
                        f"power {k} of order-{p} element {r.element} is a reflection")
        report.checks["order_p_powers_never_reflections"] = ok

    if p >= 3:
        found = any(r.order == p and r.tag == REGULAR_ELLIPTIC for r in report.rows)
        if not found:
            report.violations.append(f"no regular elliptic element of order {p}")
        report.checks["order_p_regular_elliptic_exists"] = found

    # classical eigenvalue-1 reflections and signature-(1,1) reflections agree
    # on the diagonal subgroup, and the distinct-nontrivial-eigenvalue elements
    # are exactly the regular elliptic ones
    ok = True
    for r in report.rows:
        if r.element.swap:
            continue
        if r.classical_reflection != (r.tag == COMPLEX_REFLECTION):
            ok = False
            report.violations.append(f"reflection mismatch at {r.element}: {r.tag}")
        regular_shape = (r.element.a1 != r.element.a2
                         and r.element.a1 != 0 and r.element.a2 != 0)
        if regular_shape != (r.tag == REGULAR_ELLIPTIC):
            ok = False
            report.violations.append(f"regular mismatch at {r.element}: {r.tag}")
    report.checks["diagonal_classification_agreement"] = ok
