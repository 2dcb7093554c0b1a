"""Relation and torsion analysis for user-supplied triangle-group generators.

Given matrices R1, J preserving a Hermitian form with determinant 1, set
R2 = J R1 J^-1 and R3 = J R2 J^-1 and check the relation set

    R1^3,  (R1 J)^7,  J^3,  J R1 J^-1 = R2,  J R2 J^-1 = R3,
    R1 R2 R1 R2 = R2 R1 R2 R1,

reporting each relation separately (failures are reported, not fatal).
Probe words R1, J, R1 J, R1 R2 and (R1 R2)^6 get exact orders and, when of
finite order, the eigenvalue/eigenspace classification; the last probe is the
involution of interest when R1 R2 has order 12.
"""

from __future__ import annotations

from dataclasses import dataclass

from .elliptic import classify, element_order
from .errors import InfiniteOrderError
from .matrices import CycloMatrix, HermitianForm, su_membership


@dataclass
class PresentationReport:
    degenerate: bool
    relations: dict
    orders: dict
    classes: dict
    all_relations_hold: bool

    def to_dict(self) -> dict:
        return {
            "degenerate": self.degenerate,
            "relations": self.relations,
            "orders": self.orders,
            "classes": self.classes,
            "all_relations_hold": self.all_relations_hold,
        }


def _probe(word: CycloMatrix, H: HermitianForm, cap: int):
    order = element_order(word, cap)
    if order is None:
        return None, None
    try:
        verdict = classify(word, H, cap=cap)
    except InfiniteOrderError:  # pragma: no cover - order already bounded
        return order, None
    return order, verdict.tag


def verify_p2_presentation(r1: CycloMatrix, j: CycloMatrix, H: HermitianForm,
                           order_cap: int = 200) -> PresentationReport:
    """Check the relation set and probe-word torsion for generators R1, J."""
    if not r1.is_integral or not j.is_integral:
        raise ValueError("generators must have integral entries")
    if not su_membership(r1, H):
        raise ValueError("R1 does not preserve the form with determinant 1")
    if not su_membership(j, H):
        raise ValueError("J does not preserve the form with determinant 1")
    ident = CycloMatrix.identity(r1.field)
    j_inv = j.inv()
    r2 = j * r1 * j_inv
    r3 = j * r2 * j_inv
    relations = {
        "r1^3": r1**3 == ident,
        "j^3": j**3 == ident,
        "(r1*j)^7": (r1 * j) ** 7 == ident,
        "j*r1*j^-1 = r2": j * r1 * j_inv == r2,
        "j*r2*j^-1 = r3": j * r2 * j_inv == r3,
        "r1*r2*r1*r2 = r2*r1*r2*r1": r1 * r2 * r1 * r2 == r2 * r1 * r2 * r1,
    }
    words = {
        "r1": r1,
        "j": j,
        "r1*j": r1 * j,
        "r1*r2": r1 * r2,
        "(r1*r2)^6": (r1 * r2) ** 6,
    }
    orders = {}
    classes = {}
    for name, word in words.items():
        order, tag = _probe(word, H, order_cap)
        orders[name] = order
        classes[name] = tag
    return PresentationReport(
        degenerate=r1 == ident or j == ident,
        relations=relations,
        orders=orders,
        classes=classes,
        all_relations_hold=all(relations.values()),
    )
