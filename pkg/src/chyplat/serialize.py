"""Canonical serialization: exact rationals, matrices, and stable JSON.

Rationals are "numerator/denominator" strings, polynomials are coefficient
arrays with the constant term first, JSON uses sorted keys, UTF-8, and a
trailing newline, so equal data serializes to identical bytes everywhere.
"""

from __future__ import annotations

import hashlib
import json
from fractions import Fraction

from .cyclo import CycloField, CycloNum, field_make
from .elliptic import CharPoly
from .matrices import CycloMatrix, HermitianForm


def fraction_str(x: Fraction) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def num_to_strings(x: CycloNum) -> list[str]:
    return [fraction_str(c) for c in x.coeffs]


def num_from_strings(field: CycloField, coeffs) -> CycloNum:
    return field.from_coeffs([Fraction(c) for c in coeffs])


def matrix_to_lists(g: CycloMatrix) -> list[list[list[str]]]:
    return [[num_to_strings(x) for x in row] for row in g.rows]


def matrix_from_lists(field: CycloField, rows) -> CycloMatrix:
    return CycloMatrix(tuple(tuple(num_from_strings(field, x) for x in row)
                             for row in rows))


def charpoly_to_lists(chi: CharPoly) -> list[list[str]]:
    """Ascending coefficient arrays (constant term first), including the lead."""
    return [num_to_strings(c) for c in chi.coeff_list()]


def ffpoly_to_lists(poly) -> list[list[int]]:
    """Cubic over a residue field: four residue elements, each ascending ints."""
    return [list(c) for c in poly]


def canonical_json_bytes(obj) -> bytes:
    return (json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=True) + "\n").encode("utf-8")


def digest(obj) -> str:
    return hashlib.sha256(
        json.dumps(obj, sort_keys=True, separators=(",", ":")).encode("utf-8")).hexdigest()


def candidates_digest(candidates) -> str:
    return digest([charpoly_to_lists(c) for c in candidates])


def load_matrix_input(payload: dict):
    """Parse the matrix-input document: conductor, Hermitian form, matrices.

    Format: {"conductor": m, "hermitian": [[entry x3] x3],
             "matrices": [[[entry x3] x3], ...]} where an entry is the list of
    phi(m) power-basis coordinates as rational strings.
    """
    try:
        m = int(payload["conductor"])
        field = field_make(m)
        H = HermitianForm(matrix_from_lists(field, payload["hermitian"]))
        mats = [matrix_from_lists(field, g) for g in payload["matrices"]]
    except KeyError as exc:
        raise ValueError(f"matrix input is missing key {exc}") from exc
    return field, H, mats


def dump_matrix_input(H: HermitianForm, matrices) -> dict:
    return {
        "conductor": H.field.conductor,
        "hermitian": matrix_to_lists(H.matrix),
        "matrices": [matrix_to_lists(g) for g in matrices],
    }
