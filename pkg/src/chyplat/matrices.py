"""3x3 matrices over a cyclotomic field and Hermitian forms on them.

The sesquilinear form attached to a Hermitian matrix H is <u, v> = u H v*^t
on row vectors, with the group acting on the right, so form preservation is
the exact matrix identity g H g*^t = H.  Signatures are certified: the
characteristic polynomial of H is computed exactly, its coefficients are
conjugation-fixed field elements, and the positive/negative eigenvalue counts
follow from their certified signs (Descartes' rule is exact for a cubic with
all roots real).
"""

from __future__ import annotations

from .cyclo import CycloField, CycloNum, field_make
from .errors import DegenerateFormError, FieldMismatchError, NonHermitianError
from .intervals import certified_real_sign


class CycloMatrix:
    """Immutable 3x3 matrix with exact cyclotomic entries."""

    __slots__ = ("field", "rows")

    def __init__(self, rows):
        rows = tuple(tuple(r) for r in rows)
        if len(rows) != 3 or any(len(r) != 3 for r in rows):
            raise ValueError("expected a 3x3 matrix")
        field = rows[0][0].field
        for r in rows:
            for x in r:
                if x.field != field:
                    raise FieldMismatchError("matrix entries live in different fields")
        self.field = field
        self.rows = rows

    @classmethod
    def identity(cls, field: CycloField) -> "CycloMatrix":
        one, zero = field.one(), field.zero()
        return cls(((one, zero, zero), (zero, one, zero), (zero, zero, one)))

    @classmethod
    def diagonal(cls, d1: CycloNum, d2: CycloNum, d3: CycloNum) -> "CycloMatrix":
        zero = d1.field.zero()
        return cls(((d1, zero, zero), (zero, d2, zero), (zero, zero, d3)))

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __mul__(self, other):
        if isinstance(other, CycloNum):
            return self.scale(other)
        if not isinstance(other, CycloMatrix):
            return NotImplemented
        if other.field != self.field:
            raise FieldMismatchError("matrix fields differ")
        a, b = self.rows, other.rows
        return CycloMatrix(tuple(
            tuple(a[i][0] * b[0][j] + a[i][1] * b[1][j] + a[i][2] * b[2][j]
                  for j in range(3))
            for i in range(3)))

    def scale(self, s: CycloNum) -> "CycloMatrix":
        return CycloMatrix(tuple(tuple(s * x for x in row) for row in self.rows))

    def __add__(self, other):
        return CycloMatrix(tuple(
            tuple(x + y for x, y in zip(ra, rb))
            for ra, rb in zip(self.rows, other.rows)))

    def __sub__(self, other):
        return CycloMatrix(tuple(
            tuple(x - y for x, y in zip(ra, rb))
            for ra, rb in zip(self.rows, other.rows)))

    def __pow__(self, k: int) -> "CycloMatrix":
        if k < 0:
            return self.inv() ** (-k)
        out = CycloMatrix.identity(self.field)
        base = self
        while k:
            if k & 1:
                out = out * base
            k >>= 1
            if k:
                base = base * base
        return out

    def transpose(self) -> "CycloMatrix":
        return CycloMatrix(tuple(tuple(self.rows[j][i] for j in range(3)) for i in range(3)))

    def conj(self) -> "CycloMatrix":
        return CycloMatrix(tuple(tuple(x.conj() for x in row) for row in self.rows))

    def conj_transpose(self) -> "CycloMatrix":
        return self.conj().transpose()

    def trace(self) -> CycloNum:
        r = self.rows
        return r[0][0] + r[1][1] + r[2][2]

    def det(self) -> CycloNum:
        r = self.rows
        return (r[0][0] * (r[1][1] * r[2][2] - r[1][2] * r[2][1])
                - r[0][1] * (r[1][0] * r[2][2] - r[1][2] * r[2][0])
                + r[0][2] * (r[1][0] * r[2][1] - r[1][1] * r[2][0]))

    def minor_sum(self) -> CycloNum:
        """Sum of the three principal 2x2 minors."""
        r = self.rows
        return (r[1][1] * r[2][2] - r[1][2] * r[2][1]
                + r[0][0] * r[2][2] - r[0][2] * r[2][0]
                + r[0][0] * r[1][1] - r[0][1] * r[1][0])

    def adjugate(self) -> "CycloMatrix":
        r = self.rows
        c = [[r[(i + 1) % 3][(j + 1) % 3] * r[(i + 2) % 3][(j + 2) % 3]
              - r[(i + 1) % 3][(j + 2) % 3] * r[(i + 2) % 3][(j + 1) % 3]
              for i in range(3)] for j in range(3)]
        return CycloMatrix(tuple(tuple(row) for row in c))

    def inv(self) -> "CycloMatrix":
        d = self.det()
        if d.is_zero:
            raise ZeroDivisionError("singular matrix")
        dinv = d.inv()
        return self.adjugate().scale(dinv)

    def extend(self, M: int) -> "CycloMatrix":
        return CycloMatrix(tuple(tuple(x.extend(M) for x in row) for row in self.rows))

    @property
    def is_identity(self) -> bool:
        return self == CycloMatrix.identity(self.field)

    @property
    def is_integral(self) -> bool:
        return all(x.is_integral for row in self.rows for x in row)

    def __eq__(self, other):
        return isinstance(other, CycloMatrix) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        body = "; ".join(", ".join(repr(x) for x in row) for row in self.rows)
        return f"CycloMatrix[{body}]"


class HermitianForm:
    """A 3x3 Hermitian matrix with integral entries; caches signatures."""

    __slots__ = ("matrix", "_signatures")

    def __init__(self, matrix: CycloMatrix):
        if matrix != matrix.conj_transpose():
            raise NonHermitianError("matrix is not equal to its conjugate transpose")
        if not matrix.is_integral:
            raise NonHermitianError("form entries must be algebraic integers")
        self.matrix = matrix
        self._signatures = {}

    @property
    def field(self) -> CycloField:
        return self.matrix.field

    def extend(self, M: int) -> "HermitianForm":
        return HermitianForm(self.matrix.extend(M))

    def __eq__(self, other):
        return isinstance(other, HermitianForm) and self.matrix == other.matrix

    def __hash__(self):
        return hash(self.matrix)

    def __repr__(self):
        return f"HermitianForm({self.matrix!r})"


def build_diagonal_form(beta: CycloNum) -> HermitianForm:
    """The form diag(1, 1, beta) for integral conjugation-fixed beta."""
    if not beta.is_real:
        raise NonHermitianError("scalar is not fixed by conjugation")
    if not beta.is_integral:
        raise NonHermitianError("scalar is not an algebraic integer")
    field = beta.field
    return HermitianForm(CycloMatrix.diagonal(field.one(), field.one(), beta))


def _descartes_counts(sign_seq: list[int]) -> int:
    seq = [s for s in sign_seq if s]
    return sum(1 for a, b in zip(seq, seq[1:]) if a != b)


def signature_counts(coeffs: list[CycloNum], place_rep: int) -> tuple[int, int]:
    """(positive, negative) root counts of a monic real-rooted polynomial.

    ``coeffs`` are ascending, exact, conjugation-fixed; signs are certified at
    the real place ``place_rep``.  A zero constant term means a zero
    eigenvalue and is rejected.
    """
    if coeffs[0].is_zero:
        raise DegenerateFormError("form has a zero eigenvalue")
    signs = [certified_real_sign(c, place_rep) for c in coeffs]
    n = len(coeffs) - 1
    pos = _descartes_counts(list(reversed(signs)))
    neg = _descartes_counts([s if (n - i) % 2 == 0 else -s
                             for i, s in enumerate(reversed(signs))])
    if pos + neg != n:
        raise DegenerateFormError("eigenvalue counts do not add up; degenerate input")
    return pos, neg


def signature_at(H: HermitianForm, place_index: int) -> tuple[int, int]:
    """Certified (positive, negative) eigenvalue counts of H at a real place."""
    cached = H._signatures.get(place_index)
    if cached is not None:
        return cached
    reps = H.field.real_place_reps
    if not 0 <= place_index < len(reps):
        raise IndexError(f"real place index out of range: {place_index}")
    M = H.matrix
    chi = [-M.det(), M.minor_sum(), -M.trace(), H.field.one()]
    for c in chi:
        assert c.is_real  # Hermitian input forces real coefficients
    sig = signature_counts(chi, reps[place_index])
    H._signatures[place_index] = sig
    return sig


def signatures(H: HermitianForm) -> tuple[tuple[int, int], ...]:
    return tuple(signature_at(H, i) for i in range(len(H.field.real_place_reps)))


class AdmissibilityReport:
    """Outcome of the signature test: (2,1) at the identity place, (3,0) elsewhere."""

    __slots__ = ("admissible", "signatures")

    def __init__(self, admissible: bool, sigs: tuple[tuple[int, int], ...]):
        self.admissible = admissible
        self.signatures = sigs

    def __bool__(self):
        return self.admissible

    def __repr__(self):
        return f"AdmissibilityReport({self.admissible}, {self.signatures})"


def is_admissible(H: HermitianForm) -> AdmissibilityReport:
    sigs = signatures(H)
    ok = sigs[0] == (2, 1) and all(s == (3, 0) for s in sigs[1:])
    return AdmissibilityReport(ok, sigs)


def su_membership(g: CycloMatrix, H: HermitianForm) -> bool:
    """Exact test of g H g*^t = H together with det g = 1."""
    if g.field != H.field:
        raise FieldMismatchError("matrix and form fields differ")
    if g.det() != g.field.one():
        return False
    return g * H.matrix * g.conj_transpose() == H.matrix


def form_value(H: HermitianForm, u, v) -> CycloNum:
    """<u, v> = u H v*^t for row vectors u, v."""
    rows = H.matrix.rows
    total = H.field.zero()
    for k in range(3):
        if u[k].is_zero:
            continue
        for l in range(3):
            if not v[l].is_zero:
                total = total + u[k] * rows[k][l] * v[l].conj()
    return total
