"""Exact classification of finite-order unitary 3x3 matrices.

A finite-order matrix preserving a form of signature (2,1) is classified by
its eigenvalue multiplicities and, in the repeated-eigenvalue case, by the
signature of the 2-dimensional eigenspace under the form:

  * one eigenvalue                      -> scalar
  * repeated eigenvalue, signature (1,1) -> complex reflection
  * repeated eigenvalue, signature (2,0) -> point reflection
  * three distinct eigenvalues           -> regular elliptic

Eigenvalues of an order-n matrix are n-th roots of unity, so they are found
exactly by evaluating the characteristic cubic at every n-th root of unity
inside Q(zeta_lcm(m, n)) and deflating; no floating-point eigensolver is
involved.  The only numerics is the certified sign of two exact Gram-matrix
invariants.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .cyclo import CycloNum, field_make
from .errors import DegenerateFormError, InfiniteOrderError, NotRootOfUnityError
from .matrices import CycloMatrix, HermitianForm, form_value, signature_counts, su_membership

SCALAR = "scalar"
COMPLEX_REFLECTION = "complex_reflection"
POINT_REFLECTION = "point_reflection"
REGULAR_ELLIPTIC = "regular_elliptic"


@dataclass(frozen=True)
class EllipticClass:
    """Classification verdict; eigenvalues hold the repeated eigenvalue (or the
    single scalar one), or the full triple for the regular elliptic case."""

    tag: str
    eigenvalues: tuple

    def __str__(self):
        return self.tag


@dataclass(frozen=True)
class CharPoly:
    """Monic cubic t^3 + c2 t^2 + c1 t + c0 over a cyclotomic field."""

    c0: CycloNum
    c1: CycloNum
    c2: CycloNum

    @property
    def field(self):
        return self.c0.field

    def coeff_list(self) -> tuple:
        """Ascending coefficients including the leading 1."""
        return (self.c0, self.c1, self.c2, self.field.one())

    def evaluate(self, x: CycloNum) -> CycloNum:
        return ((x + self.c2) * x + self.c1) * x + self.c0

    def extend(self, M: int) -> "CharPoly":
        return CharPoly(self.c0.extend(M), self.c1.extend(M), self.c2.extend(M))

    def __eq__(self, other):
        return (isinstance(other, CharPoly) and self.c0 == other.c0
                and self.c1 == other.c1 and self.c2 == other.c2)

    def __hash__(self):
        return hash((self.c0, self.c1, self.c2))


def char_poly(g: CycloMatrix) -> CharPoly:
    """Exact characteristic polynomial of a 3x3 matrix."""
    return CharPoly(c0=-g.det(), c1=g.minor_sum(), c2=-g.trace())


def element_order(g: CycloMatrix, cap: int) -> int | None:
    """Least n <= cap with g^n = 1, or None."""
    if cap < 1:
        raise ValueError("cap must be >= 1")
    acc = g
    for n in range(1, cap + 1):
        if acc.is_identity:
            return n
        if n < cap:
            acc = acc * g
    return None


def root_of_unity_order(x: CycloNum, bound: int | None = None) -> int | None:
    """Multiplicative order of x if x is a root of unity, else None.

    Roots of unity in Q(zeta_m) have order dividing lcm(2, m).
    """
    if bound is None:
        bound = math.lcm(2, x.field.conductor)
    one = x.field.one()
    acc = x
    for r in range(1, bound + 1):
        if acc == one:
            return r
        acc = acc * x
    return None


def normalize_to_su(g: CycloMatrix) -> CycloMatrix:
    """Scale g by an exact cube root of det(g)^-1 so the result has det 1.

    Works in the conductor lcm(m, 3 * order of det g); requires det(g) to be a
    root of unity.  The projective action, and hence the classification, is
    unchanged.
    """
    d = g.det()
    field = g.field
    if d == field.one():
        return g
    r = root_of_unity_order(d)
    if r is None:
        raise NotRootOfUnityError("determinant is not a root of unity")
    M = math.lcm(field.conductor, 3 * r)
    big = field_make(M)
    dE = d.extend(M)
    j = next(k for k in range(M) if dE == big.zeta(k))
    assert j % 3 == 0  # 3 | M forces the exponent to be divisible by 3
    scaled = g.extend(M).scale(big.zeta(-(j // 3)))
    assert scaled.det() == big.one()
    return scaled


def _deflate(coeffs_desc: list, lam: CycloNum):
    """Divide by (t - lam): returns (quotient descending, remainder)."""
    out = [coeffs_desc[0]]
    for c in coeffs_desc[1:]:
        out.append(c + lam * out[-1])
    return out[:-1], out[-1]


def _kernel_rows(mat: CycloMatrix) -> list[tuple]:
    """Basis of {column vectors x : mat x = 0}, returned as coordinate tuples."""
    field = mat.field
    rows = [list(r) for r in mat.rows]
    pivots = []
    rank = 0
    for col in range(3):
        pr = next((r for r in range(rank, 3) if not rows[r][col].is_zero), None)
        if pr is None:
            continue
        rows[rank], rows[pr] = rows[pr], rows[rank]
        pv_inv = rows[rank][col].inv()
        rows[rank] = [x * pv_inv for x in rows[rank]]
        for r in range(3):
            if r != rank and not rows[r][col].is_zero:
                f = rows[r][col]
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[rank])]
        pivots.append(col)
        rank += 1
    basis = []
    for free in range(3):
        if free in pivots:
            continue
        vec = [field.zero()] * 3
        vec[free] = field.one()
        for r, col in enumerate(pivots):
            vec[col] = -rows[r][free]
        basis.append(tuple(vec))
    return basis


def classify(g: CycloMatrix, H: HermitianForm, cap: int | None = None) -> EllipticClass:
    """Classify a finite-order element of the unitary group of H.

    Requires det(g) = 1 and exact preservation of H.  Raises if the order
    exceeds the cap (the element would not be elliptic of finite order) or if
    a repeated eigenspace turns out degenerate, which cannot happen for
    genuine finite-order input.
    """
    field = g.field
    if cap is None:
        cap = 3 * field.conductor**2
    if not su_membership(g, H):
        raise ValueError("matrix does not preserve the form with determinant 1")
    n = element_order(g, cap)
    if n is None:
        raise InfiniteOrderError(f"no order found up to cap {cap}")
    M = math.lcm(field.conductor, n)
    gE = g.extend(M) if M != field.conductor else g
    big = gE.field
    chi = char_poly(gE)
    poly = list(reversed(chi.coeff_list()))  # descending
    roots: list[tuple[CycloNum, int]] = []
    step = M // n
    for k in range(n):
        lam = big.zeta(k * step)
        mult = 0
        while len(poly) > 1:
            quot, rem = _deflate(poly, lam)
            if not rem.is_zero:
                break
            poly = quot
            mult += 1
        if mult:
            roots.append((lam, mult))
        if len(poly) == 1:
            break
    if sum(m for _, m in roots) != 3:
        raise ArithmeticError("eigenvalues are not all n-th roots of unity")
    if len(roots) == 1:
        return EllipticClass(SCALAR, (roots[0][0],))
    if len(roots) == 3:
        return EllipticClass(REGULAR_ELLIPTIC, tuple(lam for lam, _ in roots))
    lam = next(lam for lam, mult in roots if mult == 2)
    # left eigenvectors: rows v with v (g - lam) = 0
    shifted = gE - CycloMatrix.identity(big).scale(lam)
    basis = _kernel_rows(shifted.transpose())
    if len(basis) != 2:
        raise DegenerateFormError("repeated eigenspace is not 2-dimensional")
    HE = H.extend(M) if M != field.conductor else H
    g00 = form_value(HE, basis[0], basis[0])
    g01 = form_value(HE, basis[0], basis[1])
    g10 = form_value(HE, basis[1], basis[0])
    g11 = form_value(HE, basis[1], basis[1])
    tr = g00 + g11
    det = g00 * g11 - g01 * g10
    pos, neg = signature_counts([det, -tr, big.one()], 1)
    if (pos, neg) == (1, 1):
        return EllipticClass(COMPLEX_REFLECTION, (lam,))
    if (pos, neg) == (2, 0):
        return EllipticClass(POINT_REFLECTION, (lam,))
    raise DegenerateFormError(f"unexpected eigenspace signature ({pos}, {neg})")
