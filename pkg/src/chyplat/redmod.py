"""Prime splitting, residue fields, matrix reduction, and the separation test.

A prime ideal above an unramified rational prime q is represented by the
lexicographically least monic irreducible factor of Phi_m modulo q; the
residue field is (Z/q)[x]/(factor), of degree f = the multiplicative order
of q mod m.  Reduction sends zeta_m to the class of x, entrywise on matrices,
inverting denominators coprime to q.

The separation test compares the reduced characteristic polynomial of a
candidate regular elliptic element against the reductions of every
repeated-eigenvalue cubic with integral coefficients in the field (a finite
conservative superset of the characteristic polynomials of torsion with a
repeated eigenvalue) and against (t-1)^3, which certifies that the reduction
is nontrivial and shares no characteristic polynomial with such torsion.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from . import ffpoly
from .cyclo import CycloField, CycloNum, cyclotomic_poly, field_make
from .elliptic import CharPoly
from .errors import NeedsDenominatorError, RamifiedPrimeError
from .matrices import CycloMatrix
from .numth import euler_phi, is_prime, multiplicative_order


@dataclass(frozen=True)
class PrimeIdealRep:
    """A prime of Z[zeta_m] over q, fixed by its chosen factor of Phi_m mod q."""

    q: int
    m: int
    f: int
    factor_poly: tuple[int, ...]  # ascending, monic, degree f

    def residue_field(self) -> "ResidueField":
        return _residue_field(self.q, self.factor_poly)

    @property
    def residue_size(self) -> int:
        return self.q**self.f


class ResidueField:
    """F_{q^f} as (Z/q)[x]/(modulus); elements are int tuples of length f."""

    __slots__ = ("q", "f", "modulus", "zero", "one")

    def __init__(self, q: int, modulus: tuple[int, ...]):
        self.q = q
        self.modulus = list(modulus)
        self.f = len(modulus) - 1
        self.zero = (0,) * self.f
        self.one = self.from_int(1)

    def _pad(self, p: list[int]) -> tuple[int, ...]:
        return tuple(p) + (0,) * (self.f - len(p))

    def from_int(self, n: int) -> tuple[int, ...]:
        return self._pad([n % self.q]) if n % self.q else self.zero

    def from_poly(self, coeffs) -> tuple[int, ...]:
        return self._pad(ffpoly.mod_poly([c % self.q for c in coeffs], self.modulus, self.q))

    def generator(self) -> tuple[int, ...]:
        """The image of zeta_m: the class of x (a root of the chosen factor)."""
        if self.f == 1:
            return self.from_int(-self.modulus[0])
        return self._pad([0, 1])

    def add(self, a, b):
        return tuple((x + y) % self.q for x, y in zip(a, b))

    def sub(self, a, b):
        return tuple((x - y) % self.q for x, y in zip(a, b))

    def neg(self, a):
        return tuple((-x) % self.q for x in a)

    def mul(self, a, b):
        prod = ffpoly.mul(ffpoly.trim(list(a)), ffpoly.trim(list(b)), self.q)
        return self._pad(ffpoly.mod_poly(prod, self.modulus, self.q))

    def inv(self, a):
        g, s, _ = ffpoly.xgcd(ffpoly.trim(list(a)), self.modulus, self.q)
        if g != [1]:
            raise ZeroDivisionError("element is not invertible in the residue field")
        return self._pad(ffpoly.mod_poly(s, self.modulus, self.q))

    def pow(self, a, e: int):
        if e < 0:
            return self.pow(self.inv(a), -e)
        out = self.one
        base = a
        while e:
            if e & 1:
                out = self.mul(out, base)
            e >>= 1
            if e:
                base = self.mul(base, base)
        return out

    def element_order(self, a) -> int:
        if a == self.zero:
            raise ValueError("zero has no multiplicative order")
        acc = a
        n = 1
        while acc != self.one:
            acc = self.mul(acc, a)
            n += 1
        return n


@lru_cache(maxsize=None)
def _residue_field(q: int, factor_poly: tuple[int, ...]) -> ResidueField:
    return ResidueField(q, factor_poly)


def split_prime(m: int, q: int) -> PrimeIdealRep:
    """Choose the canonical prime of Z[zeta_m] above an unramified prime q.

    Phi_m mod q splits into phi(m)/f irreducible factors, all of degree
    f = ord_q mod m; the full factorization is computed with a deterministic
    seed and the least factor (coefficient lists compared constant term
    first) is kept.
    """
    if m < 3:
        raise ValueError(f"conductor must be >= 3, got {m}")
    if not is_prime(q):
        raise ValueError(f"{q} is not prime")
    if m % q == 0:
        raise RamifiedPrimeError(f"{q} divides the conductor {m}")
    f = multiplicative_order(q, m)
    phi_mod = ffpoly.trim([c % q for c in cyclotomic_poly(m)])
    deg = ffpoly.degree(phi_mod)
    assert deg == euler_phi(m)
    if f == deg:
        factors = [phi_mod]
    else:
        factors = ffpoly.factor_equal_degree(phi_mod, f, q, seed=f"chyplat:{m}:{q}")
    if len(factors) * f != deg:
        raise ArithmeticError("factor count does not match the residue degree")
    check = [1]
    for fac in factors:
        if ffpoly.degree(fac) != f:
            raise ArithmeticError("factor of unexpected degree")
        check = ffpoly.mul(check, fac, q)
    if check != phi_mod:
        raise ArithmeticError("factor product does not recover the cyclotomic polynomial")
    return PrimeIdealRep(q=q, m=m, f=f, factor_poly=tuple(factors[0]))


def reduce_num(x: CycloNum, Q: PrimeIdealRep) -> tuple[int, ...]:
    """Image of an element of Q(zeta_m) in the residue field.

    Denominators must be invertible mod q; otherwise the element is not
    integral at the chosen prime.
    """
    if x.field.conductor != Q.m:
        raise ValueError(f"element conductor {x.field.conductor} does not match {Q.m}")
    F = Q.residue_field()
    if x.den % Q.q == 0:
        raise NeedsDenominatorError(
            f"denominator {x.den} is divisible by q = {Q.q}")
    val = F.from_poly(list(x.num))
    if x.den != 1:
        dinv = pow(x.den % Q.q, -1, Q.q)
        val = F.mul(val, F.from_int(dinv))
    return val


def reduce_mat(g: CycloMatrix, Q: PrimeIdealRep):
    """Entrywise reduction of a matrix; a 3x3 tuple of residue elements."""
    return tuple(tuple(reduce_num(x, Q) for x in row) for row in g.rows)


def ff_identity(F: ResidueField):
    z, o = F.zero, F.one
    return ((o, z, z), (z, o, z), (z, z, o))


def ff_mat_mul(A, B, F: ResidueField):
    out = []
    for i in range(3):
        row = []
        for j in range(3):
            acc = F.zero
            for k in range(3):
                acc = F.add(acc, F.mul(A[i][k], B[k][j]))
            row.append(acc)
        out.append(tuple(row))
    return tuple(out)


def ff_mat_pow(A, e: int, F: ResidueField):
    out = ff_identity(F)
    base = A
    while e:
        if e & 1:
            out = ff_mat_mul(out, base, F)
        e >>= 1
        if e:
            base = ff_mat_mul(base, base, F)
    return out


def ff_charpoly(A, F: ResidueField):
    """Monic cubic char poly of a reduced matrix, ascending (c0, c1, c2, 1)."""
    a = A

    def det3():
        t = F.sub(F.mul(a[1][1], a[2][2]), F.mul(a[1][2], a[2][1]))
        u = F.sub(F.mul(a[1][0], a[2][2]), F.mul(a[1][2], a[2][0]))
        v = F.sub(F.mul(a[1][0], a[2][1]), F.mul(a[1][1], a[2][0]))
        return F.add(F.sub(F.mul(a[0][0], t), F.mul(a[0][1], u)), F.mul(a[0][2], v))

    tr = F.add(F.add(a[0][0], a[1][1]), a[2][2])
    minors = F.add(
        F.add(F.sub(F.mul(a[1][1], a[2][2]), F.mul(a[1][2], a[2][1])),
              F.sub(F.mul(a[0][0], a[2][2]), F.mul(a[0][2], a[2][0]))),
        F.sub(F.mul(a[0][0], a[1][1]), F.mul(a[0][1], a[1][0])))
    return (F.neg(det3()), minors, F.neg(tr), F.one)


def charpoly_mod(g: CycloMatrix, Q: PrimeIdealRep):
    return ff_charpoly(reduce_mat(g, Q), Q.residue_field())


def reduce_poly(chi: CharPoly, Q: PrimeIdealRep):
    return tuple(reduce_num(c, Q) for c in chi.coeff_list())


def identity_cubed_mod(Q: PrimeIdealRep):
    """(t - 1)^3 over the residue field, ascending."""
    F = Q.residue_field()
    return (F.from_int(-1), F.from_int(3), F.from_int(-3), F.one)


def repeated_root_gcd_degree(poly, Q: PrimeIdealRep) -> int:
    """deg gcd(chi, chi') over the residue field; 0 means chi is squarefree."""
    F = Q.residue_field()

    # polynomials over F_{q^f}: coefficients are residue elements
    def trim_ff(p):
        while p and p[-1] == F.zero:
            p = p[:-1]
        return p

    def divmod_ff(a, b):
        a = list(a)
        inv_lead = F.inv(b[-1])
        for k in range(len(a) - len(b), -1, -1):
            c = F.mul(a[k + len(b) - 1], inv_lead)
            if c != F.zero:
                for i, d in enumerate(b):
                    a[k + i] = F.sub(a[k + i], F.mul(c, d))
        return trim_ff(a[: len(b) - 1])

    a = trim_ff(list(poly))
    b = trim_ff([F.mul(c, F.from_int(i)) for i, c in enumerate(poly)][1:])
    while b:
        a, b = b, divmod_ff(a, b)
    return len(a) - 1


@dataclass(frozen=True)
class SeparationVerdict:
    passed: bool
    colliding_indices: tuple[int, ...]
    collides_identity: bool
    tau_charpoly: tuple

    def __bool__(self):
        return self.passed


def candidate_reflection_polys(field: CycloField) -> tuple[CharPoly, ...]:
    """Every monic cubic (t - x)^2 (t - x^-2), x a root of unity with
    x^3 != 1 and phi(ord x) <= 3 phi(m), whose coefficients are integral
    elements of Q(zeta_m).

    This is a finite conservative superset of the characteristic polynomials
    of all finite-order elements of SL_3 over Z[zeta_m] with a repeated
    eigenvalue; the degree bound comes from the characteristic polynomial
    being a cubic over the field.  Deterministically ordered by coefficient
    coordinates.
    """
    m = field.conductor
    bound = 3 * field.degree
    out = {}
    r = 0
    while True:
        r += 1
        if euler_phi(r) > bound:
            if r > 2 * bound * bound:
                break
            continue
        if r in (1, 3):
            continue
        L = math.lcm(m, r)
        big = field_make(L)
        step = L // r
        gal = [a for a in range(2, L) if math.gcd(a, L) == 1 and a % m == 1]
        for s in range(1, r):
            if math.gcd(s, r) != 1:
                continue
            j = s * step
            e1 = big.reduce_power_sum(((2, j), (1, -2 * j)))
            e2 = big.reduce_power_sum(((1, 2 * j), (2, -j)))
            if any(big.reduce_power_sum(((2, a * j), (1, -2 * a * j))) != e1
                   or big.reduce_power_sum(((1, 2 * a * j), (2, -a * j))) != e2
                   for a in gal):
                continue
            # invariance under the full relative Galois group means the
            # coefficients already live in the subfield
            c2 = -(e1.restrict(m) if L != m else e1)
            c1 = e2.restrict(m) if L != m else e2
            if not (c2.is_integral and c1.is_integral):
                continue
            chi = CharPoly(c0=field.from_int(-1), c1=c1, c2=c2)
            key = (chi.c0.num, chi.c0.den, chi.c1.num, chi.c1.den, chi.c2.num, chi.c2.den)
            out[key] = chi
    return tuple(out[k] for k in sorted(out))


def separation_test(tau: CycloMatrix, Q: PrimeIdealRep,
                    candidates: tuple[CharPoly, ...]) -> SeparationVerdict:
    """PASS when the reduced char poly of tau avoids every candidate and (t-1)^3."""
    chi_tau = charpoly_mod(tau, Q)
    collisions = tuple(i for i, c in enumerate(candidates)
                       if reduce_poly(c, Q) == chi_tau)
    hits_identity = chi_tau == identity_cubed_mod(Q)
    passed = not collisions and not hits_identity
    if passed:
        # direct nontriviality recheck on the reduced matrix itself
        F = Q.residue_field()
        if reduce_mat(tau, Q) == ff_identity(F):
            raise ArithmeticError("char poly differs from (t-1)^3 but matrix reduces to 1")
    return SeparationVerdict(passed=passed, colliding_indices=collisions,
                             collides_identity=hits_identity, tau_charpoly=chi_tau)


def sl3_order(q: int, f: int) -> int:
    """|SL_3(F_Q)| for Q = q^f."""
    N = q**f
    return N**3 * (N**3 - 1) * (N**2 - 1)
