"""Exact arithmetic in cyclotomic fields Q(zeta_m).

Field elements are held on the power basis 1, zeta, ..., zeta^(phi(m)-1) as a
vector of integers over a single positive denominator, kept gcd-reduced.  Two
equal field elements therefore have identical internal tuples, equality is
structural, and membership in Z[zeta_m] is exactly ``den == 1``.

The m-th cyclotomic polynomial is computed by iterated exact division of
t^m - 1 by the cyclotomic polynomials of the proper divisors of m, so the
whole tower is self-contained integer arithmetic.  Reduction tables (t^k mod
Phi_m) are precomputed per field, which keeps products, Galois twists and
conductor extensions cheap.

All values are immutable after construction and every operation is a pure
function.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

from .errors import ConductorExtensionError, FieldMismatchError, InvalidConductorError
from .numth import divisors, euler_phi


def _poly_exact_div(num: list[int], den: tuple[int, ...]) -> list[int]:
    """Exact division of integer polynomials (ascending coefficients)."""
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    dlead = den[-1]
    for k in range(len(out) - 1, -1, -1):
        c = num[k + len(den) - 1]
        if c % dlead:
            raise ArithmeticError("division is not exact")
        q = c // dlead
        out[k] = q
        if q:
            for i, d in enumerate(den):
                num[k + i] -= q * d
    if any(num[: len(den) - 1]):
        raise ArithmeticError("division left a remainder")
    return out


@lru_cache(maxsize=None)
def cyclotomic_poly(m: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_m, ascending, monic of degree phi(m)."""
    if m < 1:
        raise ValueError("conductor must be positive")
    if m == 1:
        return (-1, 1)
    poly = [0] * (m + 1)
    poly[0] = -1
    poly[m] = 1
    for d in divisors(m)[:-1]:
        poly = _poly_exact_div(poly, cyclotomic_poly(d))
    return tuple(poly)


class CycloField:
    """The cyclotomic field Q(zeta_m) with its embeddings into C.

    Embeddings are indexed by the exponents a coprime to m (zeta -> zeta^a);
    the identity embedding is a = 1.  Real places of the maximal totally real
    subfield correspond to the conjugation pairs {a, m - a} and are indexed by
    the smaller representative, identity place first.
    """

    __slots__ = ("conductor", "degree", "phi_poly", "embedding_exponents",
                 "real_place_reps", "_red_pow")

    def __init__(self, m: int):
        if m < 3:
            raise InvalidConductorError(f"conductor must be >= 3, got {m}")
        self.conductor = m
        self.phi_poly = cyclotomic_poly(m)
        self.degree = len(self.phi_poly) - 1
        assert self.degree == euler_phi(m)
        self.embedding_exponents = tuple(a for a in range(1, m) if math.gcd(a, m) == 1)
        self.real_place_reps = tuple(sorted({min(a, m - a) for a in self.embedding_exponents}))
        self._red_pow = self._build_reduction_table()

    def _build_reduction_table(self) -> tuple[tuple[int, ...], ...]:
        # t^k mod Phi_m for 0 <= k < max(m, 2*degree - 1): enough for products
        # of reduced elements and for any Galois exponent twist.
        deg = self.degree
        top = [-c for c in self.phi_poly[:deg]]  # t^deg mod Phi
        rows = []
        cur = [0] * deg
        cur[0] = 1
        limit = max(self.conductor, 2 * deg - 1)
        for _ in range(limit):
            rows.append(tuple(cur))
            carry = cur[deg - 1]
            cur = [0] + cur[: deg - 1]
            if carry:
                for i in range(deg):
                    cur[i] += carry * top[i]
        return tuple(rows)

    # -- constructors ------------------------------------------------------

    def zero(self) -> "CycloNum":
        return CycloNum(self, (0,) * self.degree, 1, _checked=True)

    def one(self) -> "CycloNum":
        return self.from_int(1)

    def from_int(self, n: int) -> "CycloNum":
        coeffs = [0] * self.degree
        coeffs[0] = n
        return CycloNum(self, tuple(coeffs), 1, _checked=True)

    def from_fraction(self, x) -> "CycloNum":
        x = Fraction(x)
        coeffs = [0] * self.degree
        coeffs[0] = x.numerator
        return CycloNum(self, tuple(coeffs), x.denominator, _checked=True)

    def from_coeffs(self, coeffs) -> "CycloNum":
        """Element from phi(m) power-basis coordinates (ints, Fractions or strings)."""
        vals = [Fraction(c) for c in coeffs]
        if len(vals) != self.degree:
            raise ValueError(f"expected {self.degree} coordinates, got {len(vals)}")
        den = math.lcm(*(v.denominator for v in vals)) if vals else 1
        nums = tuple(int(v * den) for v in vals)
        return CycloNum(self, nums, den)

    def zeta(self, k: int = 1) -> "CycloNum":
        """zeta_m^k, any integer k."""
        k %= self.conductor
        return CycloNum(self, self._red_pow[k], 1, _checked=True)

    def reduce_power_sum(self, terms) -> "CycloNum":
        """Exact sum of c * zeta^e monomials given as (c, e) integer pairs."""
        acc = [0] * self.degree
        for c, e in terms:
            if c:
                row = self._red_pow[e % self.conductor]
                for i in range(self.degree):
                    acc[i] += c * row[i]
        return CycloNum(self, tuple(acc), 1)

    # -- identity ----------------------------------------------------------

    def __eq__(self, other):
        return isinstance(other, CycloField) and other.conductor == self.conductor

    def __hash__(self):
        return hash(("CycloField", self.conductor))

    def __repr__(self):
        return f"CycloField({self.conductor})"


@lru_cache(maxsize=None)
def field_make(m: int) -> CycloField:
    """The (cached, shared) cyclotomic field of conductor m >= 3."""
    return CycloField(m)


def _normalized(nums: tuple[int, ...], den: int) -> tuple[tuple[int, ...], int]:
    if den < 0:
        nums = tuple(-n for n in nums)
        den = -den
    g = den
    for n in nums:
        g = math.gcd(g, n)
        if g == 1:
            return nums, den
    if g > 1:
        nums = tuple(n // g for n in nums)
        den //= g
    return nums, den


class CycloNum:
    """An exact element of Q(zeta_m) in canonical reduced form."""

    __slots__ = ("field", "num", "den")

    def __init__(self, field: CycloField, num: tuple[int, ...], den: int = 1,
                 _checked: bool = False):
        if not _checked:
            if len(num) != field.degree:
                raise ValueError("coordinate vector has wrong length")
            if den == 0:
                raise ZeroDivisionError("zero denominator")
            num, den = _normalized(tuple(num), den)
        self.field = field
        self.num = num
        self.den = den

    # -- views -------------------------------------------------------------

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        """Power-basis coordinates as exact rationals."""
        d = self.den
        return tuple(Fraction(n, d) for n in self.num)

    @property
    def is_integral(self) -> bool:
        """Membership in Z[zeta_m]."""
        return self.den == 1

    @property
    def is_rational(self) -> bool:
        return not any(self.num[1:])

    @property
    def is_zero(self) -> bool:
        return not any(self.num)

    def as_fraction(self) -> Fraction:
        if not self.is_rational:
            raise ValueError("element is not rational")
        return Fraction(self.num[0], self.den)

    # -- ring operations ----------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, CycloNum):
            if other.field != self.field:
                raise FieldMismatchError(
                    f"conductor {other.field.conductor} vs {self.field.conductor}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.from_fraction(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self, other
        if a.den == b.den:
            return CycloNum(self.field, tuple(x + y for x, y in zip(a.num, b.num)), a.den)
        den = math.lcm(a.den, b.den)
        sa, sb = den // a.den, den // b.den
        return CycloNum(self.field,
                        tuple(x * sa + y * sb for x, y in zip(a.num, b.num)), den)

    __radd__ = __add__

    def __neg__(self):
        return CycloNum(self.field, tuple(-n for n in self.num), self.den, _checked=True)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        deg = self.field.degree
        prod = [0] * (2 * deg - 1)
        bnum = other.num
        for i, ai in enumerate(self.num):
            if ai:
                for j, bj in enumerate(bnum):
                    if bj:
                        prod[i + j] += ai * bj
        red = self.field._red_pow
        acc = list(prod[:deg])
        for k in range(deg, 2 * deg - 1):
            c = prod[k]
            if c:
                row = red[k]
                for i in range(deg):
                    acc[i] += c * row[i]
        return CycloNum(self.field, tuple(acc), self.den * other.den)

    __rmul__ = __mul__

    def inv(self) -> "CycloNum":
        """Multiplicative inverse via the extended Euclidean algorithm mod Phi_m."""
        if self.is_zero:
            raise ZeroDivisionError("inverse of zero")
        phi = [Fraction(c) for c in self.field.phi_poly]
        a = [Fraction(n, self.den) for n in self.num]
        # invariant: s * self = r (mod Phi); gcd ends at a nonzero constant
        r0, r1 = phi, _frac_trim(a)
        s0, s1 = [Fraction(0)], [Fraction(1)]
        while len(r1) > 1:
            q, r = _frac_divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _frac_sub(s0, _frac_mul(q, s1))
        c = r1[0]  # nonzero since Phi_m is irreducible over Q
        inv_coeffs = [s / c for s in s1]
        inv_coeffs += [Fraction(0)] * (self.field.degree - len(inv_coeffs))
        return self.field.from_coeffs(inv_coeffs[: self.field.degree])

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inv()

    def __rtruediv__(self, other):
        return self.inv() * other

    def __pow__(self, k: int):
        if k < 0:
            return self.inv() ** (-k)
        out = self.field.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base if k > 1 else base
            k >>= 1
        return out

    # -- Galois ------------------------------------------------------------

    def galois(self, a: int) -> "CycloNum":
        """Image under zeta -> zeta^a for a coprime to the conductor."""
        m = self.field.conductor
        if math.gcd(a, m) != 1:
            raise ValueError(f"{a} is not coprime to the conductor {m}")
        out = self.field.reduce_power_sum((n, i * a) for i, n in enumerate(self.num))
        return CycloNum(self.field, out.num, out.den * self.den)

    def conj(self) -> "CycloNum":
        """Complex conjugation zeta -> zeta^(-1)."""
        return self.galois(self.field.conductor - 1)

    @property
    def is_real(self) -> bool:
        """Fixed by conjugation, i.e. lies in the maximal totally real subfield."""
        return self.conj() == self

    # -- conductor changes ---------------------------------------------------

    def extend(self, M: int) -> "CycloNum":
        """The same number rewritten in Q(zeta_M); requires conductor | M."""
        m = self.field.conductor
        if M % m:
            raise ConductorExtensionError(f"{m} does not divide {M}")
        if M == m:
            return self
        big = field_make(M)
        step = M // m
        out = big.reduce_power_sum((n, i * step) for i, n in enumerate(self.num))
        return CycloNum(big, out.num, out.den * self.den)

    def lies_in_subfield(self, m_sub: int) -> bool:
        return self._subfield_coords(m_sub) is not None

    def restrict(self, m_sub: int) -> "CycloNum":
        """Rewrite in Q(zeta_{m_sub}); requires actual membership."""
        coords = self._subfield_coords(m_sub)
        if coords is None:
            raise ValueError(f"element does not lie in Q(zeta_{m_sub})")
        return field_make(m_sub).from_coeffs(coords)

    def _subfield_coords(self, m_sub: int):
        M = self.field.conductor
        if M % m_sub or m_sub < 3:
            raise ConductorExtensionError(f"{m_sub} does not divide {M}")
        if m_sub == M:
            return self.coeffs
        sub = field_make(m_sub)
        step = M // m_sub
        cols = [self.field._red_pow[(i * step) % M] for i in range(sub.degree)]
        return _solve_columns(cols, self.coeffs, self.field.degree)

    # -- identity ------------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.field.from_fraction(other)
        if not isinstance(other, CycloNum):
            return NotImplemented
        return (self.field == other.field and self.num == other.num
                and self.den == other.den)

    def __hash__(self):
        return hash((self.field.conductor, self.num, self.den))

    def __repr__(self):
        m = self.field.conductor
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                mono = f"z{m}" if i == 1 else f"z{m}^{i}"
                terms.append(mono if c == 1 else f"{c}*{mono}")
        return " + ".join(terms) if terms else "0"


# -- rational polynomial helpers for inversion / subfield solving ------------


def _frac_trim(p):
    while len(p) > 1 and p[-1] == 0:
        p = p[:-1]
    return list(p)


def _frac_sub(a, b):
    n = max(len(a), len(b))
    a = list(a) + [Fraction(0)] * (n - len(a))
    b = list(b) + [Fraction(0)] * (n - len(b))
    return _frac_trim([x - y for x, y in zip(a, b)])


def _frac_mul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return _frac_trim(out)


def _frac_divmod(a, b):
    a = list(a)
    q = [Fraction(0)] * max(1, len(a) - len(b) + 1)
    lead = b[-1]
    for k in range(len(a) - len(b), -1, -1):
        c = a[k + len(b) - 1] / lead
        q[k] = c
        if c:
            for i, d in enumerate(b):
                a[k + i] -= c * d
    return _frac_trim(q), _frac_trim(a[: len(b) - 1])


def _solve_columns(cols, target, nrows):
    """Solve sum_j y_j * cols[j] = target exactly; None if inconsistent."""
    ncols = len(cols)
    mat = [[Fraction(cols[j][i]) for j in range(ncols)] + [Fraction(target[i])]
           for i in range(nrows)]
    pivots = []
    row = 0
    for col in range(ncols):
        pr = next((r for r in range(row, nrows) if mat[r][col]), None)
        if pr is None:
            continue
        mat[row], mat[pr] = mat[pr], mat[row]
        pv = mat[row][col]
        mat[row] = [v / pv for v in mat[row]]
        for r in range(nrows):
            if r != row and mat[r][col]:
                f = mat[r][col]
                mat[r] = [v - f * w for v, w in zip(mat[r], mat[row])]
        pivots.append(col)
        row += 1
        if row == nrows:
            break
    for r in range(row, nrows):
        if mat[r][ncols]:
            return None
    sol = [Fraction(0)] * ncols
    for r, col in enumerate(pivots):
        sol[col] = mat[r][ncols]
    return tuple(sol)
