"""Certified complex enclosures for embeddings of cyclotomic numbers.

Enclosures are midpoint-radius balls: the true value is always within
``radius`` of ``center``.  Every operation is outward-rounded by adding a
conservative slack proportional to 2^(8 - working precision), so containment
survives floating-point rounding.  Sign decisions are made only when an
enclosure excludes zero; otherwise the working precision is doubled, starting
from CHYPLAT_PRECISION_BITS (default 128) up to a hard cap of 8192 bits.
"""

from __future__ import annotations

import itertools
import math
import os
from fractions import Fraction

from mpmath import mp, mpf

from .cyclo import CycloField, CycloNum
from .errors import InvalidConductorError, PrecisionExhaustedError, SearchExhaustedError

DEFAULT_START_BITS = 128
MAX_BITS = 8192

# one-sided inflation applied to every radius computation; dominates the
# round-nearest error of the radius arithmetic itself at any precision >= 53
_R_SLACK = 2.0 ** -10


def start_precision_bits() -> int:
    raw = os.environ.get("CHYPLAT_PRECISION_BITS")
    if not raw:
        return DEFAULT_START_BITS
    bits = int(raw)
    if bits < 16 or bits > MAX_BITS:
        raise ValueError(f"CHYPLAT_PRECISION_BITS out of range: {bits}")
    return bits


def _eps():
    return mpf(2) ** (8 - mp.prec)


def _abs_ub(z) -> mpf:
    # |Re| + |Im| >= |z|; cheap upper bound, inflated against rounding
    b = abs(z.real) + abs(z.imag)
    return b + b * _R_SLACK


class IntervalComplex:
    """A complex ball: center plus a rigorous radius bound."""

    __slots__ = ("center", "radius")

    def __init__(self, center, radius=0):
        self.center = mp.mpc(center)
        self.radius = mpf(radius)
        if self.radius < 0:
            raise ValueError("negative radius")

    @classmethod
    def from_exact(cls, value) -> "IntervalComplex":
        """Ball around an exact rational, at the current working precision."""
        value = Fraction(value)
        c = mpf(value.numerator) / mpf(value.denominator)
        r = abs(c) * _eps()
        return cls(c, r)

    def __add__(self, other):
        c = self.center + other.center
        r = self.radius + other.radius + (_abs_ub(self.center) + _abs_ub(other.center)) * _eps()
        return IntervalComplex(c, r + r * _R_SLACK)

    def __neg__(self):
        return IntervalComplex(-self.center, self.radius)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        au, bu = _abs_ub(self.center), _abs_ub(other.center)
        c = self.center * other.center
        r = (au * other.radius + bu * self.radius + self.radius * other.radius
             + au * bu * _eps())
        return IntervalComplex(c, r + r * _R_SLACK)

    def real_bounds(self) -> tuple[mpf, mpf]:
        return self.center.real - self.radius, self.center.real + self.radius

    def contains_zero(self) -> bool:
        lb = max(abs(self.center.real), abs(self.center.imag))
        return lb - lb * _R_SLACK <= self.radius

    def encloses(self, value) -> bool:
        """Whether a (high-precision) point value lies inside the ball."""
        return abs(mp.mpc(value) - self.center) <= self.radius

    def __repr__(self):
        return f"IntervalComplex({self.center} +/- {self.radius})"


def embed(x: CycloNum, a: int = 1, precision: int | None = None) -> IntervalComplex:
    """Certified enclosure of the image of x under zeta -> exp(2*pi*i*a/m)."""
    m = x.field.conductor
    if math.gcd(a, m) != 1:
        raise ValueError(f"embedding exponent {a} is not coprime to {m}")
    bits = precision if precision is not None else start_precision_bits()
    with mp.workprec(bits + 16):
        root_c = mp.expjpi(mpf(2 * (a % m)) / m)
        root = IntervalComplex(root_c, 2 * _eps())
        acc = IntervalComplex(0)
        den = x.den
        for n in reversed(x.num):
            acc = acc * root + IntervalComplex.from_exact(Fraction(n, den))
        return acc


def certified_real_sign(x: CycloNum, a: int = 1) -> int:
    """Sign of the real number nu_a(x) for conjugation-fixed x (exact 0 -> 0).

    Escalates precision until the enclosure excludes zero.
    """
    if x.is_zero:
        return 0
    bits = start_precision_bits()
    while bits <= MAX_BITS:
        lo, hi = embed(x, a, bits).real_bounds()
        if lo > 0:
            return 1
        if hi < 0:
            return -1
        bits *= 2
    raise PrecisionExhaustedError(
        f"sign of embedding a={a} undecided at {MAX_BITS} bits")


def _digit_order(radius: int) -> list[int]:
    out = [0]
    for k in range(1, radius + 1):
        out += [k, -k]
    return out


def find_indefinite_scalar(field: CycloField, search_radius: int) -> CycloNum:
    """Integral conjugation-fixed element, negative at the identity real place
    and positive at every other real place.

    Searches integer combinations of the power basis of the real subring
    (powers of zeta + zeta^-1) shell by shell in the max-coefficient norm,
    coefficients ordered 0, 1, -1, 2, -2, ... within a shell, and returns the
    first certified hit, which makes the choice reproducible.
    """
    d = field.degree // 2
    if d < 2:
        raise InvalidConductorError(
            f"conductor {field.conductor}: totally real subfield is Q; no admissible scalar")
    u = field.zeta(1) + field.zeta(-1)
    basis = [field.one()]
    for _ in range(d - 1):
        basis.append(basis[-1] * u)
    reps = field.real_place_reps
    for shell in range(search_radius + 1):
        digits = _digit_order(shell)
        for tup in itertools.product(digits, repeat=d):
            if shell and max(abs(c) for c in tup) != shell:
                continue
            cand = field.zero()
            for c, b in zip(tup, basis):
                if c:
                    cand = cand + c * b
            if cand.is_zero:
                continue
            for idx, rep in enumerate(reps):
                want = -1 if idx == 0 else 1
                if certified_real_sign(cand, rep) != want:
                    break
            else:
                return cand
    raise SearchExhaustedError(
        f"no admissible scalar within coefficient radius {search_radius}")
