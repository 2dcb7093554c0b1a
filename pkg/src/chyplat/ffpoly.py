"""Dense polynomial arithmetic over Z/q (q prime) plus equal-degree factoring.

Polynomials are lists of ints in [0, q), ascending, with no trailing zeros
(the zero polynomial is []).  The factoring entry point assumes its input is
squarefree with all irreducible factors of one known degree, which is exactly
the shape of a cyclotomic polynomial modulo an unramified prime; splitting
uses Cantor-Zassenhaus with a caller-supplied deterministic seed so the
factor list is reproducible across runs and platforms.
"""

from __future__ import annotations

import random


def trim(p: list[int]) -> list[int]:
    while p and p[-1] == 0:
        p.pop()
    return p


def degree(p: list[int]) -> int:
    return len(p) - 1


def add(a: list[int], b: list[int], q: int) -> list[int]:
    n = max(len(a), len(b))
    out = [0] * n
    for i, c in enumerate(a):
        out[i] = c
    for i, c in enumerate(b):
        out[i] = (out[i] + c) % q
    return trim(out)


def sub(a: list[int], b: list[int], q: int) -> list[int]:
    n = max(len(a), len(b))
    out = [0] * n
    for i, c in enumerate(a):
        out[i] = c
    for i, c in enumerate(b):
        out[i] = (out[i] - c) % q
    return trim(out)


def mul(a: list[int], b: list[int], q: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return trim([c % q for c in out])


def scale(a: list[int], c: int, q: int) -> list[int]:
    c %= q
    return trim([x * c % q for x in a])


def divmod_poly(a: list[int], b: list[int], q: int) -> tuple[list[int], list[int]]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    if len(a) < len(b):
        return [], trim(a)
    inv_lead = pow(b[-1], -1, q)
    quot = [0] * (len(a) - len(b) + 1)
    for k in range(len(quot) - 1, -1, -1):
        c = a[k + len(b) - 1] * inv_lead % q
        quot[k] = c
        if c:
            for i, d in enumerate(b):
                a[k + i] = (a[k + i] - c * d) % q
    return trim(quot), trim(a[: len(b) - 1])


def mod_poly(a: list[int], b: list[int], q: int) -> list[int]:
    return divmod_poly(a, b, q)[1]


def monic(a: list[int], q: int) -> list[int]:
    if not a:
        return []
    if a[-1] == 1:
        return list(a)
    return scale(a, pow(a[-1], -1, q), q)


def gcd(a: list[int], b: list[int], q: int) -> list[int]:
    a, b = list(a), list(b)
    while b:
        a, b = b, mod_poly(a, b, q)
    return monic(a, q)


def xgcd(a: list[int], b: list[int], q: int):
    """(g, s, t) with s*a + t*b = g, g monic."""
    r0, r1 = list(a), list(b)
    s0, s1 = [1], []
    t0, t1 = [], [1]
    while r1:
        quot, rem = divmod_poly(r0, r1, q)
        r0, r1 = r1, rem
        s0, s1 = s1, sub(s0, mul(quot, s1, q), q)
        t0, t1 = t1, sub(t0, mul(quot, t1, q), q)
    if not r0:
        return [], s0, t0
    c = pow(r0[-1], -1, q)
    return scale(r0, c, q), scale(s0, c, q), scale(t0, c, q)


def pow_mod(base: list[int], e: int, modulus: list[int], q: int) -> list[int]:
    out = [1]
    base = mod_poly(base, modulus, q)
    while e:
        if e & 1:
            out = mod_poly(mul(out, base, q), modulus, q)
        e >>= 1
        if e:
            base = mod_poly(mul(base, base, q), modulus, q)
    return out


def eval_poly(p: list[int], x: int, q: int) -> int:
    acc = 0
    for c in reversed(p):
        acc = (acc * x + c) % q
    return acc


def derivative(p: list[int], q: int) -> list[int]:
    return trim([c * i % q for i, c in enumerate(p)][1:])


def _split_once(h: list[int], f: int, q: int, rng: random.Random) -> list[int]:
    """One nontrivial monic factor of h (h squarefree, factors of degree f)."""
    d = degree(h)
    while True:
        r = trim([rng.randrange(q) for _ in range(d)])
        if degree(r) < 1:
            continue
        if q == 2:
            # additive trace map onto GF(2)
            t = mod_poly(r, h, q)
            acc = list(t)
            for _ in range(f - 1):
                t = mod_poly(mul(t, t, q), h, q)
                acc = add(acc, t, q)
            g = gcd(acc, h, q)
        else:
            s = pow_mod(r, (q**f - 1) // 2, h, q)
            g = gcd(sub(s, [1], q), h, q)
        if 0 < degree(g) < degree(h):
            return g


def factor_equal_degree(h: list[int], f: int, q: int, seed: str) -> list[list[int]]:
    """All monic irreducible factors of h, sorted by coefficient list.

    h must be squarefree with every irreducible factor of degree f.
    """
    h = monic(h, q)
    if degree(h) % f:
        raise ValueError("degree is not a multiple of the factor degree")
    rng = random.Random(seed)
    stack = [h]
    out = []
    while stack:
        g = stack.pop()
        if degree(g) == f:
            out.append(monic(g, q))
            continue
        d = _split_once(g, f, q, rng)
        quot, rem = divmod_poly(g, d, q)
        if rem:
            raise ArithmeticError("split factor does not divide")
        stack.append(d)
        stack.append(quot)
    out.sort(key=tuple)
    return out
