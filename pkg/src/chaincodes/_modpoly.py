"""Dense univariate polynomial arithmetic modulo an integer.

Polynomials are plain lists of coefficients in ascending degree with no
trailing zeros; the zero polynomial is the empty list.  Everything here is
exact integer arithmetic; the modulus M may be a prime or a prime power.
Field-only routines (general division, gcd) require unit leading
coefficients and are used with M prime.
"""

from __future__ import annotations


def pnorm(coeffs: list[int], m: int) -> list[int]:
    """Reduce coefficients mod m and strip trailing zeros."""
    out = [c % m for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return out


def padd(a: list[int], b: list[int], m: int) -> list[int]:
    n = max(len(a), len(b))
    return pnorm(
        [(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)], m
    )


def psub(a: list[int], b: list[int], m: int) -> list[int]:
    n = max(len(a), len(b))
    return pnorm(
        [(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)], m
    )


def pmul(a: list[int], b: list[int], m: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return pnorm(out, m)


def pscale(a: list[int], c: int, m: int) -> list[int]:
    return pnorm([c * x for x in a], m)


def pdivmod(a: list[int], b: list[int], m: int) -> tuple[list[int], list[int]]:
    """Euclidean division; the leading coefficient of b must be invertible mod m."""
    if not b:
        raise ZeroDivisionError("division by the zero polynomial")
    inv = pow(b[-1], -1, m)
    rem = [c % m for c in a]
    if len(rem) < len(b):
        return [], pnorm(rem, m)
    quo = [0] * (len(rem) - len(b) + 1)
    for i in range(len(rem) - len(b), -1, -1):
        c = (rem[i + len(b) - 1] * inv) % m
        if c:
            quo[i] = c
            for j, y in enumerate(b):
                rem[i + j] = (rem[i + j] - c * y) % m
    return pnorm(quo, m), pnorm(rem, m)


def pmonic(a: list[int], m: int) -> list[int]:
    """Scale by the inverse of the leading coefficient (which must be a unit)."""
    if not a:
        return []
    if a[-1] == 1:
        return list(a)
    return pscale(a, pow(a[-1], -1, m), m)


def pgcd(a: list[int], b: list[int], p: int) -> list[int]:
    """Monic gcd over F_p."""
    a, b = pnorm(a, p), pnorm(b, p)
    while b:
        a, b = b, pdivmod(a, b, p)[1]
    return pmonic(a, p)


def pxgcd(a: list[int], b: list[int], p: int) -> tuple[list[int], list[int], list[int]]:
    """Extended gcd over F_p: returns (g, s, t) with s*a + t*b = g, g monic."""
    r0, r1 = pnorm(a, p), pnorm(b, p)
    s0, s1 = [1], []
    t0, t1 = [], [1]
    while r1:
        q, r = pdivmod(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, psub(s0, pmul(q, s1, p), p)
        t0, t1 = t1, psub(t0, pmul(q, t1, p), p)
    if r0 and r0[-1] != 1:
        inv = pow(r0[-1], -1, p)
        r0, s0, t0 = pscale(r0, inv, p), pscale(s0, inv, p), pscale(t0, inv, p)
    return r0, s0, t0


def ppowmod(a: list[int], e: int, mod: list[int], m: int) -> list[int]:
    """a**e modulo the polynomial `mod` (unit leading coefficient) and the integer m."""
    result = [1]
    base = pdivmod(a, mod, m)[1]
    while e:
        if e & 1:
            result = pdivmod(pmul(result, base, m), mod, m)[1]
        base = pdivmod(pmul(base, base, m), mod, m)[1]
        e >>= 1
    return result


def peval(a: list[int], x: int, m: int) -> int:
    """Evaluate at x mod m (Horner)."""
    acc = 0
    for c in reversed(a):
        acc = (acc * x + c) % m
    return acc
