"""Polynomials over F_p: arithmetic, factorization of x^n - 1, cyclotomic
cosets, quadratic-residue tests and duadic splittings.

Factorization of x^n - 1 is done by computing the minimal polynomial of each
cyclotomic coset from a primitive n-th root of unity in F_{p^s}, where
s is the multiplicative order of p mod n.  This keeps the factor <-> coset
correspondence explicit, which the rest of the library relies on.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from math import gcd

from ._modpoly import (
    padd,
    pdivmod,
    pgcd,
    pmonic,
    pmul,
    pnorm,
    ppowmod,
    psub,
)
from .ring import is_prime


@dataclass(frozen=True)
class FqPoly:
    """Dense polynomial over F_p, coefficients ascending, no trailing zeros."""

    p: int
    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", tuple(pnorm(list(self.coeffs), self.p)))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def _check(self, other: "FqPoly") -> None:
        if self.p != other.p:
            raise ValueError(f"mixed characteristics {self.p} and {other.p}")

    def __add__(self, other: "FqPoly") -> "FqPoly":
        self._check(other)
        return FqPoly(self.p, tuple(padd(list(self.coeffs), list(other.coeffs), self.p)))

    def __sub__(self, other: "FqPoly") -> "FqPoly":
        self._check(other)
        return FqPoly(self.p, tuple(psub(list(self.coeffs), list(other.coeffs), self.p)))

    def __mul__(self, other: "FqPoly") -> "FqPoly":
        self._check(other)
        return FqPoly(self.p, tuple(pmul(list(self.coeffs), list(other.coeffs), self.p)))

    def divmod(self, other: "FqPoly") -> tuple["FqPoly", "FqPoly"]:
        self._check(other)
        q, r = pdivmod(list(self.coeffs), list(other.coeffs), self.p)
        return FqPoly(self.p, tuple(q)), FqPoly(self.p, tuple(r))

    def gcd(self, other: "FqPoly") -> "FqPoly":
        self._check(other)
        return FqPoly(self.p, tuple(pgcd(list(self.coeffs), list(other.coeffs), self.p)))

    def monic(self) -> "FqPoly":
        return FqPoly(self.p, tuple(pmonic(list(self.coeffs), self.p)))

    def __str__(self) -> str:
        from .serialize import poly_to_text

        return poly_to_text(list(self.coeffs))


def fq_mul(a: FqPoly, b: FqPoly) -> FqPoly:
    return a * b


def fq_divmod(a: FqPoly, b: FqPoly) -> tuple[FqPoly, FqPoly]:
    return a.divmod(b)


def fq_gcd(a: FqPoly, b: FqPoly) -> FqPoly:
    return a.gcd(b)


def ord_mod(n: int, q: int) -> int:
    """Smallest l >= 1 with q**l = 1 mod n."""
    if n == 1:
        return 1
    if gcd(n, q) != 1:
        raise ValueError(f"gcd({n}, {q}) != 1")
    l, v = 1, q % n
    while v != 1:
        v = v * q % n
        l += 1
    return l


def _orbits(m: int, q: int) -> list[list[int]]:
    """Partition of Z_m into multiplication-by-q orbits, each sorted,
    listed by ascending minimal representative.  Valid for any m coprime to q."""
    seen = [False] * m
    out = []
    for i in range(m):
        if seen[i]:
            continue
        orbit = []
        j = i
        while not seen[j]:
            seen[j] = True
            orbit.append(j)
            j = j * q % m
        out.append(sorted(orbit))
    return out


@dataclass(frozen=True)
class CosetPartition:
    """The q-cyclotomic cosets mod m; each coset sorted, {0} always separate."""

    m: int
    q: int
    cosets: tuple[tuple[int, ...], ...]


def cyclotomic_cosets(m: int, q: int) -> CosetPartition:
    if m % 2 == 0:
        raise ValueError(f"modulus must be odd, got {m}")
    if gcd(m, q) != 1:
        raise ValueError(f"gcd({m}, {q}) != 1")
    return CosetPartition(m, q, tuple(tuple(c) for c in _orbits(m, q)))


@lru_cache(maxsize=None)
def _squares_mod(n: int) -> frozenset[int]:
    return frozenset(y * y % n for y in range(n))


def is_quadratic_residue(q: int, n: int) -> bool:
    """True iff q is a square modulo n (membership in the squares of Z_n)."""
    if n % 2 == 0:
        raise ValueError(f"modulus must be odd, got {n}")
    if gcd(q, n) != 1:
        raise ValueError(f"gcd({q}, {n}) != 1")
    return q % n in _squares_mod(n)


# ---------------------------------------------------------------------------
# Extension field F_{p^s} = F_p[y]/(h), elements as ascending coeff tuples.
# ---------------------------------------------------------------------------


def prime_factors(n: int) -> list[int]:
    """Distinct prime divisors by trial division."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def is_irreducible(poly: FqPoly) -> bool:
    """Rabin irreducibility test over F_p."""
    p = poly.p
    h = list(poly.coeffs)
    s = len(h) - 1
    if s <= 0:
        return False
    x = [0, 1]

    def frobenius_power(e: int) -> list[int]:
        r = pdivmod(x, h, p)[1]
        for _ in range(e):
            r = ppowmod(r, p, h, p)
        return r

    if psub(frobenius_power(s), x, p):
        return False
    for d in prime_factors(s):
        if pgcd(psub(frobenius_power(s // d), x, p), h, p) != [1]:
            return False
    return True


def find_irreducible(p: int, s: int) -> FqPoly:
    """First monic irreducible of degree s, scanning constant-first encodings."""
    if s == 1:
        return FqPoly(p, (0, 1))
    for code in range(p**s):
        coeffs, v = [], code
        for _ in range(s):
            coeffs.append(v % p)
            v //= p
        cand = FqPoly(p, tuple(coeffs + [1]))
        if is_irreducible(cand):
            return cand
    raise AssertionError(f"no irreducible of degree {s} over F_{p}")


class _ExtField:
    """Arithmetic in F_{p^s} as F_p[y]/(h); elements are coefficient lists."""

    def __init__(self, p: int, s: int):
        self.p = p
        self.s = s
        self.modulus = list(find_irreducible(p, s).coeffs)
        self.order = p**s - 1

    def mul(self, a: list[int], b: list[int]) -> list[int]:
        return pdivmod(pmul(a, b, self.p), self.modulus, self.p)[1]

    def pow(self, a: list[int], e: int) -> list[int]:
        return ppowmod(a, e, self.modulus, self.p)

    def element(self, code: int) -> list[int]:
        coeffs = []
        for _ in range(self.s):
            coeffs.append(code % self.p)
            code //= self.p
        return pnorm(coeffs, self.p)

    def generator(self) -> list[int]:
        """Smallest multiplicative generator in encoding order."""
        checks = [self.order // r for r in prime_factors(self.order)]
        for code in range(1, self.order + 1):
            cand = self.element(code)
            if all(self.pow(cand, e) != [1] for e in checks):
                return cand
        raise AssertionError("no generator found")


@lru_cache(maxsize=None)
def _ext_field(p: int, s: int) -> _ExtField:
    return _ExtField(p, s)


@lru_cache(maxsize=None)
def factor_xn_minus_1(n: int, p: int) -> tuple[FqPoly, ...]:
    """Monic irreducible factors of x^n - 1 over F_p, one per cyclotomic
    coset, ordered by ascending minimal coset representative.

    The factor for coset Cl(i) is the minimal polynomial of z^i, where z is
    the fixed primitive n-th root of unity g**((p^s - 1)/n) for the smallest
    multiplicative generator g of F_{p^s}.
    """
    if not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    if n < 1:
        raise ValueError(f"length must be positive, got {n}")
    if n % p == 0:
        raise ValueError(f"p = {p} divides n = {n}")
    if n == 1:
        return (FqPoly(p, (p - 1, 1)),)
    s = ord_mod(n, p)
    ext = _ext_field(p, s)
    zeta = ext.pow(ext.generator(), ext.order // n)
    factors = []
    for coset in _orbits(n, p):
        # product of (x - zeta^i) over the coset, coefficients in F_{p^s}
        poly: list[list[int]] = [[1]]
        for i in coset:
            root = ext.pow(zeta, i)
            nxt: list[list[int]] = [[] for _ in range(len(poly) + 1)]
            for k, c in enumerate(poly):
                nxt[k + 1] = padd(nxt[k + 1], c, p)
                nxt[k] = psub(nxt[k], ext.mul(root, c), p)
            poly = nxt
        coeffs = []
        for c in poly:
            if len(c) > 1:
                raise AssertionError("minimal polynomial left the base field")
            coeffs.append(c[0] if c else 0)
        factors.append(FqPoly(p, tuple(coeffs)))
    return tuple(factors)


# ---------------------------------------------------------------------------
# Duadic splittings
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Splitting:
    """A splitting mod m: the nonzero residues partitioned into coset unions
    S_1, S_2 swapped by the multiplier i -> a*i.  Exactly one of the two
    mu_{-1} classifications holds: negation either swaps S_1 and S_2
    (given_by_mu_minus1) or fixes them (invariant_under_mu_minus1)."""

    m: int
    q: int
    s1: tuple[int, ...]
    s2: tuple[int, ...]
    a: int
    given_by_mu_minus1: bool = field(init=False)
    invariant_under_mu_minus1: bool = field(init=False)

    def __post_init__(self) -> None:
        s1, s2 = frozenset(self.s1), frozenset(self.s2)
        if s1 & s2 or (s1 | s2) != set(range(1, self.m)):
            raise ValueError("S_1, S_2 must partition the nonzero residues")
        if frozenset(self.a * x % self.m for x in s1) != s2 or frozenset(
            self.a * x % self.m for x in s2
        ) != s1:
            raise ValueError(f"multiplier {self.a} does not swap S_1 and S_2")
        neg = frozenset(-x % self.m for x in s1)
        given, invariant = neg == s2, neg == s1
        if given == invariant:
            raise ValueError("negation neither swaps nor fixes the splitting")
        object.__setattr__(self, "given_by_mu_minus1", given)
        object.__setattr__(self, "invariant_under_mu_minus1", invariant)


def find_splittings(m: int, q: int) -> list[Splitting]:
    """All splittings modulo m for the q-cyclotomic cosets, canonically
    ordered (S_1 contains the coset of 1; list sorted lexicographically by S_1).

    The search walks every unit multiplier a: a splitting with witness a
    exists iff the permutation induced by a on the nonzero cosets has only
    even cycles, and the alternating assignments along each cycle enumerate
    all of them.  Returns [] when no splitting exists, in particular when
    q is not a square mod m.
    """
    if m % 2 == 0:
        raise ValueError(f"modulus must be odd, got {m}")
    if gcd(m, q) != 1:
        raise ValueError(f"gcd({m}, {q}) != 1")
    if m == 1:
        return []
    cosets = [tuple(c) for c in _orbits(m, q) if c != [0]]
    index = {x: i for i, c in enumerate(cosets) for x in c}
    found: dict[tuple[tuple[int, ...], tuple[int, ...]], int] = {}
    for a in range(2, m):
        if gcd(a, m) != 1:
            continue
        perm = [index[a * c[0] % m] for c in cosets]
        seen = [False] * len(cosets)
        cycles = []
        for i in range(len(cosets)):
            if seen[i]:
                continue
            cycle = []
            j = i
            while not seen[j]:
                seen[j] = True
                cycle.append(j)
                j = perm[j]
            cycles.append(cycle)
        if any(len(c) % 2 for c in cycles):
            continue
        for flips in itertools.product((0, 1), repeat=len(cycles)):
            side1: set[int] = set()
            side2: set[int] = set()
            for flip, cycle in zip(flips, cycles):
                for pos, ci in enumerate(cycle):
                    (side1 if (pos + flip) % 2 == 0 else side2).add(ci)
            s1 = sorted(x for ci in side1 for x in cosets[ci])
            s2 = sorted(x for ci in side2 for x in cosets[ci])
            if 1 in s2:
                s1, s2 = s2, s1
            key = (tuple(s1), tuple(s2))
            if key not in found:
                found[key] = a
    return [
        Splitting(m, q, s1, s2, found[(s1, s2)])
        for s1, s2 in sorted(found)
    ]
