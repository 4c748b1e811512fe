"""Polynomials over Z_{p^e}: exact arithmetic, monic reciprocals, coordinate
substitutions, Hensel lifting of coprime factorizations of x^n - 1, and
roots of unity in the unit group."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd

from ._modpoly import (
    padd,
    pdivmod,
    pmonic,
    pmul,
    pnorm,
    pscale,
    psub,
    pxgcd,
)
from .fieldpoly import FqPoly, factor_xn_minus_1
from .ring import MismatchedRing, NotAUnit, RElem, RingSpec


class NonUnitConstantTerm(ArithmeticError):
    """Reciprocal of a polynomial whose constant term is divisible by p."""


class NoSuchRoot(ArithmeticError):
    """Requested root of unity does not exist in this ring."""


class LiftError(ValueError):
    """Hensel lifting input violates monic/coprime/product preconditions."""


@dataclass(frozen=True)
class RPoly:
    """Dense polynomial over Z_{p^e}, coefficients ascending and canonical."""

    spec: RingSpec
    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "coeffs", tuple(pnorm(list(self.coeffs), self.spec.modulus))
        )

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def is_one(self) -> bool:
        return self.coeffs == (1,)

    def constant_term(self) -> int:
        return self.coeffs[0] if self.coeffs else 0

    def _check(self, other: "RPoly") -> None:
        if self.spec != other.spec:
            raise MismatchedRing(f"{self.spec} vs {other.spec}")

    def __add__(self, other: "RPoly") -> "RPoly":
        self._check(other)
        return RPoly(self.spec, tuple(padd(list(self.coeffs), list(other.coeffs), self.spec.modulus)))

    def __sub__(self, other: "RPoly") -> "RPoly":
        self._check(other)
        return RPoly(self.spec, tuple(psub(list(self.coeffs), list(other.coeffs), self.spec.modulus)))

    def __mul__(self, other: "RPoly") -> "RPoly":
        self._check(other)
        return RPoly(self.spec, tuple(pmul(list(self.coeffs), list(other.coeffs), self.spec.modulus)))

    def divmod_monic(self, other: "RPoly") -> tuple["RPoly", "RPoly"]:
        """Euclidean division by a monic divisor (exact over Z_{p^e})."""
        self._check(other)
        if not other.is_monic():
            raise ValueError(f"divisor must be monic, got leading {other.coeffs[-1] if other.coeffs else 0}")
        q, r = pdivmod(list(self.coeffs), list(other.coeffs), self.spec.modulus)
        return RPoly(self.spec, tuple(q)), RPoly(self.spec, tuple(r))

    def divides(self, other: "RPoly") -> bool:
        """Exact monic divisibility: self | other."""
        return other.divmod_monic(self)[1].is_zero()

    def monic(self) -> "RPoly":
        """Scale by the leading coefficient's inverse; leading must be a unit."""
        if self.is_zero():
            return self
        if not self.spec.is_unit(self.coeffs[-1]):
            raise NotAUnit(f"leading coefficient {self.coeffs[-1]} is not a unit")
        return RPoly(self.spec, tuple(pmonic(list(self.coeffs), self.spec.modulus)))

    def reduce_mod_p(self) -> FqPoly:
        """Coefficient-wise reduction to the residue field."""
        return FqPoly(self.spec.p, tuple(c % self.spec.p for c in self.coeffs))

    def __str__(self) -> str:
        from .serialize import poly_to_text

        return poly_to_text(list(self.coeffs))

    @classmethod
    def one(cls, spec: RingSpec) -> "RPoly":
        return cls(spec, (1,))

    @classmethod
    def xn_minus_1(cls, spec: RingSpec, n: int) -> "RPoly":
        return cls(spec, tuple([spec.modulus - 1] + [0] * (n - 1) + [1]))


def r_mul(a: RPoly, b: RPoly) -> RPoly:
    return a * b


def r_divmod_monic(a: RPoly, b: RPoly) -> tuple[RPoly, RPoly]:
    return a.divmod_monic(b)


def reciprocal(f: RPoly) -> RPoly:
    """Monic reciprocal: reverse the coefficients and scale by the inverse of
    the constant term.  Requires a unit constant term; the result is monic of
    the same degree."""
    if f.is_zero() or not f.spec.is_unit(f.coeffs[0]):
        raise NonUnitConstantTerm(f"constant term {f.constant_term()} is not a unit")
    inv = f.spec.inverse(f.coeffs[0])
    return RPoly(f.spec, tuple(pscale(list(reversed(f.coeffs)), inv, f.spec.modulus)))


def substitute_scaled(f: RPoly, lam: RElem, normalize_monic: bool = False) -> RPoly:
    """f(lam * x): coefficient i is scaled by lam**i.  With normalize_monic the
    result is rescaled to a monic generator of the same ideal (legal because
    lam is a unit)."""
    if lam.spec != f.spec:
        raise MismatchedRing(f"{lam.spec} vs {f.spec}")
    if not f.spec.is_unit(lam.value):
        raise NotAUnit(f"{lam.value} is not a unit")
    m = f.spec.modulus
    out = []
    power = 1
    for c in f.coeffs:
        out.append(c * power % m)
        power = power * lam.value % m
    result = RPoly(f.spec, tuple(out))
    return result.monic() if normalize_monic and not result.is_zero() else result


def multiplier_mod(f: RPoly, a: int, n: int) -> RPoly:
    """f(x^a) reduced mod x^n - 1: exponent i maps to a*i mod n."""
    if gcd(a, n) != 1:
        raise ValueError(f"gcd({a}, {n}) != 1")
    if f.degree >= n:
        raise ValueError(f"degree {f.degree} not below length {n}")
    m = f.spec.modulus
    out = [0] * n
    for i, c in enumerate(f.coeffs):
        out[i * a % n] = (out[i * a % n] + c) % m
    return RPoly(f.spec, tuple(out))


def hensel_lift_factorization(
    factors: list[FqPoly], n: int, spec: RingSpec
) -> list[RPoly]:
    """Lift a monic pairwise-coprime factorization of x^n - 1 over F_p to the
    unique monic factorization over Z_{p^e}, positionally matched.

    Linear lifting: peel factors off one at a time.  For a split F = G*H with
    gcd(Gbar, Hbar) = 1 and Bezout certificate s*Gbar + t*Hbar = 1 over F_p,
    the correction at p-adic digit k is G += p^k * (t*D mod Gbar),
    H += p^k * (s*D mod Hbar) where D = (F - G*H) / p^k mod p.  Degrees of the
    corrections stay below the factor degrees, so monicity is preserved and
    the final product is exactly x^n - 1 in Z_{p^e}[x].
    """
    p, m = spec.p, spec.modulus
    if n % p == 0:
        raise LiftError(f"p = {p} divides n = {n}")
    if any(not f.is_monic() for f in factors):
        raise LiftError("all factors must be monic")
    if any(f.p != p for f in factors):
        raise LiftError("factor characteristic does not match the ring")
    product = FqPoly(p, (1,))
    for f in factors:
        product = product * f
    if list(product.coeffs) != pnorm([-1] + [0] * (n - 1) + [1], p):
        raise LiftError("factors do not multiply to x^n - 1 over F_p")
    for i, f in enumerate(factors):
        for g in factors[i + 1 :]:
            if f.gcd(g).coeffs != (1,):
                raise LiftError("factors are not pairwise coprime")

    lifted: list[RPoly] = []
    remaining = RPoly.xn_minus_1(spec, n)
    pending = [list(f.coeffs) for f in factors]
    while len(pending) > 1:
        gbar = pending.pop(0)
        hbar = [1]
        for f in pending:
            hbar = pmul(hbar, f, p)
        one, s_co, t_co = pxgcd(gbar, hbar, p)
        if one != [1]:
            raise LiftError("factors are not pairwise coprime")
        big_g, big_h = list(gbar), list(hbar)
        target = list(remaining.coeffs)
        for k in range(1, spec.e):
            pk = p**k
            diff = psub(target, pmul(big_g, big_h, m), m)
            delta = pnorm([(d // pk) % p for d in diff], p)
            corr_g = pdivmod(pmul(t_co, delta, p), gbar, p)[1]
            corr_h = pdivmod(pmul(s_co, delta, p), hbar, p)[1]
            big_g = padd(big_g, pscale(corr_g, pk, m), m)
            big_h = padd(big_h, pscale(corr_h, pk, m), m)
        if psub(target, pmul(big_g, big_h, m), m):
            raise AssertionError("lift did not converge")
        lifted.append(RPoly(spec, tuple(big_g)))
        remaining = RPoly(spec, tuple(big_h))
    lifted.append(remaining)
    return lifted


@lru_cache(maxsize=None)
def lifted_factorization(n: int, spec: RingSpec) -> tuple[tuple[tuple[int, ...], FqPoly, RPoly], ...]:
    """Basic irreducible factorization of x^n - 1 over Z_{p^e}: triples
    (cyclotomic coset, residue factor, lifted factor), ordered by ascending
    minimal coset representative."""
    from .fieldpoly import _orbits

    residue = factor_xn_minus_1(n, spec.p)
    cosets = [tuple(c) for c in _orbits(n, spec.p)]
    lifted = hensel_lift_factorization(list(residue), n, spec)
    return tuple(zip(cosets, residue, lifted))


def _newton_lift_root(root_mod_p: int, order: int, spec: RingSpec) -> int:
    """Lift a root of x^order - 1 from F_p to Z_{p^e}; needs p odd so the
    derivative order * a^(order-1) is a unit."""
    m = spec.modulus
    a = root_mod_p
    modulus = spec.p
    while modulus < m:
        modulus = min(modulus * modulus, m)
        f = (pow(a, order, modulus) - 1) % modulus
        df = order * pow(a, order - 1, modulus) % modulus
        a = (a - f * pow(df, -1, modulus)) % modulus
    return a


def primitive_root_of_unity(order: int, spec: RingSpec) -> RElem:
    """Smallest primitive 2^a-th root of unity in Z_{p^e}; exists iff
    p = 1 mod 2^a (p odd)."""
    if order < 1 or order & (order - 1):
        raise ValueError(f"order must be a power of two, got {order}")
    if order == 1:
        return spec.element(1)
    if spec.p == 2 or (spec.p - 1) % order != 0:
        raise NoSuchRoot(f"p = {spec.p} is not 1 mod {order}")
    candidates = []
    for r in range(2, spec.p):
        if pow(r, order, spec.p) == 1 and pow(r, order // 2, spec.p) != 1:
            candidates.append(_newton_lift_root(r, order, spec))
    if not candidates:
        raise NoSuchRoot(f"no element of order {order} in F_{spec.p}")
    return spec.element(min(candidates))


def nth_roots_of_unity(n: int, spec: RingSpec) -> list[RElem]:
    """All units lam with lam**n = 1, ascending.  Desk-scale brute force."""
    m = spec.modulus
    return [
        spec.element(u)
        for u in range(1, m)
        if u % spec.p != 0 and pow(u, n, m) == 1
    ]
