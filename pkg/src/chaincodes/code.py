"""Cyclic codes over Z_{p^e} in canonical coprime-family form.

A code of length n (with gcd(n, p) = 1) is stored as the unique family
F_0, ..., F_e of monic pairwise-coprime polynomials with product x^n - 1;
the code itself is the ideal generated by p^(i-1) * (x^n - 1)/F_i for
1 <= i <= e.  Equality of codes is equality of families.  The dual swaps
the family around and takes monic reciprocals, which makes duality,
self-duality and isoduality checks exact and cheap.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional

from .ring import MismatchedRing, RElem, RingSpec
from .ringpoly import (
    RPoly,
    lifted_factorization,
    nth_roots_of_unity,
    reciprocal,
    substitute_scaled,
)


class NotADivisor(ValueError):
    """Generator does not divide x^n - 1 exactly."""


class LengthMismatch(ValueError):
    """Codeword length differs from the code length."""


class TooLarge(ValueError):
    """Enumeration would exceed the requested limit."""


class ZeroCode(ValueError):
    """Operation undefined for the zero code."""


@dataclass(frozen=True)
class Codeword:
    """Length-n vector of canonical representatives."""

    spec: RingSpec
    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        m = self.spec.modulus
        object.__setattr__(self, "entries", tuple(v % m for v in self.entries))

    def weight(self) -> int:
        return sum(1 for v in self.entries if v)


def inner_product(v: Codeword, w: Codeword) -> int:
    if v.spec != w.spec:
        raise MismatchedRing(f"{v.spec} vs {w.spec}")
    if len(v.entries) != len(w.entries):
        raise LengthMismatch(f"{len(v.entries)} vs {len(w.entries)}")
    return sum(a * b for a, b in zip(v.entries, w.entries)) % v.spec.modulus


@dataclass(frozen=True)
class IsodualCertificate:
    """Witness (a, lam) with phi_lam(mu_a(C)) equal to the dual of C."""

    a: int
    lam: int


@dataclass(frozen=True)
class CyclicCode:
    spec: RingSpec
    n: int
    F: tuple[RPoly, ...]

    def __post_init__(self) -> None:
        spec, n = self.spec, self.n
        if n < 1:
            raise ValueError(f"length must be positive, got {n}")
        if n % spec.p == 0:
            raise ValueError(f"p = {spec.p} divides the length {n}")
        if len(self.F) != spec.e + 1:
            raise ValueError(f"family must have {spec.e + 1} entries, got {len(self.F)}")
        product = RPoly.one(spec)
        for f in self.F:
            if f.spec != spec:
                raise MismatchedRing(f"{f.spec} vs {spec}")
            if not f.is_monic():
                raise ValueError(f"family member {f} is not monic")
            product = product * f
        if product != RPoly.xn_minus_1(spec, n):
            raise ValueError("family product is not x^n - 1")
        reductions = [f.reduce_mod_p() for f in self.F]
        for i in range(len(reductions)):
            for j in range(i + 1, len(reductions)):
                if reductions[i].gcd(reductions[j]).coeffs != (1,):
                    raise ValueError(f"family members {i} and {j} are not coprime")

    # -- constructors -------------------------------------------------------

    @classmethod
    def from_generator(cls, g: RPoly, n: int) -> "CyclicCode":
        """Free code generated by a monic divisor g of x^n - 1."""
        spec = g.spec
        if not g.is_monic():
            raise ValueError("generator must be monic")
        whole = RPoly.xn_minus_1(spec, n)
        quotient, remainder = whole.divmod_monic(g)
        if not remainder.is_zero():
            raise NotADivisor(f"{g} does not divide x^{n} - 1")
        family = [g, quotient] + [RPoly.one(spec)] * (spec.e - 1)
        return cls(spec, n, tuple(family))

    @classmethod
    def from_two_stage(
        cls, g_free: RPoly, g_torsion: RPoly, j: int, n: int
    ) -> "CyclicCode":
        """Code generated by g_free together with p^j times the cofactor of
        g_free / g_torsion; requires g_torsion | g_free | x^n - 1 and
        1 <= j <= e - 1."""
        spec = g_free.spec
        if not 1 <= j <= spec.e - 1:
            raise ValueError(f"stage exponent must be in [1, {spec.e - 1}], got {j}")
        whole = RPoly.xn_minus_1(spec, n)
        f1, rem = whole.divmod_monic(g_free)
        if not rem.is_zero():
            raise NotADivisor(f"{g_free} does not divide x^{n} - 1")
        fj, rem = g_free.divmod_monic(g_torsion)
        if not rem.is_zero():
            raise NotADivisor(f"{g_torsion} does not divide {g_free}")
        family = [g_torsion] + [RPoly.one(spec)] * spec.e
        family[1] = f1
        family[j + 1] = fj
        return cls(spec, n, tuple(family))

    @classmethod
    def whole_space(cls, spec: RingSpec, n: int) -> "CyclicCode":
        return cls.from_generator(RPoly.one(spec), n)

    @classmethod
    def zero(cls, spec: RingSpec, n: int) -> "CyclicCode":
        return cls.from_generator(RPoly.xn_minus_1(spec, n), n)

    # -- structure ----------------------------------------------------------

    def is_free(self) -> bool:
        return all(f.is_one() for f in self.F[2:])

    def is_zero_code(self) -> bool:
        return all(f.is_one() for f in self.F[1:])

    def free_generator(self) -> RPoly:
        if not self.is_free():
            raise ValueError("code is not free")
        return self.F[0]

    def cofactor(self, i: int) -> RPoly:
        """(x^n - 1) / F_i, the hat polynomial of family member i."""
        whole = RPoly.xn_minus_1(self.spec, self.n)
        quotient, remainder = whole.divmod_monic(self.F[i])
        assert remainder.is_zero()
        return quotient

    def generators(self) -> list[RPoly]:
        """The generators p^(i-1) * (x^n - 1)/F_i for i = 1..e."""
        out = []
        for i in range(1, self.spec.e + 1):
            scale = self.spec.p ** (i - 1)
            out.append(RPoly(self.spec, tuple(scale * c for c in self.cofactor(i).coeffs)))
        return out

    def cardinality_log(self) -> int:
        """log_p of the number of codewords."""
        e = self.spec.e
        return sum((e - i + 1) * self.F[i].degree for i in range(1, e + 1))

    def generator_matrix(self) -> list[list[int]]:
        """Cyclic shifts of each generator, deg F_i rows for block i."""
        rows = []
        for i in range(1, self.spec.e + 1):
            scale = self.spec.p ** (i - 1)
            base = [scale * c % self.spec.modulus for c in self.cofactor(i).coeffs]
            for shift in range(self.F[i].degree):
                row = [0] * self.n
                for k, c in enumerate(base):
                    row[k + shift] = c
                rows.append(row)
        return rows

    def row_radices(self) -> list[int]:
        """Additive order of each generator-matrix row (p^(e-i+1) in block i)."""
        out = []
        for i in range(1, self.spec.e + 1):
            out.extend([self.spec.p ** (self.spec.e - i + 1)] * self.F[i].degree)
        return out

    # -- membership and enumeration -----------------------------------------

    def contains(self, word: Codeword) -> bool:
        """Ideal membership, tested component-wise against the family: the
        residue mod F_0 must vanish and the residue mod F_i must be divisible
        by p^(i-1)."""
        if word.spec != self.spec:
            raise MismatchedRing(f"{word.spec} vs {self.spec}")
        if len(word.entries) != self.n:
            raise LengthMismatch(f"{len(word.entries)} vs {self.n}")
        poly = RPoly(self.spec, word.entries)
        if not poly.divmod_monic(self.F[0])[1].is_zero():
            return False
        for i in range(2, self.spec.e + 1):
            if self.F[i].is_one():
                continue
            remainder = poly.divmod_monic(self.F[i])[1]
            threshold = self.spec.p ** (i - 1)
            if any(c % threshold for c in remainder.coeffs):
                return False
        return True

    def size_bound_ok(self, limit: int) -> bool:
        return self.spec.p ** self.cardinality_log() <= limit

    def codewords(self, limit: int = 2_000_000) -> Iterator[Codeword]:
        """Every codeword exactly once: all mixed-radix combinations of the
        generator rows."""
        import itertools

        if not self.size_bound_ok(limit):
            raise TooLarge(f"|C| = {self.spec.p}^{self.cardinality_log()} exceeds {limit}")
        rows = self.generator_matrix()
        radices = self.row_radices()
        m = self.spec.modulus
        if not rows:
            yield Codeword(self.spec, (0,) * self.n)
            return
        for combo in itertools.product(*(range(r) for r in radices)):
            entries = [0] * self.n
            for c, row in zip(combo, rows):
                if c:
                    for k in range(self.n):
                        entries[k] = (entries[k] + c * row[k]) % m
            yield Codeword(self.spec, tuple(entries))

    # -- duality ------------------------------------------------------------

    def dual(self) -> "CyclicCode":
        """The annihilator code: family [F_1*, F_0*, F_e*, F_{e-1}*, ..., F_2*]."""
        e = self.spec.e
        family = [reciprocal(self.F[1]), reciprocal(self.F[0])]
        for i in range(2, e + 1):
            family.append(reciprocal(self.F[e - i + 2]))
        return CyclicCode(self.spec, self.n, tuple(family))

    def is_self_dual(self) -> bool:
        return self.dual() == self

    # -- monomial maps ------------------------------------------------------

    def apply_scaling(self, lam: RElem) -> "CyclicCode":
        """The image under x -> lam*x for a unit lam with lam^n = 1: the code
        of words (c_0, lam*c_1, lam^2*c_2, ...)."""
        if lam.spec != self.spec:
            raise MismatchedRing(f"{lam.spec} vs {self.spec}")
        if pow(lam.value, self.n, self.spec.modulus) != 1:
            raise ValueError(f"{lam.value}^{self.n} != 1")
        family = tuple(substitute_scaled(f, lam, normalize_monic=True) for f in self.F)
        return CyclicCode(self.spec, self.n, family)

    def apply_multiplier(self, a: int) -> "CyclicCode":
        """The image under the coordinate permutation i -> a*i mod n, i.e.
        c(x) -> c(x^a).  Each basic irreducible factor with root-exponent
        coset K maps to the factor with coset a^(-1)*K."""
        from math import gcd

        if gcd(a, self.n) != 1:
            raise ValueError(f"gcd({a}, {self.n}) != 1")
        factors = lifted_factorization(self.n, self.spec)
        by_min_rep = {coset[0]: lifted for coset, _, lifted in factors}
        a_inv = pow(a, -1, self.n)
        family = []
        for f in self.F:
            image = RPoly.one(self.spec)
            for coset, _, lifted in factors:
                if lifted.divides(f):
                    target = min(a_inv * x % self.n for x in coset)
                    image = image * by_min_rep[target]
            family.append(image)
        return CyclicCode(self.spec, self.n, tuple(family))

    # -- isoduality ---------------------------------------------------------

    def certify_isodual(self) -> Optional[IsodualCertificate]:
        """Search the multiplier/scaling toolbox for a map carrying this code
        onto its dual: a in {1, -1} composed with every scaling by an n-th
        root of unity.  A certificate proves isoduality; None is inconclusive
        (the search is deliberately restricted to these two map families)."""
        return search_equivalence(self, self.dual())


def search_equivalence(
    source: CyclicCode, target: CyclicCode
) -> Optional[IsodualCertificate]:
    """Find (a, lam) with a in {1, -1} and lam an n-th root of unity such that
    scaling mu_a(source) by lam gives exactly the target code, or None."""
    multipliers = [1] if source.n <= 2 else [1, source.n - 1]
    return _search_maps(source, target, multipliers)


def search_multiplier_equivalence(
    source: CyclicCode, target: CyclicCode
) -> Optional[IsodualCertificate]:
    """Like search_equivalence but over every unit multiplier mod n.  Any hit
    is still a monomial (hence weight-preserving) equivalence; the wider
    search catches pairs related by a splitting witness rather than by
    negation."""
    from math import gcd

    multipliers = [a for a in range(1, source.n) if gcd(a, source.n) == 1] or [1]
    return _search_maps(source, target, multipliers)


def _search_maps(
    source: CyclicCode, target: CyclicCode, multipliers: list[int]
) -> Optional[IsodualCertificate]:
    if source.spec != target.spec or source.n != target.n:
        raise MismatchedRing("codes live in different ambient spaces")
    if source.cardinality_log() != target.cardinality_log():
        return None
    roots = nth_roots_of_unity(source.n, source.spec)
    for a in multipliers:
        image = source if a == 1 else source.apply_multiplier(a)
        for lam in roots:
            if image.apply_scaling(lam) == target:
                return IsodualCertificate(a=a, lam=lam.value)
    return None


def dual(c: CyclicCode) -> CyclicCode:
    return c.dual()


def cardinality_log(c: CyclicCode) -> int:
    return c.cardinality_log()


def generator_matrix(c: CyclicCode) -> list[list[int]]:
    return c.generator_matrix()


def contains(c: CyclicCode, w: Codeword) -> bool:
    return c.contains(w)


def enumerate_codewords(c: CyclicCode, limit: int = 2_000_000) -> Iterator[Codeword]:
    return c.codewords(limit)


def apply_scaling(c: CyclicCode, lam: RElem) -> CyclicCode:
    return c.apply_scaling(lam)


def apply_multiplier(c: CyclicCode, a: int) -> CyclicCode:
    return c.apply_multiplier(a)


def is_self_dual(c: CyclicCode) -> bool:
    return c.is_self_dual()


def certify_isodual(c: CyclicCode) -> Optional[IsodualCertificate]:
    return c.certify_isodual()


def from_generator(g: RPoly, n: int) -> CyclicCode:
    return CyclicCode.from_generator(g, n)


def from_two_stage(g_free: RPoly, g_torsion: RPoly, j: int, n: int) -> CyclicCode:
    return CyclicCode.from_two_stage(g_free, g_torsion, j, n)
