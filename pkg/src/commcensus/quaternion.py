"""Quaternion algebras over Q as ramification sets.

An algebra class is pinned down by the finite set of places where it
ramifies (even cardinality, by reciprocity). Local behavior at a prime is
computed with Hilbert symbols; the covolume of the unit group of a maximal
order in the indefinite case comes out as an exact rational multiple of pi.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np
from scipy.special import zeta as _hurwitz_zeta

from .arith import factorize, is_prime, kronecker, squarefree_part
from .errors import DomainError
from .quadratic import QuadField, SplitType, splitting

__all__ = [
    "INFINITE_PLACE",
    "PiMultiple",
    "RamSet",
    "AlgebraClass",
    "hilbert_local",
    "from_hilbert",
    "admits_embedding",
    "is_isomorphic",
    "coarea_rational",
    "coarea_general",
    "algebra_class",
    "zeta_k2_real_quadratic",
]

INFINITE_PLACE = math.inf


@dataclass(frozen=True, order=True)
class PiMultiple:
    """Exact rational multiple of pi, with a float rendering."""

    coef: Fraction

    @property
    def value(self) -> float:
        return float(self.coef) * math.pi

    def __float__(self) -> float:
        return self.value

    def __str__(self) -> str:
        n, d = self.coef.numerator, self.coef.denominator
        head = "pi" if n == 1 else f"{n}*pi"
        return head if d == 1 else f"{head}/{d}"


@dataclass(frozen=True)
class RamSet:
    """Ramification set: sorted finite primes plus an infinite-place flag.

    Total cardinality must be even; this is checked at construction, as is
    primality of every finite entry.
    """

    finite_primes: tuple[int, ...] = ()
    at_infinity: bool = False

    def __post_init__(self):
        primes = tuple(sorted({int(p) for p in self.finite_primes}))
        for p in primes:
            if not is_prime(p):
                raise DomainError(f"ramification set entry {p} is not prime")
        if (len(primes) + (1 if self.at_infinity else 0)) % 2:
            raise DomainError(
                f"ramification set {primes} (infinity={self.at_infinity}) has odd cardinality"
            )
        object.__setattr__(self, "finite_primes", primes)

    @property
    def is_division(self) -> bool:
        return bool(self.finite_primes) or self.at_infinity

    def __str__(self) -> str:
        names = [str(p) for p in self.finite_primes]
        if self.at_infinity:
            names.append("inf")
        return "{" + ",".join(names) + "}"


@dataclass(frozen=True)
class AlgebraClass:
    """Isomorphism class of a quaternion algebra with its covolume data."""

    ram: RamSet
    is_division: bool
    coarea: PiMultiple | None = field(default=None, compare=False)


def _split_valuation(n: int, p: int) -> tuple[int, int]:
    """n = p**v * u with p not dividing u; returns (v, u)."""
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v, n


def hilbert_local(a: int, b: int, place) -> int:
    """Hilbert symbol (a, b) at a finite prime or at INFINITE_PLACE.

    +1 when a*x**2 + b*y**2 = z**2 has a nontrivial solution in the local
    field, -1 otherwise.
    """
    if a == 0 or b == 0:
        raise DomainError("Hilbert symbol needs nonzero a, b")
    if place == INFINITE_PLACE:
        return -1 if (a < 0 and b < 0) else 1
    p = int(place)
    if not is_prime(p):
        raise DomainError(f"{place} is not a prime or the infinite place")
    alpha, u = _split_valuation(a, p)
    beta, v = _split_valuation(b, p)
    if p == 2:
        # unit square classes mod 8 decide everything at 2
        eps_u = (u - 1) // 2 % 2
        eps_v = (v - 1) // 2 % 2
        omega_u = (u * u - 1) // 8 % 2
        omega_v = (v * v - 1) // 8 % 2
        exp = eps_u * eps_v + alpha * omega_v + beta * omega_u
        return -1 if exp % 2 else 1
    sym = 1
    if alpha * beta * ((p - 1) // 2) % 2:
        sym = -sym
    if beta % 2:
        sym *= kronecker(u, p)
    if alpha % 2:
        sym *= kronecker(v, p)
    return sym


def from_hilbert(a: int, b: int) -> RamSet:
    """Ramification set of the quaternion algebra (a, b) over Q.

    Only 2, primes dividing a*b, and the infinite place can ramify.
    """
    if a == 0 or b == 0:
        raise DomainError("need nonzero a, b")
    candidates = {2}
    candidates.update(factorize(a).primes())
    candidates.update(factorize(b).primes())
    ram = [p for p in sorted(candidates) if hilbert_local(a, b, p) == -1]
    return RamSet(tuple(ram), at_infinity=(a < 0 and b < 0))


def is_isomorphic(b1: RamSet, b2: RamSet) -> bool:
    """Algebras are isomorphic exactly when their ramification sets agree."""
    return b1 == b2


def admits_embedding(b: RamSet, L: QuadField) -> bool:
    """Whether the field L embeds into the algebra with ramification set b.

    Fails iff some ramified place splits in L; for real quadratic L the
    real place always splits, so a definite algebra never works.
    """
    if b.at_infinity:
        return False
    return all(splitting(L, p) is not SplitType.SPLIT for p in b.finite_primes)


def coarea_rational(b: RamSet) -> PiMultiple:
    """Coarea pi/3 * prod(p - 1) of the maximal-order unit group over Q.

    Only indefinite algebras give Fuchsian groups; at_infinity is rejected.
    """
    if b.at_infinity:
        raise DomainError("definite algebra: no Fuchsian group, no coarea")
    prod = 1
    for p in b.finite_primes:
        prod *= p - 1
    return PiMultiple(Fraction(prod, 3))


def algebra_class(b: RamSet) -> AlgebraClass:
    """Bundle a ramification set with its division flag and coarea."""
    coarea = None if b.at_infinity else coarea_rational(b)
    return AlgebraClass(b, b.is_division, coarea)


def coarea_general(n_k: int, d_k: int, zeta_k2: float, prime_norms) -> float:
    """Coarea over a totally real base field of degree n_k and discriminant d_k.

    8 * pi * d_k**(3/2) * zeta_k(2) / (4*pi**2)**n_k * prod(N(p) - 1), the
    norms running over the finite ramified primes of the algebra.
    """
    if n_k < 1 or d_k < 1:
        raise DomainError("need degree >= 1 and positive discriminant")
    if not zeta_k2 > 1.0:
        raise DomainError(f"zeta_k(2) must exceed 1, got {zeta_k2}")
    prod = 1
    for nm in prime_norms:
        nm = int(nm)
        fact = factorize(nm).factors
        if nm < 2 or len(fact) != 1:
            raise DomainError(f"prime norm {nm} is not a prime power")
        prod *= nm - 1
    return 8 * math.pi * d_k**1.5 * zeta_k2 / (4 * math.pi**2) ** n_k * prod


def _check_fundamental_disc(D: int) -> None:
    if D <= 1:
        raise DomainError(f"need a real quadratic fundamental discriminant, got {D}")
    if D % 4 == 1:
        _, f = squarefree_part(D)
        if f != 1:
            raise DomainError(f"{D} is not fundamental (square part {f ** 2})")
    elif D % 4 == 0:
        m = D // 4
        _, f = squarefree_part(m)
        if f != 1 or m % 4 == 1:
            raise DomainError(f"{D} is not a fundamental discriminant")
    else:
        raise DomainError(f"{D} = 2, 3 mod 4 cannot be a discriminant")


def zeta_k2_real_quadratic(D: int) -> float:
    """zeta_k(2) for the real quadratic field of fundamental discriminant D.

    Factors as zeta(2) * L(2, chi_D) and the L-value is summed exactly by
    residue class: L(2, chi) = D**-2 * sum_r chi(r) * hurwitz_zeta(2, r/D).
    Accurate to well below 1e-10.
    """
    _check_fundamental_disc(D)
    chi = np.array([kronecker(D, r) for r in range(1, D + 1)], dtype=np.float64)
    hz = _hurwitz_zeta(2.0, np.arange(1, D + 1, dtype=np.float64) / D)
    l_value = float(np.dot(chi, hz)) / D**2
    return (math.pi**2 / 6.0) * l_value
