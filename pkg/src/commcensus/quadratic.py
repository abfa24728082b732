"""Real quadratic fields, their orders, and prime splitting.

A field is identified by its squarefree radicand d > 1 and fundamental
discriminant (d when d = 1 mod 4, else 4d). Orders are identified inside a
field by their conductor. Only real quadratic fields are supported;
imaginary radicands are rejected at construction.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .arith import factorize, is_square, kronecker, pell_fundamental, squarefree_part
from .errors import DomainError

__all__ = [
    "SplitType",
    "QuadField",
    "QuadOrder",
    "field_from_d",
    "splitting",
    "infinite_place_splits",
    "prime_disc_vector",
    "norm_one_unit",
    "order_from_disc",
    "order_from_lambda",
]


class SplitType(enum.Enum):
    SPLIT = "split"
    INERT = "inert"
    RAMIFIED = "ramified"


@dataclass(frozen=True, order=True)
class QuadField:
    """Real quadratic field Q(sqrt(d)): squarefree d > 1, fundamental disc."""

    d: int
    disc: int

    def __str__(self) -> str:
        return f"Q(sqrt({self.d}))"


@dataclass(frozen=True)
class QuadOrder:
    """Order of conductor f inside the maximal order of a real quadratic field."""

    field: QuadField
    conductor: int

    @property
    def order_disc(self) -> int:
        return self.conductor**2 * self.field.disc

    def __str__(self) -> str:
        return f"order(disc={self.order_disc}) in {self.field}"


def field_from_d(n: int) -> QuadField:
    """Field Q(sqrt(n)) for any integer n > 1 that is not a perfect square.

    The radicand is reduced to its squarefree part, so field_from_d(12)
    and field_from_d(3) are the same field.
    """
    if n <= 1:
        raise DomainError(f"need a real quadratic radicand n > 1, got {n}")
    if is_square(n):
        raise DomainError(f"{n} is a perfect square, Q(sqrt({n})) = Q")
    d, _ = squarefree_part(n)
    disc = d if d % 4 == 1 else 4 * d
    return QuadField(d, disc)


def splitting(field: QuadField, p: int) -> SplitType:
    """Behavior of the rational prime p in the field."""
    s = kronecker(field.disc, p)
    if s == 1:
        return SplitType.SPLIT
    if s == -1:
        return SplitType.INERT
    return SplitType.RAMIFIED


def infinite_place_splits(field: QuadField) -> bool:
    """The real place of Q splits in every real quadratic field."""
    return True


def prime_disc_vector(field: QuadField) -> frozenset[int]:
    """Factor the discriminant into prime fundamental discriminants.

    Each odd prime q dividing disc contributes q* = (-1)**((q-1)/2) * q;
    the remaining 2-part is one of -4, 8, -8 (or absent). The product of
    the returned set is exactly disc.
    """
    disc = field.disc
    parts = []
    prod = 1
    for q, _ in factorize(disc).factors:
        if q == 2:
            continue
        qs = q if q % 4 == 1 else -q
        parts.append(qs)
        prod *= qs
    two_part = disc // prod
    if two_part != 1:
        parts.append(two_part)
    return frozenset(parts)


def _icbrt(n: int) -> int:
    """Floor integer cube root, exact for arbitrary size."""
    if n < 2:
        return n
    x = 1 << ((n.bit_length() + 2) // 3)
    while True:
        y = (2 * x + n // (x * x)) // 3
        if y >= x:
            return x
        x = y


def _fundamental_four_solution(D: int) -> tuple[int, int]:
    """Minimal (X, Y), X, Y >= 1, with X**2 - D*Y**2 = 4, for non-square D > 0.

    D = 0 mod 4 reduces to Pell on D/4. For odd D only D = 5 mod 8 can have
    a solution with X, Y odd; it exists iff the Pell solution has an exact
    cube root in the trace recurrence, and then it is the smaller one.
    """
    if D % 4 == 0:
        x, y = pell_fundamental(D // 4)
        return 2 * x, y
    x, y = pell_fundamental(D)
    if D % 8 == 5:
        # odd solution X satisfies X**3 - 3X = 2x (trace of the cube)
        target = 2 * x
        lo = _icbrt(target)
        for cand in range(max(3, lo), lo + 3):
            if cand**3 - 3 * cand == target:
                num = cand**2 - 4
                if num % D == 0 and is_square(num // D):
                    return cand, math.isqrt(num // D)
    return 2 * x, 2 * y


def norm_one_unit(order: QuadOrder) -> int:
    """Trace of the fundamental norm-one unit of the order.

    This is the minimal X >= 3 with X**2 - D*Y**2 = 4 solvable, D the order
    discriminant; every norm-one unit of the order has trace in the
    recurrence u(n+1) = X*u(n) - u(n-1) seeded by 2, X.
    """
    X, _ = _fundamental_four_solution(order.order_disc)
    return X


def order_from_disc(D: int) -> QuadOrder:
    """The unique real quadratic order of discriminant D.

    D must be positive, not a square, and 0 or 1 mod 4; it then factors
    uniquely as conductor**2 times a fundamental discriminant.
    """
    if D <= 0 or is_square(D):
        raise DomainError(f"{D} is not a real quadratic order discriminant")
    if D % 4 not in (0, 1):
        raise DomainError(f"{D} = 2, 3 mod 4 cannot be an order discriminant")
    s, f = squarefree_part(D)
    if s % 4 == 1:
        return QuadOrder(QuadField(s, s), f)
    # here D = 0 mod 4 forces f even; the fundamental disc is 4s
    return QuadOrder(QuadField(s, 4 * s), f // 2)


def order_from_lambda(t: int) -> QuadOrder:
    """The order Z[lambda] for the eigenvalue lambda with lambda + 1/lambda = t.

    Z[lambda] has discriminant exactly t**2 - 4; the conductor is read off
    from its square part. Requires an integer trace t >= 3.
    """
    if t < 3:
        raise DomainError(f"need trace t >= 3, got {t}")
    return order_from_disc(t * t - 4)
