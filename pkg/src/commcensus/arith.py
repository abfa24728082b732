"""Exact integer arithmetic primitives.

Everything here works on arbitrary-precision Python ints. Primality is
deterministic below 2**64 (fixed Miller-Rabin witness set) and randomized
with negligible error above. Factoring is trial division up to 10**6
followed by Brent's variant of Pollard rho under an effort budget.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Iterator, NamedTuple

import numpy as np

from .errors import DomainError, FactorBudgetError

__all__ = [
    "PrimeFactorization",
    "PellSolution",
    "is_prime",
    "factorize",
    "squarefree_part",
    "kronecker",
    "cf_sqrt",
    "pell_fundamental",
    "primes_in_range",
    "sieve_segment",
    "is_square",
]

_TRIAL_BOUND = 10**6

# correct for every n below 3.3e24, in particular below 2**64
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

_DEFAULT_RHO_BUDGET = 4_000_000


def is_square(n: int) -> bool:
    """True iff n is a perfect square."""
    if n < 0:
        return False
    r = math.isqrt(n)
    return r * r == n


def _mr_witness(n: int, a: int, d: int, s: int) -> bool:
    """One Miller-Rabin round; True means a witnesses compositeness."""
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return False
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return False
    return True


def is_prime(n: int) -> bool:
    """Primality test, deterministic for n < 2**64.

    Above 2**64 runs 64 additional random rounds on top of the fixed
    witness set, so a false positive has probability below 4**-64.
    """
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        if _mr_witness(n, a, d, s):
            return False
    if n < 2**64:
        return True
    rng = random.Random(n)
    for _ in range(64):
        a = rng.randrange(2, n - 1)
        if _mr_witness(n, a, d, s):
            return False
    return True


@dataclass(frozen=True)
class PrimeFactorization:
    """Factorization of a nonzero integer: sign and sorted (prime, exponent) pairs."""

    value: int
    factors: tuple[tuple[int, int], ...]

    @property
    def sign(self) -> int:
        return -1 if self.value < 0 else 1

    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)


def _brent_rho(n: int, seed: int, budget: int) -> tuple[int, int]:
    """Brent cycle-finding rho. Returns (factor, iterations used).

    factor == n signals failure for this seed; caller retries.
    """
    if n % 2 == 0:
        return 2, 0
    rng = random.Random(seed)
    y = rng.randrange(1, n)
    c = rng.randrange(1, n)
    m = 128
    g = r = q = 1
    used = 0
    x = ys = y
    while g == 1:
        x = y
        for _ in range(r):
            y = (y * y + c) % n
        k = 0
        while k < r and g == 1:
            ys = y
            for _ in range(min(m, r - k)):
                y = (y * y + c) % n
                q = q * abs(x - y) % n
            used += min(m, r - k)
            if used > budget:
                return n, used
            g = math.gcd(q, n)
            k += m
        r *= 2
    if g == n:
        while True:
            ys = (ys * ys + c) % n
            used += 1
            g = math.gcd(abs(x - ys), n)
            if g > 1:
                break
            if used > budget:
                return n, used
    return g, used


def factorize(n: int, budget: int = _DEFAULT_RHO_BUDGET) -> PrimeFactorization:
    """Full prime factorization of a nonzero integer.

    Trial division below 10**6, then Pollard rho (Brent). `budget` caps the
    total rho iterations; exceeding it raises FactorBudgetError rather than
    silently returning a partial factorization.
    """
    if n == 0:
        raise DomainError("0 has no prime factorization")
    value = n
    n = abs(n)
    factors: dict[int, int] = {}
    for p in (2, 3, 5):
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
    # wheel over 6k+-1 candidates up to the trial bound
    p = 7
    step = 4
    while p <= _TRIAL_BOUND and p * p <= n:
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
        p += step
        step = 6 - step
    remaining = budget
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if m < _TRIAL_BOUND * _TRIAL_BOUND or is_prime(m):
            factors[m] = factors.get(m, 0) + 1
            continue
        if is_square(m):
            r = math.isqrt(m)
            stack.extend((r, r))
            continue
        g = m
        seed = 1
        while g == m:
            g, used = _brent_rho(m, seed, remaining)
            remaining -= used
            if remaining <= 0 and g == m:
                raise FactorBudgetError(
                    f"factoring budget exhausted on {m}", bound=budget
                )
            seed += 1
        stack.extend((g, m // g))
    return PrimeFactorization(value, tuple(sorted(factors.items())))


def squarefree_part(n: int, budget: int = _DEFAULT_RHO_BUDGET) -> tuple[int, int]:
    """Split n = s * f**2 with s squarefree. Returns (s, f), sign carried by s."""
    fact = factorize(n, budget)
    s, f = fact.sign, 1
    for p, e in fact.factors:
        if e % 2:
            s *= p
        f *= p ** (e // 2)
    return s, f


def kronecker(a: int, n: int) -> int:
    """Kronecker symbol (a|n), the full extension of the Jacobi symbol.

    Conventions: (a|0) is 1 for a = +-1 and 0 otherwise, (a|-1) is the sign
    of a, and (a|2) is 0 for even a, +1 for a = +-1 mod 8, -1 otherwise.
    """
    if n == 0:
        return 1 if a in (1, -1) else 0
    result = 1
    if n < 0:
        n = -n
        if a < 0:
            result = -result
    if n % 2 == 0:
        if a % 2 == 0:
            return 0
        t = 0
        while n % 2 == 0:
            n //= 2
            t += 1
        if t % 2 and a % 8 in (3, 5):
            result = -result
    a %= n
    while a != 0:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def cf_sqrt(d: int) -> tuple[int, list[int]]:
    """Continued fraction of sqrt(d) for non-square d > 1.

    Returns (a0, period). The expansion is [a0; period repeated], with the
    period ending at the term 2*a0.
    """
    if d <= 1:
        raise DomainError(f"need d > 1, got {d}")
    a0 = math.isqrt(d)
    if a0 * a0 == d:
        raise DomainError(f"{d} is a perfect square")
    m, q, a = 0, 1, a0
    period = []
    while a != 2 * a0:
        m = q * a - m
        q = (d - m * m) // q
        a = (a0 + m) // q
        period.append(a)
    return a0, period


class PellSolution(NamedTuple):
    x: int
    y: int


def pell_fundamental(d: int) -> PellSolution:
    """Minimal positive solution of x**2 - d*y**2 = 1.

    Walks the convergents of sqrt(d) and returns the first one that solves
    the equation exactly; works for every non-square d > 1.
    """
    a0, period = cf_sqrt(d)
    p_prev, p_cur = 1, a0
    q_prev, q_cur = 0, 1
    if p_cur * p_cur - d * q_cur * q_cur == 1:
        return PellSolution(p_cur, q_cur)
    while True:
        for a in period:
            p_prev, p_cur = p_cur, a * p_cur + p_prev
            q_prev, q_cur = q_cur, a * q_cur + q_prev
            if p_cur * p_cur - d * q_cur * q_cur == 1:
                return PellSolution(p_cur, q_cur)


def _small_sieve(limit: int) -> np.ndarray:
    """Primes below `limit` as a numpy int64 array."""
    if limit < 2:
        return np.empty(0, dtype=np.int64)
    mask = np.ones(limit, dtype=bool)
    mask[:2] = False
    for p in range(2, math.isqrt(limit - 1) + 1):
        if mask[p]:
            mask[p * p :: p] = False
    return np.nonzero(mask)[0].astype(np.int64)


def sieve_segment(lo: int, hi: int, base: np.ndarray | None = None) -> np.ndarray:
    """Primes in [lo, hi] as a numpy array, for 2 <= lo <= hi.

    Independent per segment: safe to run segments in any order or in
    parallel and merge by position.
    """
    if base is None:
        base = _small_sieve(math.isqrt(hi) + 1)
    width = hi - lo + 1
    mask = np.ones(width, dtype=bool)
    for p in base:
        p = int(p)
        if p * p > hi:
            break
        start = max(p * p, ((lo + p - 1) // p) * p)
        mask[start - lo :: p] = False
    if lo <= 1:
        mask[: 2 - lo] = False
    return (np.nonzero(mask)[0] + lo).astype(np.int64)


def primes_in_range(lo: int, hi: int, segment_size: int = 1 << 19) -> Iterator[int]:
    """Yield every prime p with lo <= p <= hi, in increasing order.

    Segmented sieve: memory stays O(sqrt(hi) + segment_size) no matter how
    wide the range is. Bounds are validated eagerly, before iteration.
    """
    if lo < 2 or hi < lo:
        raise DomainError(f"need 2 <= lo <= hi, got ({lo}, {hi})")

    def gen() -> Iterator[int]:
        base = _small_sieve(math.isqrt(hi) + 1)
        start = lo
        while start <= hi:
            end = min(start + segment_size - 1, hi)
            for p in sieve_segment(start, end, base):
                yield int(p)
            start = end + 1

    return gen()
