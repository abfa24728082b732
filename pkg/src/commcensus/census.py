"""Census of commensurability classes with prescribed geodesic lengths.

Given the embedding fields of a spectrum, the quaternion algebras that can
contain all of them are exactly those ramified inside the set of primes
that split in none of the fields. Whether that set is finite is a GF(2)
linear-algebra question on discriminant characters; when finite with m
nonsplit primes there are exactly 2**(m-1) classes (even subsets), all but
the empty one division algebras.
"""

from __future__ import annotations

import concurrent.futures
import math
from dataclasses import dataclass

import numpy as np

from . import gf2
from .arith import factorize, is_square, kronecker, primes_in_range, sieve_segment
from .errors import DomainError, SearchExhaustedError
from .quadratic import QuadField, QuadOrder, SplitType, field_from_d, prime_disc_vector, splitting
from .quaternion import AlgebraClass, RamSet, algebra_class
from .spectra import SpectrumSpec

__all__ = [
    "FinitenessVerdict",
    "CensusReport",
    "IntervalReport",
    "FamilyResult",
    "SelectivityVerdict",
    "ChebotarevReport",
    "InfiniteCensusError",
    "nonsplit_is_finite",
    "nonsplit_primes",
    "count_algebras",
    "pi_of_V",
    "short_interval_delta",
    "construct_family",
    "selectivity_check",
    "verify_chebotarev_interval",
]


class InfiniteCensusError(DomainError):
    """Raised when a total census is requested but the nonsplit set is infinite."""

    def __init__(self, message: str, verdict: "FinitenessVerdict"):
        super().__init__(message)
        self.verdict = verdict


@dataclass(frozen=True)
class FinitenessVerdict:
    """Outcome of the finiteness test, with a checkable witness either way.

    finite: square_witness is a tuple of field indices, odd in number, whose
    discriminant product is a perfect square. infinite: sign_witness assigns
    +-1 to each prime discriminant so that every field's character comes out
    -1; primes realizing the assignment are nonsplit in every field.
    """

    finite: bool
    square_witness: tuple[int, ...] | None = None
    sign_witness: dict[int, int] | None = None


def _character_generators(prime_disc: int) -> tuple[int, ...]:
    # chi(-8) = chi(-4) * chi(8): only two of the three 2-adic prime
    # discriminants are independent as characters
    if prime_disc == -8:
        return (-4, 8)
    return (prime_disc,)


def _field_vectors(fields) -> tuple[list[int], dict[int, int]]:
    """F2 character vectors of the fields over independent generator columns."""
    cols: dict[int, int] = {}
    vecs = []
    for fld in fields:
        v = 0
        for pd in prime_disc_vector(fld):
            for gen in _character_generators(pd):
                if gen not in cols:
                    cols[gen] = len(cols)
                v ^= 1 << cols[gen]
        vecs.append(v)
    return vecs, cols


def _check_fields(fields) -> tuple[QuadField, ...]:
    fields = tuple(fields)
    if not fields:
        raise DomainError("need at least one field")
    if len(set(fields)) != len(fields):
        raise DomainError("fields must be pairwise distinct")
    return fields


def nonsplit_is_finite(fields) -> FinitenessVerdict:
    """Decide whether only finitely many primes split in none of the fields.

    Finite exactly when some odd-sized subset of the fields has a square
    discriminant product (their characters multiply to the trivial one, so
    a prime inert everywhere would have to satisfy (-1)**odd = +1).
    """
    fields = _check_fields(fields)
    vecs, cols = _field_vectors(fields)
    for combo in gf2.left_kernel(vecs):
        if combo.bit_count() % 2:
            witness = tuple(i for i in range(len(fields)) if combo >> i & 1)
            return FinitenessVerdict(finite=True, square_witness=witness)
    x = gf2.solve(vecs, [1] * len(vecs))
    if x is None:
        raise RuntimeError("no odd kernel relation yet all-ones system insolvable")
    sign_of_gen = {gen: -1 if x >> bit & 1 else 1 for gen, bit in cols.items()}
    witness = {}
    for fld in fields:
        for pd in prime_disc_vector(fld):
            s = 1
            for gen in _character_generators(pd):
                s *= sign_of_gen[gen]
            witness[pd] = s
    return FinitenessVerdict(finite=False, sign_witness=witness)


def nonsplit_primes(fields) -> tuple[int, ...]:
    """The finite set of primes splitting in none of the fields.

    Only primes ramified in at least one field can qualify: any prime
    unramified everywhere and inert everywhere would contradict the finite
    verdict. Rejects field systems with an infinite nonsplit set.
    """
    fields = _check_fields(fields)
    verdict = nonsplit_is_finite(fields)
    if not verdict.finite:
        raise InfiniteCensusError(
            "infinitely many primes are nonsplit in every field", verdict
        )
    candidates: set[int] = set()
    for fld in fields:
        candidates.update(factorize(fld.disc).primes())
    out = [
        p
        for p in sorted(candidates)
        if all(splitting(fld, p) is not SplitType.SPLIT for fld in fields)
    ]
    return tuple(out)


@dataclass(frozen=True)
class CensusReport:
    """Complete census over a field system with finite nonsplit set."""

    fields: tuple[QuadField, ...]
    verdict: FinitenessVerdict
    nonsplit: tuple[int, ...]
    classes: tuple[AlgebraClass, ...]
    count_total: int
    count_division: int
    eventual_pi: int


def _even_subsets(primes: tuple[int, ...]):
    n = len(primes)
    for mask in range(1 << n):
        if mask.bit_count() % 2 == 0:
            yield tuple(primes[i] for i in range(n) if mask >> i & 1)


def count_algebras(fields) -> CensusReport:
    """All commensurability classes admitting every field, with coareas.

    The classes are the even subsets of the nonsplit prime set, so the
    total is 2**(m-1) for m >= 1 nonsplit primes (1 when m = 0: only the
    matrix algebra), and all but the empty set are division algebras.
    """
    fields = _check_fields(fields)
    verdict = nonsplit_is_finite(fields)
    if not verdict.finite:
        raise InfiniteCensusError(
            "infinitely many primes are nonsplit in every field", verdict
        )
    s0 = nonsplit_primes(fields)
    classes = sorted(
        (algebra_class(RamSet(sub)) for sub in _even_subsets(s0)),
        key=lambda c: (c.coarea.coef, c.ram.finite_primes),
    )
    expected = 2 ** (len(s0) - 1) if s0 else 1
    if len(classes) != expected:
        raise RuntimeError("even-subset count mismatch")
    return CensusReport(
        fields=fields,
        verdict=verdict,
        nonsplit=s0,
        classes=tuple(classes),
        count_total=len(classes),
        count_division=len(classes) - 1,
        eventual_pi=len(classes),
    )


def _nonsplit_pool(fields, pmax: int) -> list[int]:
    """Primes p <= pmax splitting in none of the fields, ascending."""
    pool = []
    for p in primes_in_range(2, pmax):
        if all(splitting(fld, p) is not SplitType.SPLIT for fld in fields):
            pool.append(p)
    return pool


def _count_even_ram_sets(pool: list[int], bound_prod: float, collect: bool):
    """Count (and optionally list) even subsets R of pool with prod(p-1) < bound.

    Factors are ascending, so a branch dies as soon as one extension hits
    the bound. The factor 1 contributed by p = 2 is harmless: it can never
    trip the cutoff before its parent did.
    """
    fac = [p - 1 for p in pool]
    n = len(pool)
    chosen: list[int] = []
    found: list[tuple[int, tuple[int, ...]]] = []
    count = 0

    def rec(start: int, prod: int, even: bool):
        nonlocal count
        if even and prod < bound_prod:
            count += 1
            if collect:
                found.append((prod, tuple(chosen)))
        for j in range(start, n):
            nxt = prod * fac[j]
            if nxt >= bound_prod:
                break
            chosen.append(pool[j])
            rec(j + 1, nxt, not even)
            chosen.pop()

    rec(0, 1, True)
    return count, found


def _pi_count(fields, volume: float, collect: bool):
    verdict = nonsplit_is_finite(fields)
    bound_prod = 3.0 * volume / math.pi
    if verdict.finite:
        pool = list(nonsplit_primes(fields))
    else:
        pmax = int(bound_prod) + 1
        pool = _nonsplit_pool(fields, max(pmax, 2))
    pool = [p for p in pool if p - 1 < bound_prod]
    return _count_even_ram_sets(pool, bound_prod, collect)


def pi_of_V(spec: SpectrumSpec, volume: float) -> tuple[int, list[AlgebraClass]]:
    """Number of classes of coarea strictly below `volume` containing the spectrum.

    Works for both verdicts: with an infinite nonsplit set the prime pool
    is cut off below 1 + 3V/pi, which no admissible ramified prime can
    reach. Returns the count and the classes sorted by coarea.
    """
    if not volume > 0:
        raise DomainError(f"volume bound must be positive, got {volume}")
    fields = _check_fields(spec.fields())
    count, found = _pi_count(fields, volume, collect=True)
    found.sort()
    classes = [algebra_class(RamSet(primes)) for _, primes in found]
    return count, classes


@dataclass(frozen=True)
class IntervalReport:
    """Growth of the census count across (V, V + W]."""

    traces: tuple[int, ...]
    volume: float
    window: float
    count_at_v: int
    count_at_v_plus_w: int
    delta: int
    bound: float

    @property
    def meets_bound(self) -> bool:
        return self.delta >= self.bound


def short_interval_delta(spec: SpectrumSpec, volume: float, window: float) -> IntervalReport:
    """Census growth pi(V+W) - pi(V) against the density floor W/(2**r * ln V).

    r is the number of prescribed geodesic classes. Requires 0 < W < V.
    """
    if not volume > 0 or not window > 0:
        raise DomainError("need positive volume and window")
    if window >= volume:
        raise DomainError(f"window {window} must be smaller than volume {volume}")
    fields = _check_fields(spec.fields())
    r = len(spec.classes)
    c_hi, _ = _pi_count(fields, volume + window, collect=False)
    c_lo, _ = _pi_count(fields, volume, collect=False)
    bound = window / (2**r * math.log(volume))
    return IntervalReport(
        traces=spec.traces(),
        volume=volume,
        window=window,
        count_at_v=c_lo,
        count_at_v_plus_w=c_hi,
        delta=c_hi - c_lo,
        bound=bound,
    )


@dataclass(frozen=True)
class FamilyResult:
    """A four-field system whose census count is exactly 2**n."""

    n: int
    primes: tuple[int, ...]
    d4: int
    fields: tuple[QuadField, ...]
    census: CensusReport


def construct_family(n: int, search_bound: int = 10**6) -> FamilyResult:
    """Build four real quadratic fields forcing eventual_pi = 2**n.

    Take the smallest prime p1 = 1 mod 8, then the m-1 smallest further
    primes = 1 mod 8 in which Q(sqrt(p1)) is inert (m = n + 2). The fields
    Q(sqrt(p1)), Q(sqrt(p1...pm)), Q(sqrt(p2...pm)) leave {p1, ..., pm}
    nonsplit; a fourth field chosen with p1 split and the others inert
    trims the set to {p2, ..., pm}. All searches are smallest-first, so
    the family is deterministic.
    """
    if n < 0:
        raise DomainError(f"need n >= 0, got {n}")
    m = n + 2
    primes: list[int] = []
    for p in primes_in_range(2, search_bound):
        if p % 8 != 1:
            continue
        if not primes:
            primes.append(p)
        elif kronecker(primes[0], p) == -1:
            primes.append(p)
        if len(primes) == m:
            break
    if len(primes) < m:
        raise SearchExhaustedError(
            f"found only {len(primes)} of {m} generating primes below {search_bound}",
            bound=search_bound,
        )
    p1 = primes[0]
    d2 = math.prod(primes)
    d3 = math.prod(primes[1:])
    l1, l2, l3 = field_from_d(p1), field_from_d(d2), field_from_d(d3)
    l4 = None
    rest = primes[1:]
    for d in range(2, search_bound + 1):
        if is_square(d):
            continue
        fld = field_from_d(d)
        if fld.d != d:
            continue
        if splitting(fld, p1) is not SplitType.SPLIT:
            continue
        if all(splitting(fld, p) is SplitType.INERT for p in rest):
            l4 = fld
            break
    if l4 is None:
        raise SearchExhaustedError(
            f"no fourth field with the required splitting below {search_bound}",
            bound=search_bound,
        )
    fields = (l1, l2, l3, l4)
    census = count_algebras(fields)
    if census.eventual_pi != 2**n or set(census.nonsplit) != set(rest):
        raise RuntimeError(
            f"family construction for n={n} produced census {census.nonsplit} "
            f"with count {census.count_total}"
        )
    return FamilyResult(n=n, primes=tuple(primes), d4=l4.d, fields=fields, census=census)


@dataclass(frozen=True)
class SelectivityVerdict:
    """Condition-by-condition selectivity report; never selective over Q."""

    selective_possible: bool
    condition1: bool
    condition2: bool
    condition3: bool
    certificate_prime: int
    conductor_primes: tuple[tuple[int, SplitType], ...]


def selectivity_check(b: RamSet, order: QuadOrder) -> SelectivityVerdict:
    """Check the three selectivity conditions for (algebra, quadratic order).

    Over Q condition (2) always fails: the field discriminant exceeds 1, so
    some finite prime ramifies in the field (the certificate). Condition (3)
    is reported for transparency: the primes dividing the conductor, each of
    which would have to split. Condition (1) holds structurally for every
    real quadratic order.
    """
    if b.at_infinity:
        raise DomainError("selectivity concerns indefinite algebras only")
    fld = order.field
    certificate = min(factorize(fld.disc).primes())
    cond_primes = tuple(
        (p, splitting(fld, p)) for p in factorize(order.conductor).primes()
    )
    condition3 = all(s is SplitType.SPLIT for _, s in cond_primes)
    return SelectivityVerdict(
        selective_possible=False,
        condition1=True,
        condition2=False,
        condition3=condition3,
        certificate_prime=certificate,
        conductor_primes=cond_primes,
    )


@dataclass(frozen=True)
class ChebotarevReport:
    """Observed vs predicted count of primes inert in every field on [X, X+Y]."""

    fields: tuple[QuadField, ...]
    x: int
    y: int
    actual: int
    predicted: float
    ratio: float
    density: float
    theta: float


def _inert_count_segment(lo: int, hi: int, discs) -> int:
    """Primes in [lo, hi] inert in all fields (character -1 at every disc)."""
    ps = sieve_segment(lo, hi)
    if len(ps) == 0:
        return 0
    keep = np.ones(len(ps), dtype=bool)
    for disc, table in discs:
        if table is not None:
            keep &= table[ps % disc] == -1
        else:
            # disc too large to tabulate; evaluate the character directly
            vals = np.fromiter(
                (kronecker(disc, int(p)) for p in ps), dtype=np.int8, count=len(ps)
            )
            keep &= vals == -1
    return int(np.count_nonzero(keep))


def verify_chebotarev_interval(
    fields, x: int, y: int, workers: int | None = None
) -> ChebotarevReport:
    """Compare the inert-in-all count on [X, X+Y] with (1/2**s) * Y / ln X.

    Requires independent discriminant characters (a dependent or finite
    system has the wrong density and is rejected) and X >= 1000, 0 < Y <= X.
    The interval is scanned in segments; workers > 1 distributes segments
    over a thread pool, with per-segment counts summed in any order.
    """
    fields = _check_fields(fields)
    if x < 1000:
        raise DomainError(f"need X >= 1000, got {x}")
    if not 0 < y <= x:
        raise DomainError(f"need 0 < Y <= X, got Y={y}")
    vecs, _ = _field_vectors(fields)
    if gf2.rank(vecs) != len(fields):
        verdict = nonsplit_is_finite(fields)
        if verdict.finite:
            raise DomainError(
                "nonsplit set is finite for these fields; no inert density to verify"
            )
        raise DomainError(
            "discriminant characters are dependent; the inert density is not 1/2**s"
        )
    discs = []
    for fld in fields:
        if fld.disc <= 1 << 20:
            table = np.array(
                [kronecker(fld.disc, r) for r in range(fld.disc)], dtype=np.int8
            )
        else:
            table = None
        discs.append((fld.disc, table))
    seg = 1 << 18
    segments = []
    lo = x
    while lo <= x + y:
        segments.append((lo, min(lo + seg - 1, x + y)))
        lo += seg
    if workers and workers > 1:
        with concurrent.futures.ThreadPoolExecutor(max_workers=workers) as pool:
            counts = list(
                pool.map(lambda s: _inert_count_segment(s[0], s[1], discs), segments)
            )
    else:
        counts = [_inert_count_segment(a, b, discs) for a, b in segments]
    actual = sum(counts)
    s = len(fields)
    predicted = y / (2**s * math.log(x))
    theta = 8.0 / 3.0 if s == 1 else 1.0 / 2**s
    return ChebotarevReport(
        fields=fields,
        x=x,
        y=y,
        actual=actual,
        predicted=predicted,
        ratio=actual / predicted,
        density=1.0 / 2**s,
        theta=theta,
    )
