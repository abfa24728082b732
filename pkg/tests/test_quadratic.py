"""Real quadratic fields, orders, splitting, and norm-one units."""
from __future__ import annotations

import random

import pytest

import oracles
from commcensus.arith import is_square, kronecker
from commcensus.errors import DomainError
from commcensus.quadratic import (
    QuadField,
    QuadOrder,
    SplitType,
    field_from_d,
    infinite_place_splits,
    norm_one_unit,
    order_from_disc,
    order_from_lambda,
    prime_disc_vector,
    splitting,
)


def test_field_from_d_reduction_and_disc():
    assert field_from_d(3) == QuadField(d=3, disc=12)
    assert field_from_d(5) == QuadField(d=5, disc=5)
    assert field_from_d(12) == QuadField(d=3, disc=12)  # 12 = 3 * 2**2
    assert field_from_d(45) == QuadField(d=5, disc=5)
    assert field_from_d(51) == QuadField(d=51, disc=204)
    assert field_from_d(2) == QuadField(d=2, disc=8)


def test_field_from_d_rejects():
    for bad in (0, 1, 4, 9, 100, -5, -3):
        with pytest.raises(DomainError):
            field_from_d(bad)


def test_splitting_trichotomy_and_oracle():
    """Exactly one SplitType each, ramified iff p | disc, matching Euler."""
    primes = oracles.trial_primes(2, 50)
    for d in range(2, 101):
        if not is_square(d) and oracles.squarefree_reduce(d) == d:
            fld = field_from_d(d)
            for p in primes:
                s = splitting(fld, p)
                assert s in (SplitType.SPLIT, SplitType.INERT, SplitType.RAMIFIED)
                assert (s is SplitType.RAMIFIED) == (fld.disc % p == 0)
                want = oracles.split_at(fld.disc, p)
                got = {SplitType.SPLIT: 1, SplitType.INERT: -1, SplitType.RAMIFIED: 0}[s]
                assert got == want, (d, p)


def test_infinite_place_always_splits():
    assert infinite_place_splits(field_from_d(3))
    assert infinite_place_splits(field_from_d(9973))


def test_prime_disc_vector_product_is_disc():
    """Product over the vector reassembles the discriminant, d <= 10**4."""
    for d in range(2, 10**4 + 1):
        if is_square(d) or oracles.squarefree_reduce(d) != d:
            continue
        fld = field_from_d(d)
        vec = prime_disc_vector(fld)
        prod = 1
        for q in vec:
            prod *= q
        assert prod == fld.disc, d
        assert set(vec) == set(oracles.prime_disc_split(fld.disc))


def test_prime_disc_vector_examples():
    assert prime_disc_vector(field_from_d(3)) == frozenset({-3, -4})
    assert prime_disc_vector(field_from_d(17)) == frozenset({17})
    assert prime_disc_vector(field_from_d(51)) == frozenset({-3, 17, -4})
    assert prime_disc_vector(field_from_d(2)) == frozenset({8})
    assert prime_disc_vector(field_from_d(6)) == frozenset({-3, -8})


def test_character_identity_on_triples():
    """(d1 d2 d3 | p) = product of the three single-disc characters."""
    rng = random.Random(777)
    squarefree = [d for d in range(2, 400) if oracles.squarefree_reduce(d) == d]
    primes = oracles.trial_primes(3, 1000)
    done = 0
    while done < 10**3:
        fields = [field_from_d(rng.choice(squarefree)) for _ in range(3)]
        p = rng.choice(primes)
        if any(f.disc % p == 0 for f in fields):
            continue
        lhs = kronecker(fields[0].disc * fields[1].disc * fields[2].disc, p)
        rhs = 1
        for f in fields:
            rhs *= kronecker(f.disc, p)
        assert lhs == rhs
        done += 1


def test_order_from_disc_examples():
    assert order_from_disc(5) == QuadOrder(field=QuadField(5, 5), conductor=1)
    assert order_from_disc(12) == QuadOrder(field=QuadField(3, 12), conductor=1)
    assert order_from_disc(32) == QuadOrder(field=QuadField(2, 8), conductor=2)
    assert order_from_disc(45) == QuadOrder(field=QuadField(5, 5), conductor=3)
    assert order_from_disc(204) == QuadOrder(field=QuadField(51, 204), conductor=1)
    for D in (5, 12, 32, 45, 204, 13, 341):
        assert order_from_disc(D).order_disc == D


def test_order_from_disc_rejects():
    for bad in (0, -4, 7, 10, 16, 25):
        with pytest.raises(DomainError):
            order_from_disc(bad)


def test_order_from_lambda_disc_identity():
    """The order of the axis unit has discriminant exactly t**2 - 4."""
    for t in range(3, 101):
        assert order_from_lambda(t).order_disc == t * t - 4
    with pytest.raises(DomainError):
        order_from_lambda(2)
    with pytest.raises(DomainError):
        order_from_lambda(-5)


def test_norm_one_unit_examples():
    for D, trace in ((5, 3), (8, 6), (12, 4), (13, 11), (17, 66),
                     (21, 5), (29, 27), (32, 6), (45, 7), (204, 100)):
        assert norm_one_unit(order_from_disc(D)) == trace, D


def test_norm_one_unit_scan_oracle():
    """Compare with the direct X**2 - D Y**2 = 4 scan wherever it lands."""
    compared = 0
    for D in range(5, 1001):
        if D % 4 not in (0, 1) or is_square(D):
            continue
        want = oracles.norm_one_scan(D, limit=10**5)
        if want is None:
            continue  # fundamental solution out of scan reach
        assert norm_one_unit(order_from_disc(D)) == want, D
        compared += 1
    assert compared > 300  # 349 of the ~465 candidate discs land in scan range


def test_norm_one_unit_satisfies_equation():
    for D in range(5, 2001):
        if D % 4 not in (0, 1) or is_square(D):
            continue
        t = norm_one_unit(order_from_disc(D))
        assert t >= 3
        y2, rem = divmod(t * t - 4, D)
        assert rem == 0 and is_square(y2), D


def test_trace_power_recurrence_membership():
    """t is a power of the fundamental trace: X_{n+1} = t' X_n - X_{n-1}."""
    for t in range(3, 201):
        base = norm_one_unit(order_from_lambda(t))
        a, b = 2, base
        while b < t:
            a, b = b, base * b - a
        assert b == t, t
