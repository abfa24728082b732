"""Census of commensurability classes: finiteness, counting, growth, family."""
from __future__ import annotations

import math
import random

import pytest

import oracles
from commcensus.arith import is_square, kronecker
from commcensus.census import (
    InfiniteCensusError,
    construct_family,
    count_algebras,
    nonsplit_is_finite,
    nonsplit_primes,
    pi_of_V,
    selectivity_check,
    short_interval_delta,
    verify_chebotarev_interval,
)
from commcensus.errors import DomainError, SearchExhaustedError
from commcensus.quadratic import (
    SplitType,
    field_from_d,
    order_from_disc,
    splitting,
)
from commcensus.quaternion import RamSet
from commcensus.spectra import spectrum_from_inputs

TRIPLE = (field_from_d(3), field_from_d(17), field_from_d(51))


def _verify_witness(fields, verdict):
    """Re-check a finiteness witness from scratch."""
    if verdict.finite:
        idx = verdict.square_witness
        assert idx is not None and len(idx) % 2 == 1
        prod = 1
        for i in idx:
            prod *= fields[i].disc
        assert is_square(prod)
    else:
        signs = verdict.sign_witness
        assert signs is not None and all(v in (-1, 1) for v in signs.values())
        for fld in fields:
            prod = 1
            for q in oracles.prime_disc_split(fld.disc):
                prod *= signs[q]
            assert prod == -1
        # a prime realizing the assignment exists at desk scale
        for p in map(int, oracles.sieve_upto(10**4)):
            if all(oracles.split_at(f.disc, p) == -1 for f in fields):
                return
        raise AssertionError("no realizing prime below 10**4")


def test_finiteness_of_matched_triple():
    verdict = nonsplit_is_finite(TRIPLE)
    assert verdict.finite
    assert verdict.square_witness == (0, 1, 2)
    assert 12 * 17 * 204 == 204**2
    _verify_witness(TRIPLE, verdict)


def test_infinite_verdict_sign_witness():
    fields = (field_from_d(3), field_from_d(17))
    verdict = nonsplit_is_finite(fields)
    assert not verdict.finite
    assert verdict.sign_witness == {-4: -1, -3: 1, 17: -1}
    _verify_witness(fields, verdict)


def test_odd_weight_two_adic_relation_is_finite():
    """chi_8 * chi_12 * chi_24 is trivial: 8 * 12 * 24 = 48**2.

    The three 2-adic prime discriminants are multiplicatively dependent
    (chi_-8 = chi_-4 chi_8), so this triple is finite even though no two
    fields share an odd ramified prime."""
    fields = (field_from_d(2), field_from_d(3), field_from_d(6))
    verdict = nonsplit_is_finite(fields)
    assert verdict.finite
    assert verdict.square_witness == (0, 1, 2)
    _verify_witness(fields, verdict)
    assert count_algebras(fields).count_total & (count_algebras(fields).count_total - 1) == 0


def test_even_weight_relation_stays_infinite():
    # 8 * 12 * 5 * 120 = 240**2, but every vanishing combination has even
    # weight, so inert-in-all primes survive (their characters multiply to +1)
    fields = tuple(field_from_d(d) for d in (2, 3, 5, 30))
    verdict = nonsplit_is_finite(fields)
    assert not verdict.finite
    _verify_witness(fields, verdict)


def test_witness_soundness_random_systems():
    """Any verdict on random field systems must carry a valid witness.

    Random systems land on the infinite side almost surely; the finite
    side is exercised by the synthesized triples below."""
    rng = random.Random(505)
    squarefree = [d for d in range(2, 250) if oracles.squarefree_reduce(d) == d]
    for _ in range(120):
        ds = rng.sample(squarefree, rng.choice((2, 3, 4)))
        fields = tuple(field_from_d(d) for d in ds)
        verdict = nonsplit_is_finite(fields)
        _verify_witness(fields, verdict)


def test_synthesized_square_product_triples_are_finite():
    """d3 = squarefree(d1 d2) forces a square discriminant product."""
    rng = random.Random(506)
    squarefree = [d for d in range(2, 400) if oracles.squarefree_reduce(d) == d]
    built = 0
    while built < 50:
        d1, d2 = rng.sample(squarefree, 2)
        d3 = oracles.squarefree_reduce(d1 * d2)
        if d3 in (d1, d2) or d3 < 2:
            continue
        fields = tuple(field_from_d(d) for d in (d1, d2, d3))
        verdict = nonsplit_is_finite(fields)
        assert verdict.finite
        _verify_witness(fields, verdict)
        report = count_algebras(fields)
        assert report.count_total & (report.count_total - 1) == 0  # power of two
        assert report.count_total == report.eventual_pi
        built += 1


def test_nonsplit_primes_matched_triple_and_scans():
    assert nonsplit_primes(TRIPLE) == (3, 17)
    # independent Euler-criterion scan: nothing else below 10**4
    discs = [f.disc for f in TRIPLE]
    assert oracles.nonsplit_scan(discs, 10**4) == [3, 17]


def test_count_algebras_matched_triple():
    report = count_algebras(TRIPLE)
    assert report.count_total == 2
    assert report.count_division == 1
    assert report.eventual_pi == 2
    rams = [c.ram for c in report.classes]
    assert rams == [RamSet(()), RamSet((3, 17))]
    assert str(report.classes[0].coarea) == "pi/3"
    assert str(report.classes[1].coarea) == "32*pi/3"
    assert not report.classes[0].is_division
    assert report.classes[1].is_division


def test_count_algebras_infinite_system_raises():
    fields = (field_from_d(3), field_from_d(17))
    with pytest.raises(InfiniteCensusError) as info:
        count_algebras(fields)
    assert not info.value.verdict.finite
    _verify_witness(fields, info.value.verdict)


def test_field_system_validation():
    with pytest.raises(DomainError):
        nonsplit_is_finite(())
    with pytest.raises(DomainError):
        nonsplit_is_finite((field_from_d(3), field_from_d(12)))  # same field twice


def test_pi_of_v_matched_example():
    spec = spectrum_from_inputs(radicands=[3, 17, 51])
    assert pi_of_V(spec, 40.0)[0] == 2
    assert pi_of_V(spec, 10.0)[0] == 1
    assert pi_of_V(spec, 1.0)[0] == 0
    count, classes = pi_of_V(spec, 40.0)
    assert [c.ram for c in classes] == [RamSet(()), RamSet((3, 17))]
    with pytest.raises(DomainError):
        pi_of_V(spec, 0.0)


def test_pi_of_v_monotone_and_saturates():
    spec = spectrum_from_inputs(radicands=[3, 17, 51])
    prev = 0
    for v in (0.5, 1.0, 2.0, 10.0, 33.0, 34.0, 100.0):
        cur = pi_of_V(spec, v)[0]
        assert cur >= prev
        prev = cur
    # beyond the largest class coarea the count equals the census total
    assert pi_of_V(spec, 34.0)[0] == count_algebras(TRIPLE).eventual_pi


def test_pi_of_v_infinite_spec_brute_subsets():
    """Single trace-4 class: even subsets of nonsplit primes below the cut."""
    spec = spectrum_from_inputs(traces=[4])
    for volume in (5.0, 20.0, 60.0):
        bound = 3.0 * volume / math.pi
        pool = [
            p
            for p in map(int, oracles.sieve_upto(int(bound) + 1))
            if oracles.split_at(12, p) != 1 and p - 1 < bound
        ]
        want = oracles.even_subset_count([p - 1 for p in pool], bound)
        count, classes = pi_of_V(spec, volume)
        assert count == want, volume
        assert len(classes) == count
        assert all(float(c.coarea) < volume for c in classes)


def test_short_interval_consistency():
    spec = spectrum_from_inputs(traces=[4])
    rep = short_interval_delta(spec, 10**4, 10**3)
    assert rep.delta == rep.count_at_v_plus_w - rep.count_at_v
    assert rep.count_at_v == pi_of_V(spec, 10**4)[0]
    assert rep.count_at_v_plus_w == pi_of_V(spec, 10**4 + 10**3)[0]
    assert abs(rep.bound - 10**3 / (2 * math.log(10**4))) < 1e-12
    assert rep.delta >= 0


def test_short_interval_monotone_in_window():
    spec = spectrum_from_inputs(traces=[4])
    d1 = short_interval_delta(spec, 5000.0, 500.0).delta
    d2 = short_interval_delta(spec, 5000.0, 1500.0).delta
    assert d2 >= d1


def test_short_interval_validation():
    spec = spectrum_from_inputs(traces=[4])
    with pytest.raises(DomainError):
        short_interval_delta(spec, 100.0, 100.0)  # window must stay below V
    with pytest.raises(DomainError):
        short_interval_delta(spec, 100.0, 0.0)
    with pytest.raises(DomainError):
        short_interval_delta(spec, 0.0, 10.0)


def test_construct_family_small_n():
    fam0 = construct_family(0)
    assert fam0.primes == (17, 41)
    assert fam0.d4 == 13
    assert fam0.census.eventual_pi == 1
    assert fam0.census.nonsplit == (41,)

    fam1 = construct_family(1)
    assert fam1.primes == (17, 41, 73)
    assert fam1.census.eventual_pi == 2
    assert fam1.census.nonsplit == (41, 73)

    # construction recipe: p1 = 17 splits in L4, later primes stay inert
    for fam in (fam0, fam1):
        l4 = field_from_d(fam.d4)
        assert splitting(l4, 17) is SplitType.SPLIT
        for p in fam.primes[1:]:
            assert splitting(l4, p) is SplitType.INERT
            assert p % 8 == 1 and kronecker(17, p) == -1


def test_construct_family_brute_prime_scan():
    """No prime below 10**4 outside {p2..pm} survives all four fields."""
    fam = construct_family(1)
    discs = [f.disc for f in fam.fields]
    assert oracles.nonsplit_scan(discs, 10**4) == list(fam.census.nonsplit)


def test_construct_family_rejections():
    with pytest.raises(DomainError):
        construct_family(-1)
    with pytest.raises(SearchExhaustedError) as info:
        construct_family(3, search_bound=50)
    assert info.value.bound == 50


def test_selectivity_never_possible():
    verdict = selectivity_check(RamSet((3, 17)), order_from_disc(17))
    assert not verdict.selective_possible
    assert verdict.condition1 and not verdict.condition2
    assert verdict.certificate_prime == 17

    # conductor 2 on disc 68: 2 splits in Q(sqrt 17), condition (3) holds
    v68 = selectivity_check(RamSet((3, 17)), order_from_disc(68))
    assert not v68.selective_possible
    assert v68.condition3
    assert v68.conductor_primes == ((2, SplitType.SPLIT),)

    # conductor 3 on disc 45: 3 is inert in Q(sqrt 5), condition (3) fails
    v45 = selectivity_check(RamSet((2, 5)), order_from_disc(45))
    assert not v45.condition3
    assert v45.conductor_primes == ((3, SplitType.INERT),)


def test_selectivity_random_pairs_certified():
    rng = random.Random(507)
    primes = oracles.trial_primes(2, 100)
    squarefree = [d for d in range(2, 200) if oracles.squarefree_reduce(d) == d]
    for _ in range(30):
        ram = RamSet(tuple(rng.sample(primes, rng.choice((2, 4)))))
        fld = field_from_d(rng.choice(squarefree))
        order = order_from_disc(fld.disc * rng.choice((1, 4, 9)))
        verdict = selectivity_check(ram, order)
        assert not verdict.selective_possible
        cert = verdict.certificate_prime
        assert fld.disc % cert == 0
        assert splitting(fld, cert) is SplitType.RAMIFIED


def test_selectivity_rejects_definite():
    with pytest.raises(DomainError):
        selectivity_check(RamSet((2,), at_infinity=True), order_from_disc(5))


def test_chebotarev_matches_independent_recount():
    fields = (field_from_d(3), field_from_d(17))
    rep = verify_chebotarev_interval(fields, 10**4, 10**3)
    manual = sum(
        1
        for p in map(int, oracles.sieve_upto(10**4 + 10**3))
        if p >= 10**4 and all(oracles.split_at(f.disc, p) == -1 for f in fields)
    )
    assert rep.actual == manual
    assert abs(rep.predicted - 10**3 / (4 * math.log(10**4))) < 1e-12
    assert rep.density == 0.25
    assert rep.theta == 0.25
    assert rep.ratio == rep.actual / rep.predicted


def test_chebotarev_single_field_metadata():
    rep = verify_chebotarev_interval((field_from_d(3),), 10**4, 10**3)
    assert rep.density == 0.5
    assert abs(rep.theta - 8.0 / 3.0) < 1e-15


def test_chebotarev_threads_agree():
    fields = (field_from_d(3), field_from_d(17))
    seq = verify_chebotarev_interval(fields, 10**4, 5000)
    par = verify_chebotarev_interval(fields, 10**4, 5000, workers=4)
    assert seq == par


def test_chebotarev_rejections():
    with pytest.raises(DomainError):
        verify_chebotarev_interval((field_from_d(3),), 999, 100)
    with pytest.raises(DomainError):
        verify_chebotarev_interval((field_from_d(3),), 10**4, 0)
    with pytest.raises(DomainError):
        verify_chebotarev_interval((field_from_d(3),), 10**4, 10**5)
    # even-weight character relation: infinite but not density 1/2**s
    with pytest.raises(DomainError, match="dependent"):
        verify_chebotarev_interval(
            tuple(field_from_d(d) for d in (2, 3, 5, 30)), 10**4, 10**3
        )
    # finite systems have no positive inert density at all
    with pytest.raises(DomainError, match="finite"):
        verify_chebotarev_interval(TRIPLE, 10**4, 10**3)
    with pytest.raises(DomainError, match="finite"):
        verify_chebotarev_interval(
            (field_from_d(2), field_from_d(3), field_from_d(6)), 10**4, 10**3
        )
