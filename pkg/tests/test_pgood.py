import json
from importlib import resources

import jsonschema
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from schatunowsky import arith, pgood
from schatunowsky.errors import NotPrime, OutOfRange
from schatunowsky.pgood import PGoodReport

from oracles import brute_k, naive_next_prime, naive_p_good, naive_primes

SCHEMA = json.loads(resources.files("schatunowsky").joinpath("schemas/pgood_report.schema.json").read_text())


def test_286_is_7_good():
    rep = pgood.is_p_good(286, 7)
    assert rep.good and rep.witness is None


def test_289_witness_is_121():
    rep = pgood.is_p_good(289, 7)
    assert not rep.good and rep.witness == 121


def test_small_vacuous_cases():
    assert pgood.is_p_good(4, 2).good
    assert pgood.all_totatives_prime(2).good
    assert pgood.enumerate_p_good(2, 4) == [1, 2, 3, 4]
    assert pgood.enumerate_p_good(None, 4) == [1, 2, 3, 4]


def test_classic_examples():
    assert pgood.all_totatives_prime(30).good
    rep = pgood.all_totatives_prime(32)
    assert not rep.good and rep.witness == 9


def test_classic_enumeration_matches_oracle():
    got = pgood.enumerate_p_good(None, 600)
    assert got == [n for n in range(1, 601) if naive_p_good(n, None)]
    assert max(got) == 30


@pytest.mark.parametrize("p", [2, 3, 5, 7, 11, 13])
def test_enumeration_matches_oracle(p):
    limit = pgood.weak_bound(p) + 50
    assert pgood.enumerate_p_good(p, limit) == [n for n in range(1, limit + 1) if naive_p_good(n, p)]


@settings(max_examples=200, deadline=None)
@given(st.integers(min_value=0, max_value=1500), st.sampled_from([2, 3, 5, 7, 11, 13, 17, 19, 23]))
def test_witness_is_least_composite_rough_totative(n, p):
    rep = pgood.is_p_good(n, p)
    assert rep.good == naive_p_good(n, p)
    if not rep.good:
        w = rep.witness
        assert 1 < w < n and arith.gcd(w, n) == 1
        assert not arith.is_prime(w) and arith.smallest_prime_factor(w) > p
        # nothing smaller qualifies
        assert all(
            arith.gcd(t, n) != 1 or arith.is_prime(t) or arith.smallest_prime_factor(t) <= p
            for t in range(2, w)
        )


def test_good_implies_every_rough_totative_prime():
    # invariant read off the definition, checked directly for a few good n
    for p in (7, 11, 13):
        for n in pgood.enumerate_p_good(p, 400):
            for t in arith.totatives(n):
                if arith.smallest_prime_factor(t) > p:
                    assert arith.is_prime(t)


def test_not_prime_p():
    with pytest.raises(NotPrime):
        pgood.is_p_good(10, 9)
    with pytest.raises(NotPrime):
        pgood.enumerate_p_good(4, 10)
    with pytest.raises(NotPrime):
        pgood.weak_bound(1)


@pytest.mark.parametrize("p, expected", [(7, 290), (2, 290), (3, 290), (5, 290), (11, 362), (13, 530), (17, 842)])
def test_weak_bound(p, expected):
    assert pgood.weak_bound(p) == expected


@pytest.mark.parametrize("p, expected", [(11, 286), (13, 357), (19, 23 * 36)])
def test_strong_bound(p, expected):
    assert pgood.strong_bound(p) == expected


def test_strong_bound_19_against_oracle():
    assert pgood.strong_bound(19) == 23 * brute_k(19)
    assert pgood.largest_p_good(19) == pgood.strong_bound(19)


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_strong_bound_out_of_range(p):
    with pytest.raises(OutOfRange):
        pgood.strong_bound(p)


@pytest.mark.parametrize("p, expected", [(7, 286), (11, 286), (13, 357), (2, 105), (3, 105), (5, 154)])
def test_largest_p_good(p, expected):
    assert pgood.largest_p_good(p) == expected


@pytest.mark.parametrize("p", [2, 3, 5, 7, 11, 13])
def test_largest_p_good_against_brute_force(p):
    wb = pgood.weak_bound(p)
    best = max(n for n in range(1, wb + 200) if naive_p_good(n, p))
    assert pgood.largest_p_good(p) == best


def test_strong_bound_is_successor_times_k():
    for p in naive_primes(300):
        if p > 7:
            assert pgood.strong_bound(p) == naive_next_prime(p) * brute_k(p)


def test_report_serialisation_roundtrip():
    for rep in (pgood.is_p_good(289, 7), pgood.is_p_good(286, 7), pgood.all_totatives_prime(32)):
        d = rep.to_dict()
        jsonschema.validate(d, SCHEMA)
        assert PGoodReport.from_dict(json.loads(rep.to_json())) == rep
        assert PGoodReport.from_record(rep.to_record()) == rep


def test_record_format():
    assert pgood.is_p_good(289, 7).to_record() == "n=289 p=7 good=false witness=121"
    assert pgood.all_totatives_prime(30).to_record() == "n=30 p=none good=true witness=-"


def test_json_is_stable():
    a = pgood.is_p_good(289, 7).to_json()
    b = pgood.is_p_good(289, 7).to_json()
    assert a == b
    assert list(json.loads(a)) == sorted(json.loads(a))


@settings(max_examples=150, deadline=None)
@given(st.integers(min_value=0, max_value=2000), st.sampled_from(naive_primes(60)), st.sampled_from(naive_primes(60)))
def test_stricter_filter_keeps_goodness(n, p, q):
    lo, hi = sorted((p, q))
    if pgood.is_p_good(n, lo).good:
        assert pgood.is_p_good(n, hi).good


@settings(max_examples=150, deadline=None)
@given(st.integers(min_value=0, max_value=2000), st.sampled_from(naive_primes(100)))
def test_all_prime_totatives_imply_p_good(n, p):
    if pgood.all_totatives_prime(n).good:
        assert pgood.is_p_good(n, p).good


def test_classic_filter_on_2_good_range():
    candidates = pgood.enumerate_p_good(2, 300)
    assert max(n for n in candidates if pgood.all_totatives_prime(n).good) == 30
