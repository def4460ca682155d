import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from oracles import PI_1E6, is_prime_td, primorial_td, simple_sieve
from polignac.primes import (
    CEILING_ENV,
    CapacityError,
    count_primes,
    prime_list,
    primes_in_range,
    primorial,
    sieve_segment,
)


def test_first_primes():
    assert prime_list(0, 10, 10) == [2, 3, 5, 7]


def test_small_window_tiny_segments():
    assert prime_list(100, 110, 4) == [101, 103, 107, 109]


def test_count_below_million():
    assert count_primes(0, 10**6) == PI_1E6


def test_segments_tile_the_range():
    segs = list(primes_in_range(10, 100, 7))
    assert segs[0].lo == 10 and segs[-1].hi == 100
    assert all(a.hi == b.lo for a, b in zip(segs, segs[1:]))
    for s in segs:
        assert all(s.lo <= p < s.hi for p in s.tolist())
        assert not s.primes.flags.writeable


@pytest.mark.parametrize("lo,hi", [(0, 0), (0, 1), (0, 2), (2, 3), (3, 3), (4, 5), (24, 29)])
def test_degenerate_ranges(lo, hi):
    assert prime_list(lo, hi, 2) == [p for p in range(lo, hi) if is_prime_td(p)]


def test_membership_matches_trial_division():
    got = set(prime_list(0, 10**5, 4096))
    bad = [n for n in range(2, 10**5) if (n in got) != is_prime_td(n)]
    assert bad == []


@settings(max_examples=40, deadline=None)
@given(
    lo=st.integers(0, 10**7 - 2),
    span=st.integers(1, 50_000),
    s1=st.integers(2, 5000),
    s2=st.integers(2, 1 << 16),
)
def test_segment_size_does_not_change_output(lo, span, s1, s2):
    hi = min(lo + span, 10**7)
    a = np.concatenate([s.primes for s in primes_in_range(lo, hi, s1)] or [np.zeros(0, np.int64)])
    b = np.concatenate([s.primes for s in primes_in_range(lo, hi, s2)] or [np.zeros(0, np.int64)])
    assert a.tobytes() == b.tobytes()


def test_workers_do_not_change_output():
    one = prime_list(10**6, 2 * 10**6, 1 << 15, workers=1)
    three = prime_list(10**6, 2 * 10**6, 1 << 15, workers=3)
    assert one == three == [p for p in simple_sieve(2 * 10**6) if p >= 10**6]


def test_sieve_segment_large_offset():
    lo = 10**10 - 1000
    seg = sieve_segment(lo, 10**10, np.array(simple_sieve(10**5), dtype=np.int64))
    assert seg.tolist() == [n for n in range(lo, 10**10) if is_prime_td(n)]


def test_ceiling_refused(monkeypatch):
    with pytest.raises(CapacityError):
        primes_in_range(0, 10**10 + 1)
    monkeypatch.setenv(CEILING_ENV, "1000")
    with pytest.raises(CapacityError):
        primes_in_range(0, 1001)
    assert prime_list(990, 1000) == [991, 997]


def test_bad_arguments():
    with pytest.raises(ValueError):
        list(primes_in_range(10, 5))
    with pytest.raises(ValueError):
        list(primes_in_range(0, 10, 1))


@pytest.mark.parametrize("k,expected", [(0, 1), (1, 1), (2, 2), (5, 30), (10, 210)])
def test_primorial_values(k, expected):
    assert primorial(k) == expected


def test_primorial_59_exceeds_64_bits():
    d = primorial(59)
    assert d == primorial_td(59)
    assert d > 2**64
    assert isinstance(d, int)


@given(st.integers(1, 400))
def test_primorial_recurrence(k):
    assert primorial(k) == primorial(k - 1) * (k if is_prime_td(k) else 1)
