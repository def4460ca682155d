from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from oracles import (
    MISSING_EVEN_GAPS_1E6,
    PI_1E6,
    TWIN_PAIRS_BELOW_1E6,
    cover_brute,
    gap_counts,
)
from polignac.census import (
    CandidateSet,
    GapCensus,
    candidate_set,
    density_lower_bound,
    empirical_density,
    format_census,
    gap_census,
    interval_cover_constant,
    parse_census,
    read_census,
    verify_cover,
    write_census,
)
from polignac.primes import CEILING_ENV, CapacityError


@pytest.fixture(scope="module")
def census_1e6():
    return gap_census(10**6)


def test_census_30():
    c = gap_census(30)
    assert dict(c.counts) == {1: 1, 2: 4, 4: 3, 6: 1}
    assert c.prime_count == 10


@pytest.mark.parametrize("x,primes", [(0, 0), (1, 0), (2, 1), (3, 2)])
def test_tiny_censuses(x, primes):
    c = gap_census(x)
    assert c.prime_count == primes
    assert sum(c.counts.values()) == max(primes - 1, 0)


def test_million_against_oracle(census_1e6):
    assert census_1e6.prime_count == PI_1E6
    assert census_1e6.counts[2] == TWIN_PAIRS_BELOW_1E6


@pytest.mark.parametrize("x", [100, 997, 1000, 4099, 65536])
def test_matches_oracle_counts(x):
    counts, n = gap_counts(x)
    c = gap_census(x, segment_size=97)
    assert dict(c.counts) == dict(counts) and c.prime_count == n


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 200_000), st.integers(2, 10_000))
def test_conservation_parity_segmentation(x, seg):
    c = gap_census(x, segment_size=seg)
    assert sum(c.counts.values()) == max(c.prime_count - 1, 0)
    assert all(g == 1 or g % 2 == 0 for g in c.counts)
    assert all(v > 0 for v in c.counts.values())
    assert c == gap_census(x)


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 100_000), st.integers(0, 100_000))
def test_monotone_in_x(a, b):
    x1, x2 = sorted((a, b))
    c1, c2 = gap_census(x1), gap_census(x2)
    assert all(c2.counts.get(g, 0) >= n for g, n in c1.counts.items())


def test_parallel_matches_serial():
    base = gap_census(3 * 10**6, segment_size=1 << 16)
    assert gap_census(3 * 10**6, segment_size=1 << 16, workers=4) == base
    assert format_census(gap_census(3 * 10**6, segment_size=10**5 + 3, workers=2)) == format_census(base)


def test_census_ceiling(monkeypatch):
    monkeypatch.setenv(CEILING_ENV, "500")
    assert gap_census(500).prime_count == 95
    with pytest.raises(CapacityError):
        gap_census(501)


def test_census_invariants_enforced():
    with pytest.raises(ValueError):
        GapCensus(30, {2: 3}, 10)  # wrong total
    with pytest.raises(ValueError):
        GapCensus(30, {3: 1}, 2)  # odd gap > 1
    with pytest.raises(ValueError):
        GapCensus(30, {2: 0}, 1)


# -- file format ---------------------------------------------------------------

def test_file_format_exact():
    assert format_census(gap_census(30)) == (
        "POLIGNAC-CENSUS v1\nx=30\nprimes=10\n1,1\n2,4\n4,3\n6,1\n"
    )
    assert format_census(gap_census(1)) == "POLIGNAC-CENSUS v1\nx=1\nprimes=0\n"


def test_file_round_trip(tmp_path, census_1e6):
    p1, p2 = tmp_path / "a.census", tmp_path / "b.census"
    write_census(census_1e6, p1)
    back = read_census(p1)
    assert back == census_1e6
    write_census(back, p2)
    assert p1.read_bytes() == p2.read_bytes()


@pytest.mark.parametrize(
    "text",
    [
        "POLIGNAC-CENSUS v2\nx=30\nprimes=10\n",
        "POLIGNAC-CENSUS v1\nx=30\nprimes=10",
        "POLIGNAC-CENSUS v1\nx=30\nprimes=10\n\n",
        "POLIGNAC-CENSUS v1\nx=30\nprimes=3\n4,1\n2,1\n",
        "POLIGNAC-CENSUS v1\nx=30\nprimes=2\n2,1 \n",
        "POLIGNAC-CENSUS v1\nx=030\nprimes=1\n",
        "POLIGNAC-CENSUS v1\r\nx=30\r\nprimes=1\r\n",
        "POLIGNAC-CENSUS v1\nx=30\nprimes=10\n2,4\n",
    ],
)
def test_malformed_files_rejected(text):
    with pytest.raises(ValueError):
        parse_census(text)


# -- candidates ----------------------------------------------------------------

def test_candidates_examples():
    c = gap_census(30)
    assert candidate_set(c, 1).gaps == (1, 2, 4, 6)
    assert candidate_set(c, 3).gaps == (2, 4)
    assert candidate_set(gap_census(2), 1).gaps == ()
    assert candidate_set(c, 1, even_only=True).gaps == (2, 4, 6)
    with pytest.raises(ValueError):
        candidate_set(c, 0)


@given(st.integers(1, 5000), st.integers(1, 5000))
def test_candidates_nest(t1, t2):
    c = gap_census(10**5)
    lo, hi = sorted((t1, t2))
    assert set(candidate_set(c, hi).gaps) <= set(candidate_set(c, lo).gaps)


def test_even_gaps_below_million(census_1e6):
    S = candidate_set(census_1e6, 1, even_only=True)
    missing = tuple(g for g in range(2, 101, 2) if g not in S.gaps)
    assert missing == MISSING_EVEN_GAPS_1E6


# -- interval cover ------------------------------------------------------------

@pytest.mark.parametrize(
    "S,m_max,C,worst",
    [({2, 4, 6}, 6, 2, 0), ({5}, 10, 5, 6), (set(range(11)), 10, 0, None), ({0}, 0, 0, None)],
)
def test_cover_examples(S, m_max, C, worst):
    r = interval_cover_constant(S, m_max)
    assert (r.C_emp, r.worst_m) == (C, worst)
    assert verify_cover(r, S)


def test_cover_empty_is_failure():
    r = interval_cover_constant({200}, 100)
    assert not r.ok and r.message
    assert not interval_cover_constant(CandidateSet(1, (), 2), 10).ok


def test_cover_million_census(census_1e6):
    # the hole left by gap 94 decides the constant
    S = candidate_set(census_1e6, 1, even_only=True)
    r = interval_cover_constant(S, 100)
    assert (r.C_emp, r.worst_m) == (3, 93)
    assert verify_cover(r, S)


@settings(max_examples=300)
@given(st.sets(st.integers(-3, 45), max_size=12), st.integers(0, 40))
def test_cover_matches_brute_force(S, m_max):
    r = interval_cover_constant(S, m_max)
    C, worst = cover_brute(S, m_max)
    assert r.C_emp == C
    if C:
        assert r.worst_m in worst and r.worst_m == max(worst)
    if r.ok:
        assert verify_cover(r, S)


def test_verify_cover_catches_wrong_report():
    r = interval_cover_constant({2, 4, 6}, 6)
    assert not verify_cover(type(r)(1, 6, 0), {2, 4, 6})
    assert not verify_cover(type(r)(2, 6, 2), {2, 4, 6})


# -- densities -----------------------------------------------------------------

@pytest.mark.parametrize(
    "C,expected",
    [(1, Fraction(1, 2)), (600, Fraction(1, 1200)), (Fraction(1, 2), Fraction(1))],
)
def test_density_lower_bound(C, expected):
    got = density_lower_bound(C)
    assert got == expected and isinstance(got, Fraction)


@pytest.mark.parametrize("C", [0, -1, Fraction(-1, 3)])
def test_density_lower_bound_rejects(C):
    with pytest.raises(ValueError):
        density_lower_bound(C)


def test_empirical_density_examples(census_1e6):
    assert empirical_density({2, 4, 6}, 6) == Fraction(1, 2)
    assert empirical_density({2, 4, 6}, 100) == Fraction(3, 100)
    S = candidate_set(census_1e6, 1, even_only=True)
    assert empirical_density(S, 100) == Fraction(49, 100)
    with pytest.raises(ValueError):
        empirical_density(S, 0)
