"""Consecutive-prime gap census and the empirical analyses built on it.

A census is the finite stand-in for Polignac data: how often each gap
p_{n+1} - p_n occurs below a bound x.  Gap values with enough occurrences
form a candidate set, which feeds the interval-cover scan and the density
figures.
"""
from __future__ import annotations

import os
from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field
from fractions import Fraction
from types import MappingProxyType

import numpy as np

from .primes import DEFAULT_SEGMENT_SIZE, CapacityError, PrimeSegment, map_segments, sieve_ceiling

CENSUS_MAGIC = "POLIGNAC-CENSUS v1"


@dataclass(frozen=True)
class GapCensus:
    x: int
    counts: Mapping[int, int]
    prime_count: int

    def __post_init__(self):
        items = sorted((int(g), int(c)) for g, c in dict(self.counts).items())
        if any(c <= 0 for _, c in items):
            raise ValueError("census counts must be positive")
        if any(g != 1 and g % 2 for g, _ in items):
            raise ValueError("gaps other than 1 must be even")
        expected = max(self.prime_count - 1, 0)
        if sum(c for _, c in items) != expected:
            raise ValueError(
                f"gap counts sum to {sum(c for _, c in items)}, expected {expected}"
            )
        object.__setattr__(self, "counts", MappingProxyType(dict(items)))

    def __eq__(self, other):
        if not isinstance(other, GapCensus):
            return NotImplemented
        return (
            self.x == other.x
            and self.prime_count == other.prime_count
            and dict(self.counts) == dict(other.counts)
        )

    def __hash__(self):
        return hash((self.x, self.prime_count, tuple(self.counts.items())))


@dataclass(frozen=True)
class _SegmentGaps:
    first: int | None
    last: int | None
    n_primes: int
    gaps: dict[int, int] = field(default_factory=dict)


def _segment_gaps(seg: PrimeSegment) -> _SegmentGaps:
    p = seg.primes
    if len(p) == 0:
        return _SegmentGaps(None, None, 0)
    values, counts = np.unique(np.diff(p), return_counts=True)
    return _SegmentGaps(int(p[0]), int(p[-1]), len(p), dict(zip(values.tolist(), counts.tolist())))


def gap_census(x: int, segment_size: int = DEFAULT_SEGMENT_SIZE, workers: int = 1) -> GapCensus:
    """Count gaps between consecutive primes p_n < p_{n+1} <= x.

    Segments only report their interior gaps plus their first/last prime;
    the seam gap between neighbouring segments is added during the ordered
    merge, so nothing is lost or counted twice.
    """
    if x < 0:
        raise ValueError(f"x must be nonnegative, got {x}")
    ceiling = sieve_ceiling()
    if x > ceiling:
        raise CapacityError(f"census bound {x} exceeds sieve ceiling {ceiling}")
    totals: dict[int, int] = {}
    prime_count = 0
    prev_last: int | None = None
    for part in map_segments(_segment_gaps, 0, x + 1, segment_size, workers):
        if part.n_primes == 0:
            continue
        if prev_last is not None:
            seam = part.first - prev_last
            totals[seam] = totals.get(seam, 0) + 1
        for g, c in part.gaps.items():
            totals[g] = totals.get(g, 0) + c
        prime_count += part.n_primes
        prev_last = part.last
    return GapCensus(x, totals, prime_count)


# -- persistence ------------------------------------------------------------

def format_census(census: GapCensus) -> str:
    lines = [CENSUS_MAGIC, f"x={census.x}", f"primes={census.prime_count}"]
    lines += [f"{g},{c}" for g, c in census.counts.items()]
    return "\n".join(lines) + "\n"


def parse_census(text: str) -> GapCensus:
    if not text.endswith("\n") or text.endswith("\n\n"):
        raise ValueError("census file must end with exactly one LF")
    lines = text[:-1].split("\n")
    if len(lines) < 3 or lines[0] != CENSUS_MAGIC:
        raise ValueError(f"not a census file (expected header {CENSUS_MAGIC!r})")
    if not lines[1].startswith("x=") or not lines[2].startswith("primes="):
        raise ValueError("census file missing x= or primes= line")
    x = _parse_uint(lines[1][2:])
    prime_count = _parse_uint(lines[2][7:])
    counts: dict[int, int] = {}
    prev = 0
    for line in lines[3:]:
        g_s, sep, c_s = line.partition(",")
        if not sep:
            raise ValueError(f"bad census line {line!r}")
        g, c = _parse_uint(g_s), _parse_uint(c_s)
        if g <= prev:
            raise ValueError("census gaps must be strictly ascending")
        counts[g] = c
        prev = g
    return GapCensus(x, counts, prime_count)


def _parse_uint(s: str) -> int:
    if not s.isdigit() or (len(s) > 1 and s[0] == "0"):
        raise ValueError(f"expected a canonical decimal integer, got {s!r}")
    return int(s)


def write_census(census: GapCensus, path: str | os.PathLike) -> None:
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write(format_census(census))


def read_census(path: str | os.PathLike) -> GapCensus:
    with open(path, encoding="ascii", newline="") as fh:
        return parse_census(fh.read())


# -- candidate sets and analyses ----------------------------------------------

@dataclass(frozen=True)
class CandidateSet:
    threshold: int
    gaps: tuple[int, ...]
    source_x: int


def candidate_set(census: GapCensus, T: int, even_only: bool = False) -> CandidateSet:
    """Gap values occurring at least T times.

    ``even_only`` drops the lone odd gap 1 (2 -> 3); Polignac analyses want it off.
    """
    if T < 1:
        raise ValueError(f"threshold T must be >= 1, got {T}")
    gaps = tuple(g for g, c in census.counts.items() if c >= T and not (even_only and g % 2))
    return CandidateSet(T, gaps, census.x)


@dataclass(frozen=True)
class CoverReport:
    """Smallest C such that every [m, m + C] inside [0, m_max] meets the set.

    ``worst_m`` starts a candidate-free interval of width C_emp - 1 (None when
    C_emp is 0).  On failure ``C_emp`` is None.
    """

    C_emp: int | None
    m_max: int
    worst_m: int | None
    message: str = ""

    @property
    def ok(self) -> bool:
        return self.C_emp is not None


def interval_cover_constant(S: CandidateSet | Iterable[int], m_max: int) -> CoverReport:
    """Scan the holes between consecutive candidates in [0, m_max].

    A hole [a, b] free of candidates forces C > b - a; the largest hole
    decides.  Equal holes resolve to the one with the largest start.
    """
    if m_max < 0:
        raise ValueError(f"m_max must be nonnegative, got {m_max}")
    values = S.gaps if isinstance(S, CandidateSet) else S
    pos = sorted({v for v in values if 0 <= v <= m_max})
    if not pos:
        return CoverReport(None, m_max, None, f"no candidates in [0, {m_max}]")
    # candidate-free maximal runs [a, b]
    holes = [(0, pos[0] - 1)]
    holes += [(a + 1, b - 1) for a, b in zip(pos, pos[1:])]
    holes.append((pos[-1] + 1, m_max))
    best_width, worst_m = -1, None
    for a, b in holes:
        if a <= b and b - a >= best_width:
            best_width, worst_m = b - a, a
    return CoverReport(best_width + 1, m_max, worst_m)


def verify_cover(report: CoverReport, S: CandidateSet | Iterable[int]) -> bool:
    """Rescan: no width-C_emp interval is candidate-free, and the worst one at C_emp - 1 is."""
    if not report.ok:
        return False
    values = set(S.gaps if isinstance(S, CandidateSet) else S)
    inside = np.zeros(report.m_max + 2, dtype=np.int64)
    for v in values:
        if 0 <= v <= report.m_max:
            inside[v + 1] = 1
    prefix = np.cumsum(inside)  # prefix[i] = #candidates in [0, i)

    def hits(a: int, b: int) -> int:
        return int(prefix[b + 1] - prefix[a])

    C = report.C_emp
    if any(hits(m, m + C) == 0 for m in range(0, report.m_max - C + 1)):
        return False
    if C == 0:
        return report.worst_m is None
    w = report.worst_m
    return w is not None and 0 <= w and w + C - 1 <= report.m_max and hits(w, w + C - 1) == 0


def density_lower_bound(C) -> Fraction:
    """1/(2C): lower bound on the upper density when every width-C window holds a member."""
    C = Fraction(C)
    if C <= 0:
        raise ValueError(f"C must be positive, got {C}")
    return 1 / (2 * C)


def empirical_density(S: CandidateSet | Iterable[int], n: int) -> Fraction:
    """|S intersect [0, n]| / n, exactly."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    values = S.gaps if isinstance(S, CandidateSet) else S
    return Fraction(sum(1 for v in set(values) if 0 <= v <= n), n)
