"""Admissible tuples: testing with certificates, the primorial-spaced
construction, and a search for narrow admissible k-tuples.

A tuple H is admissible when for every prime p some residue class mod p
contains no element of H.  For p > |H| this holds automatically (|H|
elements cannot fill p classes), so only primes p <= |H| are ever checked.
"""
from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass
from functools import lru_cache

from .primes import primorial, simple_sieve

# Number of primes each admissible translate is assumed to capture.  The
# constructions here only use the pair case; it is not a tunable parameter.
PRIMES_PER_TRANSLATE = 2


@dataclass(frozen=True)
class AdmissibleTuple:
    """Strictly ascending tuple of nonnegative integers (k >= 1)."""

    elements: tuple[int, ...]

    def __post_init__(self):
        els = tuple(int(e) for e in self.elements)
        if not els:
            raise ValueError("tuple must have at least one element")
        if els[0] < 0:
            raise ValueError("tuple elements must be nonnegative")
        if any(b <= a for a, b in zip(els, els[1:])):
            raise ValueError("tuple elements must be strictly ascending")
        object.__setattr__(self, "elements", els)

    @classmethod
    def from_values(cls, values: Iterable[int]) -> AdmissibleTuple:
        """Build from any iterable of distinct integers, sorting and shifting to min 0."""
        vals = sorted(int(v) for v in values)
        if len(set(vals)) != len(vals):
            raise ValueError("tuple elements must be distinct")
        if not vals:
            raise ValueError("tuple must have at least one element")
        return cls(tuple(v - vals[0] for v in vals))

    @property
    def k(self) -> int:
        return len(self.elements)

    @property
    def diameter(self) -> int:
        return self.elements[-1] - self.elements[0]

    def normalized(self) -> AdmissibleTuple:
        lo = self.elements[0]
        return self if lo == 0 else AdmissibleTuple(tuple(e - lo for e in self.elements))

    def __str__(self) -> str:
        return format_tuple(self)


@lru_cache(maxsize=256)
def _primes_upto(k: int) -> tuple[int, ...]:
    return tuple(simple_sieve(k).tolist())


def parse_tuple(text: str) -> AdmissibleTuple:
    """Parse the comma-separated form, e.g. ``"0,2,6"``."""
    parts = [p.strip() for p in text.strip().split(",")]
    if not parts or any(not p for p in parts):
        raise ValueError(f"malformed tuple {text!r}")
    try:
        return AdmissibleTuple(tuple(int(p) for p in parts))
    except ValueError as exc:
        raise ValueError(f"malformed tuple {text!r}: {exc}") from None


def format_tuple(H: AdmissibleTuple) -> str:
    return ",".join(str(e) for e in H.elements)


@dataclass(frozen=True)
class AdmissibilityCertificate:
    """One missed residue class per prime p <= k, as (p, residue) pairs."""

    H: AdmissibleTuple
    missed: tuple[tuple[int, int], ...]

    admissible = True

    def verify(self) -> bool:
        if tuple(p for p, _ in self.missed) != _primes_upto(self.H.k):
            return False
        return all(
            0 <= r < p and all(h % p != r for h in self.H.elements)
            for p, r in self.missed
        )


@dataclass(frozen=True)
class AdmissibilityViolation:
    """Prime p whose every residue class is hit; evidence[r] is an element = r mod p."""

    H: AdmissibleTuple
    p: int
    evidence: tuple[int, ...]

    admissible = False

    def verify(self) -> bool:
        return len(self.evidence) == self.p and all(
            h in self.H.elements and h % self.p == r for r, h in enumerate(self.evidence)
        )


def is_admissible(H: AdmissibleTuple) -> AdmissibilityCertificate | AdmissibilityViolation:
    """Check primes p <= k; return a certificate, or the smallest violating prime.

    Certificates record the smallest missed residue for each prime.  Violation
    evidence uses the first (smallest) element in each residue class.
    """
    missed = []
    for p in _primes_upto(H.k):
        first_hit: dict[int, int] = {}
        for h in H.elements:
            first_hit.setdefault(h % p, h)
        if len(first_hit) == p:
            return AdmissibilityViolation(H, p, tuple(first_hit[r] for r in range(p)))
        missed.append((p, next(r for r in range(p) if r not in first_hit)))
    return AdmissibilityCertificate(H, tuple(missed))


def lemma1_tuple(k: int, N: int) -> AdmissibleTuple:
    """{0, dN, 2dN, ..., (k-1)dN} with d the primorial of k."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if N < 1:
        raise ValueError(f"N must be >= 1, got {N}")
    step = primorial(k) * N
    return AdmissibleTuple(tuple(i * step for i in range(k)))


def lemma1_polignac_window(k: int, N: int) -> list[int]:
    """Candidate differences {dN, 2dN, ..., (k-1)dN}; one of them must be a Polignac
    number if admissible k-tuples capture prime pairs infinitely often."""
    if k < 2:
        raise ValueError(f"k must be >= 2, got {k}")
    if N < 1:
        raise ValueError(f"N must be >= 1, got {N}")
    step = primorial(k) * N
    return [i * step for i in range(1, k)]


@dataclass(frozen=True)
class NarrowTupleResult:
    k: int
    max_diameter: int
    found: AdmissibleTuple | None
    strategy: str
    message: str = ""

    @property
    def ok(self) -> bool:
        return self.found is not None


def _greedy_sieve(width: int, primes: list[int]) -> list[int]:
    """Survivors of [0, width] after removing, for each prime, its least populated class."""
    survivors = list(range(width + 1))
    for p in primes:
        counts = [0] * p
        for s in survivors:
            counts[s % p] += 1
        r = counts.index(min(counts))  # ties -> smallest residue
        survivors = [s for s in survivors if s % p != r]
    return survivors


def _narrowest_window(values: list[int], k: int) -> list[int] | None:
    if len(values) < k:
        return None
    i = min(range(len(values) - k + 1), key=lambda j: values[j + k - 1] - values[j])
    return values[i : i + k]


def prime_baseline_tuple(k: int) -> AdmissibleTuple:
    """The first k primes above k, shifted to start at 0.

    None of them is divisible by a prime p <= k, so class 0 is always missed.
    """
    out: list[int] = []
    bound = 2 * k + 16
    while len(out) < k:
        out = [p for p in simple_sieve(bound).tolist() if p > k][:k]
        bound *= 2
    return AdmissibleTuple.from_values(out)


def narrow_tuple(k: int, max_diameter: int) -> NarrowTupleResult:
    """Find an admissible k-tuple of diameter <= max_diameter.

    Widths w are tried upward from k - 1; for each, [0, w] is greedily sieved
    by every prime p <= k and the narrowest k consecutive survivors taken.
    The first success wins unless the prime baseline is narrower.  Failure is
    returned, not raised.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if max_diameter < 0:
        raise ValueError(f"max_diameter must be >= 0, got {max_diameter}")
    if k - 1 > max_diameter:
        return NarrowTupleResult(
            k, max_diameter, None, "none",
            f"{k} distinct integers need diameter >= {k - 1}",
        )
    baseline = prime_baseline_tuple(k)
    primes = simple_sieve(k).tolist()
    found: AdmissibleTuple | None = None
    strategy = "prime-baseline"
    for w in range(k - 1, min(max_diameter, baseline.diameter - 1) + 1):
        window = _narrowest_window(_greedy_sieve(w, primes), k)
        if window is not None:
            found, strategy = AdmissibleTuple.from_values(window), "greedy-sieve"
            break
    if found is None and baseline.diameter <= max_diameter:
        found = baseline
    if found is None:
        return NarrowTupleResult(
            k, max_diameter, None, "none",
            f"no admissible {k}-tuple of diameter <= {max_diameter} found "
            f"(prime baseline has diameter {baseline.diameter})",
        )
    # never trust the construction
    if not is_admissible(found).admissible or found.diameter > max_diameter:
        raise AssertionError(f"narrow_tuple produced an invalid tuple {found}")
    return NarrowTupleResult(k, max_diameter, found, strategy)
