"""Prime generation and primorials.

Primes come out of an odd-only segmented sieve of Eratosthenes.  Segments
can be sieved in worker processes; results are always handed back in range
order, so the output never depends on the worker count or segment size.

Big integers are plain Python ``int`` (arbitrary precision, exact).
"""
from __future__ import annotations

import math
import os
from collections.abc import Callable, Iterator
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import TypeVar

import numpy as np

DEFAULT_SIEVE_CEILING = 10**10
DEFAULT_SEGMENT_SIZE = 1 << 21
CEILING_ENV = "POLIGNAC_SIEVE_CEILING"

T = TypeVar("T")


class CapacityError(ValueError):
    """Requested range lies above the configured sieve ceiling."""


def sieve_ceiling() -> int:
    raw = os.environ.get(CEILING_ENV)
    if raw is None:
        return DEFAULT_SIEVE_CEILING
    value = int(raw)
    if value < 2:
        raise ValueError(f"{CEILING_ENV} must be >= 2, got {raw!r}")
    return value


def simple_sieve(n: int) -> np.ndarray:
    """All primes <= n, unsegmented.  Used for base primes and primorials."""
    if n < 2:
        return np.zeros(0, dtype=np.int64)
    is_prime = np.ones(n + 1, dtype=bool)
    is_prime[:2] = False
    is_prime[4::2] = False
    for p in range(3, math.isqrt(n) + 1, 2):
        if is_prime[p]:
            is_prime[p * p :: 2 * p] = False
    return np.flatnonzero(is_prime).astype(np.int64)


@dataclass(frozen=True, eq=False)
class PrimeSegment:
    """Primes in the half-open range [lo, hi), ascending."""

    lo: int
    hi: int
    primes: np.ndarray

    def __len__(self) -> int:
        return len(self.primes)

    def tolist(self) -> list[int]:
        return self.primes.tolist()


def sieve_segment(lo: int, hi: int, base: np.ndarray) -> PrimeSegment:
    """Sieve [lo, hi) using odd-only storage.

    ``base`` must hold every prime up to isqrt(hi - 1).
    """
    parts = []
    if lo <= 2 < hi:
        parts.append(np.array([2], dtype=np.int64))
    start = max(lo, 3)
    start += 1 - (start & 1)  # first odd >= start
    if start < hi:
        n_odd = (hi - start + 1) // 2
        mask = np.ones(n_odd, dtype=bool)
        for p in base[1:].tolist():  # skip 2
            pp = p * p
            if pp >= hi:
                break
            m = max(pp, -(-start // p) * p)
            if not m & 1:
                m += p
            if m < hi:
                mask[(m - start) // 2 :: p] = False
        parts.append(start + 2 * np.flatnonzero(mask).astype(np.int64))
    primes = np.concatenate(parts) if parts else np.zeros(0, dtype=np.int64)
    primes.setflags(write=False)
    return PrimeSegment(lo, hi, primes)


def _bounds(lo: int, hi: int, segment_size: int) -> list[tuple[int, int]]:
    return [(a, min(a + segment_size, hi)) for a in range(lo, hi, segment_size)]


_worker_base: np.ndarray | None = None


def _init_worker(base: np.ndarray) -> None:
    global _worker_base
    _worker_base = base


def _run_segment(task):
    func, a, b = task
    return func(sieve_segment(a, b, _worker_base))


def _identity(seg: PrimeSegment) -> PrimeSegment:
    return seg


def map_segments(
    func: Callable[[PrimeSegment], T],
    lo: int,
    hi: int,
    segment_size: int = DEFAULT_SEGMENT_SIZE,
    workers: int = 1,
) -> Iterator[T]:
    """Apply ``func`` to every sieved segment of [lo, hi), yielding in range order.

    With ``workers > 1`` segments are sieved in a process pool, so ``func``
    must be picklable (a module-level function).  No ceiling check here;
    callers enforce it.
    """
    if lo > hi:
        raise ValueError(f"lo must be <= hi, got lo={lo}, hi={hi}")
    if segment_size < 2:
        raise ValueError(f"segment_size must be >= 2, got {segment_size}")
    if workers < 1:
        raise ValueError(f"workers must be >= 1, got {workers}")
    bounds = _bounds(lo, hi, segment_size)
    base = simple_sieve(math.isqrt(max(hi - 1, 0)))
    if workers == 1 or len(bounds) <= 1:
        for a, b in bounds:
            yield func(sieve_segment(a, b, base))
        return
    tasks = [(func, a, b) for a, b in bounds]
    chunk = max(1, len(tasks) // (4 * workers))
    with ProcessPoolExecutor(workers, initializer=_init_worker, initargs=(base,)) as pool:
        # Executor.map preserves submission order.
        yield from pool.map(_run_segment, tasks, chunksize=chunk)


def check_capacity(hi: int) -> None:
    ceiling = sieve_ceiling()
    if hi > ceiling:
        raise CapacityError(f"range end {hi} exceeds sieve ceiling {ceiling}")


def primes_in_range(
    lo: int,
    hi: int,
    segment_size: int = DEFAULT_SEGMENT_SIZE,
    workers: int = 1,
) -> Iterator[PrimeSegment]:
    """Stream the primes of [lo, hi) as consecutive segments.

    Raises CapacityError when ``hi`` is above the sieve ceiling (default
    10**10, overridable through ``POLIGNAC_SIEVE_CEILING``).
    """
    if lo < 0:
        raise ValueError(f"lo must be nonnegative, got {lo}")
    check_capacity(hi)
    return map_segments(_identity, lo, hi, segment_size, workers)


def prime_list(lo: int, hi: int, segment_size: int = DEFAULT_SEGMENT_SIZE, workers: int = 1) -> list[int]:
    out: list[int] = []
    for seg in primes_in_range(lo, hi, segment_size, workers):
        out.extend(seg.tolist())
    return out


def _segment_count(seg: PrimeSegment) -> int:
    return len(seg)


def count_primes(lo: int, hi: int, segment_size: int = DEFAULT_SEGMENT_SIZE, workers: int = 1) -> int:
    if lo < 0:
        raise ValueError(f"lo must be nonnegative, got {lo}")
    check_capacity(hi)
    return sum(map_segments(_segment_count, lo, hi, segment_size, workers))


def primorial(k: int) -> int:
    """Product of all primes p <= k; 1 for k < 2."""
    if k < 0:
        raise ValueError(f"k must be nonnegative, got {k}")
    return math.prod(simple_sieve(k).tolist())
