"""Arithmetic-progression constructions over primorial multiples, and the
longest arithmetic progression inside a finite integer set."""
from __future__ import annotations

import os
from collections.abc import Iterable, Sequence
from dataclasses import dataclass

from .primes import primorial

MAX_AP_SET_SIZE = 10**5


@dataclass(frozen=True)
class BlockSequence:
    """Blocks (i * k**(j-1) * q * d for i = 1..k-1), j = 1..len(blocks)."""

    q: int
    k: int
    d: int
    blocks: tuple[tuple[int, ...], ...]


def ap_blocks(q: int, k: int, block_count: int) -> BlockSequence:
    """Disjoint Lemma-1 windows lying on the progression q, 2q, 3q, ...

    Block j is the window for N = k**(j-1) * q, so its first element
    k**(j-1) * q * d continues where the previous block's step left off.
    """
    if q < 1:
        raise ValueError(f"q must be >= 1, got {q}")
    if k < 2:
        raise ValueError(f"k must be >= 2, got {k}")
    if block_count < 1:
        raise ValueError(f"block_count must be >= 1, got {block_count}")
    d = primorial(k)
    blocks = []
    for j in range(1, block_count + 1):
        step = k ** (j - 1) * q * d
        blocks.append(tuple(i * step for i in range(1, k)))
    return BlockSequence(q, k, d, tuple(blocks))


@dataclass(frozen=True)
class DirichletSpec:
    """N_i = (a/q)(i*d - 1) with the witnessed identity a + N_i*q = a*i*d."""

    a: int
    q: int
    k: int
    d: int
    N_values: tuple[int, ...]
    terms: tuple[int, ...]


def dirichlet_subsequence(a: int, q: int, k: int, count: int) -> DirichletSpec | BlockSequence:
    """Terms a + N_i q (i = 1..count) of the progression a, a+q, a+2q, ... that
    are multiples a*i*d of the primorial.

    ``a == 0`` is the pure-multiples case and is answered by ``ap_blocks``
    (with ``count`` blocks).  Each identity is checked before returning.
    """
    if q < 1:
        raise ValueError(f"q must be >= 1, got {q}")
    if a < 0:
        raise ValueError(f"a must be nonnegative, got {a}")
    if count < 1:
        raise ValueError(f"count must be >= 1, got {count}")
    if a == 0:
        return ap_blocks(q, k, count)
    if a % q:
        raise ValueError(f"q must divide a (q | a), got a={a}, q={q}")
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    d = primorial(k)
    ratio = a // q
    Ns, terms = [], []
    for i in range(1, count + 1):
        N = ratio * (i * d - 1)
        term = a + N * q
        if term != a * i * d:
            raise ArithmeticError(f"identity failed at i={i}: {term} != {a * i * d}")
        Ns.append(N)
        terms.append(term)
    return DirichletSpec(a, q, k, d, tuple(Ns), tuple(terms))


@dataclass(frozen=True)
class APRun:
    start: int
    step: int
    length: int

    def terms(self) -> list[int]:
        return [self.start + i * self.step for i in range(self.length)]

    def within(self, S: Iterable[int]) -> bool:
        members = set(S)
        return all(t in members for t in self.terms())


def longest_ap_in_set(S: Sequence[int]) -> APRun:
    """Longest arithmetic progression contained in S (ascending, distinct).

    O(|S|^2) dynamic program: runs[j][step] is the length of the longest
    progression with that step ending at S[j].  Ties go to the smallest
    start, then the smallest step.  A singleton gives (s, 1, 1).
    """
    n = len(S)
    if n == 0:
        raise ValueError("set must be nonempty")
    if n > MAX_AP_SET_SIZE:
        raise ValueError(f"set too large ({n} > {MAX_AP_SET_SIZE})")
    if any(b <= a for a, b in zip(S, S[1:])):
        raise ValueError("set must be ascending and duplicate-free")
    if n == 1:
        return APRun(S[0], 1, 1)
    runs: list[dict[int, int]] = []
    best = (0, 0, 0)  # (-length, start, step), minimised
    for j, sj in enumerate(S):
        here: dict[int, int] = {}
        for i in range(j):
            step = sj - S[i]
            length = runs[i].get(step, 1) + 1
            here[step] = length
            key = (-length, sj - (length - 1) * step, step)
            if key < best:
                best = key
        runs.append(here)
    neg_len, start, step = best
    return APRun(start, step, -neg_len)


def read_int_set(path: str | os.PathLike) -> list[int]:
    """One decimal integer per line, ascending, LF-terminated."""
    with open(path, encoding="ascii", newline="") as fh:
        text = fh.read()
    return parse_int_set(text)


def parse_int_set(text: str) -> list[int]:
    if text and not text.endswith("\n"):
        raise ValueError("integer-set file must be LF-terminated")
    values = [int(line) for line in text.split("\n")[:-1]] if text else []
    if any(b <= a for a, b in zip(values, values[1:])):
        raise ValueError("integer-set file must be strictly ascending")
    return values


def format_int_set(values: Iterable[int]) -> str:
    return "".join(f"{v}\n" for v in values)
