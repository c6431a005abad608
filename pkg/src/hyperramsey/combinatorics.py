"""Colex ranking of k-subsets.

Every k-subset of {0..N-1} gets the rank sum_i C(a_i, i+1) for its sorted
elements a_0 < a_1 < ... The rank does not depend on N, so the colex order
of K_N^k is a prefix of the colex order of K_{N+1}^k.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb
from typing import Iterator, Sequence


def colex_rank(subset: Sequence[int]) -> int:
    """Rank of a sorted subset in colex order."""
    return sum(comb(a, i + 1) for i, a in enumerate(subset))


def colex_unrank(rank: int, k: int) -> tuple[int, ...]:
    out = []
    for i in range(k, 0, -1):
        a = i - 1
        while comb(a + 1, i) <= rank:
            a += 1
        out.append(a)
        rank -= comb(a, i)
    return tuple(reversed(out))


@lru_cache(maxsize=64)
def colex_subsets(n: int, k: int) -> tuple[tuple[int, ...], ...]:
    """All k-subsets of range(n) in colex order."""
    return tuple(_colex(n, k))


def _colex(n: int, k: int) -> Iterator[tuple[int, ...]]:
    if k == 0:
        yield ()
        return
    for top in range(k - 1, n):
        for rest in _colex(top, k - 1):
            yield rest + (top,)


def colex_index(n: int, k: int) -> dict[tuple[int, ...], int]:
    return {s: i for i, s in enumerate(colex_subsets(n, k))}


def subsets_colex(items: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """Non-empty subsets of ``items`` in colex order (bitmask order)."""
    n = len(items)
    for mask in range(1, 1 << n):
        yield tuple(items[i] for i in range(n) if mask >> i & 1)
