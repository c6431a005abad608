"""Embedding images of a pattern in the complete hypergraph K_n^k.

An image is the set of colex ranks of the k-sets a copy of the pattern
occupies. Distinct embeddings with the same edge set collapse to one image.
"""

from __future__ import annotations

from itertools import chain, permutations
from math import comb, perm

import numpy as np

from hyperramsey.config import caps
from hyperramsey.errors import CapExceeded
from hyperramsey.hypergraph import Hypergraph


def embedding_images(pattern: Hypergraph, n: int, *, image_cap: int | None = None) -> np.ndarray:
    """Deduplicated images as an (m, |E|) int64 array of sorted rank rows.

    No rows when the pattern does not fit on ``n`` vertices; a single empty
    row when the pattern has no edges but fits (every coloring contains it).
    """
    limit = caps().image_cap if image_cap is None else image_cap
    e = pattern.num_edges
    if pattern.num_vertices > n:
        return np.zeros((0, e), np.int64)
    if e == 0:
        return np.zeros((1, 0), np.int64)
    deg = pattern.degrees()
    active = [v for v in range(pattern.num_vertices) if deg[v]]
    idx = {v: i for i, v in enumerate(active)}
    v = len(active)
    total = perm(n, v)
    if total > 4 * limit:
        raise CapExceeded(f"{total} vertex maps of the pattern into K_{n} exceed the enumeration cap")
    maps = np.fromiter(chain.from_iterable(permutations(range(n), v)), dtype=np.int16, count=total * v)
    maps = maps.reshape(total, v)
    table = np.array([[comb(a, i) for i in range(pattern.k + 1)] for a in range(n)], dtype=np.int64)
    cols = []
    for edge in pattern.edges:
        im = np.sort(maps[:, [idx[u] for u in edge]], axis=1)
        rank = np.zeros(total, np.int64)
        for i in range(pattern.k):
            rank += table[im[:, i], i + 1]
        cols.append(rank)
    rows = np.sort(np.stack(cols, axis=1), axis=1)
    rows = np.unique(rows, axis=0)
    if rows.shape[0] > limit:
        raise CapExceeded(f"{rows.shape[0]} images exceed the image cap {limit}")
    return rows
