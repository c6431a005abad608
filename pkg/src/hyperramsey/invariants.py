"""Exact independence, strong independence, matching and covering numbers.

Every search runs per connected component (all four invariants are additive
over components) on vertex bitmasks. Branching is ascending by vertex with
the "take it" branch first, and an incumbent is only replaced by a strictly
better set, so the reported witness is the lexicographically least optimum.
That property survives recombination across components.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable

from hyperramsey.config import caps
from hyperramsey.errors import CapExceeded, HypergraphError
from hyperramsey.hypergraph import Hypergraph


@dataclass(frozen=True)
class InvariantReport:
    alpha: int
    alpha_star: int | None
    nu: int
    tau: int
    independent_set: tuple[int, ...]
    strong_independent_set: tuple[int, ...] | None
    matching: tuple[tuple[int, ...], ...]
    cover: tuple[int, ...]

    @property
    def in_fk(self) -> bool:
        return self.alpha_star is not None

    def as_dict(self) -> dict:
        return {
            "alpha": self.alpha,
            "alpha_star": self.alpha_star,
            "nu": self.nu,
            "tau": self.tau,
            "independent_set": list(self.independent_set),
            "strong_independent_set": None
            if self.strong_independent_set is None
            else list(self.strong_independent_set),
            "matching": [list(e) for e in self.matching],
            "cover": list(self.cover),
        }


def _bit_edges(h: Hypergraph) -> list[int]:
    return [sum(1 << v for v in e) for e in h.edges]


def _packing(masks: Iterable[int]) -> int:
    """Size of a greedy family of pairwise disjoint masks (a lower bound tool)."""
    used = 0
    count = 0
    for m in masks:
        if not m & used:
            used |= m
            count += 1
    return count


def _per_component(h: Hypergraph, solve: Callable[[Hypergraph], tuple | None], cap: int | None):
    limit = caps().alpha_cap if cap is None else cap
    parts = []
    for comp in h.components():
        if len(comp) > limit:
            raise CapExceeded(f"component with {len(comp)} vertices exceeds the search cap {limit}")
        sub = h.induced(comp)
        res = solve(sub)
        if res is None:
            return None
        parts.append((comp, res))
    return parts


def _max_independent(h: Hypergraph) -> tuple[int, ...]:
    n = h.num_vertices
    masks = _bit_edges(h)
    # an edge blocks v once all its other vertices are chosen
    blockers = [[m & ~(1 << v) for m in masks if m >> v & 1] for v in range(n)]
    best: list = [-1, 0]

    def rec(i: int, chosen: int, size: int) -> None:
        future = ((1 << n) - 1) & ~((1 << i) - 1)
        avail = chosen | future
        lost = _packing(m & future for m in masks if m & avail == m)
        if size + (n - i) - lost <= best[0]:
            return
        if i == n:
            best[0], best[1] = size, chosen
            return
        if not any(b & chosen == b for b in blockers[i]):
            rec(i + 1, chosen | 1 << i, size + 1)
        rec(i + 1, chosen, size)

    rec(0, 0, 0)
    return tuple(v for v in range(n) if best[1] >> v & 1)


def _min_cover(h: Hypergraph) -> tuple[int, ...]:
    n = h.num_vertices
    masks = _bit_edges(h)
    closing = [[m for m, e in zip(masks, h.edges) if e[-1] == v] for v in range(n)]
    best: list = [n + 1, 0]

    def rec(i: int, cover: int, size: int) -> None:
        open_ = [m for m in masks if not m & cover]
        if size + _packing(open_) >= best[0]:
            return
        if i == n:
            best[0], best[1] = size, cover
            return
        bit = 1 << i
        if any(m & bit for m in open_):
            rec(i + 1, cover | bit, size + 1)
        if not any(not m & cover for m in closing[i]):
            rec(i + 1, cover, size)

    rec(0, 0, 0)
    return tuple(v for v in range(n) if best[1] >> v & 1)


def _max_matching(h: Hypergraph) -> tuple[tuple[int, ...], ...]:
    m = len(h.edges)
    masks = _bit_edges(h)
    k = h.k
    best: list = [-1, ()]

    def rec(j: int, used: int, chosen: tuple[int, ...]) -> None:
        free = h.num_vertices - bin(used).count("1")
        if len(chosen) + min(m - j, free // k) <= best[0]:
            return
        if j == m:
            best[0], best[1] = len(chosen), chosen
            return
        if not masks[j] & used:
            rec(j + 1, used | masks[j], chosen + (j,))
        rec(j + 1, used, chosen)

    rec(0, 0, ())
    return tuple(h.edges[j] for j in best[1])


def _min_exact_transversal(h: Hypergraph) -> tuple[int, ...] | None:
    """Least set T meeting every edge exactly once, isolated vertices excluded."""
    n = h.num_vertices
    masks = _bit_edges(h)
    inc = [[m for m in masks if m >> v & 1] for v in range(n)]
    closing = [[m for m, e in zip(masks, h.edges) if e[-1] == v] for v in range(n)]
    best: list = [n + 1, None]

    def rec(i: int, t: int, size: int) -> None:
        open_ = [m for m in masks if not m & t]
        if size + _packing(open_) >= best[0]:
            return
        if i == n:
            best[0], best[1] = size, t
            return
        bit = 1 << i
        if inc[i] and not any(m & t for m in inc[i]):
            rec(i + 1, t | bit, size + 1)
        if not any(not m & t for m in closing[i]):
            rec(i + 1, t, size)

    rec(0, 0, 0)
    if best[1] is None:
        return None
    return tuple(v for v in range(n) if best[1] >> v & 1)


def _merge(parts) -> tuple[int, ...]:
    return tuple(sorted(comp[v] for comp, res in parts for v in res))


def independence_number(h: Hypergraph, *, cap: int | None = None) -> tuple[int, tuple[int, ...]]:
    """Maximum independent set size and the lexicographically least maximum set."""
    witness = _merge(_per_component(h, _max_independent, cap))
    return len(witness), witness


def covering_number(h: Hypergraph, *, cap: int | None = None) -> tuple[int, tuple[int, ...]]:
    witness = _merge(_per_component(h, _min_cover, cap))
    return len(witness), witness


def matching_number(h: Hypergraph, *, cap: int | None = None) -> tuple[int, tuple[tuple[int, ...], ...]]:
    parts = _per_component(h, _max_matching, cap)
    edges = sorted(tuple(comp[v] for v in e) for comp, res in parts for e in res)
    return len(edges), tuple(edges)


def minimum_exact_transversal(h: Hypergraph, *, cap: int | None = None) -> tuple[int, ...] | None:
    """Smallest vertex set meeting every edge in exactly one vertex, or None."""
    parts = _per_component(h, _min_exact_transversal, cap)
    if parts is None:
        return None
    return _merge(parts)


def strong_independence_number(h: Hypergraph, *, cap: int | None = None) -> tuple[int | None, tuple[int, ...] | None]:
    """alpha* and a maximum strong independent set; ``(None, None)`` outside F_k.

    A strong independent set is the complement of an exact transversal;
    vertices lying in no edge always stay in the strong set.
    """
    t = minimum_exact_transversal(h, cap=cap)
    if t is None:
        return None, None
    ts = set(t)
    s = tuple(v for v in range(h.num_vertices) if v not in ts)
    return len(s), s


def is_exact_transversal(h: Hypergraph, t: Iterable[int]) -> bool:
    ts = set(t)
    return all(len(ts.intersection(e)) == 1 for e in h.edges)


def is_independent(h: Hypergraph, s: Iterable[int]) -> bool:
    ss = set(s)
    return not any(ss.issuperset(e) for e in h.edges)


def is_cover(h: Hypergraph, c: Iterable[int]) -> bool:
    cs = set(c)
    return all(cs.intersection(e) for e in h.edges)


def is_matching(edges: Iterable[Iterable[int]]) -> bool:
    seen: set[int] = set()
    for e in edges:
        es = set(e)
        if es & seen:
            return False
        seen |= es
    return True


def truncate(h: Hypergraph, s: Iterable[int]) -> Hypergraph:
    """The (k-1)-uniform hypergraph of ``e - s`` over edges meeting ``s``.

    Duplicate truncated edges are merged; the vertex set is unchanged.
    """
    ss = set(s)
    if h.k < 2:
        raise HypergraphError("truncation needs k >= 2")
    out = set()
    for e in h.edges:
        hit = ss.intersection(e)
        if len(hit) > 1:
            raise HypergraphError(f"edge {e} meets the deleted set in {len(hit)} vertices")
        if hit:
            out.add(tuple(v for v in e if v not in ss))
    return Hypergraph(h.k - 1, h.num_vertices, tuple(out))


def invariants(h: Hypergraph, *, cap: int | None = None) -> InvariantReport:
    alpha, indep = independence_number(h, cap=cap)
    astar, strong = strong_independence_number(h, cap=cap)
    nu, matching = matching_number(h, cap=cap)
    tau, cover = covering_number(h, cap=cap)
    return InvariantReport(alpha, astar, nu, tau, indep, strong, matching, cover)
