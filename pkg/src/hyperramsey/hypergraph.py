"""Canonical k-uniform hypergraphs, generator families and containment.

A :class:`Hypergraph` is immutable. Vertices are ``0..num_vertices-1``, each
edge is an ascending tuple and the edge tuple is sorted lexicographically,
so two hypergraphs are equal exactly when their canonical forms agree.
Isomorphism is only ever used inside :func:`contains`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, product
from math import comb
from typing import Iterable, Iterator, Sequence

from hyperramsey.combinatorics import colex_subsets
from hyperramsey.config import caps
from hyperramsey.errors import CapExceeded, HypergraphError, ParseError


@dataclass(frozen=True)
class Hypergraph:
    k: int
    num_vertices: int
    edges: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self) -> None:
        if self.k < 1:
            raise HypergraphError(f"uniformity must be positive, got {self.k}")
        if self.num_vertices < 0:
            raise HypergraphError("num_vertices must be non-negative")
        canon = set()
        for e in self.edges:
            t = tuple(sorted(e))
            if len(t) != self.k or len(set(t)) != self.k:
                raise HypergraphError(f"edge {tuple(e)} is not a {self.k}-set")
            if t[0] < 0 or t[-1] >= self.num_vertices:
                raise HypergraphError(f"edge {t} has a vertex outside 0..{self.num_vertices - 1}")
            if t in canon:
                raise HypergraphError(f"duplicate edge {t}")
            canon.add(t)
        object.__setattr__(self, "edges", tuple(sorted(canon)))

    @classmethod
    def from_edges(cls, k: int, edges: Iterable[Iterable[int]], num_vertices: int | None = None) -> Hypergraph:
        """Build from edges, deduplicating; vertex count defaults to max id + 1."""
        es = {tuple(sorted(e)) for e in edges}
        if num_vertices is None:
            num_vertices = 1 + max((max(e) for e in es), default=-1)
        return cls(k, num_vertices, tuple(es))

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    @property
    def order(self) -> int:
        return self.num_vertices

    def degrees(self) -> list[int]:
        deg = [0] * self.num_vertices
        for e in self.edges:
            for v in e:
                deg[v] += 1
        return deg

    def isolated_vertices(self) -> list[int]:
        return [v for v, d in enumerate(self.degrees()) if d == 0]

    def neighbours(self) -> list[set[int]]:
        """Vertices sharing at least one edge with each vertex."""
        nb: list[set[int]] = [set() for _ in range(self.num_vertices)]
        for e in self.edges:
            for v in e:
                nb[v].update(e)
        for v in range(self.num_vertices):
            nb[v].discard(v)
        return nb

    def is_regular(self) -> bool:
        return len(set(self.degrees())) <= 1

    def is_linear(self) -> bool:
        return all(len(set(a) & set(b)) <= 1 for a, b in combinations(self.edges, 2))

    def has_star_vertex(self) -> bool:
        """True if some vertex v has its incident edges pairwise meeting only in v.

        A vertex of degree 0 or 1 qualifies trivially.
        """
        inc: list[list[tuple[int, ...]]] = [[] for _ in range(self.num_vertices)]
        for e in self.edges:
            for v in e:
                inc[v].append(e)
        for v in range(self.num_vertices):
            if all(set(a) & set(b) == {v} for a, b in combinations(inc[v], 2)):
                return True
        return False

    def components(self) -> list[list[int]]:
        """Connected components as ascending vertex lists, ordered by least vertex."""
        parent = list(range(self.num_vertices))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for e in self.edges:
            r = find(e[0])
            for v in e[1:]:
                s = find(v)
                if s != r:
                    parent[s] = r
        groups: dict[int, list[int]] = {}
        for v in range(self.num_vertices):
            groups.setdefault(find(v), []).append(v)
        return sorted(groups.values(), key=lambda g: g[0])

    def induced(self, vertices: Sequence[int]) -> Hypergraph:
        """Sub-hypergraph induced on ``vertices``, relabelled 0.. in the given order."""
        index = {v: i for i, v in enumerate(vertices)}
        es = [tuple(index[v] for v in e) for e in self.edges if all(v in index for v in e)]
        return Hypergraph(self.k, len(vertices), tuple(es))

    def add_edge(self, edge: Iterable[int]) -> Hypergraph:
        return Hypergraph(self.k, self.num_vertices, self.edges + (tuple(sorted(edge)),))

    def to_uhg(self, comment: str | None = None) -> str:
        lines = []
        if comment:
            lines.extend(f"# {c}" for c in comment.splitlines())
        lines.append(f"{self.k} {self.num_vertices} {self.num_edges}")
        lines.extend(" ".join(map(str, e)) for e in self.edges)
        return "\n".join(lines) + "\n"

    @classmethod
    def from_uhg(cls, text: str) -> Hypergraph:
        return parse_uhg(text)


@dataclass(frozen=True)
class Embedding:
    """Injective map: pattern vertex ``i`` goes to host vertex ``map[i]``."""

    map: tuple[int, ...] = field(default=())

    def image_edges(self, pattern: Hypergraph) -> list[tuple[int, ...]]:
        return [tuple(sorted(self.map[v] for v in e)) for e in pattern.edges]

    def is_valid(self, host: Hypergraph, pattern: Hypergraph) -> bool:
        if len(self.map) != pattern.num_vertices or len(set(self.map)) != len(self.map):
            return False
        if any(not 0 <= x < host.num_vertices for x in self.map):
            return False
        host_edges = set(host.edges)
        return all(e in host_edges for e in self.image_edges(pattern))


def parse_uhg(text: str) -> Hypergraph:
    """Parse the ``.uhg`` text format.

    Line 1 (after comments) is ``k num_vertices num_edges``; every following
    non-comment line is one edge as ascending vertex ids.
    """
    header = None
    edges: list[tuple[int, ...]] = []
    seen: set[tuple[int, ...]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            nums = [int(tok) for tok in line.split()]
        except ValueError:
            raise ParseError(f"non-integer token in {line!r}", lineno) from None
        if header is None:
            if len(nums) != 3:
                raise ParseError("header must be 'k num_vertices num_edges'", lineno)
            header = nums
            k, n, _ = header
            if k < 1 or n < 0 or nums[2] < 0:
                raise ParseError("header values out of range", lineno)
            continue
        k, n, _ = header
        if len(nums) != k:
            raise ParseError(f"edge has {len(nums)} vertices, expected {k}", lineno)
        if any(b <= a for a, b in zip(nums, nums[1:])):
            raise ParseError("edge vertices must be strictly ascending", lineno)
        if nums[0] < 0 or nums[-1] >= n:
            raise ParseError(f"vertex id outside 0..{n - 1}", lineno)
        t = tuple(nums)
        if t in seen:
            raise ParseError(f"duplicate edge {t}", lineno)
        seen.add(t)
        edges.append(t)
    if header is None:
        raise ParseError("missing header line", 1)
    if len(edges) != header[2]:
        raise ParseError(f"header declares {header[2]} edges, found {len(edges)}")
    return Hypergraph(header[0], header[1], tuple(edges))


def _check_cap(n_vertices: int, cap: int | None) -> None:
    limit = caps().vertex_cap if cap is None else cap
    if n_vertices > limit:
        raise CapExceeded(f"{n_vertices} vertices exceeds the vertex cap {limit}")


def _check_k(k: int) -> None:
    if k < 2:
        raise HypergraphError(f"uniformity must be at least 2, got {k}")


# Generators


def complete(k: int, p: int, *, cap: int | None = None) -> Hypergraph:
    _check_k(k)
    if p < 0:
        raise HypergraphError("p must be non-negative")
    _check_cap(p, cap)
    return Hypergraph(k, p, tuple(combinations(range(p), k)))


def loose_path(k: int, n: int, *, cap: int | None = None) -> Hypergraph:
    _check_k(k)
    if n < 1:
        raise HypergraphError("a loose path needs at least one edge")
    nv = n * (k - 1) + 1
    _check_cap(nv, cap)
    return Hypergraph(k, nv, tuple(tuple(range(i * (k - 1), i * (k - 1) + k)) for i in range(n)))


def loose_cycle(k: int, n: int, *, cap: int | None = None) -> Hypergraph:
    _check_k(k)
    if n < 3:
        raise HypergraphError("a loose cycle needs at least 3 edges")
    nv = n * (k - 1)
    _check_cap(nv, cap)
    es = tuple(tuple((i * (k - 1) + j) % nv for j in range(k)) for i in range(n))
    return Hypergraph(k, nv, es)


def tight_path(k: int, n: int, *, cap: int | None = None) -> Hypergraph:
    _check_k(k)
    if n < 1:
        raise HypergraphError("a tight path needs at least one edge")
    nv = n + k - 1
    _check_cap(nv, cap)
    return Hypergraph(k, nv, tuple(tuple(range(i, i + k)) for i in range(n)))


def tight_cycle(k: int, n: int, *, cap: int | None = None) -> Hypergraph:
    _check_k(k)
    if n <= k:
        raise HypergraphError(f"a tight {k}-uniform cycle needs more than {k} vertices")
    _check_cap(n, cap)
    return Hypergraph(k, n, tuple(tuple((i + j) % n for j in range(k)) for i in range(n)))


def star(k: int, n: int, *, cap: int | None = None) -> Hypergraph:
    """Star with centre 0 and ``n`` edges meeting only in the centre."""
    _check_k(k)
    if n < 1:
        raise HypergraphError("a star needs at least one edge")
    nv = 1 + n * (k - 1)
    _check_cap(nv, cap)
    es = tuple((0,) + tuple(range(1 + i * (k - 1), 1 + (i + 1) * (k - 1))) for i in range(n))
    return Hypergraph(k, nv, es)


def complete_kpartite(sizes: Sequence[int], *, cap: int | None = None) -> Hypergraph:
    """Complete k-partite k-graph; part i occupies the i-th consecutive block."""
    k = len(sizes)
    _check_k(k)
    if any(s < 1 for s in sizes):
        raise HypergraphError("every part needs at least one vertex")
    nv = sum(sizes)
    _check_cap(nv, cap)
    starts = [sum(sizes[:i]) for i in range(k)]
    parts = [range(s, s + l) for s, l in zip(starts, sizes)]
    return Hypergraph(k, nv, tuple(product(*parts)))


def kneser(n: int, r: int, k: int, *, cap: int | None = None, n_cap: int | None = None) -> Hypergraph:
    """Kneser hypergraph on the r-subsets of an n-set (vertex i = colex rank i).

    Edges are the k-sets of pairwise disjoint r-subsets.
    """
    _check_k(k)
    if r < 1 or n < 0:
        raise HypergraphError("kneser needs r >= 1 and n >= 0")
    limit = caps().kneser_n_cap if n_cap is None else n_cap
    if n > limit:
        raise CapExceeded(f"kneser n={n} exceeds the cap {limit}")
    _check_cap(comb(n, r), cap)
    verts = colex_subsets(n, r)
    masks = [sum(1 << x for x in s) for s in verts]
    edges: list[tuple[int, ...]] = []

    def extend(chosen: list[int], used: int, start: int) -> None:
        if len(chosen) == k:
            edges.append(tuple(chosen))
            return
        for i in range(start, len(masks)):
            if not masks[i] & used:
                chosen.append(i)
                extend(chosen, used | masks[i], i + 1)
                chosen.pop()

    extend([], 0, 0)
    return Hypergraph(k, len(verts), tuple(edges))


def lift_graph(g: Hypergraph, k_target: int, *, cap: int | None = None) -> Hypergraph:
    """Pad every graph edge with ``k_target - 2`` private vertices.

    Original vertices keep their ids; the padding of the i-th edge (in
    canonical edge order) follows all earlier padding.
    """
    if g.k != 2:
        raise HypergraphError("lift_graph expects a graph (k = 2)")
    _check_k(k_target)
    extra = k_target - 2
    nv = g.num_vertices + extra * g.num_edges
    _check_cap(nv, cap)
    es = []
    nxt = g.num_vertices
    for e in g.edges:
        es.append(e + tuple(range(nxt, nxt + extra)))
        nxt += extra
    return Hypergraph(k_target, nv, tuple(es))


def disjoint_union(h: Hypergraph, n: int, *, cap: int | None = None) -> Hypergraph:
    """``n`` disjoint copies of ``h``; copy i uses vertices i*|V|..(i+1)*|V|-1."""
    if n < 1:
        raise HypergraphError("need at least one copy")
    nv = h.num_vertices * n
    _check_cap(nv, cap)
    es = tuple(tuple(v + i * h.num_vertices for v in e) for i in range(n) for e in h.edges)
    return Hypergraph(h.k, nv, es)


def union(*parts: Hypergraph, cap: int | None = None) -> Hypergraph:
    """Disjoint union of possibly different hypergraphs, blocks in argument order."""
    if not parts:
        raise HypergraphError("need at least one part")
    k = parts[0].k
    if any(p.k != k for p in parts):
        raise HypergraphError("uniformity mismatch")
    nv = sum(p.num_vertices for p in parts)
    _check_cap(nv, cap)
    es = []
    off = 0
    for p in parts:
        es.extend(tuple(v + off for v in e) for e in p.edges)
        off += p.num_vertices
    return Hypergraph(k, nv, tuple(es))


# Containment


def _plan(pattern: Hypergraph):
    """Static branching order for the pattern vertices.

    Start from a maximum-degree vertex, then repeatedly take the vertex that
    closes the most pattern edges, then shares the most edges with the placed
    vertices, then has the larger degree, then the smaller id.
    """
    n = pattern.num_vertices
    deg = pattern.degrees()
    inc: list[list[int]] = [[] for _ in range(n)]
    for j, e in enumerate(pattern.edges):
        for v in e:
            inc[v].append(j)
    placed_in_edge = [0] * len(pattern.edges)
    order: list[int] = []
    left = set(range(n))
    while left:
        def key(v: int) -> tuple[int, int, int, int]:
            closes = sum(1 for j in inc[v] if placed_in_edge[j] == pattern.k - 1)
            touches = sum(1 for j in inc[v] if placed_in_edge[j] > 0)
            return (-closes, -touches, -deg[v], v)

        v = min(left, key=key)
        left.remove(v)
        order.append(v)
        for j in inc[v]:
            placed_in_edge[j] += 1
    pos = {v: i for i, v in enumerate(order)}
    checks: list[list[tuple[int, ...]]] = [[] for _ in order]
    for e in pattern.edges:
        checks[max(pos[v] for v in e)].append(e)
    pnb = pattern.neighbours()
    earlier = [[w for w in pnb[v] if pos[w] < i] for i, v in enumerate(order)]
    return order, deg, checks, earlier


def twin_classes(h: Hypergraph) -> list[int]:
    """Class id per vertex; u and v share a class iff swapping them is an automorphism."""
    n = h.num_vertices
    edges = set(h.edges)
    inc: list[list[tuple[int, ...]]] = [[] for _ in range(n)]
    for e in h.edges:
        for v in e:
            inc[v].append(e)
    cls = list(range(n))

    def swaps(u: int, v: int) -> bool:
        if len(inc[u]) != len(inc[v]):
            return False
        for e in inc[u]:
            if v not in e and tuple(sorted(v if x == u else x for x in e)) not in edges:
                return False
        return True

    for v in range(n):
        for u in range(v):
            if cls[u] == u and swaps(u, v):
                cls[v] = u
                break
    return cls


def _degree_dominates(host_deg: list[int], pattern_deg: list[int]) -> bool:
    h = sorted(host_deg, reverse=True)
    return all(hd >= pd for hd, pd in zip(h, sorted(pattern_deg, reverse=True)))


def iter_embeddings(host: Hypergraph, pattern: Hypergraph, *, host_twins: list[int] | None = None) -> Iterator[Embedding]:
    """Embeddings of ``pattern`` into ``host`` in a deterministic order.

    Host candidates are tried in ascending order. A candidate is skipped when
    an unused twin of it (see :func:`twin_classes`) was already tried at the
    same position, since the two subtrees are images of each other; the
    first embedding produced is the same as without the skip, but later ones
    are only produced up to such swaps.
    """
    if host.k != pattern.k:
        raise HypergraphError(f"uniformity mismatch: host {host.k}, pattern {pattern.k}")
    pv = pattern.num_vertices
    if pv > host.num_vertices:
        return
    hdeg = host.degrees()
    if not _degree_dominates(hdeg, pattern.degrees()):
        return
    order, pdeg, checks, earlier = _plan(pattern)
    host_edges = set(host.edges)
    hnb = host.neighbours()
    twins = host_twins
    mapping = [-1] * pv
    used = [False] * host.num_vertices
    hv = host.num_vertices

    def rec(i: int) -> Iterator[Embedding]:
        if i == pv:
            yield Embedding(tuple(mapping))
            return
        v = order[i]
        need = pdeg[v]
        anchors = [mapping[w] for w in earlier[i]]
        if anchors:
            cand = set(hnb[anchors[0]])
            for a in anchors[1:]:
                cand &= hnb[a]
            candidates = sorted(cand)
        else:
            candidates = range(hv)
        tried: set[int] = set()
        for x in candidates:
            if used[x] or hdeg[x] < need:
                continue
            if twins is not None:
                if twins[x] in tried:
                    continue
                tried.add(twins[x])
            mapping[v] = x
            if all(tuple(sorted(mapping[u] for u in e)) in host_edges for e in checks[i]):
                used[x] = True
                yield from rec(i + 1)
                used[x] = False
        mapping[v] = -1

    yield from rec(0)


def contains(host: Hypergraph, pattern: Hypergraph) -> Embedding | None:
    """First embedding of ``pattern`` into ``host`` as a (non-induced) subhypergraph."""
    return next(iter_embeddings(host, pattern, host_twins=twin_classes(host)), None)


def automorphism_count(h: Hypergraph) -> int:
    """Number of automorphisms (self-embeddings) of ``h``."""
    return sum(1 for _ in iter_embeddings(h, h))


def is_isomorphic(a: Hypergraph, b: Hypergraph) -> bool:
    if (a.k, a.num_vertices, a.num_edges) != (b.k, b.num_vertices, b.num_edges):
        return False
    if sorted(a.degrees()) != sorted(b.degrees()):
        return False
    return contains(b, a) is not None
