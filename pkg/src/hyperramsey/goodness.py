"""Certification of good hypergraphs (alpha* = alpha) by three routes.

* definitional: compute both numbers and compare;
* covering criterion: split V into an exact transversal V1 and its
  complement V2, then require tau(H_S) >= |S| for every S inside V1;
* bipartite graphs: 2-colour and look for a matching saturating a colour
  class in every component (Hall's condition for the covering criterion).

Criterion note: if the covering criterion holds for some V1 then
|V2| = alpha, so V1 is a minimum exact transversal; conversely every minimum
exact transversal of a good hypergraph satisfies it. Checking the one
minimum transversal returned by the invariants search is therefore enough.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Literal

from hyperramsey.config import caps
from hyperramsey.errors import CapExceeded, HypergraphError
from hyperramsey.hypergraph import Hypergraph
from hyperramsey.invariants import (
    covering_number,
    independence_number,
    is_exact_transversal,
    minimum_exact_transversal,
    strong_independence_number,
    truncate,
)

Verdict = Literal["good", "not-in-Fk", "in-Fk-not-good"]


@dataclass(frozen=True)
class GoodnessCertificate:
    verdict: Verdict
    strong_set: tuple[int, ...] | None = None
    violation: tuple[int, ...] | None = None
    route: str = "definitional"

    @property
    def good(self) -> bool:
        return self.verdict == "good"

    def as_dict(self) -> dict:
        return {
            "verdict": self.verdict,
            "route": self.route,
            "strong_set": None if self.strong_set is None else list(self.strong_set),
            "violation": None if self.violation is None else list(self.violation),
        }


@dataclass(frozen=True)
class CoveringCheck:
    holds: bool
    violation: tuple[int, ...] | None = None


def is_good_definitional(h: Hypergraph) -> GoodnessCertificate:
    astar, strong = strong_independence_number(h)
    if astar is None:
        return GoodnessCertificate("not-in-Fk")
    alpha, _ = independence_number(h)
    return GoodnessCertificate("good" if astar == alpha else "in-Fk-not-good", strong)


def check_covering_criterion(h: Hypergraph, v1: Iterable[int], *, subset_cap: int | None = None) -> CoveringCheck:
    """Test tau(H_S) >= |S| for all non-empty S inside ``v1``, in colex order.

    Returns the first violating S, if any.
    """
    v1 = tuple(sorted(set(v1)))
    if not is_exact_transversal(h, v1):
        raise HypergraphError("v1 must meet every edge in exactly one vertex")
    limit = caps().subset_cap if subset_cap is None else subset_cap
    if len(v1) > limit:
        raise CapExceeded(f"|V1| = {len(v1)} exceeds the subset cap {limit}")
    for mask in range(1, 1 << len(v1)):
        s = [v1[i] for i in range(len(v1)) if mask >> i & 1]
        tau, _ = covering_number(truncate(h, s))
        if tau < len(s):
            return CoveringCheck(False, tuple(s))
    return CoveringCheck(True)


def is_good_covering(h: Hypergraph) -> GoodnessCertificate:
    """Goodness through the covering criterion on a minimum exact transversal."""
    t = minimum_exact_transversal(h)
    if t is None:
        return GoodnessCertificate("not-in-Fk", route="covering")
    ts = set(t)
    strong = tuple(v for v in range(h.num_vertices) if v not in ts)
    check = check_covering_criterion(h, t)
    if check.holds:
        return GoodnessCertificate("good", strong, route="covering")
    return GoodnessCertificate("in-Fk-not-good", strong, check.violation, route="covering")


def _two_colour(g: Hypergraph) -> list[int] | None:
    adj: list[list[int]] = [[] for _ in range(g.num_vertices)]
    for a, b in g.edges:
        adj[a].append(b)
        adj[b].append(a)
    side = [-1] * g.num_vertices
    for s in range(g.num_vertices):
        if side[s] != -1:
            continue
        side[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if side[w] == -1:
                    side[w] = 1 - side[u]
                    queue.append(w)
                elif side[w] == side[u]:
                    return None
    return side


def _saturating_matching(left: list[int], adj: dict[int, list[int]]) -> tuple[dict[int, int], int | None]:
    """Augmenting-path matching from ``left``; returns (match of right vertices, first unmatched left)."""
    match_right: dict[int, int] = {}

    def augment(u: int, seen: set[int]) -> bool:
        for w in adj[u]:
            if w in seen:
                continue
            seen.add(w)
            if w not in match_right or augment(match_right[w], seen):
                match_right[w] = u
                return True
        return False

    for u in left:
        if not augment(u, set()):
            return match_right, u
    return match_right, None


def _hall_violator(u: int, adj: dict[int, list[int]], match_right: dict[int, int]) -> tuple[int, ...]:
    """Left vertices reachable from unmatched ``u`` by alternating paths."""
    reached = {u}
    queue = deque([u])
    while queue:
        x = queue.popleft()
        for w in adj[x]:
            y = match_right.get(w)
            if y is not None and y not in reached:
                reached.add(y)
                queue.append(y)
    return tuple(sorted(reached))


def is_good_bipartite(g: Hypergraph) -> GoodnessCertificate:
    """Graph goodness: bipartite with a colour class saturated in every component."""
    if g.k != 2:
        raise HypergraphError("is_good_bipartite expects a graph (k = 2)")
    side = _two_colour(g)
    if side is None:
        return GoodnessCertificate("not-in-Fk", route="bipartite")
    adj: dict[int, list[int]] = {v: [] for v in range(g.num_vertices)}
    for a, b in g.edges:
        adj[a].append(b)
        adj[b].append(a)
    strong: list[int] = []
    violation = None
    for comp in g.components():
        first = [v for v in comp if side[v] == side[comp[0]]]
        second = [v for v in comp if side[v] != side[comp[0]]]
        chosen = None
        for v1 in (second, first):
            match_right, bad = _saturating_matching(v1, adj)
            if bad is None:
                chosen = v1
                break
        if chosen is None:
            v1 = second if len(first) >= len(second) else first
            match_right, bad = _saturating_matching(v1, adj)
            if violation is None:
                violation = _hall_violator(bad, adj, match_right)
            chosen = v1
        inside = set(chosen)
        strong.extend(v for v in comp if v not in inside)
    strong_set = tuple(sorted(strong))
    if violation is None:
        return GoodnessCertificate("good", strong_set, route="bipartite")
    return GoodnessCertificate("in-Fk-not-good", strong_set, violation, route="bipartite")
