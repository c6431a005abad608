"""Registry of closed-form Ramsey values with their validity status.

Each entry is one declarative record: a statement, its parameters, the
hypotheses (machine-checkable predicates or flags that cannot be checked)
and the value as a function of the parameters. Integer parameters are
``k`` (uniformity), ``r`` and ``s`` (sizes of the red and blue pieces) and
``m`` and ``n`` (number of disjoint red and blue copies). Hypergraph
parameters are ``G``, ``H`` and, for trees, ``T`` and ``U``.

Statuses:

* ``exact``: proved for every parameter tuple in the domain;
* ``exact-if-hypotheses``: proved once the listed hypotheses are verified;
  :func:`evaluate` upgrades to ``exact`` when they are;
* ``asymptotic``: proved only for sufficiently large parameters, with no
  known threshold; never treated as exact at a finite parameter;
* ``conjectured``: open;
* ``unknown``: stated under an ambiguous convention or for an open case.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache
from math import comb
from typing import Any, Callable, Literal, Mapping

from hyperramsey.config import caps
from hyperramsey.errors import CapExceeded, HypergraphError
from hyperramsey.hypergraph import (
    Hypergraph,
    complete,
    disjoint_union,
    lift_graph,
    loose_cycle,
    loose_path,
    star,
    tight_path,
)
from hyperramsey.invariants import independence_number, matching_number, strong_independence_number

Status = Literal["exact", "exact-if-hypotheses", "asymptotic", "conjectured", "unknown"]
Params = Mapping[str, Any]


class HypothesisViolation(HypergraphError):
    """A checkable hypothesis of a formula entry fails for the given parameters."""


class UnknownEntry(KeyError):
    pass


# --- invariant helpers (cached on the immutable hypergraph) -----------------


@lru_cache(maxsize=512)
def _alpha(h: Hypergraph) -> int:
    return independence_number(h)[0]


@lru_cache(maxsize=512)
def _alpha_star(h: Hypergraph) -> int | None:
    return strong_independence_number(h)[0]


@lru_cache(maxsize=512)
def _nu(h: Hypergraph) -> int:
    return matching_number(h)[0]


def _good(h: Hypergraph) -> bool:
    return _alpha_star(h) is not None and _alpha_star(h) == _alpha(h)


def _is_tree(t: Hypergraph) -> bool:
    return t.k == 2 and t.num_edges == t.num_vertices - 1 and len(t.components()) == 1


def _bipartite(g: Hypergraph) -> bool:
    from hyperramsey.goodness import _two_colour

    return g.k == 2 and _two_colour(g) is not None


# --- pattern specs ----------------------------------------------------------

PatternDesc = tuple  # (family, k, size) or ("custom", hypergraph)

_BUILDERS: dict[str, Callable[[int, int], Hypergraph]] = {
    "loose-cycle": loose_cycle,
    "loose-path": loose_path,
    "tight-path": tight_path,
    "star": star,
    "edge": lambda k, _size: complete(k, k),
}


def _graph_path(vertices: int) -> Hypergraph:
    return Hypergraph.from_edges(2, [(i, i + 1) for i in range(vertices - 1)], vertices)


def build(desc: PatternDesc) -> Hypergraph:
    if desc[0] == "custom":
        return desc[1]
    if desc[0] == "graph-path":
        return _graph_path(desc[2])
    return _BUILDERS[desc[0]](desc[1], desc[2])


# --- records ----------------------------------------------------------------


@dataclass(frozen=True)
class Hypothesis:
    """A condition on the parameters.

    ``check`` returns True/False, or None when it cannot decide. A missing
    ``check`` marks a flag that is never machine-checked (for example
    "n sufficiently large").
    """

    text: str
    check: Callable[[Params], bool | None] | None = None

    @property
    def checkable(self) -> bool:
        return self.check is not None


@dataclass(frozen=True)
class FormulaEntry:
    id: str
    statement: str
    params: tuple[str, ...]
    status: Status
    value: Callable[[Params], int]
    hypotheses: tuple[Hypothesis, ...] = ()
    kind: Literal["value", "upper"] = "value"
    pair: Callable[[Params], tuple[PatternDesc, int, PatternDesc, int]] | None = None
    open_case: Callable[[Params], str | None] | None = None
    note: str = ""

    def as_dict(self) -> dict:
        return {
            "id": self.id,
            "statement": self.statement,
            "params": list(self.params),
            "status": self.status,
            "kind": self.kind,
            "hypotheses": [{"text": h.text, "checkable": h.checkable} for h in self.hypotheses],
            "note": self.note,
        }


@dataclass(frozen=True)
class Evaluation:
    id: str
    value: int | None
    status: Status
    kind: str
    notes: tuple[str, ...] = ()

    def as_dict(self) -> dict:
        return {"id": self.id, "value": self.value, "status": self.status, "kind": self.kind, "notes": list(self.notes)}


# --- small constructors for the table ---------------------------------------


def _h(text: str, pred: Callable[[Params], bool | None] | None = None) -> Hypothesis:
    return Hypothesis(text, pred)


K3 = _h("k >= 3", lambda p: p["k"] >= 3)
MN = _h("m >= n >= 1", lambda p: p["m"] >= p["n"] >= 1)
RS = _h("r >= s >= 1", lambda p: p["r"] >= p["s"] >= 1)
RS3 = _h("r >= s >= 3", lambda p: p["r"] >= p["s"] >= 3)
LARGE_N = _h("n sufficiently large (no known threshold)")
LARGE_MN = _h("m or n sufficiently large (no known threshold)")
CONJ = _h("open conjecture")


def _fam(name: str, size_key: str | int) -> Callable[[Params], PatternDesc]:
    def desc(p: Params) -> PatternDesc:
        size = size_key if isinstance(size_key, int) else p[size_key]
        return (name, p.get("k", 3), size)

    return desc


def _pair(red: Callable[[Params], PatternDesc], blue: Callable[[Params], PatternDesc], multi: bool = True):
    def pair(p: Params):
        return red(p), p["m"] if multi else 1, blue(p), p["n"] if multi else 1

    return pair


def _cycle_size(key: str) -> Hypothesis:
    return _h(f"{key} >= 3 (loose cycles need three edges)", lambda p: p[key] >= 3)


def _fixed_k3(p: Params) -> Params:
    return {**p, "k": 3}


def _alpha_cycle(k: int, n: int) -> int:
    return (k - 1) * n - (n + 1) // 2


def _alpha_path(k: int, n: int) -> int:
    return (k - 1) * n - (n + 1) // 2 + 1


def _alpha_tight_path(k: int, n: int) -> int:
    return n + k - 2 - (n - 1) // k


_ENTRIES: list[FormulaEntry] = []


def _add(entry: FormulaEntry) -> None:
    _ENTRIES.append(entry)


# --- single-copy values ------------------------------------------------------

for _id, _stmt, _red, _blue, _val in [
    ("loose-triangles", "R(C_3^k, C_3^k) = 3k - 2", ("loose-cycle", 3), ("loose-cycle", 3), lambda k: 3 * k - 2),
    ("loose-3-paths", "R(P_3^k, P_3^k) = 3k - 1", ("loose-path", 3), ("loose-path", 3), lambda k: 3 * k - 1),
    ("loose-quadrangles", "R(C_4^k, C_4^k) = 4k - 3", ("loose-cycle", 4), ("loose-cycle", 4), lambda k: 4 * k - 3),
    ("loose-4-paths", "R(P_4^k, P_4^k) = 4k - 2", ("loose-path", 4), ("loose-path", 4), lambda k: 4 * k - 2),
    ("triangle-quadrangle", "R(C_3^k, C_4^k) = 4k - 3", ("loose-cycle", 3), ("loose-cycle", 4), lambda k: 4 * k - 3),
    ("three-edge-stars", "R(S_3^k, S_3^k) = 3k - 2", ("star", 3), ("star", 3), lambda k: 3 * k - 2),
    ("path3-path4", "R(P_3^k, P_4^k) = 4k - 2", ("loose-path", 3), ("loose-path", 4), lambda k: 4 * k - 2),
    ("triangle-path4", "R(C_3^k, P_4^k) = 4k - 2", ("loose-cycle", 3), ("loose-path", 4), lambda k: 4 * k - 2),
    ("path3-quadrangle", "R(P_3^k, C_4^k) = 4k - 3", ("loose-path", 3), ("loose-cycle", 4), lambda k: 4 * k - 3),
    ("triangle-path3", "R(C_3^k, P_3^k) = 3k - 1", ("loose-cycle", 3), ("loose-path", 3), lambda k: 3 * k - 1),
]:
    _add(
        FormulaEntry(
            _id,
            _stmt,
            ("k",),
            "exact",
            (lambda f: lambda p: f(p["k"]))(_val),
            (K3,),
            pair=_pair(_fam(*_red), _fam(*_blue), multi=False),
        )
    )

_add(
    FormulaEntry(
        "cubic-loose-paths",
        "R(P_r^3, P_s^3) = 2r + floor((s+1)/2)",
        ("r", "s"),
        "exact",
        lambda p: 2 * p["r"] + (p["s"] + 1) // 2,
        (RS,),
        pair=lambda p: (("loose-path", 3, p["r"]), 1, ("loose-path", 3, p["s"]), 1),
    )
)
_add(
    FormulaEntry(
        "cubic-loose-cycles",
        "R(C_r^3, C_s^3) = 2r + floor((s+1)/2) - 1",
        ("r", "s"),
        "exact",
        lambda p: 2 * p["r"] + (p["s"] + 1) // 2 - 1,
        (RS, _cycle_size("s")),
        pair=lambda p: (("loose-cycle", 3, p["r"]), 1, ("loose-cycle", 3, p["s"]), 1),
    )
)
_add(
    FormulaEntry(
        "cubic-path-cycle",
        "R(P_r^3, C_s^3) = 2r + floor((s+1)/2)",
        ("r", "s"),
        "exact",
        lambda p: 2 * p["r"] + (p["s"] + 1) // 2,
        (RS, _cycle_size("s")),
        pair=lambda p: (("loose-path", 3, p["r"]), 1, ("loose-cycle", 3, p["s"]), 1),
    )
)
_add(
    FormulaEntry(
        "cubic-cycle-path",
        "R(C_r^3, P_s^3) = 2r + floor((s-1)/2) for r > s",
        ("r", "s"),
        "exact",
        lambda p: 2 * p["r"] + (p["s"] - 1) // 2,
        (_h("r > s >= 1", lambda p: p["r"] > p["s"] >= 1), _cycle_size("r")),
        pair=lambda p: (("loose-cycle", 3, p["r"]), 1, ("loose-path", 3, p["s"]), 1),
    )
)

# --- sufficiently large parameters -------------------------------------------

_IN_FK = _h("G has a strong independent set", lambda p: _alpha_star(p["G"]) is not None)
_G_GOOD = _h("G is good (alpha* = alpha)", lambda p: _good(p["G"]))
_H_GOOD = _h("H is good (alpha* = alpha)", lambda p: _good(p["H"]))
_H_STAR = _h("H has a vertex whose edges form a star", lambda p: p["H"].has_star_vertex())
_G_STAR = _h("G has a vertex whose edges form a star", lambda p: p["G"].has_star_vertex())
_SAME_K = _h("G and H have the same uniformity", lambda p: p["G"].k == p["H"].k)

_add(
    FormulaEntry(
        "good-upper-multi",
        "R(G, nH) <= |V(G)| + n|V(H)| - alpha*(G) - 1",
        ("G", "H", "n"),
        "asymptotic",
        lambda p: p["G"].num_vertices + p["n"] * p["H"].num_vertices - _alpha_star(p["G"]) - 1,
        (_SAME_K, _IN_FK, _H_STAR, LARGE_N),
        kind="upper",
        pair=lambda p: (("custom", p["G"]), 1, ("custom", p["H"]), p["n"]),
    )
)
_add(
    FormulaEntry(
        "good-vs-multi-star-vertex",
        "R(G, nH) = |V(G)| + n|V(H)| - alpha(G) - 1",
        ("G", "H", "n"),
        "asymptotic",
        lambda p: p["G"].num_vertices + p["n"] * p["H"].num_vertices - _alpha(p["G"]) - 1,
        (_SAME_K, _G_GOOD, _H_STAR, LARGE_N),
        pair=lambda p: (("custom", p["G"]), 1, ("custom", p["H"]), p["n"]),
    )
)
_add(
    FormulaEntry(
        "good-vs-multi-linear",
        "R(G, nH) = |V(G)| + n|V(H)| - alpha(G) - 1 for linear H",
        ("G", "H", "n"),
        "asymptotic",
        lambda p: p["G"].num_vertices + p["n"] * p["H"].num_vertices - _alpha(p["G"]) - 1,
        (_SAME_K, _G_GOOD, _h("H is linear", lambda p: p["H"].is_linear()), LARGE_N),
        pair=lambda p: (("custom", p["G"]), 1, ("custom", p["H"]), p["n"]),
    )
)


def _multi_large(id_: str, stmt: str, red: str, blue: str, vr, vb, ar, ab, extra=()):
    def value(p: Params) -> int:
        k, m, n, r, s = p["k"], p["m"], p["n"], p["r"], p["s"]
        return vr(k, r) * m + vb(k, s) * n - min(m * ar(k, r), n * ab(k, s)) - 1

    _add(
        FormulaEntry(
            id_,
            stmt,
            ("k", "r", "s", "m", "n"),
            "asymptotic",
            value,
            (K3, _h("m, n, r, s >= 1", lambda p: min(p["m"], p["n"], p["r"], p["s"]) >= 1), *extra, LARGE_MN),
            pair=_pair(_fam(red, "r"), _fam(blue, "s")),
        )
    )


def _v_cycle(k, n):
    return (k - 1) * n


def _v_path(k, n):
    return (k - 1) * n + 1


_multi_large(
    "multi-loose-cycles-large",
    "R(mC_r^k, nC_s^k) = (k-1)rm + (k-1)sn - min(m alpha(C_r^k), n alpha(C_s^k)) - 1",
    "loose-cycle",
    "loose-cycle",
    _v_cycle,
    _v_cycle,
    _alpha_cycle,
    _alpha_cycle,
    (_cycle_size("r"), _cycle_size("s")),
)
_multi_large(
    "multi-path-cycle-large",
    "R(mP_r^k, nC_s^k) = ((k-1)r+1)m + (k-1)sn - min(m alpha(P_r^k), n alpha(C_s^k)) - 1",
    "loose-path",
    "loose-cycle",
    _v_path,
    _v_cycle,
    _alpha_path,
    _alpha_cycle,
    (_cycle_size("s"),),
)
_multi_large(
    "multi-loose-paths-large",
    "R(mP_r^k, nP_s^k) = ((k-1)r+1)m + ((k-1)s+1)n - min(m alpha(P_r^k), n alpha(P_s^k)) - 1",
    "loose-path",
    "loose-path",
    _v_path,
    _v_path,
    _alpha_path,
    _alpha_path,
)
_multi_large(
    "multi-tight-paths-large",
    "R(mTP_r^k, nTP_s^k) = (r+k-1)m + (s+k-1)n - min(m alpha(TP_r^k), n alpha(TP_s^k)) - 1",
    "tight-path",
    "tight-path",
    lambda k, n: n + k - 1,
    lambda k, n: n + k - 1,
    _alpha_tight_path,
    _alpha_tight_path,
)
_multi_large(
    "multi-stars-large",
    "R(mS_r^k, nS_s^k) = (k-1)(mr+ns) + m + n - min(mr(k-1), ns(k-1)) - 1",
    "star",
    "star",
    _v_path,
    _v_path,
    lambda k, n: (k - 1) * n,
    lambda k, n: (k - 1) * n,
)
_add(
    FormulaEntry(
        "multi-good-large",
        "R(mG, nH) = m|V(G)| + n|V(H)| - min(m alpha(G), n alpha(H)) - 1",
        ("G", "H", "m", "n"),
        "asymptotic",
        lambda p: p["m"] * p["G"].num_vertices
        + p["n"] * p["H"].num_vertices
        - min(p["m"] * _alpha(p["G"]), p["n"] * _alpha(p["H"]))
        - 1,
        (_SAME_K, _h("k >= 3", lambda p: p["G"].k >= 3), _G_GOOD, _H_GOOD, _G_STAR, _H_STAR, LARGE_MN),
        pair=lambda p: (("custom", p["G"]), p["m"], ("custom", p["H"]), p["n"]),
        note="read with G and H good and each having a star vertex, so that the single-copy result applies in either direction",
    )
)
_add(
    FormulaEntry(
        "bipartite-vs-multi-graph",
        "R(G, nH) = n|V(H)| + nu(G) - 1 for G bipartite with a matching saturating a colour class",
        ("G", "H", "n"),
        "asymptotic",
        lambda p: p["n"] * p["H"].num_vertices + _nu(p["G"]) - 1,
        (
            _h("G and H are graphs", lambda p: p["G"].k == 2 and p["H"].k == 2),
            _h("G is bipartite", lambda p: _bipartite(p["G"])),
            _h("G has a matching saturating a colour class", lambda p: _good(p["G"])),
            LARGE_N,
        ),
        pair=lambda p: (("custom", p["G"]), 1, ("custom", p["H"]), p["n"]),
    )
)

# --- multi-copy values --------------------------------------------------------


def _ramsey_matches(p: Params) -> bool | None:
    g, h = p["G"], p["H"]
    target = g.num_vertices + h.num_vertices - _alpha(h) - 1
    if "R_GH" in p:
        return int(p["R_GH"]) == target
    budget = p.get("engine_budget")
    if budget is None:
        return None
    from hyperramsey.engine import compute_ramsey

    try:
        verdict = compute_ramsey(g, h, target, node_limit=int(budget))
    except CapExceeded:
        return None
    if verdict.exact:
        return verdict.lo == target
    if verdict.lo > target or (verdict.hi is not None and verdict.hi < target):
        return False
    return None


_add(
    FormulaEntry(
        "multi-copy-transfer",
        "R(mG, nH) = m|V(G)| + n|V(H)| - n alpha(H) - 1",
        ("G", "H", "m", "n"),
        "exact-if-hypotheses",
        lambda p: p["m"] * p["G"].num_vertices + p["n"] * p["H"].num_vertices - p["n"] * _alpha(p["H"]) - 1,
        (
            _SAME_K,
            MN,
            _h("alpha(G) >= alpha(H)", lambda p: _alpha(p["G"]) >= _alpha(p["H"])),
            _h("R(G, H) = |V(G)| + |V(H)| - alpha(H) - 1", _ramsey_matches),
        ),
        pair=lambda p: (("custom", p["G"]), p["m"], ("custom", p["H"]), p["n"]),
        note="R(G, H) is taken from the R_GH parameter or, given engine_budget, from the search engine",
    )
)

for _id, _stmt, _red, _blue, _val in [
    ("multi-triangles", "R(mC_3^k, nC_3^k) = m(3k-3) + 2n - 1", ("loose-cycle", 3), ("loose-cycle", 3), lambda k, m, n: m * (3 * k - 3) + 2 * n - 1),
    ("multi-quadrangle-triangle", "R(mC_4^k, nC_3^k) = m(4k-4) + 2n - 1", ("loose-cycle", 4), ("loose-cycle", 3), lambda k, m, n: m * (4 * k - 4) + 2 * n - 1),
    ("multi-quadrangles", "R(mC_4^k, nC_4^k) = m(4k-4) + 2n - 1", ("loose-cycle", 4), ("loose-cycle", 4), lambda k, m, n: m * (4 * k - 4) + 2 * n - 1),
    ("multi-path3-triangle", "R(mP_3^k, nC_3^k) = m(3k-2) + 2n - 1", ("loose-path", 3), ("loose-cycle", 3), lambda k, m, n: m * (3 * k - 2) + 2 * n - 1),
    ("multi-path4-triangle", "R(mP_4^k, nC_3^k) = m(4k-3) + 2n - 1", ("loose-path", 4), ("loose-cycle", 3), lambda k, m, n: m * (4 * k - 3) + 2 * n - 1),
    ("multi-path4-quadrangle", "R(mP_4^k, nC_4^k) = m(4k-3) + 2n - 1", ("loose-path", 4), ("loose-cycle", 4), lambda k, m, n: m * (4 * k - 3) + 2 * n - 1),
    ("multi-path3s", "R(mP_3^k, nP_3^k) = m(3k-2) + 2n - 1", ("loose-path", 3), ("loose-path", 3), lambda k, m, n: m * (3 * k - 2) + 2 * n - 1),
    ("multi-path4-path3", "R(mP_4^k, nP_3^k) = m(4k-3) + 2n - 1", ("loose-path", 4), ("loose-path", 3), lambda k, m, n: m * (4 * k - 3) + 2 * n - 1),
    ("multi-path4s", "R(mP_4^k, nP_4^k) = m(4k-3) + 2n - 1", ("loose-path", 4), ("loose-path", 4), lambda k, m, n: m * (4 * k - 3) + 2 * n - 1),
    ("multi-three-edge-stars", "R(mS_3^k, nS_3^k) = m(3k-2) + n - 1", ("star", 3), ("star", 3), lambda k, m, n: m * (3 * k - 2) + n - 1),
    ("multi-edges", "R(mK_k^k, nK_k^k) = mk + n - 1", ("edge", 1), ("edge", 1), lambda k, m, n: m * k + n - 1),
]:
    _add(
        FormulaEntry(
            _id,
            _stmt,
            ("k", "m", "n"),
            "exact",
            (lambda f: lambda p: f(p["k"], p["m"], p["n"]))(_val),
            (K3, MN),
            pair=_pair(_fam(*_red), _fam(*_blue)),
        )
    )

_add(
    FormulaEntry(
        "multi-vs-edges",
        "R(mH, nK_k^k) = m|V(H)| + n - 1",
        ("H", "m", "n"),
        "exact",
        lambda p: p["m"] * p["H"].num_vertices + p["n"] - 1,
        (_h("k >= 3", lambda p: p["H"].k >= 3), MN),
        pair=lambda p: (("custom", p["H"]), p["m"], ("edge", p["H"].k, 1), p["n"]),
    )
)

_add(
    FormulaEntry(
        "multi-cubic-loose-paths",
        "R(mP_r^3, nP_s^3) = (2r+1)m + floor((s+1)/2)n - 1",
        ("r", "s", "m", "n"),
        "exact",
        lambda p: (2 * p["r"] + 1) * p["m"] + (p["s"] + 1) // 2 * p["n"] - 1,
        (MN, RS),
        pair=lambda p: _pair(_fam("loose-path", "r"), _fam("loose-path", "s"))(_fixed_k3(p)),
    )
)
_add(
    FormulaEntry(
        "multi-cubic-path-cycle",
        "R(mP_r^3, nC_s^3) = (2r+1)m + floor((s+1)/2)n - 1",
        ("r", "s", "m", "n"),
        "exact",
        lambda p: (2 * p["r"] + 1) * p["m"] + (p["s"] + 1) // 2 * p["n"] - 1,
        (MN, RS, _cycle_size("s")),
        pair=lambda p: _pair(_fam("loose-path", "r"), _fam("loose-cycle", "s"))(_fixed_k3(p)),
    )
)
_add(
    FormulaEntry(
        "multi-cubic-loose-cycles",
        "R(mC_r^3, nC_s^3) = 2rm + floor((s+1)/2)n - 1",
        ("r", "s", "m", "n"),
        "exact",
        lambda p: 2 * p["r"] * p["m"] + (p["s"] + 1) // 2 * p["n"] - 1,
        (MN, RS, _cycle_size("s")),
        pair=lambda p: _pair(_fam("loose-cycle", "r"), _fam("loose-cycle", "s"))(_fixed_k3(p)),
    )
)
_add(
    FormulaEntry(
        "multi-cubic-cycle-path",
        "R(mC_r^3, nP_s^3) = 2rm + floor((s+1)/2)n - 1 for r > s",
        ("r", "s", "m", "n"),
        "exact",
        lambda p: 2 * p["r"] * p["m"] + (p["s"] + 1) // 2 * p["n"] - 1,
        (MN, RS, _cycle_size("r")),
        pair=lambda p: _pair(_fam("loose-cycle", "r"), _fam("loose-path", "s"))(_fixed_k3(p)),
        open_case=lambda p: "the case r = s is open" if p["r"] == p["s"] else None,
    )
)
_add(
    FormulaEntry(
        "multi-graph-paths-vertices",
        "R(mP_r, nP_s) = rm + floor(s/2)n - 1, P_r the graph path on r vertices",
        ("r", "s", "m", "n"),
        "exact",
        lambda p: p["r"] * p["m"] + p["s"] // 2 * p["n"] - 1,
        (MN, _h("r >= s >= 2", lambda p: p["r"] >= p["s"] >= 2)),
        pair=lambda p: (("graph-path", 2, p["r"]), p["m"], ("graph-path", 2, p["s"]), p["n"]),
        note="vertex-count reading; agrees with exhaustive search on small cases",
    )
)
_add(
    FormulaEntry(
        "multi-graph-paths-edges",
        "R(mP_r, nP_s) = rm + floor(s/2)n - 1, P_r the graph path with r edges",
        ("r", "s", "m", "n"),
        "unknown",
        lambda p: p["r"] * p["m"] + p["s"] // 2 * p["n"] - 1,
        (MN, RS),
        pair=lambda p: (("graph-path", 2, p["r"] + 1), p["m"], ("graph-path", 2, p["s"] + 1), p["n"]),
        note="edge-count reading, kept for comparison; contradicted by search (r = s = 1 gives 0, the true value is 2)",
    )
)

# --- conjectures --------------------------------------------------------------

for _id, _stmt, _red, _blue, _vr, _extra in [
    ("conj-loose-paths", "R(mP_r^k, nP_s^k) = ((k-1)r+1)m + floor((s+1)/2)n - 1", "loose-path", "loose-path", lambda k, r: (k - 1) * r + 1, ()),
    ("conj-loose-path-cycle", "R(mP_r^k, nC_s^k) = ((k-1)r+1)m + floor((s+1)/2)n - 1", "loose-path", "loose-cycle", lambda k, r: (k - 1) * r + 1, ()),
    ("conj-loose-cycles", "R(mC_r^k, nC_s^k) = (k-1)rm + floor((s+1)/2)n - 1", "loose-cycle", "loose-cycle", lambda k, r: (k - 1) * r, ()),
    (
        "conj-loose-cycle-path",
        "R(mC_r^k, nP_s^k) = (k-1)rm + floor((s+1)/2)n - 1 for r > s",
        "loose-cycle",
        "loose-path",
        lambda k, r: (k - 1) * r,
        (_h("r > s", lambda p: p["r"] > p["s"]),),
    ),
]:
    _add(
        FormulaEntry(
            _id,
            _stmt,
            ("k", "r", "s", "m", "n"),
            "conjectured",
            (lambda f: lambda p: f(p["k"], p["r"]) * p["m"] + (p["s"] + 1) // 2 * p["n"] - 1)(_vr),
            (K3, MN, RS3, *_extra, CONJ),
            pair=_pair(_fam(_red, "r"), _fam(_blue, "s")),
        )
    )

_add(
    FormulaEntry(
        "conj-tight-paths",
        "R(mTP_r^k, nTP_s^k) = (r+k-1)m + (1 + floor((s-1)/k))n - 1",
        ("k", "r", "s", "m", "n"),
        "conjectured",
        lambda p: (p["r"] + p["k"] - 1) * p["m"] + (1 + (p["s"] - 1) // p["k"]) * p["n"] - 1,
        (K3, MN, RS3, CONJ),
        pair=_pair(_fam("tight-path", "r"), _fam("tight-path", "s")),
    )
)


def _tree_lifts(p: Params) -> tuple[Hypergraph, Hypergraph]:
    return lift_graph(p["T"], p["k"]), lift_graph(p["U"], p["k"])


def _conj_tree_value(p: Params) -> int:
    g, h = _tree_lifts(p)
    return p["m"] * g.num_vertices + p["n"] * h.num_vertices - p["m"] * _alpha(g) - 1


def _tree_hyp(p: Params) -> bool:
    return all(_is_tree(t) and _good(t) for t in (p["T"], p["U"]))


def _tree_alpha(p: Params) -> bool:
    g, h = _tree_lifts(p)
    return _alpha(g) <= _alpha(h)


_add(
    FormulaEntry(
        "conj-tree-lifts",
        "R(mG, nH) = m|V(G)| + n|V(H)| - m alpha(G) - 1 for G = H_k(T), H = H_k(U)",
        ("T", "U", "k", "m", "n"),
        "conjectured",
        _conj_tree_value,
        (
            K3,
            _h("T and U are good trees", _tree_hyp),
            _h("alpha(G) <= alpha(H)", _tree_alpha),
            _h("1 <= m <= n", lambda p: 1 <= p["m"] <= p["n"]),
            CONJ,
        ),
        pair=lambda p: (("custom", _tree_lifts(p)[0]), p["m"], ("custom", _tree_lifts(p)[1]), p["n"]),
    )
)

REGISTRY: dict[str, FormulaEntry] = {e.id: e for e in _ENTRIES}


# --- operations ---------------------------------------------------------------


def get(entry_id: str) -> FormulaEntry:
    try:
        return REGISTRY[entry_id]
    except KeyError:
        raise UnknownEntry(entry_id) from None


def evaluate(entry_id: str, params: Params) -> Evaluation:
    """Evaluate an entry; raises :class:`HypothesisViolation` on a failed checkable hypothesis."""
    entry = get(entry_id)
    missing = [name for name in entry.params if name not in params]
    if missing:
        raise HypergraphError(f"{entry_id}: missing parameter(s) {', '.join(missing)}")
    undecided: list[str] = []
    flags: list[str] = []
    for hyp in entry.hypotheses:
        if hyp.check is None:
            flags.append(hyp.text)
            continue
        result = hyp.check(params)
        if result is False:
            raise HypothesisViolation(f"{entry_id}: hypothesis fails: {hyp.text}")
        if result is None:
            undecided.append(hyp.text)
    if entry.open_case is not None:
        reason = entry.open_case(params)
        if reason:
            return Evaluation(entry_id, None, "unknown", entry.kind, (reason,))
    status: Status = entry.status
    notes = [f"unchecked: {t}" for t in flags]
    if status == "exact-if-hypotheses":
        if undecided:
            notes += [f"not verified: {t}" for t in undecided]
        else:
            status = "exact"
    return Evaluation(entry_id, int(entry.value(params)), status, entry.kind, tuple(notes))


def patterns(entry_id: str, params: Params) -> tuple[Hypergraph, Hypergraph]:
    """The red and blue patterns (with copies) an entry speaks about."""
    entry = get(entry_id)
    if entry.pair is None:
        raise HypergraphError(f"{entry_id} has no pattern description")
    red, m, blue, n = entry.pair(params)
    return disjoint_union(build(red), m), disjoint_union(build(blue), n)


def pair_key(entry_id: str, params: Params) -> tuple:
    """Orientation-free description of the Ramsey number an entry evaluates."""
    red, m, blue, n = get(entry_id).pair(params)
    red = red if red[0] != "custom" else ("custom", red[1].k, red[1].num_vertices, red[1].edges)
    blue = blue if blue[0] != "custom" else ("custom", blue[1].k, blue[1].num_vertices, blue[1].edges)
    return min((red, m, blue, n), (blue, n, red, m))


@dataclass
class CrossCheck:
    id: str
    formula_value: int | None
    status: str
    engine_lo: int | None = None
    engine_hi: int | None = None
    outcome: Literal["agree", "mismatch", "inconclusive", "evidence unavailable"] = "inconclusive"
    severity: Literal["failure", "evidence", "none"] = "none"
    notes: list[str] = field(default_factory=list)

    def as_dict(self) -> dict:
        return {
            "id": self.id,
            "formula_value": self.formula_value,
            "status": self.status,
            "engine_lo": self.engine_lo,
            "engine_hi": self.engine_hi,
            "outcome": self.outcome,
            "severity": self.severity,
            "notes": list(self.notes),
        }


def cross_check(entry_id: str, params: Params, engine_budget: int | None = None) -> CrossCheck:
    """Compare an entry against the search engine where the instance fits the caps.

    A mismatch on an exact entry has severity ``failure``; on any other
    status it is recorded as ``evidence``.
    """
    from hyperramsey.engine import compute_ramsey

    ev = evaluate(entry_id, params)
    report = CrossCheck(entry_id, ev.value, ev.status)
    if ev.value is None:
        report.outcome = "evidence unavailable"
        report.notes.extend(ev.notes)
        return report
    red, blue = patterns(entry_id, params)
    limits = caps()
    if comb(ev.value, red.k) > limits.variable_cap or max(red.num_vertices, blue.num_vertices) > limits.vertex_cap:
        report.outcome = "evidence unavailable"
        report.notes.append(f"C({ev.value},{red.k}) = {comb(ev.value, red.k)} exceeds the variable cap {limits.variable_cap}")
        return report
    try:
        verdict = compute_ramsey(red, blue, ev.value, node_limit=engine_budget)
    except CapExceeded as exc:
        report.outcome = "evidence unavailable"
        report.notes.append(str(exc))
        return report
    report.engine_lo, report.engine_hi = verdict.lo, verdict.hi
    report.notes.extend(verdict.notes)
    if ev.kind == "upper":
        ok = verdict.lo <= ev.value
        conclusive = verdict.hi is not None or not ok
    else:
        ok = verdict.lo <= ev.value and (verdict.hi is None or verdict.hi >= ev.value)
        conclusive = verdict.exact or not ok
    if not conclusive:
        report.outcome = "inconclusive"
        return report
    if ok and (ev.kind == "upper" or verdict.lo == ev.value):
        report.outcome = "agree"
        return report
    report.outcome = "mismatch"
    report.severity = "failure" if ev.status == "exact" else "evidence"
    return report


def registry_table() -> list[dict]:
    return [e.as_dict() for e in _ENTRIES]


def registry_json(indent: int = 2) -> str:
    return json.dumps({"entries": registry_table()}, indent=indent)


@dataclass
class ConsistencyReport:
    points: int
    overlaps: int
    conflicts: list[tuple[tuple, list[tuple[str, int]]]]

    @property
    def ok(self) -> bool:
        return not self.conflicts


_GRID_KEYS = {"k", "r", "s", "m", "n"}


def consistency_check(k_max: int = 6, size_max: int = 8, copies_max: int = 5) -> ConsistencyReport:
    """Check that entries describing the same Ramsey number give the same value.

    Covers every entry with only integer parameters and status exact,
    conjectured or exact-if-hypotheses, over k in 2..k_max, r, s in
    1..size_max and m, n in 1..copies_max. Points where a checkable
    hypothesis fails are skipped.
    """
    from itertools import product

    ranges = {"k": range(2, k_max + 1), "r": range(1, size_max + 1), "s": range(1, size_max + 1)}
    ranges.update({"m": range(1, copies_max + 1), "n": range(1, copies_max + 1)})
    seen: dict[tuple, list[tuple[str, int]]] = {}
    points = 0
    for entry in _ENTRIES:
        if entry.status in ("asymptotic", "unknown") or not set(entry.params) <= _GRID_KEYS:
            continue
        for values in product(*(ranges[name] for name in entry.params)):
            params = dict(zip(entry.params, values))
            try:
                ev = evaluate(entry.id, params)
            except HypothesisViolation:
                continue
            if ev.value is None:
                continue
            points += 1
            seen.setdefault(pair_key(entry.id, params), []).append((entry.id, ev.value))
    overlaps = [(key, vals) for key, vals in seen.items() if len({i for i, _ in vals}) > 1]
    conflicts = [(key, vals) for key, vals in overlaps if len({v for _, v in vals}) > 1]
    return ConsistencyReport(points, len(overlaps), conflicts)
