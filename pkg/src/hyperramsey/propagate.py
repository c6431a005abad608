"""Interval propagation for R(mA, nB) over named base hypergraphs.

Upper bounds come only from the general inequalities below; lower bounds
from the general constructions. Results that hold only for "sufficiently
large" parameters are never used, since their thresholds are unknown.

* swap:      R(mA, nB) = R(nB, mA)
* union:     R(mA, (a+b)B) <= max(R(mA, bB) + a|V(B)|, R(mA, aB))
* additive:  R(mA, nB) <= R(A, B) + (m-1)|V(A)| + (n-1)|V(B)|
* peel:      R(mA, nB) <= R((m-1)A, (n-1)B) + R(A, B) + 1      (2 <= m <= n)
* diagonal:  R(nA, nB) <= (R(A, B) + 1) n - 1
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping

from hyperramsey.errors import HypergraphError
from hyperramsey.hypergraph import Hypergraph
from hyperramsey.invariants import independence_number, matching_number

Key = tuple[str, int, str, int]


@dataclass(frozen=True)
class KnownValue:
    red: str
    m: int
    blue: str
    n: int
    lo: int
    hi: int | None
    source: str = "given"


@dataclass
class Interval:
    lo: int
    hi: int | None
    lo_rule: str
    hi_rule: str | None = None
    hi_from: tuple[Key, ...] = field(default_factory=tuple)

    @property
    def exact(self) -> bool:
        return self.hi is not None and self.lo == self.hi


def label(key: Key) -> str:
    a, m, b, n = key
    return f"R({m}{a}, {n}{b})"


@dataclass(frozen=True)
class _Base:
    v: int
    alpha: int
    nu: int


def _lower(a: _Base, m: int, b: _Base, n: int) -> tuple[int, str]:
    va, vb = m * a.v, n * b.v
    aa, ab = m * a.alpha, n * b.alpha
    cands = [(1, "trivial")]
    if min(aa, ab) < (va if aa <= ab else vb):
        cands.append((va + vb - min(aa, ab) - 1, "independence construction"))
    if b.nu:
        cands.append((va + n * b.nu - 1, "blue-matching construction"))
    if a.nu:
        cands.append((vb + m * a.nu - 1, "red-matching construction"))
    return max(cands, key=lambda c: c[0])


def bound_propagate(
    known: Iterable[KnownValue],
    bases: Mapping[str, Hypergraph],
    *,
    max_copies: int = 3,
    pairs: Iterable[tuple[str, str]] | None = None,
) -> dict[Key, Interval]:
    """Close the known values under the rules above for multiplicities up to ``max_copies``.

    Every base pair occurring in ``known`` (plus ``pairs``) is expanded in
    both orientations.
    """
    known = list(known)
    info = {}
    for name, h in bases.items():
        info[name] = _Base(h.num_vertices, independence_number(h)[0], matching_number(h)[0])
    ks = {h.k for h in bases.values()}
    if len(ks) > 1:
        raise HypergraphError("all bases must share one uniformity")
    base_pairs = {(kv.red, kv.blue) for kv in known} | set(pairs or ())
    base_pairs |= {(b, a) for a, b in base_pairs}
    for a, b in base_pairs:
        if a not in bases or b not in bases:
            raise HypergraphError(f"unknown base in pair ({a}, {b})")

    table: dict[Key, Interval] = {}
    for a, b in sorted(base_pairs):
        for m in range(1, max_copies + 1):
            for n in range(1, max_copies + 1):
                lo, why = _lower(info[a], m, info[b], n)
                table[(a, m, b, n)] = Interval(lo, None, why)

    for kv in known:
        for key in ((kv.red, kv.m, kv.blue, kv.n), (kv.blue, kv.n, kv.red, kv.m)):
            if key not in table:
                continue
            iv = table[key]
            if kv.lo > iv.lo:
                iv.lo, iv.lo_rule = kv.lo, f"known ({kv.source})"
            if kv.hi is not None and (iv.hi is None or kv.hi < iv.hi):
                iv.hi, iv.hi_rule, iv.hi_from = kv.hi, f"known ({kv.source})", ()

    def hi(key: Key) -> int | None:
        iv = table.get(key)
        return None if iv is None else iv.hi

    def offer(key: Key, value: int, rule: str, deps: tuple[Key, ...]) -> bool:
        iv = table[key]
        if iv.hi is None or value < iv.hi:
            iv.hi, iv.hi_rule, iv.hi_from = value, rule, deps
            return True
        return False

    changed = True
    while changed:
        changed = False
        for key in table:
            a, m, b, n = key
            swapped = (b, n, a, m)
            if hi(swapped) is not None:
                changed |= offer(key, hi(swapped), "swap", (swapped,))
            single = (a, 1, b, 1)
            r1 = hi(single)
            if r1 is not None and (m, n) != (1, 1):
                value = r1 + (m - 1) * info[a].v + (n - 1) * info[b].v
                changed |= offer(key, value, "additive", (single,))
                if m == n:
                    changed |= offer(key, (r1 + 1) * n - 1, "diagonal", (single,))
                if 2 <= m <= n:
                    prev = (a, m - 1, b, n - 1)
                    if hi(prev) is not None:
                        changed |= offer(key, hi(prev) + r1 + 1, "peel", (prev, single))
            for part in range(1, n):
                left, right = (a, m, b, n - part), (a, m, b, part)
                if hi(left) is not None and hi(right) is not None:
                    value = max(hi(left) + part * info[b].v, hi(right))
                    changed |= offer(key, value, "union", (left, right))

    for key, iv in table.items():
        if iv.hi is not None and iv.lo > iv.hi:
            raise HypergraphError(f"inconsistent known values: {label(key)} in [{iv.lo}, {iv.hi}]")
    return table


def derivation(table: Mapping[Key, Interval], key: Key) -> list[str]:
    """Human-readable chain justifying the upper bound of ``key``, root last."""
    lines: list[str] = []
    seen: set[Key] = set()

    def walk(k: Key) -> None:
        if k in seen:
            return
        seen.add(k)
        iv = table[k]
        for dep in iv.hi_from:
            walk(dep)
        deps = ", ".join(label(d) for d in iv.hi_from)
        suffix = f" from {deps}" if deps else ""
        lines.append(f"{label(k)} <= {iv.hi} by {iv.hi_rule}{suffix}")

    if table[key].hi is not None:
        walk(key)
    return lines
