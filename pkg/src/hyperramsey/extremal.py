"""Red/blue colorings of K_n^k and the general lower-bound constructions.

Colors are stored per k-subset in colex order (1 = red, 0 = blue), which is
also the line order of the ``.col`` file format.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Literal

from hyperramsey.combinatorics import colex_subsets
from hyperramsey.config import caps
from hyperramsey.errors import CapExceeded, HypergraphError, ParseError
from hyperramsey.hypergraph import Embedding, Hypergraph, contains
from hyperramsey.invariants import independence_number, matching_number


@dataclass(frozen=True)
class TwoColoring:
    n: int
    k: int
    red: bytes

    def __post_init__(self) -> None:
        if self.n < 0 or self.k < 1:
            raise HypergraphError("bad coloring dimensions")
        if len(self.red) != comb(self.n, self.k):
            raise HypergraphError(f"expected {comb(self.n, self.k)} colors, got {len(self.red)}")
        if any(b > 1 for b in self.red):
            raise HypergraphError("colors must be 0 (blue) or 1 (red)")

    @classmethod
    def from_function(cls, n: int, k: int, is_red) -> TwoColoring:
        return cls(n, k, bytes(1 if is_red(s) else 0 for s in colex_subsets(n, k)))

    @classmethod
    def monochromatic(cls, n: int, k: int, red: bool) -> TwoColoring:
        return cls(n, k, bytes([int(red)]) * comb(n, k))

    @property
    def num_red(self) -> int:
        return sum(self.red)

    @property
    def num_blue(self) -> int:
        return len(self.red) - self.num_red

    def color(self, rank: int) -> str:
        return "R" if self.red[rank] else "B"

    def red_hypergraph(self) -> Hypergraph:
        subsets = colex_subsets(self.n, self.k)
        return Hypergraph(self.k, self.n, tuple(s for s, r in zip(subsets, self.red) if r))

    def blue_hypergraph(self) -> Hypergraph:
        subsets = colex_subsets(self.n, self.k)
        return Hypergraph(self.k, self.n, tuple(s for s, r in zip(subsets, self.red) if not r))

    def to_col(self) -> str:
        body = "".join("R\n" if r else "B\n" for r in self.red)
        return f"{self.n} {self.k}\n{body}"

    @classmethod
    def from_col(cls, text: str) -> TwoColoring:
        return parse_col(text)


def parse_col(text: str) -> TwoColoring:
    lines = text.splitlines()
    if not lines:
        raise ParseError("empty coloring file", 1)
    head = lines[0].split()
    if len(head) != 2:
        raise ParseError("header must be 'n k'", 1)
    try:
        n, k = int(head[0]), int(head[1])
    except ValueError:
        raise ParseError("header must be two integers", 1) from None
    if n < 0 or k < 1:
        raise ParseError("header values out of range", 1)
    expected = comb(n, k)
    body = lines[1:]
    if len(body) != expected:
        raise ParseError(f"expected exactly {expected} color lines, found {len(body)}")
    out = bytearray(expected)
    for i, raw in enumerate(body):
        tok = raw.strip()
        if tok == "R":
            out[i] = 1
        elif tok != "B":
            raise ParseError(f"color must be 'R' or 'B', got {raw!r}", i + 2)
    return TwoColoring(n, k, bytes(out))


def split_coloring(a_size: int, b_size: int, k: int, red_touches_a: bool = True) -> TwoColoring:
    """Color k-sets meeting A = {0..a_size-1} one color and sets inside B the other."""
    if a_size < 0 or b_size < 0:
        raise HypergraphError("part sizes must be non-negative")
    n = a_size + b_size
    if n > caps().vertex_cap:
        raise CapExceeded(f"coloring on {n} vertices exceeds the vertex cap")
    touch = 1 if red_touches_a else 0
    return TwoColoring(n, k, bytes(touch if s[0] < a_size else 1 - touch for s in colex_subsets(n, k)))


@dataclass(frozen=True)
class MonoCheck:
    status: Literal["witness-free", "red-copy", "blue-copy"]
    embedding: Embedding | None = None

    @property
    def ok(self) -> bool:
        return self.status == "witness-free"


def verify_no_mono(c: TwoColoring, g: Hypergraph, h: Hypergraph) -> MonoCheck:
    """Look for a red copy of ``g``, then a blue copy of ``h``."""
    if not g.k == h.k == c.k:
        raise HypergraphError("uniformity mismatch between coloring and patterns")
    emb = contains(c.red_hypergraph(), g)
    if emb is not None:
        return MonoCheck("red-copy", emb)
    emb = contains(c.blue_hypergraph(), h)
    if emb is not None:
        return MonoCheck("blue-copy", emb)
    return MonoCheck("witness-free")


@dataclass(frozen=True)
class LowerBound:
    value: int
    construction: str
    coloring: TwoColoring | None


def lower_bound_candidates(g: Hypergraph, h: Hypergraph) -> list[tuple[int, str, tuple[int, int, bool] | None]]:
    """The three general lower bounds with their split parameters.

    Each entry is ``(bound, name, (a_size, b_size, red_touches_a))``. A
    construction whose part A would be negative (edgeless pattern) is skipped.
    """
    if g.k != h.k:
        raise HypergraphError("uniformity mismatch")
    vg, vh = g.num_vertices, h.num_vertices
    ag, _ = independence_number(g)
    ah, _ = independence_number(h)
    ng, _ = matching_number(g)
    nh, _ = matching_number(h)
    out: list[tuple[int, str, tuple[int, int, bool] | None]] = []
    if ag <= ah:
        if vg - ag - 1 >= 0:
            out.append((vg + vh - ag - 1, "independence", (vg - ag - 1, vh - 1, True)))
    elif vh - ah - 1 >= 0:
        out.append((vg + vh - ah - 1, "independence", (vh - ah - 1, vg - 1, False)))
    if nh >= 1:
        out.append((vg + nh - 1, "blue-matching", (nh - 1, vg - 1, False)))
    if ng >= 1:
        out.append((vh + ng - 1, "red-matching", (ng - 1, vh - 1, True)))
    return out


def general_lower_bound(g: Hypergraph, h: Hypergraph) -> int:
    """Value of the general lower bound, without building a coloring."""
    return max([1] + [b for b, _, _ in lower_bound_candidates(g, h)])


def ramsey_lower_bound(g: Hypergraph, h: Hypergraph, *, verify: bool = True) -> LowerBound:
    """Best general lower bound and its witness coloring on ``bound - 1`` vertices.

    Ties go to the earliest construction in the order independence,
    blue-matching, red-matching.
    """
    best = None
    for cand in lower_bound_candidates(g, h):
        if best is None or cand[0] > best[0]:
            best = cand
    if best is None:
        return LowerBound(1, "trivial", None)
    value, name, (a, b, red_a) = best
    coloring = split_coloring(a, b, g.k, red_a)
    if verify:
        check = verify_no_mono(coloring, g, h)
        if not check.ok:
            raise AssertionError(f"{name} construction contains a {check.status}")
    return LowerBound(value, name, coloring)
