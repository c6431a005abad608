"""Propositional encoding of "some coloring of K_n^k avoids red g and blue h".

Variable ``i + 1`` is the k-subset of colex rank ``i``; true means red.
Each image of ``g`` yields a clause forbidding all-red, each image of ``h``
a clause forbidding all-blue. The instance is satisfiable iff R(g, h) > n.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from hyperramsey.config import caps
from hyperramsey.errors import CapExceeded, HypergraphError, ParseError
from hyperramsey.hypergraph import Hypergraph
from hyperramsey.images import embedding_images


@dataclass(frozen=True)
class CnfInstance:
    n: int
    k: int
    num_vars: int
    clauses: tuple[tuple[int, ...], ...]
    red_images: int
    blue_images: int

    @property
    def num_clauses(self) -> int:
        return len(self.clauses)

    def to_dimacs(self) -> str:
        lines = [
            f"c two-colour avoidance on K_{self.n}^{self.k}: variable i+1 = k-subset of colex rank i, true = red",
            f"c {self.red_images} red-forbidden images, {self.blue_images} blue-forbidden images",
            f"p cnf {self.num_vars} {self.num_clauses}",
        ]
        lines.extend(" ".join(map(str, c + (0,))) for c in self.clauses)
        return "\n".join(lines) + "\n"


def check_variable_cap(n: int, k: int, variable_cap: int | None = None) -> int:
    limit = caps().variable_cap if variable_cap is None else variable_cap
    nv = comb(n, k)
    if nv > limit:
        raise CapExceeded(f"C({n},{k}) = {nv} variables exceeds the variable cap {limit}")
    return nv


def export_cnf(g: Hypergraph, h: Hypergraph, n: int, *, variable_cap: int | None = None) -> CnfInstance:
    if g.k != h.k:
        raise HypergraphError("uniformity mismatch")
    nv = check_variable_cap(n, g.k, variable_cap)
    red = embedding_images(g, n)
    blue = embedding_images(h, n)
    clauses = [tuple(-(int(r) + 1) for r in row) for row in red]
    clauses += [tuple(int(r) + 1 for r in row) for row in blue]
    return CnfInstance(n, g.k, nv, tuple(clauses), len(red), len(blue))


def parse_dimacs(text: str) -> tuple[int, list[tuple[int, ...]]]:
    """Read a DIMACS CNF; returns (num_vars, clauses)."""
    header = None
    clauses: list[tuple[int, ...]] = []
    current: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("p"):
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise ParseError("expected 'p cnf V C'", lineno)
            header = (int(parts[2]), int(parts[3]))
            continue
        if header is None:
            raise ParseError("clause before the problem line", lineno)
        for tok in line.split():
            lit = int(tok)
            if lit == 0:
                clauses.append(tuple(current))
                current = []
            else:
                if abs(lit) > header[0]:
                    raise ParseError(f"literal {lit} exceeds declared variable count", lineno)
                current.append(lit)
    if header is None:
        raise ParseError("missing problem line")
    if current:
        raise ParseError("last clause is not terminated by 0")
    if len(clauses) != header[1]:
        raise ParseError(f"declared {header[1]} clauses, found {len(clauses)}")
    return header[0], clauses


def parse_model(text: str) -> list[int] | None:
    """Solver output to a literal list; None for an UNSAT answer.

    Accepts competition style (``s ...`` / ``v ...`` lines) and the bare
    MiniSat style (``SAT`` then literals).
    """
    lits: list[int] = []
    status = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        upper = line.upper()
        if upper.startswith("S "):
            status = upper[2:].strip()
            continue
        if upper in ("SAT", "SATISFIABLE", "UNSAT", "UNSATISFIABLE"):
            status = upper
            continue
        if line.startswith("v"):
            line = line[1:]
        try:
            lits.extend(int(tok) for tok in line.split())
        except ValueError:
            raise ParseError(f"unexpected token in model line {raw!r}", lineno) from None
    if status is not None and status.startswith("UNSAT"):
        return None
    if status is None and not lits:
        raise ParseError("no solver status or model found")
    return [x for x in lits if x != 0]
