"""Exact two-colour Ramsey numbers at desk scale.

The search assigns the k-subsets of K_n^k in colex order, red first, with
unit propagation over the embedding images of both patterns. When the two
patterns are isomorphic, swapping colours maps the problem to itself and the
colex-first edge is fixed red. Every witness found is re-verified with the
independent containment search before it is reported.
"""

from __future__ import annotations

import hashlib
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field
from itertools import product
from math import comb
from typing import Literal

import numpy as np

from hyperramsey import _kernel
from hyperramsey.cnf import check_variable_cap, parse_model
from hyperramsey.errors import CapExceeded, HypergraphError
from hyperramsey.extremal import TwoColoring, parse_col, ramsey_lower_bound, verify_no_mono
from hyperramsey.hypergraph import Hypergraph, is_isomorphic
from hyperramsey.images import embedding_images

log = logging.getLogger(__name__)

NO_LIMIT = 2**62


class WitnessRejected(HypergraphError):
    """An imported or computed coloring contains a forbidden monochromatic copy."""


@dataclass(frozen=True)
class SubtreeRecord:
    assumptions: tuple[int, ...]
    status: str
    nodes: int
    decisions: int
    conflicts: int
    trace_hash: str


@dataclass(frozen=True)
class ExhaustionCertificate:
    """Record of a complete search that found no good coloring on n vertices.

    ``instance_digest`` fingerprints the clause set; ``subtrees`` partition
    the search space by the values of the first free variables (all
    subtrees must be exhausted). Replaying reruns each subtree and compares
    node counts and trace hashes.
    """

    n: int
    k: int
    num_vars: int
    red_images: int
    blue_images: int
    symmetry: str
    instance_digest: str
    subtrees: tuple[SubtreeRecord, ...]

    @property
    def nodes(self) -> int:
        return sum(s.nodes for s in self.subtrees)

    def as_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, data: dict) -> ExhaustionCertificate:
        subtrees = tuple(
            SubtreeRecord(**{**s, "assumptions": tuple(s["assumptions"])}) for s in data["subtrees"]
        )
        return cls(**{**data, "subtrees": subtrees})


@dataclass(frozen=True)
class SearchOutcome:
    n: int
    status: Literal["found", "exhausted", "limit"]
    coloring: TwoColoring | None = None
    certificate: ExhaustionCertificate | None = None
    nodes: int = 0

    @property
    def found(self) -> bool:
        return self.status == "found"


@dataclass
class _Instance:
    n: int
    k: int
    num_vars: int
    arrays: tuple
    red_images: int
    blue_images: int
    digest: str
    symmetric: bool


def _build(g: Hypergraph, h: Hypergraph, n: int, symmetry: bool) -> _Instance:
    if g.k != h.k:
        raise HypergraphError("uniformity mismatch")
    nv = check_variable_cap(n, g.k)
    red = embedding_images(g, n)
    blue = embedding_images(h, n)
    sizes = np.concatenate([np.full(len(red), red.shape[1]), np.full(len(blue), blue.shape[1])]).astype(np.int32)
    cl_start = np.zeros(len(sizes) + 1, np.int32)
    np.cumsum(sizes, out=cl_start[1:])
    cl_vars = np.concatenate([red.ravel(), blue.ravel()]).astype(np.int32)
    cl_bad = np.concatenate([np.ones(len(red), np.int8), np.zeros(len(blue), np.int8)])
    owner = np.repeat(np.arange(len(sizes), dtype=np.int32), sizes)
    order = np.argsort(cl_vars, kind="stable")
    occ = owner[order].astype(np.int32)
    occ_start = np.zeros(nv + 1, np.int32)
    np.cumsum(np.bincount(cl_vars, minlength=nv), out=occ_start[1:])
    digest = hashlib.sha256()
    for arr in (cl_start, cl_vars, cl_bad):
        digest.update(arr.tobytes())
    symmetric = symmetry and nv > 0 and is_isomorphic(g, h)
    return _Instance(
        n, g.k, nv, (nv, cl_start, cl_vars, cl_bad, occ_start, occ), len(red), len(blue), digest.hexdigest(), symmetric
    )


def _subtrees(inst: _Instance, split_depth: int) -> list[tuple[np.ndarray, np.ndarray]]:
    fixed_vars = [0] if inst.symmetric else []
    fixed_vals = [1] if inst.symmetric else []
    start = len(fixed_vars)
    depth = max(0, min(split_depth, inst.num_vars - start))
    out = []
    for vals in product((1, 0), repeat=depth):
        av = np.array(fixed_vars + list(range(start, start + depth)), np.int32)
        al = np.array(fixed_vals + list(vals), np.int8)
        out.append((av, al))
    return out


def _run(inst: _Instance, assume: tuple[np.ndarray, np.ndarray], node_limit: int):
    status, vals, nodes, decisions, conflicts, trace = _kernel.dpll(*inst.arrays, assume[0], assume[1], node_limit)
    name = {_kernel.UNSAT: "exhausted", _kernel.SAT: "found", _kernel.LIMIT: "limit"}[int(status)]
    rec = SubtreeRecord(tuple(int(x) for x in assume[1]), name, int(nodes), int(decisions), int(conflicts), f"{int(trace):016x}")
    return rec, vals


def search_good_coloring(
    g: Hypergraph,
    h: Hypergraph,
    n: int,
    *,
    symmetry: bool = True,
    split_depth: int = 0,
    threads: int = 1,
    node_limit: int | None = None,
) -> SearchOutcome:
    """Find a coloring of K_n^k with no red ``g`` and no blue ``h``, or prove none exists."""
    inst = _build(g, h, n, symmetry)
    limit = NO_LIMIT if node_limit is None else node_limit
    trees = _subtrees(inst, split_depth)
    records: list[SubtreeRecord] = []
    witness = None
    if threads > 1 and len(trees) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(lambda t: _run(inst, t, limit), trees))
    else:
        results = []
        for t in trees:
            results.append(_run(inst, t, limit))
            if results[-1][0].status == "found":
                break
    for rec, vals in results:
        records.append(rec)
        if rec.status == "found" and witness is None:
            witness = TwoColoring(n, g.k, bytes(int(x) for x in vals))
    total = sum(r.nodes for r in records)
    if witness is not None:
        check = verify_no_mono(witness, g, h)
        if not check.ok:
            raise WitnessRejected(f"search produced a coloring with a {check.status}")
        return SearchOutcome(n, "found", coloring=witness, nodes=total)
    if any(r.status == "limit" for r in records):
        return SearchOutcome(n, "limit", nodes=total)
    cert = ExhaustionCertificate(
        n,
        g.k,
        inst.num_vars,
        inst.red_images,
        inst.blue_images,
        "colour-swap" if inst.symmetric else "none",
        inst.digest,
        tuple(records),
    )
    return SearchOutcome(n, "exhausted", certificate=cert, nodes=total)


def replay_certificate(cert: ExhaustionCertificate, g: Hypergraph, h: Hypergraph) -> bool:
    """Rerun every recorded subtree and compare status, counts and trace hash."""
    inst = _build(g, h, cert.n, cert.symmetry != "none")
    if inst.digest != cert.instance_digest or inst.num_vars != cert.num_vars:
        return False
    if ("colour-swap" if inst.symmetric else "none") != cert.symmetry:
        return False
    start = 1 if inst.symmetric else 0
    for rec in cert.subtrees:
        depth = len(rec.assumptions) - start
        av = np.array(([0] if inst.symmetric else []) + list(range(start, start + depth)), np.int32)
        again, _ = _run(inst, (av, np.array(rec.assumptions, np.int8)), NO_LIMIT)
        if again != rec or rec.status != "exhausted":
            return False
    # the subtrees must cover every assignment of the split variables
    depth = len(cert.subtrees[0].assumptions) - start if cert.subtrees else 0
    expected = {tuple(([1] if inst.symmetric else []) + list(v)) for v in product((1, 0), repeat=depth)}
    return expected == {r.assumptions for r in cert.subtrees}


@dataclass
class RamseyVerdict:
    lo: int
    hi: int | None = None
    witness: TwoColoring | None = None
    certificate: ExhaustionCertificate | None = None
    notes: list[str] = field(default_factory=list)
    lower_construction: str | None = None

    @property
    def exact(self) -> bool:
        return self.hi is not None and self.lo == self.hi

    def as_dict(self, evidence_paths: dict[str, str] | None = None) -> dict:
        evidence: dict = {
            "witness_vertices": None if self.witness is None else self.witness.n,
            "lower_construction": self.lower_construction,
            "upper": None
            if self.certificate is None
            else {
                "kind": "exhaustion",
                "n": self.certificate.n,
                "nodes": self.certificate.nodes,
                "symmetry": self.certificate.symmetry,
            },
            "notes": list(self.notes),
        }
        if evidence_paths:
            evidence["paths"] = dict(evidence_paths)
        return {"lo": self.lo, "hi": self.hi, "exact": self.exact, "evidence": evidence}


def compute_ramsey(
    g: Hypergraph,
    h: Hypergraph,
    n_max: int,
    *,
    symmetry: bool = True,
    split_depth: int = 0,
    threads: int = 1,
    node_limit: int | None = None,
) -> RamseyVerdict:
    """Exact R(g, h) when reachable within ``n_max`` and the caps, else an interval."""
    lb = ramsey_lower_bound(g, h)
    verdict = RamseyVerdict(lb.value, witness=lb.coloring, lower_construction=lb.construction)
    n = lb.value
    while n <= n_max:
        try:
            out = search_good_coloring(
                g, h, n, symmetry=symmetry, split_depth=split_depth, threads=threads, node_limit=node_limit
            )
        except CapExceeded as exc:
            verdict.notes.append(f"stopped at n={n}: {exc}")
            return verdict
        log.info("n=%d: %s after %d nodes", n, out.status, out.nodes)
        if out.status == "found":
            verdict.lo = n + 1
            verdict.witness = out.coloring
            verdict.lower_construction = "search"
            n += 1
            continue
        if out.status == "exhausted":
            verdict.hi = n
            verdict.certificate = out.certificate
            return verdict
        verdict.notes.append(f"node limit reached at n={n}")
        return verdict
    verdict.notes.append(f"n_max={n_max} reached")
    return verdict


def _n_from_vars(num_vars: int, k: int) -> int:
    n = k
    while comb(n, k) < num_vars:
        n += 1
    if comb(n, k) != num_vars:
        raise HypergraphError(f"{num_vars} variables is not C(n,{k}) for any n")
    return n


def import_witness(text: str, g: Hypergraph, h: Hypergraph, *, n: int | None = None) -> RamseyVerdict:
    """Read a ``.col`` coloring or a solver model and re-verify it.

    A verified coloring on n vertices gives ``lo = n + 1``. A solver UNSAT
    answer for n (which must then be given) is recorded as an external
    attestation ``hi = n``; it is not re-checked.
    """
    first = next((ln for ln in text.splitlines() if ln.strip()), "")
    toks = first.split()
    if len(toks) == 2 and all(t.isdigit() for t in toks):
        coloring = parse_col(text)
        if n is not None and coloring.n != n:
            raise HypergraphError(f"coloring has {coloring.n} vertices, expected {n}")
    else:
        lits = parse_model(text)
        if lits is None:
            if n is None:
                raise HypergraphError("an UNSAT answer needs the vertex count n")
            lo = ramsey_lower_bound(g, h, verify=False).value
            return RamseyVerdict(lo, n, notes=[f"external solver reported UNSAT for n={n} (not re-verified)"])
        by_var = {abs(x): x > 0 for x in lits}
        nn = n if n is not None else _n_from_vars(max(by_var, default=0), g.k)
        missing = [i for i in range(1, comb(nn, g.k) + 1) if i not in by_var]
        if missing:
            raise HypergraphError(f"model leaves variable {missing[0]} unassigned")
        coloring = TwoColoring(nn, g.k, bytes(int(by_var[i]) for i in range(1, comb(nn, g.k) + 1)))
    if coloring.k != g.k:
        raise HypergraphError("coloring uniformity differs from the patterns")
    check = verify_no_mono(coloring, g, h)
    if not check.ok:
        raise WitnessRejected(f"coloring contains a {check.status}: {check.embedding}")
    return RamseyVerdict(coloring.n + 1, witness=coloring, lower_construction="imported")
