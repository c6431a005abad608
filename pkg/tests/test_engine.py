from dataclasses import replace
from math import comb

import pytest
from pysat.solvers import Minisat22

from hyperramsey.cnf import export_cnf
from hyperramsey.config import set_caps
from hyperramsey.engine import (
    ExhaustionCertificate,
    WitnessRejected,
    compute_ramsey,
    import_witness,
    replay_certificate,
    search_good_coloring,
)
from hyperramsey.errors import CapExceeded, HypergraphError
from hyperramsey.extremal import TwoColoring, split_coloring, verify_no_mono
from hyperramsey.hypergraph import complete, disjoint_union, loose_cycle, loose_path, star, tight_path

C3 = loose_cycle(3, 3)


def sat(g, h, n):
    inst = export_cnf(g, h, n)
    with Minisat22(bootstrap_with=[list(c) for c in inst.clauses]) as s:
        return s.solve()


GRAPH_PAIRS = [
    (complete(2, 3), complete(2, 3)),
    (loose_cycle(2, 4), loose_cycle(2, 4)),
    (loose_path(2, 3), loose_path(2, 3)),
    (complete(2, 3), star(2, 3)),
    (loose_cycle(2, 4), loose_path(2, 2)),
]

HYPER_PAIRS = [
    (C3, C3),
    (loose_path(3, 2), loose_path(3, 2)),
    (complete(3, 3), C3),
    (tight_path(3, 2), complete(3, 3)),
    (star(3, 2), loose_path(3, 2)),
]


class TestExactValues:
    @pytest.mark.parametrize(
        "g,h,value",
        [
            (C3, C3, 7),
            (loose_path(3, 3), loose_path(3, 3), 8),
            (star(3, 3), star(3, 3), 7),
            (complete(3, 3), complete(3, 3), 3),
            (disjoint_union(complete(3, 3), 2), complete(3, 3), 6),
            (complete(2, 3), complete(2, 3), 6),
            (loose_cycle(2, 4), loose_cycle(2, 4), 6),
        ],
    )
    def test_values(self, g, h, value):
        v = compute_ramsey(g, h, value + 2)
        assert v.exact and v.lo == value
        assert v.witness.n == value - 1 and verify_no_mono(v.witness, g, h).ok
        assert v.certificate.n == value and replay_certificate(v.certificate, g, h)

    def test_cycle_versus_quadrangle(self):
        g, h = C3, loose_cycle(3, 4)
        v = compute_ramsey(g, h, 10, split_depth=3, threads=4)
        assert (v.lo, v.hi) == (9, 9)
        assert replay_certificate(v.certificate, g, h)

    def test_interval_when_nmax_is_low(self):
        v = compute_ramsey(C3, C3, 6)
        assert (v.lo, v.hi) == (7, None) and not v.exact
        assert any("n_max" in note for note in v.notes)

    def test_interval_when_caps_bind(self):
        set_caps(variable_cap=30)
        v = compute_ramsey(C3, C3, 10)
        assert (v.lo, v.hi) == (7, None)
        assert any("cap" in note for note in v.notes)

    def test_node_limit(self):
        v = compute_ramsey(C3, loose_cycle(3, 4), 10, node_limit=5)
        assert v.hi is None and any("node limit" in note for note in v.notes)

    def test_as_dict(self):
        d = compute_ramsey(C3, C3, 8).as_dict()
        assert (d["lo"], d["hi"], d["exact"]) == (7, 7, True)
        assert d["evidence"]["upper"]["kind"] == "exhaustion"


class TestAgainstSat:
    @pytest.mark.parametrize("g,h", GRAPH_PAIRS + HYPER_PAIRS)
    def test_search_matches_solver(self, g, h):
        k = g.k
        n = k
        while comb(n, k) <= 35:
            out = search_good_coloring(g, h, n)
            assert out.found == sat(g, h, n), n
            if out.found:
                assert verify_no_mono(out.coloring, g, h).ok
            n += 1

    @pytest.mark.parametrize("g,h", GRAPH_PAIRS + HYPER_PAIRS)
    def test_symmetry_does_not_change_answers(self, g, h):
        k = g.k
        n = k
        while comb(n, k) <= 20:
            on = search_good_coloring(g, h, n, symmetry=True)
            off = search_good_coloring(g, h, n, symmetry=False)
            assert on.status == off.status
            n += 1

    def test_symmetry_only_for_isomorphic_patterns(self):
        out = search_good_coloring(complete(3, 3), C3, 6)
        assert out.certificate.symmetry == "none"
        out = search_good_coloring(C3, C3, 7)
        assert out.certificate.symmetry == "colour-swap"

    @pytest.mark.parametrize("g,h", HYPER_PAIRS[:3])
    def test_monotone_in_n(self, g, h):
        found = [search_good_coloring(g, h, n).found for n in range(3, 9)]
        assert found == sorted(found, reverse=True)

    @pytest.mark.parametrize("depth,threads", [(0, 1), (2, 1), (3, 4)])
    def test_splitting_is_consistent(self, depth, threads):
        out = search_good_coloring(C3, C3, 7, split_depth=depth, threads=threads)
        assert out.status == "exhausted"
        assert len(out.certificate.subtrees) == 2**depth


class TestCertificates:
    def certificate(self):
        out = search_good_coloring(C3, C3, 7, split_depth=2)
        return out.certificate

    def test_replay(self):
        assert replay_certificate(self.certificate(), C3, C3)

    def test_dict_round_trip(self):
        cert = self.certificate()
        assert ExhaustionCertificate.from_dict(cert.as_dict()) == cert

    def test_tampered_node_count(self):
        cert = self.certificate()
        bad = replace(cert, subtrees=(replace(cert.subtrees[0], nodes=cert.subtrees[0].nodes + 1),) + cert.subtrees[1:])
        assert not replay_certificate(bad, C3, C3)

    def test_missing_subtree(self):
        cert = self.certificate()
        assert not replay_certificate(replace(cert, subtrees=cert.subtrees[1:]), C3, C3)

    def test_wrong_patterns(self):
        assert not replay_certificate(self.certificate(), C3, loose_path(3, 2))

    def test_wrong_digest(self):
        cert = self.certificate()
        assert not replay_certificate(replace(cert, instance_digest="0" * 64), C3, C3)


class TestImportWitness:
    def test_col_file(self):
        c = split_coloring(1, 5, 3, red_touches_a=True)
        v = import_witness(c.to_col(), C3, C3)
        assert v.lo == 7 and v.witness == c

    def test_competition_model(self):
        c = split_coloring(1, 5, 3)
        lits = " ".join(str(i + 1 if r else -(i + 1)) for i, r in enumerate(c.red))
        assert import_witness(f"s SATISFIABLE\nv {lits} 0\n", C3, C3).lo == 7

    def test_minisat_model(self):
        c = split_coloring(1, 5, 3)
        lits = " ".join(str(i + 1 if r else -(i + 1)) for i, r in enumerate(c.red))
        assert import_witness(f"SAT\n{lits} 0\n", C3, C3, n=6).witness == c

    def test_unsat_attestation(self):
        v = import_witness("s UNSATISFIABLE\n", C3, C3, n=7)
        assert (v.lo, v.hi) == (7, 7)
        assert "not re-verified" in v.notes[0]
        with pytest.raises(HypergraphError):
            import_witness("UNSAT\n", C3, C3)

    def test_rejected_witness(self):
        c = TwoColoring.monochromatic(6, 3, True)
        with pytest.raises(WitnessRejected):
            import_witness(c.to_col(), C3, C3)

    def test_incomplete_model(self):
        with pytest.raises(HypergraphError):
            import_witness("SAT\n1 -2 0\n", C3, C3, n=6)

    def test_cap(self):
        with pytest.raises(CapExceeded):
            search_good_coloring(C3, C3, 20)
