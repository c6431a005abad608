import json
from itertools import product

import pytest

from hyperramsey.errors import HypergraphError
from hyperramsey.extremal import general_lower_bound
from hyperramsey.formulas import (
    REGISTRY,
    HypothesisViolation,
    UnknownEntry,
    build,
    consistency_check,
    cross_check,
    evaluate,
    get,
    pair_key,
    patterns,
    registry_json,
    registry_table,
)
from hyperramsey.hypergraph import complete, is_isomorphic, loose_cycle, loose_path, star

C3 = loose_cycle(3, 3)
K = complete(3, 3)


class TestEvaluate:
    def test_examples(self):
        ev = evaluate("multi-triangles", {"k": 3, "m": 2, "n": 1})
        assert (ev.value, ev.status) == (13, "exact")
        ev = evaluate("loose-triangles", {"k": 4})
        assert (ev.value, ev.status) == (10, "exact")
        ev = evaluate("good-vs-multi-star-vertex", {"G": C3, "H": K, "n": 10})
        assert (ev.value, ev.status) == (31, "asymptotic")
        assert any("sufficiently large" in note for note in ev.notes)

    def test_cubic_values(self):
        assert evaluate("cubic-loose-paths", {"r": 3, "s": 3}).value == 8
        assert evaluate("cubic-loose-cycles", {"r": 3, "s": 3}).value == 7
        assert evaluate("cubic-cycle-path", {"r": 4, "s": 3}).value == 9

    def test_refuses_failed_hypotheses(self):
        with pytest.raises(HypothesisViolation):
            evaluate("cubic-cycle-path", {"r": 3, "s": 3})
        with pytest.raises(HypothesisViolation):
            evaluate("multi-triangles", {"k": 3, "m": 1, "n": 2})
        with pytest.raises(HypothesisViolation):
            evaluate("loose-triangles", {"k": 2})

    def test_copies_on_the_wrong_side_are_refused(self):
        # R(K, 2K) is read with the larger multiplicity on H
        with pytest.raises(HypothesisViolation):
            evaluate("multi-vs-edges", {"H": K, "m": 1, "n": 2})
        assert evaluate("multi-vs-edges", {"H": K, "m": 2, "n": 1}).value == 6

    def test_open_case(self):
        ev = evaluate("multi-cubic-cycle-path", {"r": 3, "s": 3, "m": 1, "n": 1})
        assert ev.value is None and ev.status == "unknown"
        assert evaluate("multi-cubic-cycle-path", {"r": 4, "s": 3, "m": 1, "n": 1}).value == 9

    def test_conjectures_are_flagged(self):
        ev = evaluate("conj-loose-paths", {"k": 3, "r": 3, "s": 3, "m": 1, "n": 1})
        assert ev.status == "conjectured" and ev.value == 8

    def test_missing_parameter_and_unknown_id(self):
        with pytest.raises(HypergraphError):
            evaluate("multi-triangles", {"k": 3})
        with pytest.raises(UnknownEntry):
            get("no-such-entry")

    def test_upper_entry(self):
        ev = evaluate("good-upper-multi", {"G": C3, "H": K, "n": 4})
        assert ev.kind == "upper" and ev.value == 6 + 12 - 4 - 1


class TestTransferHypotheses:
    def test_given_value_grants_exact(self):
        ev = evaluate("multi-copy-transfer", {"G": C3, "H": C3, "m": 2, "n": 1, "R_GH": 7})
        assert (ev.value, ev.status) == (13, "exact")

    def test_undecided_keeps_conditional_status(self):
        ev = evaluate("multi-copy-transfer", {"G": C3, "H": C3, "m": 2, "n": 1})
        assert ev.status == "exact-if-hypotheses"
        assert any("not verified" in note for note in ev.notes)

    def test_engine_decides(self):
        ev = evaluate("multi-copy-transfer", {"G": C3, "H": C3, "m": 2, "n": 1, "engine_budget": 10**6})
        assert ev.status == "exact"

    def test_wrong_value_refused(self):
        with pytest.raises(HypothesisViolation):
            evaluate("multi-copy-transfer", {"G": C3, "H": C3, "m": 2, "n": 1, "R_GH": 8})

    def test_alpha_order(self):
        with pytest.raises(HypothesisViolation):
            evaluate("multi-copy-transfer", {"G": K, "H": C3, "m": 1, "n": 1, "R_GH": 5})


class TestPatterns:
    def test_builders(self):
        assert build(("loose-cycle", 3, 3)) == C3
        assert build(("edge", 3, 1)).num_edges == 1
        assert build(("graph-path", 2, 4)).num_edges == 3

    def test_patterns_with_copies(self):
        red, blue = patterns("multi-triangles", {"k": 3, "m": 2, "n": 1})
        assert red.num_vertices == 12 and is_isomorphic(blue, C3)

    def test_pair_key_is_orientation_free(self):
        a = pair_key("triangle-path3", {"k": 3})
        b = pair_key("cubic-path-cycle", {"r": 3, "s": 3})
        assert a == b


class TestCrossCheck:
    def test_agree(self):
        rep = cross_check("loose-triangles", {"k": 3})
        assert (rep.outcome, rep.engine_lo, rep.engine_hi) == ("agree", 7, 7)

    def test_edges_entry(self):
        rep = cross_check("multi-vs-edges", {"H": K, "m": 2, "n": 1})
        assert rep.outcome == "agree" and rep.formula_value == 6

    def test_evidence_unavailable_beyond_caps(self):
        rep = cross_check("conj-loose-paths", {"k": 4, "r": 3, "s": 3, "m": 1, "n": 1})
        assert rep.formula_value == 11 and rep.outcome == "evidence unavailable"

    def test_conjecture_small_case(self):
        assert cross_check("conj-loose-paths", {"k": 3, "r": 3, "s": 3, "m": 1, "n": 1}).outcome == "agree"

    def test_graph_path_readings(self):
        ok = cross_check("multi-graph-paths-vertices", {"r": 4, "s": 3, "m": 2, "n": 1})
        assert ok.outcome == "agree" and ok.formula_value == 8
        bad = cross_check("multi-graph-paths-edges", {"r": 1, "s": 1, "m": 1, "n": 1})
        assert (bad.outcome, bad.severity) == ("mismatch", "evidence")

    def test_open_case_reports_unavailable(self):
        rep = cross_check("multi-cubic-cycle-path", {"r": 3, "s": 3, "m": 1, "n": 1})
        assert rep.outcome == "evidence unavailable"


EXACT_SMALL = [
    ("loose-triangles", {"k": 3}),
    ("three-edge-stars", {"k": 3}),
    ("loose-3-paths", {"k": 3}),
    ("triangle-path3", {"k": 3}),
    ("cubic-loose-paths", {"r": 2, "s": 2}),
    ("cubic-loose-cycles", {"r": 3, "s": 3}),
    ("multi-edges", {"k": 3, "m": 2, "n": 2}),
    ("multi-edges", {"k": 4, "m": 2, "n": 1}),
]


class TestRegistry:
    @pytest.mark.parametrize("entry_id,params", EXACT_SMALL)
    def test_exact_entries_verified_by_search(self, entry_id, params):
        rep = cross_check(entry_id, params)
        assert rep.outcome == "agree", rep

    def test_lower_bound_never_exceeds_exact_values(self):
        checked = 0
        for entry in REGISTRY.values():
            if entry.status != "exact" or not set(entry.params) <= {"k", "r", "s", "m", "n"}:
                continue
            ranges = {"k": [3, 4], "r": [3, 4], "s": [3, 4], "m": [1, 2], "n": [1, 2]}
            for values in product(*(ranges[p] for p in entry.params)):
                params = dict(zip(entry.params, values))
                try:
                    ev = evaluate(entry.id, params)
                except HypothesisViolation:
                    continue
                if ev.value is None:
                    continue
                red, blue = patterns(entry.id, params)
                assert general_lower_bound(red, blue) <= ev.value, (entry.id, params)
                checked += 1
        assert checked > 50

    def test_consistency(self):
        rep = consistency_check()
        assert rep.ok and rep.overlaps > 0

    def test_json_export(self):
        data = json.loads(registry_json())
        assert len(data["entries"]) == len(REGISTRY) == len(registry_table())
        statuses = {e["status"] for e in data["entries"]}
        assert statuses == {"exact", "exact-if-hypotheses", "asymptotic", "conjectured", "unknown"}
        flagged = next(e for e in data["entries"] if e["id"] == "multi-stars-large")
        assert any(not h["checkable"] for h in flagged["hypotheses"])

    def test_ids_unique(self):
        ids = [e["id"] for e in registry_table()]
        assert len(ids) == len(set(ids))

    def test_every_entry_evaluates_on_a_sample(self):
        samples = {"k": 3, "r": 4, "s": 3, "m": 2, "n": 2, "G": C3, "H": C3, "R_GH": 7,
                   "T": loose_path(2, 2), "U": loose_path(2, 3)}
        for entry in REGISTRY.values():
            params = {p: samples[p] for p in entry.params}
            if entry.id == "bipartite-vs-multi-graph":
                params.update(G=loose_path(2, 2), H=loose_path(2, 2))
            if entry.id in ("good-upper-multi", "good-vs-multi-star-vertex"):
                params["H"] = star(3, 2)
            if entry.id == "multi-good-large":
                params.update(G=star(3, 2), H=star(3, 2))
            try:
                evaluate(entry.id, params)
            except HypothesisViolation:
                pass
