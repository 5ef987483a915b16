import math
from itertools import combinations

import mpmath
import networkx as nx
import pytest
from sympy.utilities.iterables import partitions

from colex_entropy import oracle
from colex_entropy.colex import build_colex, build_colex_k, closed_form_degseq, colex_degseq
from colex_entropy.graph import Graph, degree_sequence, h_exact_key
from colex_entropy.oracle import (
    enumerate_graphical,
    erdos_gallai_violation,
    find_max_h,
    is_graphical,
    telescoping_sides,
)


def independent_graphical(m):
    """Partitions of 2m from sympy, filtered by networkx's Havel–Hakimi test."""
    out = set()
    for p in partitions(2 * m):
        seq = tuple(sorted((k for k, c in p.items() for _ in range(c)), reverse=True))
        if nx.is_graphical(list(seq), method="hh"):
            out.add(seq)
    return out


def hp_h(seq):
    with mpmath.workdps(60):
        return mpmath.fsum(d * mpmath.log(d) for d in seq)


class TestGraphical:
    def test_examples(self):
        assert not is_graphical((3, 3, 1, 1))
        assert erdos_gallai_violation((3, 3, 1, 1)) == 2
        assert is_graphical((2, 2, 2))
        assert is_graphical((3, 2, 2, 1))
        assert erdos_gallai_violation((2, 1)) == 0

    def test_against_networkx(self):
        for total in range(0, 21, 2):
            for p in partitions(total):
                seq = [k for k, c in p.items() for _ in range(c)]
                assert is_graphical(seq) == nx.is_graphical(seq, method="eg"), seq

    @pytest.mark.parametrize("m, expected", [
        (1, {(1, 1)}),
        (2, {(1, 1, 1, 1), (2, 1, 1)}),
        (3, {(1,) * 6, (2, 1, 1, 1, 1), (2, 2, 1, 1), (2, 2, 2), (3, 1, 1, 1)}),
    ])
    def test_enumeration_examples(self, m, expected):
        got = list(enumerate_graphical(m))
        assert len(got) == len(set(got))
        assert set(got) == expected

    @pytest.mark.parametrize("m", range(1, 13))
    def test_enumeration_against_independent(self, m):
        got = list(enumerate_graphical(m))
        assert len(got) == len(set(got))
        assert set(got) == independent_graphical(m)

    def test_every_sequence_is_realised(self):
        # exhaustive over all graphs on <= 6 vertices, constructive Havel-Hakimi for 7 and 8
        realised = set()
        pairs = list(combinations(range(6), 2))
        for mask in range(1 << len(pairs)):
            g = Graph(6, tuple(p for i, p in enumerate(pairs) if mask >> i & 1))
            realised.add(degree_sequence(g))
        for m in range(1, 16):
            for s in enumerate_graphical(m):
                if len(s) <= 6:
                    assert s in realised
                elif len(s) <= 8:
                    h = nx.havel_hakimi_graph(list(s))
                    assert sorted((d for _, d in h.degree()), reverse=True) == list(s)
        for s in realised:
            if s and len(s) <= 6:
                assert s in set(enumerate_graphical(s.size))


class TestFindMaxH:
    def test_three_edges(self):
        keys = sorted((h_exact_key(s) for s in enumerate_graphical(3)), reverse=True)
        assert keys == [64, 27, 16, 4, 1]
        report = find_max_h(3)
        assert report.argmax_sequences == ((2, 2, 2),)
        assert report.exact_key == 64
        assert report.verdict == "match"

    def test_four_and_one(self):
        assert find_max_h(4).argmax_sequences == ((3, 2, 2, 1),)
        r1 = find_max_h(1)
        assert r1.argmax_sequences == ((1, 1),) and r1.verdict == "match"

    def test_against_all_graphs(self):
        # enumerate labelled graphs with m edges on 2m vertices directly
        for m in range(1, 5):
            pairs = list(combinations(range(2 * m), 2))
            best = max(hp_h(degree_sequence(Graph(2 * m, e))) for e in combinations(pairs, m))
            report = find_max_h(m)
            assert abs(hp_h(report.argmax_sequences[0]) - best) < 1e-40

    @pytest.mark.parametrize("m", range(1, 15))
    def test_against_high_precision_independent_oracle(self, m):
        seqs = independent_graphical(m)
        values = {s: hp_h(s) for s in seqs}
        best = max(values.values())
        winners = {s for s, v in values.items() if abs(v - best) < mpmath.mpf(10) ** -40}
        report = find_max_h(m)
        assert set(report.argmax_sequences) == winners
        assert float(best) == pytest.approx(report.h_float, rel=1e-12)
        assert winners == {tuple(degree_sequence(build_colex(m)))}

    def test_monotone_in_size(self):
        keys = [h_exact_key(colex_degseq(m)) for m in range(1, 52)]
        assert all(a < b for a, b in zip(keys, keys[1:]))

    def test_report_row(self):
        row = find_max_h(3).to_row()
        assert row == {"m": 3, "argmax": "2,2,2", "exact_key": "64", "h": pytest.approx(6 * math.log(2)),
                       "verdict": "match"}


class TestVerifiers:
    def test_main_small(self):
        assert oracle.verify_main_theorem(1).holds
        outcome = oracle.verify_main_theorem(12)
        assert outcome.holds and len(outcome.rows) == 12 and not outcome.counterexamples

    def test_max_entropy(self):
        outcome = oracle.verify_max_entropy(15)
        assert outcome.holds
        assert outcome.rows[1]["min_key"] == "1"
        keys = sorted({h_exact_key(s) for s in enumerate_graphical(2)})
        assert keys == [1, 4]

    def test_largeclique_examples(self):
        assert h_exact_key(closed_form_degseq(3, 3)) == 64
        assert h_exact_key(closed_form_degseq(3, 2)) == 27
        assert h_exact_key(closed_form_degseq(6, 4)) == 27 ** 4 == 531441
        # C(6,3): K2 joined to two vertices plus one pendant: degrees (4,3,2,2,1)
        assert degree_sequence(build_colex_k(6, 3)) == (4, 3, 2, 2, 1)
        assert h_exact_key(closed_form_degseq(6, 3)) == 4 ** 4 * 3 ** 3 * 2 ** 2 * 2 ** 2 == 110592
        assert oracle.verify_lemma_largeclique(3, 0).holds
        assert oracle.verify_lemma_largeclique(12, 100).holds

    def test_boundary_examples(self):
        assert closed_form_degseq(5, 4) == closed_form_degseq(5, 3) == (3, 3, 2, 2)
        assert closed_form_degseq(2, 3) == closed_form_degseq(2, 2) == (2, 1, 1)
        outcome = oracle.verify_equality_boundary(50)
        assert outcome.holds and len(outcome.rows) == 48

    def test_threshold_examples(self):
        outcome = oracle.verify_threshold_theorem(7)
        assert outcome.holds
        row = next(r for r in outcome.rows if r["m"] == 7 and r["k"] == 3)
        assert row["argmax"] == row["expected"] == "4,4,2,2,2"
        row = next(r for r in outcome.rows if r["m"] == 3 and r["k"] == 2)
        assert row["argmax"] == "3,1,1,1" and row["candidates"] == 1

    def test_extremal_is_threshold(self):
        outcome = oracle.verify_extremal_is_threshold(4)
        assert outcome.holds
        assert [r["argmax"] for r in outcome.rows] == ["1,1", "2,1,1", "2,2,2", "3,2,2,1"]

    def test_trees_small_orders(self):
        outcome = oracle.verify_trees(5)
        assert outcome.holds
        assert any("n=4" in note for note in outcome.notes)
        n5 = outcome.rows[-1]
        assert n5["second"] == "3,2,1,1,1"
        assert h_exact_key((2, 2, 2, 1, 1)) == 64 < h_exact_key((3, 2, 1, 1, 1)) == 108 < h_exact_key((4, 1, 1, 1, 1)) == 256

    @pytest.mark.parametrize("m, r, expected", [
        (5, 2, "2,2,2,2,2"),
        (3, 3, "2,2,2"),
        (7, 3, "3,3,3,3,2"),
    ])
    def test_bounded_degree_examples(self, m, r, expected):
        outcome = oracle.verify_bounded_degree(m, r)
        assert outcome.holds
        assert outcome.rows[0]["argmax"] == expected

    def test_telescoping_examples(self):
        lhs, rhs = telescoping_sides(5, 0)
        assert lhs == 0 and rhs == 0
        lhs, rhs = telescoping_sides(4, 1)
        assert float(lhs) == pytest.approx(math.log(1024 / 729), abs=1e-15)
        assert float(lhs) == pytest.approx(0.33980, abs=1e-5)
        assert float(rhs) == pytest.approx(math.log(27 / 16), abs=1e-15)
        outcome = oracle.verify_telescoping(200)
        assert outcome.holds
        assert outcome.notes[-1].startswith("minimum margin")

    def test_balanced_gain_small(self):
        outcome = oracle.verify_balanced_gain(10, 4, 3)
        assert outcome.holds and len(outcome.rows) == 11 * 4 * 3

    def test_parallel_merge_is_identical(self):
        for run in (lambda j: oracle.verify_main_theorem(9, jobs=j),
                    lambda j: oracle.verify_telescoping(30, jobs=j),
                    lambda j: oracle.verify_bounded_degree_sweep(8, [2, 3], jobs=j)):
            a, b = run(1), run(3)
            assert a.to_dict() == b.to_dict()


class TestFailureReporting:
    def test_wrong_expectation_is_reported_for_every_size(self, monkeypatch):
        monkeypatch.setattr(oracle, "colex_degseq", lambda m: oracle.DegreeSequence([1] * (2 * m)))
        outcome = oracle.verify_main_theorem(6)
        assert not outcome.holds
        # m=1 is the only size where the matching is the maximiser
        assert [c["m"] for c in outcome.counterexamples] == [2, 3, 4, 5, 6]
        assert len(outcome.rows) == 6

    def test_small_margin_is_inconclusive(self, monkeypatch):
        monkeypatch.setattr(oracle, "TELESCOPING_MARGIN", 10.0)
        outcome = oracle.verify_telescoping(4)
        assert not outcome.holds
        assert {c["status"] for c in outcome.counterexamples} == {"inconclusive"}

    def test_outcome_invariant(self):
        for outcome in (oracle.verify_trees(6), oracle.verify_equality_boundary(10)):
            assert outcome.holds == (not outcome.counterexamples)
            assert "elapsed" not in outcome.to_dict()
            assert outcome.to_dict(timing=True)["elapsed"] >= 0
