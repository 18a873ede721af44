from fractions import Fraction

import numpy as np
import pytest

import brute_force
from graph.store import load_triples
from rules.association import parse_rule
from rules.confidence import REPORT_COLUMNS, ConfidenceReport, evaluate_confidence, reports_frame
from synthetic import random_graph, random_path_rule, triples_to_lines

# Node count per body length keeps the exhaustive oracle fast
ORACLE_NODES = {1: 30, 2: 18, 3: 11, 4: 8}


def graph_of(*rows):
    return load_triples(["\t".join(row) + "\n" for row in rows])


class TestConfidenceReport:
    def test_fractions(self):
        report = ConfidenceReport(support=1, body_count=3, pca_body_count=2)
        assert report.std_fraction == Fraction(1, 3)
        assert report.pca_fraction == Fraction(1, 2)
        assert report.std_conf == pytest.approx(1 / 3, abs=1e-12)

    def test_zero_denominators(self):
        report = ConfidenceReport(0, 0, 0)
        assert report.std_conf == 0.0
        assert report.pca_conf == 0.0

    @pytest.mark.parametrize("counts", [(2, 3, 1), (1, 1, 2), (-1, 0, 0)])
    def test_count_ordering_enforced(self, counts):
        with pytest.raises(ValueError):
            ConfidenceReport(*counts)


class TestEvaluateConfidence:
    def test_partial_completeness(self, partial_graph, rule_by_name):
        report = evaluate_confidence(partial_graph, rule_by_name["r2"])
        assert (report.support, report.body_count, report.pca_body_count) == (1, 3, 2)
        assert report.std_fraction == Fraction(1, 3)
        assert report.pca_fraction == Fraction(1, 2)
        assert brute_force.confidences(partial_graph, rule_by_name["r2"]) == (Fraction(1, 3), Fraction(1, 2))

    def test_perfect_rule(self):
        graph = graph_of(
            ("A", "hasChild", "K"), ("B", "hasChild", "K"),
            ("A", "isMarriedTo", "B"), ("B", "isMarriedTo", "A"),
            ("E", "knows", "F"),
        )
        report = evaluate_confidence(graph, parse_rule("(a)-[hasChild]->(b)<-[hasChild]-(d) => (a)-[isMarriedTo]->(d)"))
        assert len(graph.nodes) == 5
        assert report.std_conf == report.pca_conf == 1.0

    def test_empty_body_matches(self, malekeh_graph, rule_by_name):
        report = evaluate_confidence(malekeh_graph, rule_by_name["r2"])
        assert report == ConfidenceReport(0, 0, 0)

    def test_worked_example_fixtures(self, malekeh_graph, jeremy_graph, kurt_graph, rule_by_name):
        r1 = evaluate_confidence(malekeh_graph, rule_by_name["r1"])
        assert (r1.std_fraction, r1.pca_fraction) == (Fraction(1, 2), Fraction(1))

        r2 = evaluate_confidence(jeremy_graph, rule_by_name["r2"])
        assert (r2.std_fraction, r2.pca_fraction) == (Fraction(1, 5), Fraction(1, 3))

        r3 = evaluate_confidence(kurt_graph, rule_by_name["r3"])
        assert (r3.std_fraction, r3.pca_fraction) == (Fraction(1, 4), Fraction(1, 3))

    def test_counts_distinct_pairs_not_bindings(self):
        # Two shared children give two bindings for each ordered pair
        graph = graph_of(
            ("A", "hasChild", "K1"), ("B", "hasChild", "K1"),
            ("A", "hasChild", "K2"), ("B", "hasChild", "K2"),
            ("A", "isMarriedTo", "B"),
        )
        report = evaluate_confidence(graph, parse_rule("(a)-[hasChild]->(b)<-[hasChild]-(d) => (a)-[isMarriedTo]->(d)"))
        assert (report.support, report.body_count, report.pca_body_count) == (1, 2, 1)

    def test_head_without_facts_logs_warning(self, malekeh_graph, caplog):
        rule = parse_rule("(a)-[hasChild]->(b) => (a)-[isCitizenOf]->(b)")
        with caplog.at_level("WARNING", logger="rules.confidence"):
            report = evaluate_confidence(malekeh_graph, rule)
        assert report.support == 0
        assert "no facts" in caplog.text


@pytest.mark.parametrize("seed", range(200))
def test_confidence_equals_exhaustive_oracle(seed):
    rng = np.random.default_rng(seed)
    body_len = 1 + seed % 4
    n_nodes = ORACLE_NODES[body_len]
    n_relations = int(rng.integers(1, 5))
    graph = load_triples(triples_to_lines(random_graph(rng, n_nodes, n_relations, 3 * n_nodes)))
    relations = [f"r{i}" for i in range(n_relations)]
    rule = random_path_rule(rng, relations, body_len)

    report = evaluate_confidence(graph, rule)
    support, body, pca_body = brute_force.confidence_counts(graph, rule)
    assert (report.support, report.body_count, report.pca_body_count) == (support, body, pca_body)
    assert (report.std_fraction, report.pca_fraction) == brute_force.confidences(graph, rule)
    assert report.pca_conf >= report.std_conf


def test_reports_frame(marriage_rules, partial_graph):
    reports = [evaluate_confidence(partial_graph, rule) for rule in marriage_rules]
    frame = reports_frame(marriage_rules, reports)
    assert list(frame.columns) == REPORT_COLUMNS
    assert list(frame["rule"]) == ["r1", "r2", "r3"]
    assert frame.loc[1, "std_conf"] == pytest.approx(1 / 3)
    assert frame.loc[1, "pca_conf"] == pytest.approx(0.5)
