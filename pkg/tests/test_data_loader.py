import numpy as np
import pandas as pd
import pytest

from graph.store import IngestConfig
from synthetic import planted_coparent_graph, random_graph, write_triples
from utils.config import DATA_DIR, MOCKUP_DIR, get_data_path
from utils.data_loader import (
    get_graph_stats,
    load_graph,
    load_rule_set,
    load_sentence_templates,
    load_template_registry,
    resolve_path,
)

from conftest import KURT_GRAPH, MALEKEH_GRAPH, MARRIAGE_RULES, SENTENCES, TEMPLATES


class TestGetDataPath:
    def test_modes(self):
        assert get_data_path("graph.tsv", mode="real") == DATA_DIR / "graph.tsv"
        assert get_data_path("graph.tsv", mode="mockup") == MOCKUP_DIR / "graph.tsv"

    def test_unknown_mode_means_real(self):
        assert get_data_path("graph.tsv", mode="cloud") == DATA_DIR / "graph.tsv"

    def test_adaptive_prefers_real_data(self):
        assert get_data_path("templates.txt", mode="adaptive") == DATA_DIR / "templates.txt"

    def test_adaptive_falls_back_to_mockup(self):
        assert get_data_path("planted_coparents.tsv", mode="adaptive") == MOCKUP_DIR / "planted_coparents.tsv"


class TestResolvePath:
    def test_existing_path_used_as_is(self):
        assert resolve_path(MALEKEH_GRAPH) == MALEKEH_GRAPH

    def test_name_resolved_by_mode(self):
        assert resolve_path("planted_coparents.tsv", mode="mockup") == MOCKUP_DIR / "planted_coparents.tsv"

    def test_missing_file_lists_locations(self):
        with pytest.raises(FileNotFoundError, match="mockup data path"):
            resolve_path("nowhere.tsv", mode="adaptive")
        with pytest.raises(FileNotFoundError, match="nowhere.tsv"):
            resolve_path("nowhere.tsv", mode="real")

    def test_missing_absolute_path_reported_once(self, tmp_path):
        missing = tmp_path / "nowhere.tsv"
        with pytest.raises(FileNotFoundError) as excinfo:
            resolve_path(missing, mode="adaptive")
        assert str(excinfo.value) == f"Data file not found: {missing}"
        assert "mockup" not in str(excinfo.value)


class TestLoaders:
    def test_shipped_files(self):
        assert len(load_template_registry(TEMPLATES)) == 16
        assert "isMarriedTo" in load_sentence_templates(SENTENCES)
        assert [rule.name for rule in load_rule_set(MARRIAGE_RULES)] == ["r1", "r2", "r3"]

    def test_literal_predicates_route_properties(self):
        graph = load_graph(KURT_GRAPH)
        kurt = graph.node(graph.node_by_name("Kurt_Brändle"))
        assert kurt.properties == {"diedOnDate": "1943-11-03"}

        as_edges = load_graph(KURT_GRAPH, IngestConfig(literal_predicates=frozenset()))
        assert "diedOnDate" in as_edges.relations
        assert len(as_edges.nodes) == len(graph.nodes) + 1

    def test_mockup_graph(self):
        graph = load_graph("planted_coparents.tsv", mode="mockup")
        assert len(graph.nodes) == 50

    def test_graph_stats(self):
        stats = get_graph_stats(load_graph(KURT_GRAPH))
        assert stats == {
            "total_nodes": 12,
            "total_edges": 11,
            "total_relations": 4,
            "total_properties": 1,
            "nodes_with_properties": 1,
        }


class TestSynthetic:
    def test_random_graph_has_no_self_loops_or_duplicates(self):
        frame = random_graph(np.random.default_rng(3), n_nodes=5, n_relations=2, n_edges=60)
        assert not (frame["subject"] == frame["object"]).any()
        assert not frame.duplicated().any()

    def test_planted_graph_matches_shipped_mockup(self):
        shipped = pd.read_csv(MOCKUP_DIR / "planted_coparents.tsv", sep="\t", header=None,
                              names=["subject", "predicate", "object"], dtype=str)
        generated = planted_coparent_graph()
        assert sorted(map(tuple, shipped.values)) == sorted(map(tuple, generated.values))

    def test_write_triples(self, tmp_path):
        path = write_triples(planted_coparent_graph(married_pairs=1, distractor_pairs=0, fillers=0),
                             tmp_path / "out" / "g.tsv")
        assert path.read_text(encoding="utf-8").splitlines() == [
            "Husband_0\thasChild\tChild_0",
            "Wife_0\thasChild\tChild_0",
            "Husband_0\tisMarriedTo\tWife_0",
            "Wife_0\tisMarriedTo\tHusband_0",
        ]
