"""Shared fixtures: paths, the worked-example graphs and the shipped templates and rules."""

import sys
from pathlib import Path

import pytest

project_root = Path(__file__).parent.parent
for path in (project_root / "src", project_root / "app", Path(__file__).parent):
    if str(path) not in sys.path:
        sys.path.insert(0, str(path))

from graph.store import load_triples  # noqa: E402
from qa.formatting import load_sentence_templates  # noqa: E402
from qa.question_parser import load_templates  # noqa: E402
from rules.association import load_rules  # noqa: E402

DATA_DIR = project_root / "data"
FIXTURE_DIR = DATA_DIR / "fixtures"
RULES_DIR = project_root / "rules"
GOLDEN_DIR = Path(__file__).parent / "golden"

MALEKEH_GRAPH = FIXTURE_DIR / "married_coparents.tsv"
JEREMY_GRAPH = FIXTURE_DIR / "actor_director.tsv"
KURT_GRAPH = FIXTURE_DIR / "died_in_birthplace.tsv"
PARTIAL_GRAPH = FIXTURE_DIR / "partial_completeness.tsv"
MARRIAGE_RULES = RULES_DIR / "ismarriedto.rules"
CITIZEN_RULES = RULES_DIR / "iscitizenof.rules"
TEMPLATES = DATA_DIR / "templates.txt"
SENTENCES = DATA_DIR / "sentences.txt"


def load_graph_file(path: Path):
    with open(path, encoding="utf-8") as handle:
        return load_triples(handle)


@pytest.fixture(scope="session")
def malekeh_graph():
    return load_graph_file(MALEKEH_GRAPH)


@pytest.fixture(scope="session")
def jeremy_graph():
    return load_graph_file(JEREMY_GRAPH)


@pytest.fixture(scope="session")
def kurt_graph():
    return load_graph_file(KURT_GRAPH)


@pytest.fixture(scope="session")
def partial_graph():
    return load_graph_file(PARTIAL_GRAPH)


@pytest.fixture(scope="session")
def registry():
    with open(TEMPLATES, encoding="utf-8") as handle:
        return load_templates(handle)


@pytest.fixture(scope="session")
def sentences():
    with open(SENTENCES, encoding="utf-8") as handle:
        return load_sentence_templates(handle)


@pytest.fixture(scope="session")
def marriage_rules():
    with open(MARRIAGE_RULES, encoding="utf-8") as handle:
        return load_rules(handle)


@pytest.fixture(scope="session")
def rule_by_name(marriage_rules):
    return {rule.name: rule for rule in marriage_rules}
