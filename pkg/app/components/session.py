"""Loading the inputs a command needs, once per invocation."""

import logging
from dataclasses import dataclass
from typing import Optional, Tuple

from graph.store import IngestConfig, PropertyGraph
from qa.formatting import SentenceTemplates
from qa.question_parser import TemplateRegistry
from rules.association import AssociationRule
from utils.data_loader import load_graph, load_rule_set, load_sentence_templates, load_template_registry

LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True)
class Session:
    graph: PropertyGraph
    registry: Optional[TemplateRegistry] = None
    rules: Tuple[AssociationRule, ...] = ()
    sentences: Optional[SentenceTemplates] = None


def load_session(config, templates: bool = True, rules: bool = True) -> Session:
    """
    Load the graph plus, on request, templates, sentences and rules.

    Every requested file must exist and parse; the first failure is raised.

    Args:
        config: CliConfig of the invocation
        templates: Also load the question templates and answer sentences
        rules: Also load the rule file
    """
    graph = load_graph(config.graph_path, IngestConfig(literal_predicates=config.literal_predicates))
    registry = load_template_registry(config.templates_path) if templates else None
    sentences = load_sentence_templates(config.sentences_path) if templates else None
    rule_set = load_rule_set(config.rules_path) if rules else ()
    LOGGER.info("Session ready: %r, %d rules", graph, len(rule_set))
    return Session(graph=graph, registry=registry, rules=rule_set, sentences=sentences)
