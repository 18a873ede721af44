"""Data loading utilities for triple, template, sentence and rule files."""

from contextlib import contextmanager
from pathlib import Path
from typing import Any, Dict, Iterator, Optional, TextIO, Tuple, Union

from graph.store import IngestConfig, PropertyGraph, load_triples
from qa.formatting import SentenceTemplates, load_sentence_templates as parse_sentences
from qa.question_parser import TemplateRegistry, load_templates
from rules.association import AssociationRule, load_rules

from .config import (
    get_data_path,
    DATA_MODE,
    GRAPH_FILE,
    LITERAL_PREDICATES,
    RULES_FILE,
    SENTENCES_FILE,
    TEMPLATES_FILE,
)

PathLike = Union[str, Path]


def _resolve_mode(mode: Optional[str] = None) -> str:
    if mode:
        return mode.lower()
    return (DATA_MODE or "real").lower()


def resolve_path(filename: PathLike, mode: Optional[str] = None) -> Path:
    """
    Resolve a data file.

    An existing path is used as-is and a missing absolute path is an error;
    anything else is treated as a file name under the data directories and
    resolved with the configured data mode.

    Raises:
        FileNotFoundError: Listing every location that was tried
    """
    candidate = Path(filename)
    if candidate.exists():
        return candidate
    if candidate.is_absolute():
        raise FileNotFoundError(f"Data file not found: {candidate}")

    resolved_mode = _resolve_mode(mode)
    filepath = get_data_path(str(filename), mode=resolved_mode)
    if filepath.exists():
        return filepath

    if resolved_mode == "adaptive":
        real_path = get_data_path(str(filename), mode="real")
        mockup_path = get_data_path(str(filename), mode="mockup")
        raise FileNotFoundError(
            f"Data file '{filename}' not found.\n"
            f"- Expected real data path: {real_path}\n"
            f"- Expected mockup data path: {mockup_path}"
        )

    raise FileNotFoundError(f"Data file not found: {filepath}")


@contextmanager
def open_text(filename: PathLike, mode: Optional[str] = None) -> Iterator[TextIO]:
    """Open a resolved data file as UTF-8 text with universal newlines."""
    with open(resolve_path(filename, mode=mode), "r", encoding="utf-8") as handle:
        yield handle


def load_graph(path: Optional[PathLike] = None, config: Optional[IngestConfig] = None,
               mode: Optional[str] = None) -> PropertyGraph:
    """Load the triple file (default: ``KGQA_GRAPH_FILE``) into a PropertyGraph."""
    config = config or IngestConfig(literal_predicates=LITERAL_PREDICATES)
    with open_text(path or GRAPH_FILE, mode=mode) as handle:
        return load_triples(handle, config)


def load_template_registry(path: Optional[PathLike] = None, mode: Optional[str] = None) -> TemplateRegistry:
    """Load the question template registry (default: ``KGQA_TEMPLATES_FILE``)."""
    with open_text(path or TEMPLATES_FILE, mode=mode) as handle:
        return load_templates(handle)


def load_sentence_templates(path: Optional[PathLike] = None, mode: Optional[str] = None) -> SentenceTemplates:
    """Load the answer sentence templates (default: ``KGQA_SENTENCES_FILE``)."""
    with open_text(path or SENTENCES_FILE, mode=mode) as handle:
        return parse_sentences(handle)


def load_rule_set(path: Optional[PathLike] = None, mode: Optional[str] = None) -> Tuple[AssociationRule, ...]:
    """Load association rules (default: ``KGQA_RULES_FILE``)."""
    with open_text(path or RULES_FILE, mode=mode) as handle:
        return load_rules(handle)


def get_graph_stats(graph: PropertyGraph) -> Dict[str, Any]:
    """Get overall graph statistics."""
    property_count = sum(len(node.properties) for node in graph.nodes)
    return {
        'total_nodes': len(graph.nodes),
        'total_edges': len(graph.edges),
        'total_relations': len(graph.relations),
        'total_properties': property_count,
        'nodes_with_properties': sum(1 for node in graph.nodes if node.properties),
    }
