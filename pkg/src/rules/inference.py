"""Predicting missing head facts with association rules."""

from dataclasses import dataclass
from typing import List, Optional

from graph.matcher import match_pattern
from graph.store import PropertyGraph
from utils.errors import RuleError

from .association import AssociationRule
from .confidence import ConfidenceReport, evaluate_confidence


@dataclass(frozen=True)
class Prediction:
    subject: str
    object: str
    relation: str
    rule: str
    std_conf: float
    pca_conf: float


def predict(graph: PropertyGraph, rule: AssociationRule, subject: str, relation: str,
            report: Optional[ConfidenceReport] = None) -> List[Prediction]:
    """
    Predict ``relation(subject, o)`` facts that the rule implies but the graph lacks.

    The body is matched with the head subject variable bound to ``subject``; every
    distinct head object whose edge is missing becomes one prediction, ordered by
    node id.

    Args:
        graph: Graph to reason over
        rule: Rule whose head relation is ``relation``
        subject: Node name of the head subject
        relation: Requested head relation
        report: Precomputed confidence of ``rule`` on ``graph``; evaluated when omitted

    Raises:
        RuleError: If the rule's head relation differs from ``relation``
    """
    if rule.head_relation != relation:
        raise RuleError(f"rule {rule.label} concludes {rule.head_relation!r}, not {relation!r}")

    subject_id = graph.node_by_name(subject)
    if subject_id is None:
        return []

    objects = set()
    for binding in match_pattern(graph, rule.body, {rule.subject_var: subject_id}):
        obj = binding[rule.object_var]
        if not graph.has_edge(subject_id, relation, obj):
            objects.add(obj)
    if not objects:
        return []

    report = report or evaluate_confidence(graph, rule)
    return [
        Prediction(
            subject=subject,
            object=graph.name_of(obj),
            relation=relation,
            rule=rule.label,
            std_conf=report.std_conf,
            pca_conf=report.pca_conf,
        )
        for obj in sorted(objects)
    ]
