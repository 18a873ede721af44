"""End-to-end answering: classify, plan, execute, and fall back to rules."""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Dict, List, Optional, Sequence, Tuple

from graph.matcher import Direction
from graph.store import PropertyGraph
from rules.association import AssociationRule
from rules.confidence import ConfidenceReport, evaluate_confidence
from rules.inference import Prediction, predict
from utils.config import MIN_PCA_CONF, MIN_STD_CONF

from .query_planner import execute, to_graph_component, to_query
from .question_parser import ParsedQuestion, PatternClass, TemplateRegistry, classify

LOGGER = logging.getLogger(__name__)


class AnswerStatus(str, Enum):
    DIRECT = "direct"
    INFERRED = "inferred"
    NO_ANSWER = "no_answer"


@dataclass(frozen=True)
class AnswerOptions:
    """
    Args:
        use_rules: Predict missing class I answers with association rules
        min_std_conf: Lowest standard confidence a predicting rule may have
        min_pca_conf: Lowest PCA confidence a predicting rule may have
    """

    use_rules: bool = False
    min_std_conf: float = MIN_STD_CONF
    min_pca_conf: float = MIN_PCA_CONF

    def __post_init__(self):
        for name in ("min_std_conf", "min_pca_conf"):
            value = getattr(self, name)
            if not 0.0 <= value <= 1.0:
                raise ValueError(f"{name} must be within [0, 1], got {value}")


@dataclass(frozen=True)
class AnswerValue:
    value: str
    prediction: Optional[Prediction] = None
    direction: Optional[Direction] = None


@dataclass(frozen=True)
class Answer:
    status: AnswerStatus
    question_class: PatternClass
    values: Tuple[AnswerValue, ...] = ()
    parsed: Optional[ParsedQuestion] = None


def _infer(graph: PropertyGraph, rules: Sequence[AssociationRule], parsed: ParsedQuestion,
           options: AnswerOptions) -> List[AnswerValue]:
    applicable = [rule for rule in rules if rule.head_relation == parsed.rel]
    if not applicable:
        LOGGER.debug("No rules conclude %s", parsed.rel)
        return []

    reports: Dict[int, ConfidenceReport] = {
        index: evaluate_confidence(graph, rule) for index, rule in enumerate(applicable)
    }
    # Highest PCA confidence first; ties keep rule-file order
    order = sorted(
        range(len(applicable)),
        key=lambda i: (-reports[i].pca_fraction, -reports[i].std_fraction, i),
    )

    values: List[AnswerValue] = []
    seen = set()
    for index in order:
        rule, report = applicable[index], reports[index]
        if report.std_conf < options.min_std_conf or report.pca_conf < options.min_pca_conf:
            LOGGER.debug("Rule %s below thresholds (std=%.4f, pca=%.4f)",
                         rule.label, report.std_conf, report.pca_conf)
            continue
        for prediction in predict(graph, rule, parsed.v1, parsed.rel, report=report):
            if prediction.object not in seen:
                seen.add(prediction.object)
                values.append(AnswerValue(prediction.object, prediction=prediction))
    return values


def answer_parsed(graph: PropertyGraph, rules: Sequence[AssociationRule], parsed: ParsedQuestion,
                  options: Optional[AnswerOptions] = None) -> Answer:
    """Answer an already classified question."""
    options = options or AnswerOptions()
    result = execute(graph, to_query(to_graph_component(parsed)))

    if parsed.pattern_class is PatternClass.I:
        if result.objects:
            values = tuple(AnswerValue(o) for o in result.objects)
            return Answer(AnswerStatus.DIRECT, parsed.pattern_class, values, parsed)
        if options.use_rules:
            inferred = _infer(graph, rules, parsed, options)
            if inferred:
                return Answer(AnswerStatus.INFERRED, parsed.pattern_class, tuple(inferred), parsed)

    elif parsed.pattern_class is PatternClass.II:
        if result.literal is not None:
            return Answer(AnswerStatus.DIRECT, parsed.pattern_class, (AnswerValue(result.literal),), parsed)

    elif result.relations:
        values = tuple(AnswerValue(hit.relation, direction=hit.direction) for hit in result.relations)
        return Answer(AnswerStatus.DIRECT, parsed.pattern_class, values, parsed)

    return Answer(AnswerStatus.NO_ANSWER, parsed.pattern_class, (), parsed)


def answer(graph: PropertyGraph, registry: TemplateRegistry, rules: Sequence[AssociationRule],
           question: str, options: Optional[AnswerOptions] = None) -> Answer:
    """
    Answer a natural-language question.

    Class I questions look up objects and, when none exist and rules are enabled,
    predict them with every rule concluding the asked relation whose confidences
    meet both thresholds. Class II questions read a node property, class III
    questions list the relations between two nodes.

    Raises:
        NoTemplateMatch: If the question matches no template
    """
    parsed = classify(registry, question)
    LOGGER.debug("Classified %r as %s", question, parsed)
    return answer_parsed(graph, rules, parsed, options)
