"""Turning answers back into natural language (and JSON)."""

import logging
from typing import Any, Dict, Iterable, List, Mapping, Optional

from graph.matcher import Direction
from utils.errors import TemplateError

from .answer_pipeline import Answer, AnswerStatus, AnswerValue
from .question_parser import ParsedQuestion, PatternClass

LOGGER = logging.getLogger(__name__)

NO_ANSWER_TEXT = "no answer"

SUBJECT = "<subject>"
OBJECT = "<object>"
VALUE = "<value>"

_PLACEHOLDERS = (SUBJECT, OBJECT, VALUE)

# Always available; a sentence file may override them
DEFAULT_SENTENCES = {
    "isMarriedTo": "<subject> is married to <object>",
    "diedOnDate": "<subject> died on <value>",
}


class SentenceTemplates:
    """Relation- or property-keyed sentence patterns."""

    def __init__(self, templates: Optional[Mapping[str, str]] = None):
        self._templates: Dict[str, str] = {**DEFAULT_SENTENCES, **(templates or {})}

    def __len__(self) -> int:
        return len(self._templates)

    def __contains__(self, key: str) -> bool:
        return key in self._templates

    def sentence(self, key: str, subject: str, obj: str) -> str:
        """Fill the pattern for ``key``; unknown keys read ``<subject> <key> <object>``."""
        pattern = self._templates.get(key)
        if pattern is None:
            return f"{subject} {key} {obj}"
        return pattern.replace(SUBJECT, subject).replace(OBJECT, obj).replace(VALUE, obj)


def load_sentence_templates(source: Iterable[str]) -> SentenceTemplates:
    """
    Load ``key|sentence`` lines, where the sentence uses ``<subject>`` and
    ``<object>`` (relations) or ``<value>`` (properties).

    Raises:
        TemplateError: On a malformed line, a sentence without placeholders, or a duplicate key
    """
    templates: Dict[str, str] = {}
    for line_number, raw in enumerate(source, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue

        fields = line.split("|")
        if len(fields) != 2:
            raise TemplateError(f"expected 2 '|'-separated fields, found {len(fields)}", line_number)
        key, pattern = (f.strip() for f in fields)
        if not key or not any(p in pattern for p in _PLACEHOLDERS):
            raise TemplateError(f"sentence for {key!r} has no placeholder", line_number)
        if key in templates:
            raise TemplateError(f"duplicate sentence key {key!r}", line_number)
        templates[key] = pattern

    LOGGER.info("Loaded %d sentence templates", len(templates))
    return SentenceTemplates(templates)


def humanize(name: str) -> str:
    """Node names read with spaces: ``Scott_Marshall_(director)`` -> ``Scott Marshall (director)``."""
    return name.replace("_", " ")


def _value_sentence(item: AnswerValue, parsed: ParsedQuestion, sentences: SentenceTemplates) -> str:
    subject = humanize(parsed.v1)

    if parsed.pattern_class is PatternClass.I:
        text = sentences.sentence(parsed.rel, subject, humanize(item.value))
        if item.prediction is not None:
            text += (f" (inferred by rule {item.prediction.rule}, "
                     f"PCA confidence {item.prediction.pca_conf:.4f})")
        return text

    if parsed.pattern_class is PatternClass.II:
        return sentences.sentence(parsed.prop, subject, item.value)

    other = humanize(parsed.v2)
    if item.direction is Direction.BACKWARD:
        return sentences.sentence(item.value, other, subject)
    return sentences.sentence(item.value, subject, other)


def format_answer(a: Answer, parsed: ParsedQuestion, sentences: Optional[SentenceTemplates] = None) -> str:
    """
    Render an answer as one line of text.

    Each value becomes a sentence from its relation's template; several values are
    joined with '; '. Inferred values name the rule and its PCA confidence.
    """
    if a.status is AnswerStatus.NO_ANSWER or not a.values:
        return NO_ANSWER_TEXT
    sentences = sentences or SentenceTemplates()
    return "; ".join(_value_sentence(item, parsed, sentences) for item in a.values)


def answer_to_dict(question: str, a: Answer, sentence: str) -> Dict[str, Any]:
    """JSON-ready view of an answer, including rule provenance for inferred values."""
    values: List[Dict[str, Any]] = []
    for item in a.values:
        provenance = None
        if item.prediction is not None:
            provenance = {
                "rule": item.prediction.rule,
                "std_conf": item.prediction.std_conf,
                "pca_conf": item.prediction.pca_conf,
            }
        values.append({
            "value": item.value,
            "direction": item.direction.value if item.direction is not None else None,
            "provenance": provenance,
        })

    parsed = a.parsed
    return {
        "question": question,
        "question_class": a.question_class.value,
        "status": a.status.value,
        "subject": parsed.v1 if parsed else None,
        "relation": (parsed.rel or parsed.prop) if parsed else None,
        "values": values,
        "sentence": sentence,
    }
