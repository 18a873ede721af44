"""Template-based question classification.

A template registry is loaded from ``class|surface|target`` lines. Classifying a
question returns the first template (file order) whose surface matches, with the
slot captures normalized into node names.
"""

import logging
import re
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator, List, Optional, Pattern, Tuple

from utils.errors import NoTemplateMatch, TemplateError

LOGGER = logging.getLogger(__name__)

SLOT = "(*p)"
SECOND_SLOT = "(*p1)"

_SLOT_SPLIT = re.compile(r"(\(\*p1?\))")
_WHITESPACE = re.compile(r"\s+")
_SPACE = re.compile(r"\s")


class PatternClass(str, Enum):
    """Question classes: subject+relation, subject+property, subject+subject."""

    I = "I"  # noqa: E741
    II = "II"
    III = "III"


@dataclass(frozen=True)
class QuestionTemplate:
    pattern_class: PatternClass
    surface: str
    target: str = ""

    def __post_init__(self):
        first = self.surface.count(SLOT)
        second = self.surface.count(SECOND_SLOT)
        if self.pattern_class is PatternClass.III:
            if first != 1 or second != 1:
                raise TemplateError(f"class III template needs one {SLOT} and one {SECOND_SLOT} slot")
            if self.target:
                raise TemplateError("class III template must have an empty target")
        else:
            if first != 1 or second != 0:
                raise TemplateError(f"class {self.pattern_class.value} template needs exactly one {SLOT} slot")
            if not self.target:
                raise TemplateError(f"class {self.pattern_class.value} template needs a target")

    def instantiate(self, subject: str, second: Optional[str] = None) -> str:
        """Fill the slots, producing a question this template matches."""
        text = self.surface.replace(SLOT, subject)
        if second is not None:
            text = text.replace(SECOND_SLOT, second)
        return text


@dataclass(frozen=True)
class ParsedQuestion:
    """A classified question.

    Class I carries (v1, rel), class II (v1, prop), class III (v1, v2).
    """

    pattern_class: PatternClass
    v1: str
    v2: Optional[str] = None
    rel: Optional[str] = None
    prop: Optional[str] = None

    def is_well_formed(self) -> bool:
        if not self.v1:
            return False
        if self.pattern_class is PatternClass.I:
            return bool(self.rel) and self.v2 is None and self.prop is None
        if self.pattern_class is PatternClass.II:
            return bool(self.prop) and self.v2 is None and self.rel is None
        return bool(self.v2) and self.rel is None and self.prop is None


def _strip_question_mark(text: str) -> str:
    text = text.strip()
    if text.endswith("?"):
        text = text[:-1].rstrip()
    return text


def _compile_surface(surface: str) -> Pattern:
    parts = []
    for piece in _SLOT_SPLIT.split(_strip_question_mark(surface)):
        if piece == SLOT:
            parts.append(r"(?P<p>.+)")
        elif piece == SECOND_SLOT:
            parts.append(r"(?P<p1>.+)")
        elif piece:
            words = _WHITESPACE.split(piece)
            parts.append(r"\s+".join(re.escape(word) for word in words))
    return re.compile("".join(parts), re.IGNORECASE | re.DOTALL)


def to_node_name(span: str) -> str:
    """Turn a captured span into a node name: trimmed, each inner space an underscore."""
    return _SPACE.sub("_", span.strip())


class TemplateRegistry:
    """Ordered, immutable collection of question templates."""

    def __init__(self, templates: Iterable[QuestionTemplate]):
        self._templates: Tuple[QuestionTemplate, ...] = tuple(templates)
        self._compiled: Tuple[Pattern, ...] = tuple(_compile_surface(t.surface) for t in self._templates)

    def __iter__(self) -> Iterator[QuestionTemplate]:
        return iter(self._templates)

    def __len__(self) -> int:
        return len(self._templates)

    @property
    def templates(self) -> Tuple[QuestionTemplate, ...]:
        return self._templates

    @property
    def compiled(self) -> Tuple[Pattern, ...]:
        """Surface regexes, one per template in file order."""
        return self._compiled

    def classify(self, question: str) -> ParsedQuestion:
        """
        Classify a question against the registry.

        Fixed template text matches case-insensitively, slots capture the longest
        non-empty span and keep its case, and a trailing '?' is optional.

        Raises:
            NoTemplateMatch: If no template matches or a slot captures only whitespace
        """
        text = _strip_question_mark(question)
        for template, compiled in zip(self._templates, self._compiled):
            match = compiled.fullmatch(text)
            if match is None:
                continue

            v1 = to_node_name(match.group("p"))
            if template.pattern_class is PatternClass.III:
                v2 = to_node_name(match.group("p1"))
                if not v1 or not v2:
                    continue
                return ParsedQuestion(PatternClass.III, v1=v1, v2=v2)

            if not v1:
                continue
            if template.pattern_class is PatternClass.I:
                return ParsedQuestion(PatternClass.I, v1=v1, rel=template.target)
            return ParsedQuestion(PatternClass.II, v1=v1, prop=template.target)

        raise NoTemplateMatch(question)


def load_templates(source: Iterable[str]) -> TemplateRegistry:
    """
    Load a template registry from ``class|surface|target`` lines.

    Blank lines and lines starting with '#' are skipped. File order is preserved
    because it decides precedence.

    Raises:
        TemplateError: On a malformed line, an unknown class, a slot-count
            violation, or a duplicate surface
    """
    templates: List[QuestionTemplate] = []
    seen = set()
    for line_number, raw in enumerate(source, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue

        fields = line.split("|")
        if len(fields) != 3:
            raise TemplateError(f"expected 3 '|'-separated fields, found {len(fields)}", line_number)

        class_name, surface, target = (f.strip() for f in fields)
        try:
            pattern_class = PatternClass(class_name)
        except ValueError:
            raise TemplateError(f"unknown pattern class {class_name!r}", line_number) from None

        try:
            template = QuestionTemplate(pattern_class, surface, target)
        except TemplateError as exc:
            raise TemplateError(exc.message, line_number) from None

        key = _WHITESPACE.sub(" ", _strip_question_mark(surface)).lower()
        if key in seen:
            raise TemplateError(f"duplicate template surface {surface!r}", line_number)
        seen.add(key)
        templates.append(template)

    LOGGER.info("Loaded %d question templates", len(templates))
    return TemplateRegistry(templates)


def classify(registry: TemplateRegistry, question: str) -> ParsedQuestion:
    """Classify a question with ``registry``; see ``TemplateRegistry.classify``."""
    return registry.classify(question)
