"""Exception hierarchy shared by the loaders, parsers and engines."""

from typing import Optional


class KGQAError(Exception):
    """Base class for every error raised by the engine."""


class _LineError(KGQAError):
    """An error tied to a line of an input file."""

    def __init__(self, message: str, line_number: Optional[int] = None):
        self.message = message
        self.line_number = line_number
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)


class IngestError(_LineError, ValueError):
    """A triple file could not be loaded."""


class TemplateError(_LineError, ValueError):
    """A question or sentence template file is malformed."""


class RuleError(_LineError, ValueError):
    """A rule is syntactically invalid, unsafe, or used with the wrong relation."""


class NoTemplateMatch(KGQAError, LookupError):
    """The question matches no registered template and will not be processed."""

    def __init__(self, question: str):
        self.question = question
        super().__init__("question matches no template")


class PlannerError(KGQAError, ValueError):
    """A parsed question does not carry the fields its pattern class requires."""


class PatternError(KGQAError, ValueError):
    """A path pattern or binding seed is invalid."""


class ConfigError(KGQAError, ValueError):
    """Command-line configuration is invalid."""
