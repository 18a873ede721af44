"""Text and JSON renderers for answers, rule tables and graph statistics."""

import json
from typing import Any, Dict, Optional

import pandas as pd

from qa.answer_pipeline import Answer
from qa.formatting import SentenceTemplates, answer_to_dict, format_answer

EMPTY_TABLE_TEXT = "(no rules)"

_CONFIDENCE_COLUMNS = ("std_conf", "pca_conf")


def to_json(data: Any) -> str:
    """One JSON document on a single line, UTF-8 characters kept."""
    return json.dumps(data, ensure_ascii=False)


def render_answer(question: str, answer: Answer, sentences: Optional[SentenceTemplates],
                  output: str = "text") -> str:
    """
    Render one answer.

    Args:
        question: The question as asked
        answer: Pipeline result
        sentences: Sentence templates for the text form
        output: "text" or "json"
    """
    sentence = format_answer(answer, answer.parsed, sentences)
    if output == "json":
        return to_json(answer_to_dict(question, answer, sentence))
    return sentence


def render_table(frame: pd.DataFrame, output: str = "text") -> str:
    """
    Render a result DataFrame.

    Text output is a fixed-width table with confidences at four decimals; JSON
    output is a list of row objects carrying the full-precision values.
    """
    if output == "json":
        return to_json(frame.to_dict(orient="records"))
    if frame.empty:
        return EMPTY_TABLE_TEXT

    formatters = {col: "{:.4f}".format for col in _CONFIDENCE_COLUMNS if col in frame.columns}
    return frame.to_string(index=False, formatters=formatters)


def render_stats(stats: Dict[str, Any], frequencies: pd.DataFrame, output: str = "text") -> str:
    """Render graph statistics followed by the per-relation frequency table."""
    if output == "json":
        return to_json({"graph": stats, "relations": frequencies.to_dict(orient="records")})

    width = max(len(key) for key in stats)
    lines = [f"{key.replace('_', ' '):<{width}}  {value}" for key, value in stats.items()]
    if not frequencies.empty:
        lines.append("")
        lines.append(frequencies.to_string(index=False))
    return "\n".join(lines)
