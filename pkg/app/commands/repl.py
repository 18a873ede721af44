"""repl: answer questions line by line until end-of-input."""

import logging
import sys

from qa.answer_pipeline import answer
from utils.errors import NoTemplateMatch

from components.output import render_answer
from components.session import load_session

from .ask import answer_options

LOGGER = logging.getLogger(__name__)

PROMPT = "> "
EXIT_WORDS = {"exit", "quit"}


def register(subparsers, parents) -> None:
    subparsers.add_parser(
        "repl",
        parents=[parents["common"], parents["answer"]],
        help="Answer questions read from standard input",
        description="Read one question per line and print one answer per line. "
                    "Stops at end-of-input or on an 'exit' or 'quit' line.",
    )


def execute(args, config) -> int:
    session = load_session(config)
    options = answer_options(config)
    interactive = sys.stdin.isatty()

    while True:
        if interactive:
            print(PROMPT, end="", flush=True)
        line = sys.stdin.readline()
        if not line:
            break

        question = line.strip()
        if not question:
            continue
        if question.lower() in EXIT_WORDS:
            break

        try:
            result = answer(session.graph, session.registry, session.rules, question, options)
        except NoTemplateMatch as exc:
            # An unmatched question is reported and the loop goes on
            print(f"error: {exc}", file=sys.stderr)
            continue
        print(render_answer(question, result, session.sentences, config.output), flush=True)

    return 0
