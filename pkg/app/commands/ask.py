"""ask: answer one question."""

from qa.answer_pipeline import AnswerOptions, answer

from components.output import render_answer
from components.session import load_session


def answer_options(config) -> AnswerOptions:
    return AnswerOptions(
        use_rules=config.use_rules,
        min_std_conf=config.min_std_conf,
        min_pca_conf=config.min_pca_conf,
    )


def register(subparsers, parents) -> None:
    parser = subparsers.add_parser(
        "ask",
        parents=[parents["common"], parents["answer"]],
        help="Answer one question",
        description="Classify a question, look up its answer, and with --use-rules "
                    "predict a missing class I answer from association rules.",
    )
    parser.add_argument("question", help='Question text, e.g. "Who did Malekeh Jahan marry?"')


def execute(args, config) -> int:
    session = load_session(config)
    result = answer(session.graph, session.registry, session.rules, args.question, answer_options(config))
    print(render_answer(args.question, result, session.sentences, config.output))
    return 0
