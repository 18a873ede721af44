"""Command-line front end: Loader and Router for the subcommands."""

import argparse
import logging
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import FrozenSet, List, Optional, Sequence

# Add src to path
project_root = Path(__file__).parent.parent
src_path = project_root / "src"
if str(src_path) not in sys.path:
    sys.path.insert(0, str(src_path))

app_path = Path(__file__).parent
if str(app_path) not in sys.path:
    sys.path.insert(0, str(app_path))

from utils.config import LITERAL_PREDICATES, LOG_LEVEL, MIN_PCA_CONF, MIN_STD_CONF, RULES_FILE  # noqa: E402
from utils.errors import ConfigError, KGQAError, NoTemplateMatch  # noqa: E402

from commands import COMMANDS  # noqa: E402

LOGGER = logging.getLogger(__name__)

OUTPUT_FORMATS = ("text", "json")
LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")
LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"


@dataclass(frozen=True)
class CliConfig:
    """Settings shared by every subcommand, resolved from flags and the environment."""

    graph_path: Optional[str] = None
    templates_path: Optional[str] = None
    rules_path: str = str(RULES_FILE)
    sentences_path: Optional[str] = None
    use_rules: bool = False
    min_std_conf: float = MIN_STD_CONF
    min_pca_conf: float = MIN_PCA_CONF
    output: str = "text"
    literal_predicates: FrozenSet[str] = field(default_factory=lambda: LITERAL_PREDICATES)
    log_level: str = LOG_LEVEL

    def __post_init__(self):
        for name in ("min_std_conf", "min_pca_conf"):
            value = getattr(self, name)
            if not 0.0 <= value <= 1.0:
                raise ConfigError(f"--{name.replace('_', '-')} must be within [0, 1], got {value}")
        if self.output not in OUTPUT_FORMATS:
            raise ConfigError(f"unknown output format {self.output!r}")
        if self.log_level.upper() not in LOG_LEVELS:
            raise ConfigError(f"unknown log level {self.log_level!r}")

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> "CliConfig":
        literal_predicates = LITERAL_PREDICATES
        if args.literal_predicate:
            literal_predicates = frozenset(args.literal_predicate)
        return cls(
            graph_path=args.graph,
            templates_path=args.templates,
            rules_path=args.rules or str(RULES_FILE),
            sentences_path=args.sentences,
            use_rules=getattr(args, "use_rules", False),
            min_std_conf=getattr(args, "min_std_conf", MIN_STD_CONF),
            min_pca_conf=getattr(args, "min_pca_conf", MIN_PCA_CONF),
            output=args.output,
            literal_predicates=literal_predicates,
            log_level=args.log_level.upper(),
        )


class _ArgumentParser(argparse.ArgumentParser):
    """Reports usage errors as ConfigError so they share the exit-code contract."""

    def error(self, message: str):
        raise ConfigError(message)


def _common_options() -> argparse.ArgumentParser:
    parent = _ArgumentParser(add_help=False)
    group = parent.add_argument_group("input files")
    group.add_argument("--graph", help="Triple file (default: KGQA_GRAPH_FILE, resolved by DATA_MODE)")
    group.add_argument("--templates", help="Question template file (default: KGQA_TEMPLATES_FILE)")
    group.add_argument("--rules", help="Rule file (default: KGQA_RULES_FILE)")
    group.add_argument("--sentences", help="Answer sentence file (default: KGQA_SENTENCES_FILE)")
    group.add_argument("--literal-predicate", action="append", metavar="PREDICATE",
                       help="Predicate stored as a node property; repeat for several "
                            "(default: KGQA_LITERAL_PREDICATES)")
    parent.add_argument("--output", choices=OUTPUT_FORMATS, default="text", help="Output format")
    parent.add_argument("--log-level", default=LOG_LEVEL, type=str.upper, choices=LOG_LEVELS,
                        help="Log level for messages on stderr")
    return parent


def _answer_options() -> argparse.ArgumentParser:
    parent = _ArgumentParser(add_help=False)
    parent.add_argument("--use-rules", action="store_true",
                        help="Predict missing class I answers with association rules")
    parent.add_argument("--min-std-conf", type=float, default=MIN_STD_CONF,
                        help="Lowest standard confidence of a predicting rule")
    parent.add_argument("--min-pca-conf", type=float, default=MIN_PCA_CONF,
                        help="Lowest PCA confidence of a predicting rule")
    return parent


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(
        prog="kgqa",
        description="Template-based question answering over a knowledge graph, "
                    "with association-rule predictions for missing facts",
    )
    subparsers = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    parents = {"common": _common_options(), "answer": _answer_options()}
    for command in COMMANDS.values():
        command.register(subparsers, parents)
    return parser


def configure_logging(level: str) -> None:
    logging.basicConfig(level=getattr(logging, level), stream=sys.stderr, format=LOG_FORMAT, force=True)


def run(argv: Optional[Sequence[str]] = None) -> int:
    """
    Run one command line.

    Returns:
        0 on success (an unanswered question included), 2 when a question matches
        no template, 1 on configuration, input or parse errors
    """
    arguments: List[str] = list(sys.argv[1:] if argv is None else argv)
    try:
        args = build_parser().parse_args(arguments)
        config = CliConfig.from_args(args)
        configure_logging(config.log_level)
        LOGGER.debug("Running %s with %s", args.command, config)
        return COMMANDS[args.command].execute(args, config)
    except SystemExit as exc:
        # --help
        return exc.code if isinstance(exc.code, int) else 0
    except NoTemplateMatch as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (KGQAError, OSError, UnicodeDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
