"""confidence: score rules on the graph."""

import logging
from pathlib import Path
from typing import List, Sequence

from rules.association import AssociationRule
from rules.confidence import evaluate_confidence, reports_frame
from utils.data_loader import load_rule_set
from utils.errors import ConfigError

from components.output import render_table
from components.session import load_session

LOGGER = logging.getLogger(__name__)


def register(subparsers, parents) -> None:
    parser = subparsers.add_parser(
        "confidence",
        parents=[parents["common"]],
        help="Print support, standard and PCA confidence of rules",
        description="Evaluate every rule of --rules, or only those selected with --rule.",
    )
    parser.add_argument("--rule", action="append", metavar="NAME|FILE",
                        help="Rule name from --rules, or a rule file; repeat for several")
    parser.add_argument("--csv", metavar="PATH", help="Also write the table to a CSV file")


def select_rules(available: Sequence[AssociationRule], selectors: Sequence[str]) -> List[AssociationRule]:
    """
    Resolve ``--rule`` values: a rule name from the loaded set, else a rule file.

    Raises:
        ConfigError: If a value is neither
    """
    by_name = {rule.name: rule for rule in available}
    selected: List[AssociationRule] = []
    for selector in selectors:
        if selector in by_name:
            selected.append(by_name[selector])
        elif Path(selector).is_file():
            selected.extend(load_rule_set(selector))
        else:
            raise ConfigError(f"unknown rule or rule file {selector!r}")
    return selected


def execute(args, config) -> int:
    session = load_session(config, templates=False)
    rules = select_rules(session.rules, args.rule) if args.rule else list(session.rules)

    reports = [evaluate_confidence(session.graph, rule) for rule in rules]
    frame = reports_frame(rules, reports)
    if args.csv:
        frame.to_csv(args.csv, index=False, encoding="utf-8")
        LOGGER.info("Saved %s", args.csv)

    print(render_table(frame, config.output))
    return 0
