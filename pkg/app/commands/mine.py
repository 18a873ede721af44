"""mine: discover path rules in the graph."""

import logging

from rules.miner import MineParams, mine, mined_rules_frame
from utils.config import MAX_BODY_ATOMS
from utils.errors import ConfigError

from components.output import render_table
from components.session import load_session

LOGGER = logging.getLogger(__name__)


def register(subparsers, parents) -> None:
    parser = subparsers.add_parser(
        "mine",
        parents=[parents["common"]],
        help="Mine association rules level by level",
        description="Grow rule bodies from 1 up to --max-body atoms, keeping rules that "
                    "meet the support and confidence thresholds.",
    )
    parser.add_argument("--max-body", type=int, default=2, help=f"Largest body size, 1 to {MAX_BODY_ATOMS}")
    parser.add_argument("--min-support", type=int, default=1,
                        help="Minimum number of head pairs satisfying body and head")
    parser.add_argument("--min-std-conf", type=float, default=0.0, help="Minimum standard confidence")
    parser.add_argument("--min-pca-conf", type=float, default=0.0, help="Minimum PCA confidence")
    parser.add_argument("--head-relation", action="append", metavar="RELATION",
                        help="Only mine rules concluding this relation; repeat for several")
    parser.add_argument("--workers", type=int, default=1, help="Threads evaluating rule bodies")
    parser.add_argument("--limit", type=int, help="Print at most this many rules")
    parser.add_argument("--csv", metavar="PATH", help="Also write all mined rules to a CSV file")


def mine_params(args) -> MineParams:
    try:
        return MineParams(
            max_body=args.max_body,
            min_support=args.min_support,
            min_std_conf=args.min_std_conf,
            min_pca_conf=args.min_pca_conf,
            head_relations=frozenset(args.head_relation) if args.head_relation else None,
            workers=args.workers,
        )
    except ValueError as exc:
        raise ConfigError(str(exc)) from None


def execute(args, config) -> int:
    if args.limit is not None and args.limit < 0:
        raise ConfigError("--limit must be non-negative")
    params = mine_params(args)
    session = load_session(config, templates=False, rules=False)

    frame = mined_rules_frame(mine(session.graph, params))
    if args.csv:
        frame.to_csv(args.csv, index=False, encoding="utf-8")
        LOGGER.info("Saved %s", args.csv)

    if args.limit is not None:
        frame = frame.head(args.limit)
    print(render_table(frame, config.output))
    return 0
