"""stats: summarize the loaded graph."""

from utils.data_loader import get_graph_stats

from components.output import render_stats
from components.session import load_session


def register(subparsers, parents) -> None:
    subparsers.add_parser(
        "stats",
        parents=[parents["common"]],
        help="Print node, edge and relation counts of the graph",
    )


def execute(args, config) -> int:
    session = load_session(config, templates=False, rules=False)
    graph = session.graph
    print(render_stats(get_graph_stats(graph), graph.relation_frequencies(), config.output))
    return 0
