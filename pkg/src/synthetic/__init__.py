"""Synthetic graphs and rules for tests, benchmarks and the mockup data set."""

from .generators import (
    TRIPLE_COLUMNS,
    bulk_triples,
    planted_coparent_graph,
    random_graph,
    random_path_rule,
    triples_to_lines,
    write_triples,
)

__all__ = [
    "TRIPLE_COLUMNS",
    "bulk_triples",
    "planted_coparent_graph",
    "random_graph",
    "random_path_rule",
    "triples_to_lines",
    "write_triples",
]
