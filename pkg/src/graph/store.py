"""Immutable in-memory property graph loaded from tab-separated triple files."""

import logging
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Dict, FrozenSet, Iterable, Iterator, List, Mapping, Optional, Tuple

import networkx as nx
import numpy as np
import pandas as pd

from utils.config import DEFAULT_LITERAL_PREDICATES, DEFAULT_NODE_LABEL
from utils.errors import IngestError

LOGGER = logging.getLogger(__name__)

_EMPTY: Tuple[int, ...] = ()


@dataclass(frozen=True)
class Node:
    id: int
    name: str
    label: str = DEFAULT_NODE_LABEL
    properties: Mapping[str, str] = field(default_factory=dict)


@dataclass(frozen=True, order=True)
class Edge:
    src: int
    relation: str
    dst: int


@dataclass(frozen=True)
class IngestConfig:
    """How triples are routed while loading.

    Args:
        literal_predicates: Predicates whose objects are stored as node properties
        strip_angle_brackets: Remove surrounding '<' '>' from every field
        node_label: Label given to every node
    """

    literal_predicates: FrozenSet[str] = DEFAULT_LITERAL_PREDICATES
    strip_angle_brackets: bool = True
    node_label: str = DEFAULT_NODE_LABEL


class PropertyGraph:
    """Nodes and labeled directed edges held in a frozen ``networkx.MultiDiGraph``.

    Node ids are graph nodes carrying ``name``, ``label`` and ``properties``
    attributes; every edge is keyed by its relation. Instances are built by
    ``load_triples`` and never change afterwards, so any number of readers may
    share one.
    """

    def __init__(self, nodes: Iterable[Node], edges: Iterable[Edge]):
        self._nodes: Tuple[Node, ...] = tuple(nodes)
        self._edges: Tuple[Edge, ...] = tuple(sorted(set(edges)))

        graph = nx.MultiDiGraph()
        graph.add_nodes_from(
            (node.id, {"name": node.name, "label": node.label, "properties": node.properties})
            for node in self._nodes
        )
        graph.add_edges_from(
            (edge.src, edge.dst, edge.relation, {"relation": edge.relation}) for edge in self._edges
        )
        self._graph = nx.freeze(graph)

        by_relation: Dict[str, List[Edge]] = {}
        for edge in self._edges:
            by_relation.setdefault(edge.relation, []).append(edge)

        self._by_name = MappingProxyType({node.name: node.id for node in self._nodes})
        self._by_relation = MappingProxyType({k: tuple(v) for k, v in by_relation.items()})

    @property
    def nodes(self) -> Tuple[Node, ...]:
        return self._nodes

    @property
    def edges(self) -> Tuple[Edge, ...]:
        return self._edges

    @property
    def graph(self) -> nx.MultiDiGraph:
        """The frozen multigraph behind every lookup."""
        return self._graph

    @property
    def by_name(self) -> Mapping[str, int]:
        return self._by_name

    @property
    def relations(self) -> Tuple[str, ...]:
        """Edge labels present in the graph, sorted."""
        return tuple(sorted(self._by_relation))

    def __len__(self) -> int:
        return len(self._nodes)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PropertyGraph):
            return NotImplemented
        return self._nodes == other._nodes and self._edges == other._edges

    def __repr__(self) -> str:
        return f"PropertyGraph(nodes={len(self._nodes)}, edges={len(self._edges)})"

    def node(self, node_id: int) -> Node:
        return self._nodes[node_id]

    def name_of(self, node_id: int) -> str:
        return self._nodes[node_id].name

    def node_by_name(self, name: str) -> Optional[int]:
        return self._by_name.get(name)

    def out_neighbors(self, node_id: int, relation: str) -> Tuple[int, ...]:
        """Targets of ``relation`` edges leaving ``node_id``, sorted."""
        if node_id not in self._graph:
            return _EMPTY
        return tuple(sorted(dst for dst, keys in self._graph.succ[node_id].items() if relation in keys))

    def in_neighbors(self, node_id: int, relation: str) -> Tuple[int, ...]:
        """Sources of ``relation`` edges entering ``node_id``, sorted."""
        if node_id not in self._graph:
            return _EMPTY
        return tuple(sorted(src for src, keys in self._graph.pred[node_id].items() if relation in keys))

    def edges_with_relation(self, relation: str) -> Tuple[Edge, ...]:
        return self._by_relation.get(relation, ())

    def has_edge(self, src: int, relation: str, dst: int) -> bool:
        return self._graph.has_edge(src, dst, key=relation)

    def has_outgoing(self, node_id: int, relation: str) -> bool:
        if node_id not in self._graph:
            return False
        return any(relation in keys for keys in self._graph.succ[node_id].values())

    def relation_subgraph(self, relations: Iterable[str]) -> nx.MultiDiGraph:
        """A multigraph holding only the edges labeled with one of ``relations``."""
        subgraph = nx.MultiDiGraph()
        for relation in set(relations):
            subgraph.add_edges_from(
                (e.src, e.dst, relation, {"relation": relation}) for e in self.edges_with_relation(relation)
            )
        return subgraph

    def relation_frequencies(self) -> pd.DataFrame:
        """
        Summarize edge counts per relation.

        Returns:
            DataFrame with columns: relation, edges, distinct_subjects, distinct_objects
        """
        columns = ["relation", "edges", "distinct_subjects", "distinct_objects"]
        if not self._edges:
            return pd.DataFrame(columns=columns)

        frame = pd.DataFrame(
            [(e.relation, e.src, e.dst) for e in self._edges],
            columns=["relation", "src", "dst"],
        )
        summary = frame.groupby("relation").agg(
            edges=("src", "size"),
            distinct_subjects=("src", "nunique"),
            distinct_objects=("dst", "nunique"),
        ).reset_index()
        summary = summary.sort_values(["edges", "relation"], ascending=[False, True])
        return summary[columns].reset_index(drop=True)


def _strip_term(term: str, strip_brackets: bool) -> str:
    term = term.strip()
    if strip_brackets and len(term) >= 2 and term[0] == "<" and term[-1] == ">":
        term = term[1:-1]
    return term


def _decoded_lines(source: Iterable[str]) -> Iterator[Tuple[int, str]]:
    lines = iter(source)
    line_number = 0
    while True:
        line_number += 1
        try:
            raw = next(lines)
        except StopIteration:
            return
        except UnicodeDecodeError:
            raise IngestError("invalid UTF-8", line_number=line_number) from None
        yield line_number, raw


def _parse_lines(source: Iterable[str], config: IngestConfig) -> List[Tuple[str, str, str, int]]:
    rows = []
    for line_number, raw in _decoded_lines(source):
        line = raw.rstrip("\r\n")
        if not line.strip() or line.lstrip().startswith("#"):
            continue

        fields = line.split("\t")
        if len(fields) != 3:
            raise IngestError(
                f"expected 3 tab-separated fields, found {len(fields)}",
                line_number=line_number,
            )

        subject, predicate, obj = (_strip_term(f, config.strip_angle_brackets) for f in fields)
        if not subject or not predicate or not obj:
            raise IngestError("empty field", line_number=line_number)
        rows.append((subject, predicate, obj, line_number))
    return rows


def load_triples(source: Iterable[str], config: Optional[IngestConfig] = None) -> PropertyGraph:
    """
    Build a property graph from subject<TAB>predicate<TAB>object lines.

    Entity-valued triples become edges and literal-predicate triples become node
    properties. Nodes are created on first mention, so node ids follow file order.
    Duplicate triples are stored once.

    Args:
        source: Line iterable (an open text file, ``io.StringIO``, a list of strings)
        config: Routing options; defaults to ``IngestConfig()``

    Returns:
        The loaded PropertyGraph

    Raises:
        IngestError: On undecodable text, a line without exactly three fields, an
            empty field, or two different values for the same (node, property) pair
    """
    config = config or IngestConfig()
    rows = _parse_lines(source, config)
    if not rows:
        LOGGER.info("Loaded empty graph")
        return PropertyGraph((), ())

    frame = pd.DataFrame(rows, columns=["subject", "predicate", "object", "line"])
    frame = frame.drop_duplicates(["subject", "predicate", "object"], keep="first")

    is_literal = frame["predicate"].isin(config.literal_predicates)
    literals = frame[is_literal]

    # A second, different value for the same (node, key) is a conflict
    conflicts = literals[literals.duplicated(["subject", "predicate"], keep="first")]
    if not conflicts.empty:
        first = conflicts.iloc[0]
        raise IngestError(
            f"conflicting value {first['object']!r} for property "
            f"{first['predicate']!r} of {first['subject']!r}",
            line_number=int(first["line"]),
        )

    # First-mention order over subjects and entity objects, row by row
    subjects = frame["subject"].to_numpy(dtype=object)
    objects = frame["object"].where(~is_literal).to_numpy(dtype=object)
    mentions = np.column_stack([subjects, objects]).ravel()
    names = pd.unique(mentions[pd.notna(mentions)])
    name_index = pd.Index(names)

    properties: Dict[str, Dict[str, str]] = {}
    for subject, predicate, obj in literals[["subject", "predicate", "object"]].itertuples(index=False):
        properties.setdefault(subject, {})[predicate] = obj

    nodes = [
        Node(
            id=node_id,
            name=name,
            label=config.node_label,
            properties=MappingProxyType(properties.get(name, {})),
        )
        for node_id, name in enumerate(names)
    ]

    relations = frame[~is_literal]
    src_ids = name_index.get_indexer(relations["subject"])
    dst_ids = name_index.get_indexer(relations["object"])
    edges = [
        Edge(int(src), relation, int(dst))
        for src, relation, dst in zip(src_ids, relations["predicate"], dst_ids)
    ]

    graph = PropertyGraph(nodes, edges)
    LOGGER.info("Loaded graph with %d nodes, %d edges, %d properties",
                len(graph.nodes), len(graph.edges), len(literals))
    return graph


def node_by_name(graph: PropertyGraph, name: str) -> Optional[int]:
    """Return the id of the node with exactly this name, or None."""
    return graph.node_by_name(name)
