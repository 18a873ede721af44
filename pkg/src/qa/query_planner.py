"""Graph components, compiled graph queries, and their execution.

Class I questions become a node plus an edge label, class II a node plus a
property key, class III a pair of nodes. Each component compiles to exactly one
query kind:

    NodeEdge{n, r}      -> FindObjects{n, r}    every o with an edge n -[r]-> o
    NodeProperty{n, k}  -> FindProperty{n, k}   the literal stored under key k on n
    NodePair{n1, n2}    -> FindRelations{n1, n2} every edge label between n1 and n2,
                                                 tagged forward (n1 -> n2) or backward

An unknown subject name gives an empty result, never an error.
"""

from dataclasses import dataclass
from typing import Optional, Tuple, Union

from graph.matcher import Direction
from graph.store import PropertyGraph
from utils.errors import PlannerError

from .question_parser import ParsedQuestion, PatternClass


@dataclass(frozen=True)
class NodeEdge:
    node_name: str
    edge_label: str


@dataclass(frozen=True)
class NodeProperty:
    node_name: str
    property_key: str


@dataclass(frozen=True)
class NodePair:
    node_name_1: str
    node_name_2: str


GraphComponent = Union[NodeEdge, NodeProperty, NodePair]


@dataclass(frozen=True)
class FindObjects:
    subject_name: str
    relation: str


@dataclass(frozen=True)
class FindProperty:
    subject_name: str
    key: str


@dataclass(frozen=True)
class FindRelations:
    name_1: str
    name_2: str


GraphQuery = Union[FindObjects, FindProperty, FindRelations]


@dataclass(frozen=True)
class RelationHit:
    relation: str
    direction: Direction


@dataclass(frozen=True)
class QueryResult:
    """Outcome of one query; only the field for the query's kind is populated."""

    objects: Tuple[str, ...] = ()
    literal: Optional[str] = None
    relations: Tuple[RelationHit, ...] = ()

    @property
    def is_empty(self) -> bool:
        return not self.objects and self.literal is None and not self.relations


EMPTY_RESULT = QueryResult()


def to_graph_component(q: ParsedQuestion) -> GraphComponent:
    """Map a parsed question onto its graph component."""
    if not q.is_well_formed():
        raise PlannerError(f"parsed question does not satisfy class {q.pattern_class.value}: {q}")

    if q.pattern_class is PatternClass.I:
        return NodeEdge(q.v1, q.rel)
    if q.pattern_class is PatternClass.II:
        return NodeProperty(q.v1, q.prop)
    return NodePair(q.v1, q.v2)


def to_query(c: GraphComponent) -> GraphQuery:
    """Compile a graph component into its query."""
    if isinstance(c, NodeEdge):
        return FindObjects(c.node_name, c.edge_label)
    if isinstance(c, NodeProperty):
        return FindProperty(c.node_name, c.property_key)
    if isinstance(c, NodePair):
        return FindRelations(c.node_name_1, c.node_name_2)
    raise PlannerError(f"unknown graph component: {c!r}")


def execute(graph: PropertyGraph, query: GraphQuery) -> QueryResult:
    """
    Run a query against the graph.

    Returns:
        Objects ordered by node id, the property literal, or direction-tagged
        relations (forward first, then by label); empty when nothing matches
    """
    if isinstance(query, FindObjects):
        subject = graph.node_by_name(query.subject_name)
        if subject is None:
            return EMPTY_RESULT
        objects = graph.out_neighbors(subject, query.relation)
        return QueryResult(objects=tuple(graph.name_of(o) for o in objects))

    if isinstance(query, FindProperty):
        subject = graph.node_by_name(query.subject_name)
        if subject is None:
            return EMPTY_RESULT
        return QueryResult(literal=graph.node(subject).properties.get(query.key))

    if isinstance(query, FindRelations):
        first = graph.node_by_name(query.name_1)
        second = graph.node_by_name(query.name_2)
        if first is None or second is None:
            return EMPTY_RESULT
        hits = []
        for relation in graph.relations:
            if graph.has_edge(first, relation, second):
                hits.append(RelationHit(relation, Direction.FORWARD))
            if graph.has_edge(second, relation, first):
                hits.append(RelationHit(relation, Direction.BACKWARD))
        hits.sort(key=lambda h: (h.direction is Direction.BACKWARD, h.relation))
        return QueryResult(relations=tuple(hits))

    raise PlannerError(f"unknown graph query: {query!r}")
