"""Path patterns over the property graph and the injective matcher that binds them."""

from dataclasses import dataclass
from enum import Enum
from typing import Dict, Iterator, List, Mapping, Optional, Sequence, Set, Tuple

import networkx as nx
from networkx.algorithms import isomorphism

from utils.config import MAX_BODY_ATOMS
from utils.errors import PatternError

from .store import PropertyGraph

Binding = Dict[str, int]


class Direction(str, Enum):
    FORWARD = "forward"
    BACKWARD = "backward"

    def flipped(self) -> "Direction":
        return Direction.BACKWARD if self is Direction.FORWARD else Direction.FORWARD


@dataclass(frozen=True)
class EdgeAtom:
    """One edge of a pattern, written in path order.

    ``(a)-[r]->(b)`` is ``EdgeAtom("a", "r", "b", FORWARD)`` and requires the edge a→b;
    ``(a)<-[r]-(b)`` is ``EdgeAtom("a", "r", "b", BACKWARD)`` and requires b→a.
    """

    from_var: str
    relation: str
    to_var: str
    direction: Direction = Direction.FORWARD

    @property
    def source(self) -> str:
        return self.from_var if self.direction is Direction.FORWARD else self.to_var

    @property
    def target(self) -> str:
        return self.to_var if self.direction is Direction.FORWARD else self.from_var

    @property
    def variables(self) -> Tuple[str, str]:
        return (self.from_var, self.to_var)

    def connector(self) -> str:
        if self.direction is Direction.FORWARD:
            return f"-[{self.relation}]->"
        return f"<-[{self.relation}]-"

    def __str__(self) -> str:
        return f"({self.from_var}){self.connector()}({self.to_var})"


@dataclass(frozen=True)
class PathPattern:
    atoms: Tuple[EdgeAtom, ...]

    def __post_init__(self):
        atoms = tuple(self.atoms)
        object.__setattr__(self, "atoms", atoms)
        if not 1 <= len(atoms) <= MAX_BODY_ATOMS:
            raise PatternError(f"pattern must have 1 to {MAX_BODY_ATOMS} atoms, got {len(atoms)}")

        seen: Set[str] = set(atoms[0].variables)
        for atom in atoms[1:]:
            if not seen.intersection(atom.variables):
                raise PatternError(f"atom {atom} shares no variable with the atoms before it")
            seen.update(atom.variables)

    @property
    def variables(self) -> Tuple[str, ...]:
        """Variables in order of first appearance."""
        ordered: List[str] = []
        for atom in self.atoms:
            for var in atom.variables:
                if var not in ordered:
                    ordered.append(var)
        return tuple(ordered)

    def __len__(self) -> int:
        return len(self.atoms)

    def is_chain(self) -> bool:
        return all(prev.to_var == nxt.from_var for prev, nxt in zip(self.atoms, self.atoms[1:]))

    def __str__(self) -> str:
        if self.is_chain():
            parts = [f"({self.atoms[0].from_var})"]
            for atom in self.atoms:
                parts.append(f"{atom.connector()}({atom.to_var})")
            return "".join(parts)
        return ", ".join(str(atom) for atom in self.atoms)


def _next_atom(atoms: Sequence[EdgeAtom], pending: Sequence[int], binding: Mapping[str, int]) -> int:
    # Most-constrained first; ties keep pattern order
    return max(pending, key=lambda i: (sum(v in binding for v in atoms[i].variables), -i))


def _candidate_edges(graph: PropertyGraph, atom: EdgeAtom,
                     binding: Mapping[str, int]) -> Iterator[Tuple[int, int]]:
    src = binding.get(atom.source)
    dst = binding.get(atom.target)
    if src is not None and dst is not None:
        if graph.has_edge(src, atom.relation, dst):
            yield src, dst
    elif src is not None:
        for neighbor in graph.out_neighbors(src, atom.relation):
            yield src, neighbor
    else:
        # Seeded connected patterns always reach an atom with a bound end
        for neighbor in graph.in_neighbors(dst, atom.relation):
            yield neighbor, dst


def _search(graph: PropertyGraph, atoms: Sequence[EdgeAtom], pending: List[int],
            binding: Binding, used: Set[int], out: List[Binding]) -> None:
    if not pending:
        out.append(dict(binding))
        return

    index = _next_atom(atoms, pending, binding)
    atom = atoms[index]
    rest = [i for i in pending if i != index]

    for src, dst in _candidate_edges(graph, atom, binding):
        added: List[str] = []
        consistent = True
        for var, node_id in ((atom.source, src), (atom.target, dst)):
            bound = binding.get(var)
            if bound is None:
                if node_id in used:
                    consistent = False
                    break
                binding[var] = node_id
                used.add(node_id)
                added.append(var)
            elif bound != node_id:
                consistent = False
                break

        if consistent:
            _search(graph, atoms, rest, binding, used, out)

        for var in added:
            used.discard(binding.pop(var))


def _pattern_graph(pattern: PathPattern) -> nx.MultiDiGraph:
    pattern_graph = nx.MultiDiGraph()
    pattern_graph.add_nodes_from(pattern.variables)
    pattern_graph.add_edges_from(
        (atom.source, atom.target, atom.relation, {"relation": atom.relation}) for atom in pattern.atoms
    )
    return pattern_graph


def _relations_cover(data_edges: Mapping[str, dict], pattern_edges: Mapping[str, dict]) -> bool:
    # Both sides are keyed by relation
    return pattern_edges.keys() <= data_edges.keys()


def _monomorphisms(graph: PropertyGraph, pattern: PathPattern) -> Iterator[Binding]:
    relations = {atom.relation for atom in pattern.atoms}
    if not all(graph.edges_with_relation(relation) for relation in relations):
        return

    matcher = isomorphism.MultiDiGraphMatcher(
        graph.relation_subgraph(relations), _pattern_graph(pattern), edge_match=_relations_cover,
    )
    for mapping in matcher.subgraph_monomorphisms_iter():
        yield {var: node_id for node_id, var in mapping.items()}


def match_pattern(graph: PropertyGraph, pattern: PathPattern,
                  binding_seed: Optional[Mapping[str, int]] = None) -> List[Binding]:
    """
    Find every injective assignment of pattern variables to nodes.

    Each atom's edge must exist in the stated direction and no two variables may
    bind the same node. Unseeded patterns are matched as subgraph monomorphisms
    of the graph; seeded ones by walking the adjacency out from the seed.

    Args:
        graph: Graph to search
        pattern: Connected path pattern
        binding_seed: Optional partial assignment of pattern variables

    Returns:
        Complete bindings sorted by node id, taking variables in order of first appearance
    """
    seed: Binding = dict(binding_seed or {})
    variables = pattern.variables
    unknown = set(seed) - set(variables)
    if unknown:
        raise PatternError(f"seed variables not in pattern: {sorted(unknown)}")

    used = set(seed.values())
    if len(used) != len(seed):
        return []

    if seed:
        results: List[Binding] = []
        _search(graph, pattern.atoms, list(range(len(pattern.atoms))), seed, used, results)
    else:
        results = list(_monomorphisms(graph, pattern))
    results.sort(key=lambda b: tuple(b[v] for v in variables))
    return results
