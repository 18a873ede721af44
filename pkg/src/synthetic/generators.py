"""Triple generators built on numpy's random Generator.

Every generator returns a ``subject, predicate, object`` DataFrame; pass it
through ``triples_to_lines`` to feed ``load_triples`` directly, or
``write_triples`` to save a triple file.
"""

from pathlib import Path
from typing import List, Sequence, Union

import numpy as np
import pandas as pd

from graph.matcher import Direction, EdgeAtom, PathPattern
from rules.association import AssociationRule
from utils.config import MAX_BODY_ATOMS

TRIPLE_COLUMNS = ["subject", "predicate", "object"]

_VARIABLES = "abcdefgh"


def random_graph(rng: np.random.Generator, n_nodes: int = 12, n_relations: int = 3,
                 n_edges: int = 30) -> pd.DataFrame:
    """
    Random multigraph over nodes ``n0..`` and relations ``r0..``.

    Self-loops are dropped and repeated triples kept once, so the result may hold
    fewer than ``n_edges`` rows.
    """
    src = rng.integers(0, n_nodes, size=n_edges)
    dst = rng.integers(0, n_nodes, size=n_edges)
    rel = rng.integers(0, n_relations, size=n_edges)

    frame = pd.DataFrame({
        "subject": [f"n{i}" for i in src],
        "predicate": [f"r{i}" for i in rel],
        "object": [f"n{i}" for i in dst],
    })
    frame = frame[frame["subject"] != frame["object"]]
    return frame.drop_duplicates().reset_index(drop=True)


def random_path_rule(rng: np.random.Generator, relations: Sequence[str], body_len: int) -> AssociationRule:
    """Random chain body of ``body_len`` atoms with a head over two distinct body variables."""
    if not 1 <= body_len <= MAX_BODY_ATOMS:
        raise ValueError(f"body_len must be between 1 and {MAX_BODY_ATOMS}, got {body_len}")

    atoms = []
    for position in range(body_len):
        direction = Direction.FORWARD if rng.random() < 0.5 else Direction.BACKWARD
        relation = relations[int(rng.integers(0, len(relations)))]
        atoms.append(EdgeAtom(_VARIABLES[position], relation, _VARIABLES[position + 1], direction))

    i, j = rng.choice(body_len + 1, size=2, replace=False)
    head_relation = relations[int(rng.integers(0, len(relations)))]
    head = EdgeAtom(_VARIABLES[int(i)], head_relation, _VARIABLES[int(j)])
    return AssociationRule(body=PathPattern(tuple(atoms)), head=head)


def planted_coparent_graph(married_pairs: int = 10, distractor_pairs: int = 5,
                           fillers: int = 5) -> pd.DataFrame:
    """
    Graph planted with the co-parent marriage rule.

    Every pair shares one child. Married pairs are linked by ``isMarriedTo`` in
    both directions, distractor pairs are not linked at all, and filler nodes form
    a ``knows`` chain. The defaults give 50 nodes, on which
    ``(a)-[hasChild]->(b)<-[hasChild]-(c) => (a)-[isMarriedTo]->(c)`` has standard
    confidence 20/30 and PCA confidence 1.
    """
    rows: List[tuple] = []
    for k in range(married_pairs):
        husband, wife, child = f"Husband_{k}", f"Wife_{k}", f"Child_{k}"
        rows += [
            (husband, "hasChild", child),
            (wife, "hasChild", child),
            (husband, "isMarriedTo", wife),
            (wife, "isMarriedTo", husband),
        ]
    for k in range(distractor_pairs):
        first, second, child = f"Parent_{k}_A", f"Parent_{k}_B", f"Shared_Child_{k}"
        rows += [(first, "hasChild", child), (second, "hasChild", child)]
    for k in range(fillers - 1):
        rows.append((f"Filler_{k}", "knows", f"Filler_{k + 1}"))
    return pd.DataFrame(rows, columns=TRIPLE_COLUMNS)


def bulk_triples(rng: np.random.Generator, n_triples: int = 100_000, n_nodes: int = 20_000,
                 n_relations: int = 20, literal_share: float = 0.05) -> pd.DataFrame:
    """Large random triple set; a share of the rows carry ``wasBornOnDate`` literals."""
    src = rng.integers(0, n_nodes, size=n_triples)
    dst = rng.integers(0, n_nodes, size=n_triples)
    rel = rng.integers(0, n_relations, size=n_triples)
    is_literal = rng.random(n_triples) < literal_share

    subjects = pd.Series(src).map("Entity_{}".format)
    objects = pd.Series(dst).map("Entity_{}".format)
    predicates = pd.Series(rel).map("relation{}".format)

    # One date per subject keeps literal values conflict-free
    dates = pd.Series(src).map(lambda i: f"19{i % 100:02d}-01-01")
    predicates = predicates.where(~is_literal, "wasBornOnDate")
    objects = objects.where(~is_literal, dates)

    return pd.DataFrame({"subject": subjects, "predicate": predicates, "object": objects})


def triples_to_lines(frame: pd.DataFrame) -> List[str]:
    """Tab-separated lines accepted by ``load_triples``."""
    return [f"{s}\t{p}\t{o}\n" for s, p, o in frame[TRIPLE_COLUMNS].itertuples(index=False)]


def write_triples(frame: pd.DataFrame, path: Union[str, Path]) -> Path:
    """Save triples as a header-less, tab-separated UTF-8 file."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    frame[TRIPLE_COLUMNS].to_csv(path, sep="\t", header=False, index=False, encoding="utf-8")
    return path
