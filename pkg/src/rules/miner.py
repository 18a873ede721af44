"""Level-wise mining of path-shaped association rules.

Candidates are keyed by ``(steps, i, j, relation)``: a body path of ``(relation,
direction)`` steps over variables a, b, c, ... in path order, and a head
``relation(var_i, var_j)``. Level k starts from the closed candidates (head on
the two ends of a k-step path) and from the extensions, at either end, of the
candidates kept at level k-1. Extending a body keeps the head fixed, so support
can only shrink: a candidate below the support threshold is never extended.
Likewise a k-step body is only built when both of its (k-1)-step sub-paths
matched somewhere in the graph, and mining stops at the first level where no
body matches.
"""

import itertools
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Set, Tuple

import pandas as pd

from graph.matcher import Direction, EdgeAtom, PathPattern, match_pattern
from graph.store import PropertyGraph
from utils.config import MAX_BODY_ATOMS

from .association import AssociationRule
from .confidence import REPORT_COLUMNS, ConfidenceReport, score_pairs

LOGGER = logging.getLogger(__name__)

VARIABLES = "abcdefgh"

Step = Tuple[str, str]  # (relation, direction value)
CandidateKey = Tuple[Tuple[Step, ...], int, int, str]


@dataclass(frozen=True)
class MineParams:
    """Mining thresholds.

    Args:
        max_body: Largest body size, 1 to 4
        min_support: Minimum number of distinct head pairs satisfying body and head
        min_std_conf: Minimum standard confidence of emitted rules
        min_pca_conf: Minimum PCA confidence of emitted rules
        head_relations: Restrict heads to these relations (all relations when None)
        prune: Skip extending candidates below ``min_support`` and bodies with an
            unmatched sub-path
        workers: Threads used to evaluate bodies; output is identical for any value
    """

    max_body: int = 2
    min_support: int = 1
    min_std_conf: float = 0.0
    min_pca_conf: float = 0.0
    head_relations: Optional[FrozenSet[str]] = None
    prune: bool = True
    workers: int = 1

    def __post_init__(self):
        if not 1 <= self.max_body <= MAX_BODY_ATOMS:
            raise ValueError(f"max_body must be between 1 and {MAX_BODY_ATOMS}, got {self.max_body}")
        if self.min_support < 0:
            raise ValueError("min_support must be non-negative")
        for name in ("min_std_conf", "min_pca_conf"):
            value = getattr(self, name)
            if not 0.0 <= value <= 1.0:
                raise ValueError(f"{name} must be within [0, 1], got {value}")
        if self.workers < 1:
            raise ValueError("workers must be at least 1")


@dataclass(frozen=True)
class MinedRule:
    rule: AssociationRule
    report: ConfidenceReport


def _reversed_steps(body: Tuple[Step, ...]) -> Tuple[Step, ...]:
    return tuple((rel, Direction(direction).flipped().value) for rel, direction in reversed(body))


def _mirror(key: CandidateKey) -> CandidateKey:
    steps, i, j, relation = key
    last = len(steps)
    return _reversed_steps(steps), last - i, last - j, relation


def _canonical(key: CandidateKey) -> CandidateKey:
    return min(key, _mirror(key))


def _is_trivial(key: CandidateKey) -> bool:
    """True when the body already contains the head edge."""
    steps, i, j, relation = key
    for position, (rel, direction) in enumerate(steps):
        if rel != relation:
            continue
        if direction == Direction.FORWARD.value and (position, position + 1) == (i, j):
            return True
        if direction == Direction.BACKWARD.value and (position + 1, position) == (i, j):
            return True
    return False


def _body(steps: Sequence[Step]) -> PathPattern:
    return PathPattern(tuple(
        EdgeAtom(VARIABLES[p], rel, VARIABLES[p + 1], Direction(direction))
        for p, (rel, direction) in enumerate(steps)
    ))


def candidate_rule(key: CandidateKey) -> AssociationRule:
    steps, i, j, relation = key
    head = EdgeAtom(VARIABLES[i], relation, VARIABLES[j], Direction.FORWARD)
    return AssociationRule(body=_body(steps), head=head)


def _all_steps(relations: Sequence[str]) -> List[Step]:
    return [(rel, d.value) for rel in relations for d in (Direction.FORWARD, Direction.BACKWARD)]


def _has_matched_parts(body: Tuple[Step, ...], matched: Set[Tuple[Step, ...]]) -> bool:
    return body[:-1] in matched and body[1:] in matched


def _grown_bodies(matched: Set[Tuple[Step, ...]], steps: Sequence[Step]) -> Iterable[Tuple[Step, ...]]:
    for body in matched:
        for step in steps:
            grown = body + (step,)
            if grown[1:] in matched:
                yield grown


def _seeds(bodies: Iterable[Tuple[Step, ...]], heads: Sequence[str]) -> Iterable[CandidateKey]:
    for body in bodies:
        level = len(body)
        for relation in heads:
            yield body, 0, level, relation
            yield body, level, 0, relation


def _extensions(key: CandidateKey, steps: Sequence[Step]) -> Iterable[CandidateKey]:
    body, i, j, relation = key
    for step in steps:
        yield body + (step,), i, j, relation
        yield (step,) + body, i + 1, j + 1, relation


def _evaluate_body(graph: PropertyGraph, steps: Tuple[Step, ...],
                   keys: Sequence[CandidateKey]) -> List[Tuple[CandidateKey, ConfidenceReport]]:
    bindings = match_pattern(graph, _body(steps))
    results = []
    for key in keys:
        _, i, j, relation = key
        u, w = VARIABLES[i], VARIABLES[j]
        report = score_pairs(graph, ((b[u], b[w]) for b in bindings), relation)
        results.append((key, report))
    return results


def _evaluate(graph: PropertyGraph, candidates: Iterable[CandidateKey],
              workers: int) -> Dict[CandidateKey, ConfidenceReport]:
    groups: Dict[Tuple[Step, ...], List[CandidateKey]] = {}
    for key in sorted(candidates):
        groups.setdefault(key[0], []).append(key)

    tasks = list(groups.items())
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as executor:
            evaluated = list(executor.map(lambda item: _evaluate_body(graph, *item), tasks))
    else:
        evaluated = [_evaluate_body(graph, steps, keys) for steps, keys in tasks]

    return {key: report for chunk in evaluated for key, report in chunk}


def mine(graph: PropertyGraph, params: Optional[MineParams] = None) -> List[MinedRule]:
    """
    Mine path rules of 1 to ``params.max_body`` atoms.

    Returns:
        Rules meeting every threshold with non-zero support, sorted by PCA confidence
        (descending), standard confidence (descending), then rule text
    """
    params = params or MineParams()
    relations = graph.relations
    heads = [r for r in relations if params.head_relations is None or r in params.head_relations]
    steps = _all_steps(relations)
    if not heads:
        LOGGER.warning("No head relations to mine")
        return []

    support_floor = max(params.min_support, 1)
    emitted: Dict[CandidateKey, ConfidenceReport] = {}
    survivors: Set[CandidateKey] = set()
    matched: Set[Tuple[Step, ...]] = set()

    for level in range(1, params.max_body + 1):
        if level == 1 or not params.prune:
            bodies = itertools.product(steps, repeat=level)
        else:
            bodies = _grown_bodies(matched, steps)

        candidates: Set[CandidateKey] = set()
        for key in _seeds(bodies, heads):
            candidates.add(_canonical(key))
        for key in survivors:
            for extended in _extensions(key, steps):
                if not params.prune or _has_matched_parts(extended[0], matched):
                    candidates.add(_canonical(extended))
        candidates = {key for key in candidates if not _is_trivial(key)}

        reports = _evaluate(graph, candidates, params.workers)
        survivors = set()
        matched = set()
        for key, report in reports.items():
            if report.body_count > 0:
                matched.update((key[0], _reversed_steps(key[0])))
            if not params.prune or report.support >= support_floor:
                survivors.add(key)
            if (report.support >= support_floor
                    and report.std_conf >= params.min_std_conf
                    and report.pca_conf >= params.min_pca_conf):
                emitted[key] = report

        LOGGER.debug("Level %d: %d candidates, %d kept for extension",
                     level, len(candidates), len(survivors))
        if params.prune and not matched:
            LOGGER.debug("No body matched at level %d; stopping", level)
            break

    mined = [MinedRule(candidate_rule(key), report) for key, report in emitted.items()]
    mined.sort(key=lambda m: (-m.report.pca_fraction, -m.report.std_fraction, str(m.rule)))
    LOGGER.info("Mined %d rules (max_body=%d)", len(mined), params.max_body)
    return mined


def mined_rules_frame(mined: Sequence[MinedRule]) -> pd.DataFrame:
    """
    Tabulate mined rules.

    Returns:
        DataFrame with columns: rule, support, body_count, pca_body_count, std_conf, pca_conf
    """
    rows = []
    for item in mined:
        row = {"rule": str(item.rule)}
        row.update(item.report.as_dict())
        rows.append(row)
    return pd.DataFrame(rows, columns=REPORT_COLUMNS)
