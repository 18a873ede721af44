"""Standard and PCA confidence of association rules.

For a rule ``B => r(u, w)`` over graph G, counting distinct (u, w) pairs that
the body binds:

    support         pairs with r(u, w) in G
    body_count      all pairs
    pca_body_count  pairs whose u has some r(u, w') in G

    std_conf = support / body_count
    pca_conf = support / pca_body_count

A zero denominator gives a confidence of 0.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, Sequence, Set, Tuple

import pandas as pd

from graph.matcher import match_pattern
from graph.store import PropertyGraph

from .association import AssociationRule

LOGGER = logging.getLogger(__name__)

REPORT_COLUMNS = ["rule", "support", "body_count", "pca_body_count", "std_conf", "pca_conf"]


@dataclass(frozen=True)
class ConfidenceReport:
    support: int
    body_count: int
    pca_body_count: int

    def __post_init__(self):
        if not 0 <= self.support <= self.pca_body_count <= self.body_count:
            raise ValueError(
                "confidence counts must satisfy 0 <= support <= pca_body_count <= body_count, "
                f"got {self.support}, {self.pca_body_count}, {self.body_count}"
            )

    @property
    def std_fraction(self) -> Fraction:
        if self.body_count == 0:
            return Fraction(0)
        return Fraction(self.support, self.body_count)

    @property
    def pca_fraction(self) -> Fraction:
        if self.pca_body_count == 0:
            return Fraction(0)
        return Fraction(self.support, self.pca_body_count)

    @property
    def std_conf(self) -> float:
        return float(self.std_fraction)

    @property
    def pca_conf(self) -> float:
        return float(self.pca_fraction)

    def as_dict(self) -> Dict[str, object]:
        return {
            "support": self.support,
            "body_count": self.body_count,
            "pca_body_count": self.pca_body_count,
            "std_conf": self.std_conf,
            "pca_conf": self.pca_conf,
        }


def score_pairs(graph: PropertyGraph, pairs: Iterable[Tuple[int, int]], relation: str) -> ConfidenceReport:
    """Count support and both denominators over distinct (u, w) body pairs."""
    distinct: Set[Tuple[int, int]] = set(pairs)
    support = 0
    pca_body = 0
    for u, w in distinct:
        if graph.has_outgoing(u, relation):
            pca_body += 1
            if graph.has_edge(u, relation, w):
                support += 1
    return ConfidenceReport(support=support, body_count=len(distinct), pca_body_count=pca_body)


def evaluate_confidence(graph: PropertyGraph, rule: AssociationRule) -> ConfidenceReport:
    """Standard and PCA confidence of one rule over the whole graph."""
    if not graph.edges_with_relation(rule.head_relation):
        LOGGER.warning("Rule %s concludes %r, which has no facts in the graph", rule.label, rule.head_relation)
    bindings = match_pattern(graph, rule.body)
    pairs = ((b[rule.subject_var], b[rule.object_var]) for b in bindings)
    report = score_pairs(graph, pairs, rule.head_relation)
    assert report.pca_fraction >= report.std_fraction
    LOGGER.debug("Rule %s: support=%d body=%d pca_body=%d", rule.label,
                 report.support, report.body_count, report.pca_body_count)
    return report


def reports_frame(rules: Sequence[AssociationRule], reports: Sequence[ConfidenceReport]) -> pd.DataFrame:
    """
    Tabulate rules with their confidence reports.

    Returns:
        DataFrame with columns: rule, support, body_count, pca_body_count, std_conf, pca_conf
    """
    rows = []
    for rule, report in zip(rules, reports):
        row = {"rule": rule.label}
        row.update(report.as_dict())
        rows.append(row)
    return pd.DataFrame(rows, columns=REPORT_COLUMNS)
