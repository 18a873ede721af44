"""Graph-pattern association rules and their text form.

A rule is a path-shaped body of one to four edge atoms implying a head edge
between two body variables::

    r1: (a)-[hasChild]->(b)<-[hasChild]-(d) => (a)-[isMarriedTo]->(d)
"""

import logging
import re
from dataclasses import dataclass
from typing import Iterable, List, Optional, Tuple

from graph.matcher import Direction, EdgeAtom, PathPattern
from utils.config import MAX_BODY_ATOMS
from utils.errors import PatternError, RuleError

LOGGER = logging.getLogger(__name__)

_LABEL = re.compile(r"^\s*([A-Za-z_][\w.-]*)\s*:\s*(?=\()")
_NODE = re.compile(r"\s*\(\s*(\w+)\s*\)\s*")
_CONNECTOR = re.compile(r"(?:-\[\s*([^\]]+?)\s*\]->|<-\[\s*([^\]]+?)\s*\]-)")


@dataclass(frozen=True)
class AssociationRule:
    body: PathPattern
    head: EdgeAtom
    name: Optional[str] = None

    def __post_init__(self):
        if not 1 <= len(self.body) <= MAX_BODY_ATOMS:
            raise RuleError(f"rule body must have 1 to {MAX_BODY_ATOMS} atoms, got {len(self.body)}")
        variables = set(self.body.variables)
        missing = [v for v in self.head.variables if v not in variables]
        if missing:
            raise RuleError(f"unsafe rule: head variables {missing} do not occur in the body")
        if self.head.source == self.head.target:
            raise RuleError("rule head must connect two different variables")

    @property
    def subject_var(self) -> str:
        """Head variable on the subject side (u)."""
        return self.head.source

    @property
    def object_var(self) -> str:
        """Head variable on the object side (w)."""
        return self.head.target

    @property
    def head_relation(self) -> str:
        return self.head.relation

    @property
    def label(self) -> str:
        return self.name or str(self)

    def __str__(self) -> str:
        return f"{self.body} => {self.head}"


def _parse_chain(text: str) -> List[EdgeAtom]:
    position = 0
    node = _NODE.match(text, position)
    if node is None:
        raise RuleError(f"expected '(variable)' at: {text[position:]!r}")
    current = node.group(1)
    position = node.end()

    atoms = []
    while position < len(text):
        connector = _CONNECTOR.match(text, position)
        if connector is None:
            raise RuleError(f"expected '-[relation]->' or '<-[relation]-' at: {text[position:]!r}")
        forward, backward = connector.groups()
        position = connector.end()

        node = _NODE.match(text, position)
        if node is None:
            raise RuleError(f"expected '(variable)' at: {text[position:]!r}")
        following = node.group(1)
        position = node.end()

        if forward is not None:
            atoms.append(EdgeAtom(current, forward, following, Direction.FORWARD))
        else:
            atoms.append(EdgeAtom(current, backward, following, Direction.BACKWARD))
        current = following

    if not atoms:
        raise RuleError(f"no edge atoms in {text.strip()!r}")
    return atoms


def parse_rule(text: str, name: Optional[str] = None) -> AssociationRule:
    """
    Parse ``body => head`` where both sides are chains of
    ``(var)-[rel]->(var)`` / ``(var)<-[rel]-(var)`` segments.

    An optional leading ``name:`` label names the rule; an explicit ``name``
    argument takes precedence.

    Raises:
        RuleError: On a syntax error, an unsafe head, or a body of 0 or more than 4 atoms
    """
    label = _LABEL.match(text)
    if label is not None:
        name = name or label.group(1)
        text = text[label.end():]

    if text.count("=>") != 1:
        raise RuleError("rule must contain exactly one '=>'")
    body_text, head_text = text.split("=>")

    body_atoms = _parse_chain(body_text)
    head_atoms = _parse_chain(head_text)
    if len(head_atoms) != 1:
        raise RuleError(f"rule head must be a single atom, got {len(head_atoms)}")

    if len(body_atoms) > MAX_BODY_ATOMS:
        raise RuleError(f"rule body must have 1 to {MAX_BODY_ATOMS} atoms, got {len(body_atoms)}")
    try:
        body = PathPattern(tuple(body_atoms))
    except PatternError as exc:
        raise RuleError(str(exc)) from None
    return AssociationRule(body=body, head=head_atoms[0], name=name)


def load_rules(source: Iterable[str]) -> Tuple[AssociationRule, ...]:
    """
    Load one rule per line; '#' comments and blank lines are skipped.

    Unlabelled rules are named ``r<position>`` (1-based among the rules).

    Raises:
        RuleError: With the offending line number
    """
    rules: List[AssociationRule] = []
    names = set()
    for line_number, raw in enumerate(source, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            rule = parse_rule(line)
        except RuleError as exc:
            raise RuleError(exc.message, line_number) from None

        if rule.name is None:
            rule = AssociationRule(rule.body, rule.head, name=f"r{len(rules) + 1}")
        if rule.name in names:
            raise RuleError(f"duplicate rule name {rule.name!r}", line_number)
        names.add(rule.name)
        rules.append(rule)

    LOGGER.info("Loaded %d association rules", len(rules))
    return tuple(rules)
