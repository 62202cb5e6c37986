"""LK proof trees: sequents, rules, node addressing.

A proof is a tree of :class:`InferenceNode`.  Nodes are addressed by
*paths*: tuples of premise indices from the root, ``()`` being the root
itself, with ``"0.1"`` as the textual form.  All traversals here are
iterative; proofs can be tens of thousands of nodes deep and must not
hit the interpreter recursion limit.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterator, Mapping, NamedTuple, Optional

from .formulas import Formula, Term

Path = tuple[int, ...]


class PathOutOfRange(LookupError):
    """A path step does not exist in the proof."""


class InvalidOcc(LookupError):
    """An occurrence reference points outside its sequent."""


class Side(str, Enum):
    ANT = "ant"
    SUC = "suc"


@dataclass(frozen=True, slots=True)
class Sequent:
    """Ordered antecedent/succedent formula lists; order is significant."""

    ant: tuple[Formula, ...] = ()
    suc: tuple[Formula, ...] = ()

    def side(self, s: Side) -> tuple[Formula, ...]:
        return self.ant if s is Side.ANT else self.suc


def seq(ant=(), suc=()) -> Sequent:
    return Sequent(tuple(ant), tuple(suc))


# ---------------------------------------------------------------------------
# Rules

RULE_NAMES = (
    "Axiom",
    "Cut",
    "WeakL",
    "WeakR",
    "ContrL",
    "ContrR",
    "NegL",
    "NegR",
    "AndL",
    "AndR",
    "OrL",
    "OrR",
    "ImpL",
    "ImpR",
    "AllL",
    "AllR",
    "ExL",
    "ExR",
    "EqL",
    "EqR",
)

# arity: None means "declared by the node" (Other rules take 1 or 2 premises)
_ARITY = {name: 1 for name in RULE_NAMES}
_ARITY["Axiom"] = 0
for _binary in ("Cut", "AndR", "OrL", "ImpL"):
    _ARITY[_binary] = 2


@dataclass(frozen=True, slots=True)
class Rule:
    kind: str
    other_name: str | None = None

    def __post_init__(self):
        if self.kind == "Other":
            if not self.other_name:
                raise ValueError("Other rules need a name")
        elif self.kind not in _ARITY:
            raise ValueError(f"unknown rule kind: {self.kind!r}")
        elif self.other_name is not None:
            raise ValueError("other_name is only valid for Other rules")

    @property
    def display_name(self) -> str:
        return self.other_name if self.kind == "Other" else self.kind


def rule(kind: str) -> Rule:
    return Rule(kind)


def other_rule(name: str) -> Rule:
    return Rule("Other", name)


def rule_arity(r: Rule) -> Optional[int]:
    """Fixed premise count of a rule, or None for Other (1 or 2 accepted)."""
    return None if r.kind == "Other" else _ARITY[r.kind]


class AuxOcc(NamedTuple):
    """Auxiliary occurrence: a formula in one premise's conclusion."""

    premise: int
    side: Side
    index: int


class PrinOcc(NamedTuple):
    """Principal occurrence: a formula in this node's conclusion."""

    side: Side
    index: int


@dataclass(frozen=True, slots=True)
class OccRef:
    """One formula occurrence: in the conclusion of the node at `path`."""

    path: Path
    side: Side
    index: int

    def __str__(self) -> str:
        return f"{path_str(self.path)}:{self.side.value}:{self.index}"


@dataclass(frozen=True, slots=True, eq=False)
class InferenceNode:
    rule: Rule
    conclusion: Sequent
    premises: tuple["InferenceNode", ...] = field(default=(), repr=False)
    aux: tuple[AuxOcc, ...] = ()
    principal: tuple[PrinOcc, ...] = ()
    substitution: Mapping[str, Term] | None = None
    eigenvariable: str | None = None
    positions: tuple[tuple[int, ...], ...] | None = None


@dataclass(frozen=True, slots=True, eq=False)
class Proof:
    name: str
    root: InferenceNode


# Structural equality is deliberately not dataclass-generated for nodes:
# the generated __eq__ recurses through premises and would blow the stack
# on deep proofs.  Use structurally_equal below.


def structurally_equal(a: Proof | InferenceNode, b: Proof | InferenceNode) -> bool:
    """Deep structural equality, safe on arbitrarily deep proofs."""
    if isinstance(a, Proof) != isinstance(b, Proof):
        return False
    if isinstance(a, Proof):
        if a.name != b.name:
            return False
        a, b = a.root, b.root
    stack = [(a, b)]
    while stack:
        x, y = stack.pop()
        if (
            x.rule != y.rule
            or x.conclusion != y.conclusion
            or x.aux != y.aux
            or x.principal != y.principal
            or x.substitution != y.substitution
            or x.eigenvariable != y.eigenvariable
            or x.positions != y.positions
            or len(x.premises) != len(y.premises)
        ):
            return False
        stack.extend(zip(x.premises, y.premises))
    return True


# ---------------------------------------------------------------------------
# Paths


def path_str(path: Path) -> str:
    return ".".join(str(i) for i in path)


def parse_path(text: str) -> Path:
    if text == "":
        return ()
    try:
        parts = tuple(int(p) for p in text.split("."))
    except ValueError:
        raise PathOutOfRange(f"malformed path: {text!r}") from None
    if any(p < 0 for p in parts):
        raise PathOutOfRange(f"malformed path: {text!r}")
    return parts


def as_path(path: Path | str) -> Path:
    return parse_path(path) if isinstance(path, str) else tuple(path)


def node_at(proof: Proof | InferenceNode, path: Path | str) -> InferenceNode:
    """Follow premise indices from the root; () / "" is the root itself."""
    node = proof.root if isinstance(proof, Proof) else proof
    steps = as_path(path)
    for depth, i in enumerate(steps):
        if i >= len(node.premises):
            raise PathOutOfRange(
                f"step {i} at {path_str(steps[:depth])!r}: node has {len(node.premises)} premises"
            )
        node = node.premises[i]
    return node


def iter_nodes(proof: Proof | InferenceNode) -> Iterator[tuple[Path, InferenceNode]]:
    """Pre-order (node before premises, premises in order), iterative."""
    root = proof.root if isinstance(proof, Proof) else proof
    stack: list[tuple[Path, InferenceNode]] = [((), root)]
    while stack:
        path, node = stack.pop()
        yield path, node
        for i in range(len(node.premises) - 1, -1, -1):
            stack.append((path + (i,), node.premises[i]))


def subtree_size(node: InferenceNode | Proof) -> int:
    """Number of inferences in the subtree (the node itself included)."""
    root = node.root if isinstance(node, Proof) else node
    count = 0
    stack = [root]
    while stack:
        cur = stack.pop()
        count += 1
        stack.extend(cur.premises)
    return count


def max_depth(node: InferenceNode | Proof) -> int:
    """0 for leaves, else 1 + max over premises."""
    root = node.root if isinstance(node, Proof) else node
    best = 0
    stack = [(root, 0)]
    while stack:
        cur, d = stack.pop()
        if d > best:
            best = d
        for p in cur.premises:
            stack.append((p, d + 1))
    return best


def check_occ(proof: Proof | InferenceNode, occ: OccRef) -> InferenceNode:
    """Return the node the occurrence lives in; raise InvalidOcc if out of bounds."""
    try:
        node = node_at(proof, occ.path)
    except PathOutOfRange as e:
        raise InvalidOcc(str(e)) from None
    if occ.index < 0 or occ.index >= len(node.conclusion.side(occ.side)):
        raise InvalidOcc(f"occurrence {occ} out of bounds")
    return node
