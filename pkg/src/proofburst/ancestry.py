"""Formula-occurrence ancestry.

Tracing a conclusion occurrence upward: principal occurrences descend
from the inference's auxiliary occurrences, context occurrences map
positionally onto the matching premise occurrence, weakened formulas
and axiom formulas have no parents.

The positional context rule: drop aux entries from each premise side
and principal entries from the conclusion side; the remaining conclusion
antecedent must equal, position by position, the concatenation of the
remaining premise antecedents (premise order), likewise for succedents.
"""

from __future__ import annotations

from collections import deque

from .proof import (
    AuxOcc,
    InferenceNode,
    OccRef,
    Path,
    Proof,
    Side,
    check_occ,
    iter_nodes,
)


class ContextMappingError(ValueError):
    """The node's occurrence bookkeeping does not balance positionally."""


def context_map(node: InferenceNode) -> dict[tuple[Side, int], AuxOcc]:
    """Map each context occurrence of the conclusion to its premise occurrence.

    Raises ContextMappingError when the remainders disagree in length;
    formula-level agreement is the validator's business, not ours.
    """
    out: dict[tuple[Side, int], AuxOcc] = {}
    aux_set = set(node.aux)
    principal_set = {(p.side, p.index) for p in node.principal}
    for side in (Side.ANT, Side.SUC):
        remaining = [
            i for i in range(len(node.conclusion.side(side))) if (side, i) not in principal_set
        ]
        sources: list[AuxOcc] = []
        for k, prem in enumerate(node.premises):
            for j in range(len(prem.conclusion.side(side))):
                cand = AuxOcc(k, side, j)
                if cand not in aux_set:
                    sources.append(cand)
        if len(remaining) != len(sources):
            raise ContextMappingError(
                f"{side.value} context: {len(remaining)} conclusion vs {len(sources)} premise occurrences"
            )
        for conc_idx, src in zip(remaining, sources):
            out[(side, conc_idx)] = src
    return out


def _parents(node: InferenceNode, occ: OccRef) -> list[OccRef]:
    if not node.premises:
        return []
    if (occ.side, occ.index) in {(p.side, p.index) for p in node.principal}:
        return [OccRef(occ.path + (a.premise,), a.side, a.index) for a in node.aux]
    src = context_map(node)[(occ.side, occ.index)]
    return [OccRef(occ.path + (src.premise,), src.side, src.index)]


def direct_parents(proof: Proof | InferenceNode, occ: OccRef) -> list[OccRef]:
    """Immediate ancestors of an occurrence (in the premises, one level up)."""
    return _parents(check_occ(proof, occ), occ)


def _closure(node_of: dict[Path, InferenceNode], seeds: list[OccRef]) -> set[OccRef]:
    seen: set[OccRef] = set()
    queue: deque[OccRef] = deque()
    for s in seeds:
        if s not in seen:
            seen.add(s)
            queue.append(s)
    while queue:
        cur = queue.popleft()
        for parent in _parents(node_of[cur.path], cur):
            if parent not in seen:
                seen.add(parent)
                queue.append(parent)
    return seen


def ancestors(proof: Proof | InferenceNode, occ: OccRef) -> set[OccRef]:
    """Reflexive-transitive closure of direct_parents, toward the axioms."""
    check_occ(proof, occ)
    node_of = dict(iter_nodes(proof))
    return _closure(node_of, [occ])


def cut_aux_occurrences(proof: Proof | InferenceNode) -> list[OccRef]:
    """The aux occurrences of every Cut node, as premise-node occurrences."""
    out = []
    for path, node in iter_nodes(proof):
        if node.rule.kind == "Cut":
            for a in node.aux:
                out.append(OccRef(path + (a.premise,), a.side, a.index))
    return out


def cut_ancestors(proof: Proof | InferenceNode) -> set[OccRef]:
    """Union of ancestor sets of all cut auxiliary occurrences."""
    seeds = cut_aux_occurrences(proof)
    for s in seeds:
        check_occ(proof, s)
    node_of = dict(iter_nodes(proof))
    return _closure(node_of, seeds)
