"""Rule groups, color profiles, subtree weights, and proof statistics.

The eight rule groups and their rainbow colors:

    cut             green     unary logical   orange    strong quantifier  red
    structural      gray      binary logical  yellow    weak quantifier    blue
    (axioms: gray)            equational      violet    anything else      magenta

The exact hex values below are this project's defaults; only the color
*names* are fixed.  Changing a profile changes rendering and, through
rule weights, the angular width ratio of inferences.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from typing import Mapping

from .proof import InferenceNode, Proof, Rule, iter_nodes, max_depth


class ColorGroup(str, Enum):
    CUT = "cut"
    STRUCTURAL = "structural"
    UNARY_LOGICAL = "unary_logical"
    BINARY_LOGICAL = "binary_logical"
    STRONG_QUANT = "strong_quant"
    WEAK_QUANT = "weak_quant"
    EQUATIONAL = "equational"
    OTHER = "other"


_CLASSIFY: dict[str, ColorGroup] = {
    "Cut": ColorGroup.CUT,
    "Axiom": ColorGroup.STRUCTURAL,
    "WeakL": ColorGroup.STRUCTURAL,
    "WeakR": ColorGroup.STRUCTURAL,
    "ContrL": ColorGroup.STRUCTURAL,
    "ContrR": ColorGroup.STRUCTURAL,
    "NegL": ColorGroup.UNARY_LOGICAL,
    "NegR": ColorGroup.UNARY_LOGICAL,
    "AndL": ColorGroup.UNARY_LOGICAL,
    "OrR": ColorGroup.UNARY_LOGICAL,
    "ImpR": ColorGroup.UNARY_LOGICAL,
    "AndR": ColorGroup.BINARY_LOGICAL,
    "OrL": ColorGroup.BINARY_LOGICAL,
    "ImpL": ColorGroup.BINARY_LOGICAL,
    "AllR": ColorGroup.STRONG_QUANT,
    "ExL": ColorGroup.STRONG_QUANT,
    "AllL": ColorGroup.WEAK_QUANT,
    "ExR": ColorGroup.WEAK_QUANT,
    "EqL": ColorGroup.EQUATIONAL,
    "EqR": ColorGroup.EQUATIONAL,
    "Other": ColorGroup.OTHER,
}


def classify(r: Rule) -> ColorGroup:
    """Total map from rule kind to its color group."""
    return _CLASSIFY[r.kind]


RAINBOW_HEX: dict[ColorGroup, str] = {
    ColorGroup.CUT: "#2E7D32",
    ColorGroup.STRUCTURAL: "#9E9E9E",
    ColorGroup.UNARY_LOGICAL: "#EF6C00",
    ColorGroup.BINARY_LOGICAL: "#F9A825",
    ColorGroup.STRONG_QUANT: "#C62828",
    ColorGroup.WEAK_QUANT: "#1565C0",
    ColorGroup.EQUATIONAL: "#6A1B9A",
    ColorGroup.OTHER: "#D500F9",
}

COLOR_NAMES: dict[ColorGroup, str] = {
    ColorGroup.CUT: "green",
    ColorGroup.STRUCTURAL: "gray",
    ColorGroup.UNARY_LOGICAL: "orange",
    ColorGroup.BINARY_LOGICAL: "yellow",
    ColorGroup.STRONG_QUANT: "red",
    ColorGroup.WEAK_QUANT: "blue",
    ColorGroup.EQUATIONAL: "violet",
    ColorGroup.OTHER: "magenta",
}

# weights below this are clamped so no inference ever gets a zero-span sector
MIN_RULE_WEIGHT = 1e-6


@dataclass(frozen=True, slots=True)
class ColorProfile:
    name: str
    colors: Mapping[ColorGroup, str]
    rule_weights: Mapping[ColorGroup, float]

    def __post_init__(self):
        for group in ColorGroup:
            if group not in self.colors:
                raise ValueError(f"profile {self.name!r} misses color for {group.value}")
            if group not in self.rule_weights:
                raise ValueError(f"profile {self.name!r} misses weight for {group.value}")
        if any(w <= 0 for w in self.rule_weights.values()):
            raise ValueError("rule weights must be positive")


def default_profile() -> ColorProfile:
    return ColorProfile("rainbow", dict(RAINBOW_HEX), {g: 1.0 for g in ColorGroup})


def load_profile(text: str) -> ColorProfile:
    """Profile file: {"name": str, "colors": {group: hex}, "ruleWeights": {group: num}}."""
    doc = json.loads(text)
    if not isinstance(doc, dict):
        raise ValueError("profile must be a JSON object")
    name = doc.get("name")
    if not isinstance(name, str):
        raise ValueError('profile needs a string "name"')
    try:
        colors = {ColorGroup(k): str(v) for k, v in doc.get("colors", {}).items()}
        weights = {ColorGroup(k): float(v) for k, v in doc.get("ruleWeights", {}).items()}
    except ValueError as e:
        raise ValueError(f"bad profile group name: {e}") from None
    return ColorProfile(name, colors, weights)


def profile_to_json(profile: ColorProfile) -> str:
    return json.dumps(
        {
            "name": profile.name,
            "colors": {g.value: c for g, c in profile.colors.items()},
            "ruleWeights": {g.value: w for g, w in profile.rule_weights.items()},
        },
        sort_keys=True,
    )


# ---------------------------------------------------------------------------
# Weight metrics


@dataclass(frozen=True, slots=True)
class WeightMetric:
    """None rule_weights means plain inference counting (the default)."""

    rule_weights: Mapping[ColorGroup, float] | None = None

    def node_weight(self, r: Rule) -> float:
        if self.rule_weights is None:
            return 1.0
        return max(MIN_RULE_WEIGHT, self.rule_weights[classify(r)])


INFERENCE_COUNT = WeightMetric()


def rule_weighted(profile: ColorProfile) -> WeightMetric:
    return WeightMetric(dict(profile.rule_weights))


def weight(node: InferenceNode | Proof, metric: WeightMetric = INFERENCE_COUNT) -> float:
    """Subtree weight: sum of node_weight over all inferences in the subtree."""
    root = node.root if isinstance(node, Proof) else node
    total = 0.0
    stack = [root]
    while stack:
        cur = stack.pop()
        total += metric.node_weight(cur.rule)
        stack.extend(cur.premises)
    return total


# ---------------------------------------------------------------------------
# Statistics


@dataclass(frozen=True, slots=True)
class Stats:
    node_count: int
    max_depth: int
    rule_counts: Mapping[str, int]
    group_counts: Mapping[str, int]
    cut_count: int
    weak_quant_count: int
    strong_quant_count: int

    def to_dict(self) -> dict:
        return {
            "nodeCount": self.node_count,
            "maxDepth": self.max_depth,
            "ruleCounts": dict(self.rule_counts),
            "groupCounts": dict(self.group_counts),
            "cutCount": self.cut_count,
            "weakQuantCount": self.weak_quant_count,
            "strongQuantCount": self.strong_quant_count,
        }


def stats(proof: Proof) -> Stats:
    rule_counts: dict[str, int] = {}
    group_counts: dict[str, int] = {}
    n = 0
    for _, node in iter_nodes(proof):
        n += 1
        rule_counts[node.rule.kind] = rule_counts.get(node.rule.kind, 0) + 1
        g = classify(node.rule).value
        group_counts[g] = group_counts.get(g, 0) + 1
    return Stats(
        node_count=n,
        max_depth=max_depth(proof),
        rule_counts=rule_counts,
        group_counts=group_counts,
        cut_count=rule_counts.get("Cut", 0),
        weak_quant_count=rule_counts.get("AllL", 0) + rule_counts.get("ExR", 0),
        strong_quant_count=rule_counts.get("AllR", 0) + rule_counts.get("ExL", 0),
    )
