import json

import pytest

from proofburst import (
    ColorGroup,
    ColorProfile,
    GenSpec,
    INFERENCE_COUNT,
    WeightMetric,
    classify,
    default_profile,
    gen_balanced,
    gen_chain,
    gen_cut_comb,
    gen_random,
    iter_nodes,
    load_profile,
    other_rule,
    rule,
    rule_weighted,
    stats,
    subtree_size,
    weight,
)
from proofburst.metrics import COLOR_NAMES, profile_to_json

from conftest import axiom, cut_of
from proofburst import Atom

# Table of rule group and rainbow color name, one row per rule kind.
GROUP_TABLE = {
    "Cut": (ColorGroup.CUT, "green"),
    "Axiom": (ColorGroup.STRUCTURAL, "gray"),
    "WeakL": (ColorGroup.STRUCTURAL, "gray"),
    "WeakR": (ColorGroup.STRUCTURAL, "gray"),
    "ContrL": (ColorGroup.STRUCTURAL, "gray"),
    "ContrR": (ColorGroup.STRUCTURAL, "gray"),
    "NegL": (ColorGroup.UNARY_LOGICAL, "orange"),
    "NegR": (ColorGroup.UNARY_LOGICAL, "orange"),
    "AndL": (ColorGroup.UNARY_LOGICAL, "orange"),
    "OrR": (ColorGroup.UNARY_LOGICAL, "orange"),
    "ImpR": (ColorGroup.UNARY_LOGICAL, "orange"),
    "AndR": (ColorGroup.BINARY_LOGICAL, "yellow"),
    "OrL": (ColorGroup.BINARY_LOGICAL, "yellow"),
    "ImpL": (ColorGroup.BINARY_LOGICAL, "yellow"),
    "AllR": (ColorGroup.STRONG_QUANT, "red"),
    "ExL": (ColorGroup.STRONG_QUANT, "red"),
    "AllL": (ColorGroup.WEAK_QUANT, "blue"),
    "ExR": (ColorGroup.WEAK_QUANT, "blue"),
    "EqL": (ColorGroup.EQUATIONAL, "violet"),
    "EqR": (ColorGroup.EQUATIONAL, "violet"),
}


class TestClassify:
    def test_full_table(self):
        for kind, (group, color) in GROUP_TABLE.items():
            assert classify(rule(kind)) is group, kind
            assert COLOR_NAMES[group] == color, kind

    def test_other_is_magenta(self):
        assert classify(other_rule("DefL")) is ColorGroup.OTHER
        assert COLOR_NAMES[ColorGroup.OTHER] == "magenta"

    def test_total(self):
        from proofburst.proof import RULE_NAMES

        for kind in RULE_NAMES:
            classify(rule(kind))  # must not raise


class TestWeight:
    def test_axiom_count(self):
        assert weight(axiom(Atom("A")), INFERENCE_COUNT) == 1.0

    def test_cut_count(self):
        assert weight(cut_of(axiom(Atom("A")), axiom(Atom("A")))) == 3.0

    def test_count_equals_size(self, small_corpus):
        for p in small_corpus:
            assert weight(p) == subtree_size(p)

    def test_cut_comb_rule_weighted(self):
        # 5 nodes: 2 cuts at weight 10, 3 axioms at weight 1 -> 23
        weights = {g: 1.0 for g in ColorGroup}
        weights[ColorGroup.CUT] = 10.0
        metric = WeightMetric(weights)
        assert weight(gen_cut_comb(2), metric) == pytest.approx(23.0)

    def test_uniform_scaling(self, small_corpus):
        metric = WeightMetric({g: 2.5 for g in ColorGroup})
        for p in small_corpus[:10]:
            assert weight(p, metric) == pytest.approx(2.5 * subtree_size(p))

    def test_monotone_under_extra_premise(self):
        small = axiom(Atom("A"))
        bigger = cut_of(small, axiom(Atom("A")))
        for metric in (INFERENCE_COUNT, WeightMetric({g: 0.25 for g in ColorGroup})):
            assert weight(bigger, metric) > weight(small, metric)

    def test_tiny_weights_clamped(self):
        metric = WeightMetric({g: 1e-12 for g in ColorGroup})
        assert weight(axiom(Atom("A")), metric) >= 1e-6


class TestStats:
    def test_chain(self):
        s = stats(gen_chain(3))
        assert s.node_count == 4
        assert s.rule_counts == {"WeakL": 3, "Axiom": 1}
        assert s.max_depth == 3

    def test_balanced(self):
        s = stats(gen_balanced(2))
        assert s.node_count == 7
        assert s.rule_counts == {"AndR": 3, "Axiom": 4}

    def test_counts_sum_to_node_count(self, small_corpus):
        for p in small_corpus:
            s = stats(p)
            assert sum(s.rule_counts.values()) == s.node_count
            assert sum(s.group_counts.values()) == s.node_count

    def test_quantifier_and_cut_counters(self):
        p = gen_random(GenSpec("random", n=300, seed=11))
        s = stats(p)
        assert s.cut_count == s.rule_counts.get("Cut", 0)
        assert s.weak_quant_count == s.rule_counts.get("AllL", 0)
        assert s.strong_quant_count == 0  # generator never emits strong rules

    def test_dict_shape(self):
        d = stats(gen_chain(1)).to_dict()
        assert set(d) == {
            "nodeCount", "maxDepth", "ruleCounts", "groupCounts",
            "cutCount", "weakQuantCount", "strongQuantCount",
        }


class TestProfiles:
    def test_default(self):
        prof = default_profile()
        assert prof.name == "rainbow"
        assert prof.colors[ColorGroup.CUT] == "#2E7D32"
        assert all(w == 1.0 for w in prof.rule_weights.values())

    def test_roundtrip_json(self):
        prof = default_profile()
        again = load_profile(profile_to_json(prof))
        assert again.colors == dict(prof.colors)
        assert again.rule_weights == dict(prof.rule_weights)

    def test_load_rejects_incomplete(self):
        doc = json.loads(profile_to_json(default_profile()))
        del doc["colors"]["cut"]
        with pytest.raises(ValueError):
            load_profile(json.dumps(doc))

    def test_load_rejects_nonpositive_weight(self):
        doc = json.loads(profile_to_json(default_profile()))
        doc["ruleWeights"]["cut"] = 0
        with pytest.raises(ValueError):
            load_profile(json.dumps(doc))

    def test_rule_weighted_metric_uses_profile(self):
        doc = json.loads(profile_to_json(default_profile()))
        doc["name"] = "cut-heavy"
        doc["ruleWeights"]["cut"] = 10
        prof = load_profile(json.dumps(doc))
        assert weight(gen_cut_comb(2), rule_weighted(prof)) == pytest.approx(23.0)
