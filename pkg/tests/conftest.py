"""Shared fixtures: proof corpora and small hand-built proofs."""

from __future__ import annotations

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from proofburst import (
    Atom,
    AuxOcc,
    GenSpec,
    InferenceNode,
    Neg,
    PrinOcc,
    Proof,
    Sequent,
    Side,
    gen_balanced,
    gen_chain,
    gen_cut_comb,
    gen_random,
    gen_replicated,
    rule,
)

FIXTURES = Path(__file__).parent / "fixtures"


def axiom(f) -> InferenceNode:
    return InferenceNode(rule("Axiom"), Sequent((f,), (f,)))


def cut_of(left: InferenceNode, right: InferenceNode, li=0, ri=0) -> InferenceNode:
    lsuc = left.conclusion.suc
    rant = right.conclusion.ant
    conc = Sequent(
        left.conclusion.ant + rant[:ri] + rant[ri + 1:],
        lsuc[:li] + lsuc[li + 1:] + right.conclusion.suc,
    )
    return InferenceNode(
        rule("Cut"), conc, (left, right),
        aux=(AuxOcc(0, Side.SUC, li), AuxOcc(1, Side.ANT, ri)),
    )


def weak_l(node: InferenceNode, f) -> InferenceNode:
    conc = Sequent((f,) + node.conclusion.ant, node.conclusion.suc)
    return InferenceNode(rule("WeakL"), conc, (node,), principal=(PrinOcc(Side.ANT, 0),))


@pytest.fixture(scope="session")
def small_corpus() -> list[Proof]:
    """All generator kinds at modest sizes; every proof validator-clean."""
    proofs: list[Proof] = []
    for n in (0, 1, 2, 5, 12):
        proofs.append(gen_chain(n))
    for d in (0, 1, 2, 3, 4, 6):
        proofs.append(gen_balanced(d))
    for n in (1, 2, 3, 8):
        proofs.append(gen_cut_comb(n))
    for k in (2, 3, 4):
        for d in (1, 2, 3):
            proofs.append(gen_replicated(k, d))
    for seed in range(12):
        proofs.append(gen_random(GenSpec("random", n=20 + 23 * seed, seed=seed)))
    return proofs


@pytest.fixture(scope="session")
def acceptance_corpus() -> list[Proof]:
    """At least 200 proofs, all kinds, up to 2047 nodes."""
    proofs: list[Proof] = []
    for n in (0, 1, 2, 3, 5, 10, 40, 120):
        proofs.append(gen_chain(n))
    for d in range(11):  # up to 2047 nodes
        proofs.append(gen_balanced(d))
    for n in (1, 2, 3, 5, 10, 60, 300):
        proofs.append(gen_cut_comb(n))
    for k in (2, 3, 4, 5):
        for d in (1, 2, 3, 4):
            proofs.append(gen_replicated(k, d))
    for seed in range(170):
        n = 10 + (seed * 37) % 700
        proofs.append(gen_random(GenSpec("random", n=n, seed=seed)))
    assert len(proofs) >= 200
    return proofs


@pytest.fixture(scope="session")
def p_atom():
    return Atom("A")
