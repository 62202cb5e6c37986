import pytest

from proofburst import (
    Atom,
    GenSpec,
    InvalidOcc,
    OccRef,
    Proof,
    Side,
    ancestors,
    cut_ancestors,
    direct_parents,
    gen_cut_comb,
    gen_random,
    iter_nodes,
)

import oracles
from conftest import axiom, cut_of, weak_l

A = Atom("A")


@pytest.fixture
def cut_weak_proof() -> Proof:
    # Cut(WeakL(Ax(A |- A)), Ax(A |- A)); the weakening introduces Q
    return Proof("cw", cut_of(weak_l(axiom(A), Atom("Q")), axiom(A)))


class TestDirectParents:
    def test_cut_context_formula_maps_into_premise(self, cut_weak_proof):
        # conclusion of the cut: Q, A |- A; the Q at ant[0] is context
        got = direct_parents(cut_weak_proof, OccRef((), Side.ANT, 0))
        assert got == [OccRef((0,), Side.ANT, 0)]

    def test_weakening_principal_has_no_parents(self, cut_weak_proof):
        # at node "0" (the WeakL), ant[0] is the weakened-in Q
        assert direct_parents(cut_weak_proof, OccRef((0,), Side.ANT, 0)) == []

    def test_axiom_occurrence_has_no_parents(self, cut_weak_proof):
        assert direct_parents(cut_weak_proof, OccRef((0, 0), Side.SUC, 0)) == []

    def test_invalid_occ(self, cut_weak_proof):
        with pytest.raises(InvalidOcc):
            direct_parents(cut_weak_proof, OccRef((), Side.ANT, 9))
        with pytest.raises(InvalidOcc):
            direct_parents(cut_weak_proof, OccRef((5,), Side.ANT, 0))


class TestAncestors:
    def test_axiom_occ_is_its_own_closure(self):
        p = Proof("ax", axiom(A))
        occ = OccRef((), Side.ANT, 0)
        assert ancestors(p, occ) == {occ}

    def test_cut_aux_closure_through_weakening(self, cut_weak_proof):
        # the left cut aux: A in the succedent of the WeakL conclusion
        occ = OccRef((0,), Side.SUC, 0)
        assert ancestors(cut_weak_proof, occ) == {occ, OccRef((0, 0), Side.SUC, 0)}

    def test_always_reflexive(self, small_corpus):
        for p in small_corpus[:12]:
            for path, node in iter_nodes(p):
                for side in (Side.ANT, Side.SUC):
                    for i in range(len(node.conclusion.side(side))):
                        occ = OccRef(path, side, i)
                        assert occ in ancestors(p, occ)
                break  # root only; full closure equality is tested below

    def test_matches_bfs_oracle(self, small_corpus):
        for p in small_corpus:
            if oracles.size_rec(p) > 500:
                continue
            _, root = next(iter(oracles.all_nodes(p)))
            for side in (Side.ANT, Side.SUC):
                for i in range(len(root.conclusion.side(side))):
                    occ = OccRef((), side, i)
                    assert ancestors(p, occ) == oracles.bfs_ancestors(p, [occ])


class TestCutAncestors:
    def test_cut_free_proof_is_empty(self, small_corpus):
        for p in small_corpus:
            if all(n.rule.kind != "Cut" for _, n in iter_nodes(p)):
                assert cut_ancestors(p) == set()

    def test_single_cut(self):
        p = Proof("cut", cut_of(axiom(A), axiom(A)))
        assert cut_ancestors(p) == {OccRef((0,), Side.SUC, 0), OccRef((1,), Side.ANT, 0)}

    def test_comb_counts(self):
        # nested combs chain one context ancestor per inner cut: 2n + (n-1)
        for n in (1, 2, 3, 5):
            got = cut_ancestors(gen_cut_comb(n))
            assert len(got) == 3 * n - 1
            assert got == oracles.bfs_cut_ancestors(gen_cut_comb(n))

    def test_matches_bfs_oracle_on_generated(self, small_corpus):
        for p in small_corpus:
            if oracles.size_rec(p) <= 500:
                assert cut_ancestors(p) == oracles.bfs_cut_ancestors(p)

    def test_random_proofs_with_cuts(self):
        for seed in range(20):
            p = gen_random(GenSpec("random", n=120, seed=seed))
            assert cut_ancestors(p) == oracles.bfs_cut_ancestors(p)
