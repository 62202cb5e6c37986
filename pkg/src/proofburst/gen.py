"""Deterministic generators of valid LK proofs.

All generators are pure functions of their parameters: same inputs,
byte-identical serialization, on any platform.  Randomness comes from a
fixed xorshift64* stream (constants below), never from the stdlib RNG.

Construction is grammar-driven: rules are only applied where their side
conditions hold by construction, so every output passes both validators
at any size.  Conclusions are assembled to match the positional context
convention exactly (principal occurrences at index 0 of their side,
remainders concatenated in premise order).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from .formulas import All, And, Atom, Ex, Formula, Fun, Imp, Neg, Or
from .proof import (
    AuxOcc,
    InferenceNode,
    PrinOcc,
    Proof,
    Sequent,
    Side,
    rule,
)

_MASK = (1 << 64) - 1


class XorShift64Star:
    """xorshift64* (shifts 12/25/27, multiplier 0x2545F4914F6CDD1D),
    seeded through one splitmix64 scramble so that any 64-bit seed,
    zero included, yields a healthy nonzero state."""

    __slots__ = ("state",)

    def __init__(self, seed: int):
        s = (seed + 0x9E3779B97F4A7C15) & _MASK
        s = ((s ^ (s >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        s = ((s ^ (s >> 27)) * 0x94D049BB133111EB) & _MASK
        s ^= s >> 31
        self.state = s or 0x9E3779B97F4A7C15

    def next_u64(self) -> int:
        x = self.state
        x ^= x >> 12
        x ^= (x << 25) & _MASK
        x ^= x >> 27
        self.state = x
        return (x * 0x2545F4914F6CDD1D) & _MASK

    def below(self, n: int) -> int:
        """Uniform-ish draw in [0, n); modulo bias is fine at our n."""
        return self.next_u64() % n

    def pick_weighted(self, items: list[tuple[str, int]]) -> str:
        total = sum(w for _, w in items)
        roll = self.below(total)
        for name, w in items:
            roll -= w
            if roll < 0:
                return name
        return items[-1][0]


GEN_KINDS = ("chain", "balanced", "cutcomb", "replicated", "random")

DEFAULT_RULE_MIX: Mapping[str, int] = {
    "AndR": 6,
    "WeakL": 2,
    "WeakR": 2,
    "Cut": 2,
    "NegR": 1,
    "OrR": 1,
    "AllL": 1,
    "ContrL": 1,
}

_GROWABLE = frozenset(DEFAULT_RULE_MIX)

# random generation keeps formulas shallow so that recursive formula
# algorithms (printing, alpha-eq) never run near the interpreter limit
_FORMULA_DEPTH_CAP = 24


@dataclass(frozen=True, slots=True)
class GenSpec:
    kind: str
    n: int = 1
    depth: int = 2
    k: int = 2
    seed: int = 0
    rule_mix: Mapping[str, int] = field(default_factory=lambda: dict(DEFAULT_RULE_MIX))

    def __post_init__(self):
        if self.kind not in GEN_KINDS:
            raise ValueError(f"unknown generator kind {self.kind!r}")
        if self.n < 0 or self.depth < 0 or self.k < 0:
            raise ValueError("size parameters must be non-negative")
        bad = set(self.rule_mix) - _GROWABLE
        if bad:
            raise ValueError(f"rule_mix entries not always-applicable: {sorted(bad)}")
        if any(w <= 0 for w in self.rule_mix.values()):
            raise ValueError("rule_mix weights must be positive")


def _axiom(f: Formula) -> InferenceNode:
    return InferenceNode(rule("Axiom"), Sequent((f,), (f,)))


def _p(name: str) -> Atom:
    return Atom(name)


# ---------------------------------------------------------------------------
# Fixed-shape generators


def gen_chain(n: int) -> Proof:
    """Axiom P0 |- P0 under n WeakL steps introducing Q1..Qn; depth n."""
    node = _axiom(_p("P0"))
    for i in range(1, n + 1):
        conc = Sequent((_p(f"Q{i}"),) + node.conclusion.ant, node.conclusion.suc)
        node = InferenceNode(rule("WeakL"), conc, (node,), principal=(PrinOcc(Side.ANT, 0),))
    return Proof(f"chain{n}", node)


def _and_r(left: InferenceNode, right: InferenceNode,
           li: int = 0, ri: int = 0) -> InferenceNode:
    """Join two proofs with AndR on succedent occurrences li/ri."""
    a = left.conclusion.suc[li]
    b = right.conclusion.suc[ri]
    lsuc = left.conclusion.suc[:li] + left.conclusion.suc[li + 1:]
    rsuc = right.conclusion.suc[:ri] + right.conclusion.suc[ri + 1:]
    conc = Sequent(left.conclusion.ant + right.conclusion.ant,
                   (And(a, b),) + lsuc + rsuc)
    return InferenceNode(
        rule("AndR"), conc, (left, right),
        aux=(AuxOcc(0, Side.SUC, li), AuxOcc(1, Side.SUC, ri)),
        principal=(PrinOcc(Side.SUC, 0),),
    )


def gen_balanced(d: int) -> Proof:
    """Complete binary AndR tree of depth d over distinct axiom atoms."""
    leaves = [_axiom(_p(f"P{i}")) for i in range(2 ** d)]
    level = leaves
    while len(level) > 1:
        level = [_and_r(level[i], level[i + 1]) for i in range(0, len(level), 2)]
    return Proof(f"balanced{d}", level[0])


def gen_cut_comb(n: int) -> Proof:
    """Right-leaning comb of n Cuts on the shared atom A; 2n+1 nodes."""
    if n < 1:
        raise ValueError("gen_cut_comb needs n >= 1")
    a = _p("A")
    node = _axiom(a)
    for _ in range(n):
        left = _axiom(a)
        # A |- A from Cut(A |- A, A |- A): contexts concatenate
        conc = Sequent(left.conclusion.ant, node.conclusion.suc)
        node = InferenceNode(
            rule("Cut"), conc, (left, node),
            aux=(AuxOcc(0, Side.SUC, 0), AuxOcc(1, Side.ANT, 0)),
        )
    return Proof(f"cutcomb{n}", node)


def gen_replicated(k: int, sub_depth: int) -> Proof:
    """k isomorphic balanced subproofs (distinct atoms) under an AndR comb."""
    if k < 2:
        raise ValueError("gen_replicated needs k >= 2")
    copies = []
    for c in range(k):
        leaves = [_axiom(_p(f"P{c}_{i}")) for i in range(2 ** sub_depth)]
        level = leaves
        while len(level) > 1:
            level = [_and_r(level[i], level[i + 1]) for i in range(0, len(level), 2)]
        copies.append(level[0])
    node = copies[-1]
    for c in range(k - 2, -1, -1):
        node = _and_r(copies[c], node)
    return Proof(f"replicated{k}x{sub_depth}", node)


# ---------------------------------------------------------------------------
# Random generation


class _RandomBuilder:
    def __init__(self, spec: GenSpec):
        self.rng = XorShift64Star(spec.seed)
        self.mix = sorted(spec.rule_mix.items())
        self.fresh = 0
        self.node_count = 0
        self.depth_memo: dict[int, int] = {}
        # wide pools keep trees shallow: unary growth spreads over many
        # subproofs, so depth (and with it memory, which scales like
        # leaf-count * depth through the accumulated contexts) stays tame
        self.target_pool = max(2, min(256, spec.n // 64))

    def fresh_atom(self) -> Atom:
        self.fresh += 1
        return _p(f"P{self.fresh - 1}")

    def fresh_var(self) -> str:
        self.fresh += 1
        return f"x{self.fresh - 1}"

    def fresh_const(self) -> Fun:
        self.fresh += 1
        return Fun(f"c{self.fresh - 1}")

    def f_depth(self, f: Formula) -> int:
        got = self.depth_memo.get(id(f))
        if got is None:
            match f:
                case Atom():
                    got = 1
                case Neg(sub):
                    got = 1 + self.f_depth(sub)
                case And(l, r) | Or(l, r) | Imp(l, r):
                    got = 1 + max(self.f_depth(l), self.f_depth(r))
                case All(_, body) | Ex(_, body):
                    got = 1 + self.f_depth(body)
            self.depth_memo[id(f)] = got
        return got

    def axiom(self) -> InferenceNode:
        self.node_count += 1
        return _axiom(self.fresh_atom())

    # each grower returns the replacement node or None when not applicable

    def weak_l(self, node: InferenceNode) -> InferenceNode:
        ant = node.conclusion.ant
        if ant and self.rng.below(2) == 0:
            f = ant[self.rng.below(len(ant))]  # duplicate enables contraction
        else:
            f = self.fresh_atom()
        self.node_count += 1
        return InferenceNode(rule("WeakL"), Sequent((f,) + ant, node.conclusion.suc),
                             (node,), principal=(PrinOcc(Side.ANT, 0),))

    def weak_r(self, node: InferenceNode) -> InferenceNode:
        f = self.fresh_atom()
        self.node_count += 1
        return InferenceNode(rule("WeakR"),
                             Sequent(node.conclusion.ant, (f,) + node.conclusion.suc),
                             (node,), principal=(PrinOcc(Side.SUC, 0),))

    def contr_l(self, node: InferenceNode) -> InferenceNode | None:
        ant = node.conclusion.ant
        if not ant:
            return None
        i = self.rng.below(len(ant))
        f = ant[i]
        weakened = InferenceNode(rule("WeakL"), Sequent((f,) + ant, node.conclusion.suc),
                                 (node,), principal=(PrinOcc(Side.ANT, 0),))
        rest = tuple(g for j, g in enumerate(weakened.conclusion.ant) if j not in (0, i + 1))
        conc = Sequent((f,) + rest, node.conclusion.suc)
        self.node_count += 2
        return InferenceNode(rule("ContrL"), conc, (weakened,),
                             aux=(AuxOcc(0, Side.ANT, 0), AuxOcc(0, Side.ANT, i + 1)),
                             principal=(PrinOcc(Side.ANT, 0),))

    def neg_r(self, node: InferenceNode) -> InferenceNode | None:
        ant = node.conclusion.ant
        if not ant:
            return None
        i = self.rng.below(len(ant))
        if self.f_depth(ant[i]) >= _FORMULA_DEPTH_CAP:
            return None
        rest = ant[:i] + ant[i + 1:]
        conc = Sequent(rest, (Neg(ant[i]),) + node.conclusion.suc)
        self.node_count += 1
        return InferenceNode(rule("NegR"), conc, (node,),
                             aux=(AuxOcc(0, Side.ANT, i),),
                             principal=(PrinOcc(Side.SUC, 0),))

    def or_r(self, node: InferenceNode) -> InferenceNode | None:
        suc = node.conclusion.suc
        if len(suc) < 2:
            return None
        i = self.rng.below(len(suc))
        j = self.rng.below(len(suc) - 1)
        if j >= i:
            j += 1
        if max(self.f_depth(suc[i]), self.f_depth(suc[j])) >= _FORMULA_DEPTH_CAP:
            return None
        rest = tuple(g for k, g in enumerate(suc) if k not in (i, j))
        conc = Sequent(node.conclusion.ant, (Or(suc[i], suc[j]),) + rest)
        self.node_count += 1
        return InferenceNode(rule("OrR"), conc, (node,),
                             aux=(AuxOcc(0, Side.SUC, i), AuxOcc(0, Side.SUC, j)),
                             principal=(PrinOcc(Side.SUC, 0),))

    def all_l(self, node: InferenceNode) -> InferenceNode | None:
        ant = node.conclusion.ant
        if not ant:
            return None
        i = self.rng.below(len(ant))
        f = ant[i]
        if self.f_depth(f) >= _FORMULA_DEPTH_CAP:
            return None
        v = self.fresh_var()  # fresh, so f = f[v := t]: a vacuous instance
        term = self.fresh_const()
        rest = ant[:i] + ant[i + 1:]
        conc = Sequent((All(v, f),) + rest, node.conclusion.suc)
        self.node_count += 1
        return InferenceNode(rule("AllL"), conc, (node,),
                             aux=(AuxOcc(0, Side.ANT, i),),
                             principal=(PrinOcc(Side.ANT, 0),),
                             substitution={v: term})

    def cut(self, node: InferenceNode) -> InferenceNode | None:
        suc = node.conclusion.suc
        if not suc:
            return None
        i = self.rng.below(len(suc))
        partner = _axiom(suc[i])
        conc = Sequent(node.conclusion.ant, suc[:i] + suc[i + 1:] + (suc[i],))
        self.node_count += 2
        return InferenceNode(rule("Cut"), conc, (node, partner),
                             aux=(AuxOcc(0, Side.SUC, i), AuxOcc(1, Side.ANT, 0)))

    def join(self, left: InferenceNode, right: InferenceNode) -> InferenceNode:
        li = self.rng.below(len(left.conclusion.suc))
        ri = self.rng.below(len(right.conclusion.suc))
        if self.f_depth(left.conclusion.suc[li]) >= _FORMULA_DEPTH_CAP:
            left = self.weak_r(left)
            li = 0
        if self.f_depth(right.conclusion.suc[ri]) >= _FORMULA_DEPTH_CAP:
            right = self.weak_r(right)
            ri = 0
        self.node_count += 1
        return _and_r(left, right, li, ri)

    def and_r(self, pool: list[InferenceNode]) -> None:
        """Spawn a leaf while the pool is below target, else join two entries."""
        if len(pool) < self.target_pool:
            pool.append(self.axiom())
            return
        a = self.rng.below(len(pool))
        b = self.rng.below(len(pool) - 1)
        if b >= a:
            b += 1
        left, right = pool[a], pool[b]
        for idx in sorted((a, b), reverse=True):
            pool.pop(idx)
        pool.append(self.join(left, right))


def gen_random(spec: GenSpec) -> Proof:
    """Grow a valid proof from axiom leaves until node count >= spec.n."""
    b = _RandomBuilder(spec)
    pool = [b.axiom()]
    while b.node_count < spec.n:
        name = b.rng.pick_weighted(b.mix)
        if name == "AndR":
            b.and_r(pool)
            continue
        i = b.rng.below(len(pool))
        target = pool[i]
        grown = {
            "WeakL": b.weak_l,
            "WeakR": b.weak_r,
            "ContrL": b.contr_l,
            "NegR": b.neg_r,
            "OrR": b.or_r,
            "AllL": b.all_l,
            "Cut": b.cut,
        }[name](target)
        if grown is not None:
            pool[i] = grown
    # pairwise balanced join keeps the final comb shallow
    while len(pool) > 1:
        nxt = [b.join(pool[i], pool[i + 1]) for i in range(0, len(pool) - 1, 2)]
        if len(pool) % 2:
            nxt.append(pool[-1])
        pool = nxt
    return Proof(f"random_s{spec.seed}_n{spec.n}", pool[0])


def generate(spec: GenSpec) -> Proof:
    if spec.kind == "chain":
        return gen_chain(spec.n)
    if spec.kind == "balanced":
        return gen_balanced(spec.n)
    if spec.kind == "cutcomb":
        return gen_cut_comb(spec.n)
    if spec.kind == "replicated":
        return gen_replicated(spec.k if spec.k >= 2 else spec.n, spec.depth)
    return gen_random(spec)
