"""First-order terms and formulas.

Everything here is an immutable value: terms and formulas are frozen
dataclasses, so they can be shared freely between proof nodes, used as
dict keys (substitutions) and compared structurally.  Equality of
dataclasses is syntactic; use :func:`alpha_eq` when bound-variable names
must not matter.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Union


@dataclass(frozen=True, slots=True)
class Var:
    name: str


@dataclass(frozen=True, slots=True)
class Fun:
    """Function application; constants are 0-ary (``Fun("c")``)."""

    name: str
    args: tuple["Term", ...] = ()


Term = Union[Var, Fun]


@dataclass(frozen=True, slots=True)
class Atom:
    """Predicate application.  Equality is the binary atom with pred ``=``."""

    pred: str
    args: tuple[Term, ...] = ()


@dataclass(frozen=True, slots=True)
class Neg:
    sub: "Formula"


@dataclass(frozen=True, slots=True)
class And:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True, slots=True)
class Or:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True, slots=True)
class Imp:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True, slots=True)
class All:
    var: str
    body: "Formula"


@dataclass(frozen=True, slots=True)
class Ex:
    var: str
    body: "Formula"


Formula = Union[Atom, Neg, And, Or, Imp, All, Ex]

EQ_PRED = "="


def atom(pred: str, *args: Term) -> Atom:
    return Atom(pred, tuple(args))


def fun(name: str, *args: Term) -> Fun:
    return Fun(name, tuple(args))


def eq(left: Term, right: Term) -> Atom:
    return Atom(EQ_PRED, (left, right))


def is_equation(f: Formula) -> bool:
    return isinstance(f, Atom) and f.pred == EQ_PRED and len(f.args) == 2


# ---------------------------------------------------------------------------
# Variables and substitution


def term_vars(t: Term) -> frozenset[str]:
    out: set[str] = set()
    stack: list[Term] = [t]
    while stack:
        cur = stack.pop()
        if isinstance(cur, Var):
            out.add(cur.name)
        else:
            stack.extend(cur.args)
    return frozenset(out)


def free_vars(f: Formula) -> frozenset[str]:
    """Free variable names of a formula."""
    match f:
        case Atom(_, args):
            out: set[str] = set()
            for a in args:
                out |= term_vars(a)
            return frozenset(out)
        case Neg(sub):
            return free_vars(sub)
        case And(l, r) | Or(l, r) | Imp(l, r):
            return free_vars(l) | free_vars(r)
        case All(v, body) | Ex(v, body):
            return free_vars(body) - {v}
    raise TypeError(f"not a formula: {f!r}")


def all_vars(f: Formula) -> frozenset[str]:
    """All variable names occurring in f, free or bound (binders included)."""
    match f:
        case Atom(_, args):
            out: set[str] = set()
            for a in args:
                out |= term_vars(a)
            return frozenset(out)
        case Neg(sub):
            return all_vars(sub)
        case And(l, r) | Or(l, r) | Imp(l, r):
            return all_vars(l) | all_vars(r)
        case All(v, body) | Ex(v, body):
            return all_vars(body) | {v}
    raise TypeError(f"not a formula: {f!r}")


def fresh_name(base: str, avoid: frozenset[str] | set[str]) -> str:
    name = base
    while name in avoid:
        name += "'"
    return name


def term_subst(t: Term, var: str, repl: Term) -> Term:
    if isinstance(t, Var):
        return repl if t.name == var else t
    if not t.args:
        return t
    return Fun(t.name, tuple(term_subst(a, var, repl) for a in t.args))


def substitute(f: Formula, var: str, repl: Term) -> Formula:
    """Capture-avoiding substitution of `repl` for free occurrences of `var`.

    Bound variables are renamed (with primes) when they would capture a
    variable of `repl`.
    """
    repl_vars = term_vars(repl)

    def go(g: Formula) -> Formula:
        match g:
            case Atom(pred, args):
                return Atom(pred, tuple(term_subst(a, var, repl) for a in args))
            case Neg(sub):
                return Neg(go(sub))
            case And(l, r):
                return And(go(l), go(r))
            case Or(l, r):
                return Or(go(l), go(r))
            case Imp(l, r):
                return Imp(go(l), go(r))
            case All(v, body) | Ex(v, body):
                ctor = All if isinstance(g, All) else Ex
                if v == var:
                    return g  # var is shadowed here
                if v in repl_vars and var in free_vars(body):
                    v2 = fresh_name(v, repl_vars | free_vars(body) | {var})
                    body = substitute(body, v, Var(v2))
                    return ctor(v2, go(body))
                return ctor(v, go(body))
        raise TypeError(f"not a formula: {g!r}")

    return go(f)


# ---------------------------------------------------------------------------
# Alpha equivalence


def _terms_alpha_eq(a: Term, b: Term, env_a: dict[str, int], env_b: dict[str, int]) -> bool:
    if isinstance(a, Var) and isinstance(b, Var):
        ia, ib = env_a.get(a.name), env_b.get(b.name)
        if ia is None and ib is None:
            return a.name == b.name  # both free
        return ia == ib and ia is not None
    if isinstance(a, Fun) and isinstance(b, Fun):
        return (
            a.name == b.name
            and len(a.args) == len(b.args)
            and all(_terms_alpha_eq(x, y, env_a, env_b) for x, y in zip(a.args, b.args))
        )
    return False


def alpha_eq(a: Formula, b: Formula) -> bool:
    """True iff a and b are equal up to consistent renaming of bound variables."""

    def go(x: Formula, y: Formula, env_a: dict[str, int], env_b: dict[str, int], depth: int) -> bool:
        if type(x) is not type(y):
            return False
        match x:
            case Atom(pred, args):
                assert isinstance(y, Atom)
                return (
                    pred == y.pred
                    and len(args) == len(y.args)
                    and all(_terms_alpha_eq(s, t, env_a, env_b) for s, t in zip(args, y.args))
                )
            case Neg(sub):
                assert isinstance(y, Neg)
                return go(sub, y.sub, env_a, env_b, depth)
            case And(l, r) | Or(l, r) | Imp(l, r):
                return go(l, y.left, env_a, env_b, depth) and go(r, y.right, env_a, env_b, depth)
            case All(v, body) | Ex(v, body):
                ea = dict(env_a)
                eb = dict(env_b)
                ea[v] = depth
                eb[y.var] = depth
                return go(body, y.body, ea, eb, depth + 1)
        raise TypeError(f"not a formula: {x!r}")

    return go(a, b, {}, {}, 0)


# ---------------------------------------------------------------------------
# Printing

_UNICODE = {
    "neg": "¬",
    "and": " ∧ ",
    "or": " ∨ ",
    "imp": " → ",
    "all": "∀",
    "ex": "∃",
    "turnstile": "⊢",
}
_ASCII = {
    "neg": "~",
    "and": " & ",
    "or": " | ",
    "imp": " -> ",
    "all": "!",
    "ex": "?",
    "turnstile": "|-",
}

NOTATIONS = {"unicode": _UNICODE, "ascii": _ASCII}

# Precedence used by the minimal-parentheses printer; higher binds tighter.
# Quantifiers scope as far right as possible, so a quantified subformula is
# parenthesized whenever it sits under any connective.
_PREC_IMP = 1
_PREC_OR = 2
_PREC_AND = 3
_PREC_EQ = 5
_PREC_NEG = 6
_PREC_ATOM = 9


def format_term(t: Term) -> str:
    if isinstance(t, Var):
        return t.name
    if not t.args:
        return t.name
    return f"{t.name}({','.join(format_term(a) for a in t.args)})"


class FormulaPrinter:
    """Minimal-parentheses printer.

    Memoizes by object identity, which pays off when the same formula
    object appears in many sequents of one proof (generators share
    formula structure heavily).
    """

    def __init__(self, notation: str = "unicode"):
        if notation not in NOTATIONS:
            raise ValueError(f"unknown notation: {notation!r}")
        self.sym = NOTATIONS[notation]
        self._memo: dict[int, str] = {}

    def __call__(self, f: Formula) -> str:
        key = id(f)
        got = self._memo.get(key)
        if got is None:
            got = self._fmt(f, 0, True)
            self._memo[key] = got
        return got

    def _fmt(self, f: Formula, ctx: int, tail: bool) -> str:
        # `tail`: nothing follows this subformula in the enclosing scope,
        # so a bare quantifier (which scopes maximally right) is unambiguous
        sym = self.sym
        match f:
            case Atom(pred, args):
                if is_equation(f):
                    s = f"{format_term(args[0])} = {format_term(args[1])}"
                    return f"({s})" if ctx > _PREC_EQ else s
                if not args:
                    return pred
                return f"{pred}({','.join(format_term(a) for a in args)})"
            case Neg(sub):
                s = sym["neg"] + self._fmt(sub, _PREC_NEG, tail)
                return f"({s})" if ctx > _PREC_NEG else s
            case And(l, r):
                s = self._fmt(l, _PREC_AND, False) + sym["and"] + self._fmt(r, _PREC_AND + 1, tail)
                return f"({s})" if ctx > _PREC_AND else s
            case Or(l, r):
                s = self._fmt(l, _PREC_OR, False) + sym["or"] + self._fmt(r, _PREC_OR + 1, tail)
                return f"({s})" if ctx > _PREC_OR else s
            case Imp(l, r):
                s = self._fmt(l, _PREC_IMP + 1, False) + sym["imp"] + self._fmt(r, _PREC_IMP, tail)
                return f"({s})" if ctx > _PREC_IMP else s
            case All(v, body) | Ex(v, body):
                q = sym["all"] if isinstance(f, All) else sym["ex"]
                s = f"{q}{v}.{self._fmt(body, 0, True)}"
                return s if tail else f"({s})"
        raise TypeError(f"not a formula: {f!r}")


def format_formula(f: Formula, notation: str = "unicode") -> str:
    return FormulaPrinter(notation)(f)


def iter_subformulas(f: Formula) -> Iterator[Formula]:
    stack = [f]
    while stack:
        cur = stack.pop()
        yield cur
        match cur:
            case Neg(sub):
                stack.append(sub)
            case And(l, r) | Or(l, r) | Imp(l, r):
                stack.append(r)
                stack.append(l)
            case All(_, body) | Ex(_, body):
                stack.append(body)
            case _:
                pass
