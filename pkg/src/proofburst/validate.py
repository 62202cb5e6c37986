"""Structural and logical proof validation.

Both validators return diagnostics instead of raising; a proof is
accepted when no Error-severity diagnostic comes back.  Structure first:
arities, occurrence bounds, and the positional context bookkeeping.
Logic second (assumes clean structure): each inference's local rule
condition, with formula comparison up to alpha equivalence.

Diagnostic codes: ParseError (raised by the parser, surfaced by the CLI),
BadArity, OccOutOfRange, ContextMismatch, AxiomNotIdentity,
CutFormulaMismatch, ConnectiveMismatch, ContractionMismatch,
InstantiationMismatch, EigenvariableViolation, EquationMismatch.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Callable

from .ancestry import ContextMappingError, context_map
from .formulas import (
    All,
    And,
    Atom,
    Ex,
    Formula,
    Fun,
    Imp,
    Neg,
    Or,
    Term,
    Var,
    all_vars,
    alpha_eq,
    format_formula,
    is_equation,
    substitute,
)
from .proof import (
    AuxOcc,
    InferenceNode,
    Path,
    Proof,
    Side,
    iter_nodes,
    path_str,
    rule_arity,
)

PARSE_ERROR = "ParseError"
BAD_ARITY = "BadArity"
OCC_OUT_OF_RANGE = "OccOutOfRange"
CONTEXT_MISMATCH = "ContextMismatch"
AXIOM_NOT_IDENTITY = "AxiomNotIdentity"
CUT_FORMULA_MISMATCH = "CutFormulaMismatch"
CONNECTIVE_MISMATCH = "ConnectiveMismatch"
CONTRACTION_MISMATCH = "ContractionMismatch"
INSTANTIATION_MISMATCH = "InstantiationMismatch"
EIGENVARIABLE_VIOLATION = "EigenvariableViolation"
EQUATION_MISMATCH = "EquationMismatch"

ALL_CODES = (
    PARSE_ERROR,
    BAD_ARITY,
    OCC_OUT_OF_RANGE,
    CONTEXT_MISMATCH,
    AXIOM_NOT_IDENTITY,
    CUT_FORMULA_MISMATCH,
    CONNECTIVE_MISMATCH,
    CONTRACTION_MISMATCH,
    INSTANTIATION_MISMATCH,
    EIGENVARIABLE_VIOLATION,
    EQUATION_MISMATCH,
)


class Severity(str, Enum):
    ERROR = "error"
    WARNING = "warning"


@dataclass(frozen=True, slots=True)
class Diagnostic:
    severity: Severity
    code: str
    path: Path
    message: str

    def __str__(self) -> str:
        return f"{self.code}\t{path_str(self.path)}\t{self.message}"


def _err(code: str, path: Path, message: str) -> Diagnostic:
    return Diagnostic(Severity.ERROR, code, path, message)


# ---------------------------------------------------------------------------
# Structure


def validate_structure(proof: Proof) -> list[Diagnostic]:
    """Arity, occurrence bounds, and positional context consistency."""
    diags: list[Diagnostic] = []
    for path, node in iter_nodes(proof):
        n_prem = len(node.premises)
        fixed = rule_arity(node.rule)
        if fixed is None:
            arity_ok = n_prem in (1, 2)
            if not arity_ok:
                diags.append(_err(BAD_ARITY, path,
                                  f"{node.rule.display_name} takes 1 or 2 premises, has {n_prem}"))
        else:
            arity_ok = n_prem == fixed
            if not arity_ok:
                diags.append(_err(BAD_ARITY, path,
                                  f"{node.rule.kind} takes {fixed} premises, has {n_prem}"))

        occ_ok = True
        for a in node.aux:
            if a.premise < 0 or a.premise >= n_prem:
                diags.append(_err(OCC_OUT_OF_RANGE, path,
                                  f"aux premise {a.premise} out of range (node has {n_prem})"))
                occ_ok = False
                continue
            formulas = node.premises[a.premise].conclusion.side(a.side)
            if a.index < 0 or a.index >= len(formulas):
                diags.append(_err(OCC_OUT_OF_RANGE, path,
                                  f"aux index {a.index} out of range in premise {a.premise} "
                                  f"{a.side.value} ({len(formulas)} formulas)"))
                occ_ok = False
        for p in node.principal:
            formulas = node.conclusion.side(p.side)
            if p.index < 0 or p.index >= len(formulas):
                diags.append(_err(OCC_OUT_OF_RANGE, path,
                                  f"principal index {p.index} out of range in conclusion "
                                  f"{p.side.value} ({len(formulas)} formulas)"))
                occ_ok = False

        if node.premises and occ_ok and arity_ok:
            try:
                mapping = context_map(node)
            except ContextMappingError as e:
                diags.append(_err(CONTEXT_MISMATCH, path, str(e)))
                continue
            for (side, conc_idx), src in mapping.items():
                conc_f = node.conclusion.side(side)[conc_idx]
                prem_f = node.premises[src.premise].conclusion.side(src.side)[src.index]
                if not alpha_eq(conc_f, prem_f):
                    diags.append(_err(CONTEXT_MISMATCH, path,
                                      f"context {side.value}[{conc_idx}] differs from premise "
                                      f"{src.premise} {src.side.value}[{src.index}]"))
        elif not node.premises and node.aux:
            # leaves cannot reference premises; caught above via premise range
            pass
    return diags


# ---------------------------------------------------------------------------
# Logic

_Check = Callable[[InferenceNode, Path, list[Diagnostic]], None]


def _aux_formula(node: InferenceNode, a: AuxOcc) -> Formula:
    return node.premises[a.premise].conclusion.side(a.side)[a.index]


def _single_principal(node: InferenceNode, side: Side, code: str, path: Path,
                      diags: list[Diagnostic]) -> Formula | None:
    if len(node.principal) != 1 or node.principal[0].side is not side:
        diags.append(_err(code, path,
                          f"{node.rule.display_name} needs exactly one principal occurrence "
                          f"on the {side.value} side"))
        return None
    return node.conclusion.side(side)[node.principal[0].index]


def _aux_by_pattern(node: InferenceNode, pattern: list[tuple[int, Side]], code: str,
                    path: Path, diags: list[Diagnostic]) -> list[Formula] | None:
    """Match aux occurrences against (premise, side) slots, in aux order."""
    if len(node.aux) != len(pattern):
        diags.append(_err(code, path,
                          f"{node.rule.display_name} needs {len(pattern)} aux occurrences, "
                          f"has {len(node.aux)}"))
        return None
    out = []
    for a, (prem, side) in zip(node.aux, pattern):
        if a.premise != prem or a.side is not side:
            diags.append(_err(code, path,
                              f"{node.rule.display_name} expects aux in premise {prem} "
                              f"{side.value}, got premise {a.premise} {a.side.value}"))
            return None
        out.append(_aux_formula(node, a))
    return out


def _check_axiom(node, path, diags):
    c = node.conclusion
    if node.aux or node.principal:
        diags.append(_err(AXIOM_NOT_IDENTITY, path, "axiom carries aux/principal occurrences"))
        return
    if len(c.ant) != 1 or len(c.suc) != 1 or not alpha_eq(c.ant[0], c.suc[0]):
        diags.append(_err(AXIOM_NOT_IDENTITY, path, "axiom conclusion must be A ⊢ A"))


def _check_cut(node, path, diags):
    if node.principal:
        diags.append(_err(CUT_FORMULA_MISMATCH, path, "cut introduces no principal occurrence"))
        return
    fs = _aux_by_pattern(node, [(0, Side.SUC), (1, Side.ANT)], CUT_FORMULA_MISMATCH, path, diags)
    if fs is None:
        return
    if not alpha_eq(fs[0], fs[1]):
        diags.append(_err(CUT_FORMULA_MISMATCH, path,
                          f"cut formulas differ: {format_formula(fs[0])} vs {format_formula(fs[1])}"))


def _check_weakening(side: Side) -> _Check:
    def check(node, path, diags):
        if node.aux:
            diags.append(_err(CONNECTIVE_MISMATCH, path,
                              f"{node.rule.kind} takes no auxiliary occurrences"))
            return
        _single_principal(node, side, CONNECTIVE_MISMATCH, path, diags)

    return check


def _check_contraction(side: Side) -> _Check:
    def check(node, path, diags):
        pf = _single_principal(node, side, CONTRACTION_MISMATCH, path, diags)
        if pf is None:
            return
        fs = _aux_by_pattern(node, [(0, side), (0, side)], CONTRACTION_MISMATCH, path, diags)
        if fs is None:
            return
        if node.aux[0].index == node.aux[1].index:
            diags.append(_err(CONTRACTION_MISMATCH, path,
                              "contraction needs two distinct occurrences"))
            return
        if not (alpha_eq(fs[0], fs[1]) and alpha_eq(fs[0], pf)):
            diags.append(_err(CONTRACTION_MISMATCH, path,
                              "contracted occurrences must all match the principal formula"))

    return check


def _check_connective(kind: str, prin_side: Side, aux_slots: list[tuple[int, Side]],
                            build: Callable[[list[Formula]], Formula],
                            distinct: bool = False) -> _Check:
    def check(node, path, diags):
        pf = _single_principal(node, prin_side, CONNECTIVE_MISMATCH, path, diags)
        if pf is None:
            return
        fs = _aux_by_pattern(node, aux_slots, CONNECTIVE_MISMATCH, path, diags)
        if fs is None:
            return
        if distinct and node.aux[0].index == node.aux[1].index:
            diags.append(_err(CONNECTIVE_MISMATCH, path,
                              f"{kind} needs two distinct aux occurrences"))
            return
        if not alpha_eq(pf, build(fs)):
            diags.append(_err(CONNECTIVE_MISMATCH, path,
                              f"{kind} principal {format_formula(pf)} does not match its aux formulas"))

    return check


def _check_weak_quant(kind: str, side: Side, quant: type) -> _Check:
    def check(node, path, diags):
        pf = _single_principal(node, side, INSTANTIATION_MISMATCH, path, diags)
        if pf is None:
            return
        fs = _aux_by_pattern(node, [(0, side)], INSTANTIATION_MISMATCH, path, diags)
        if fs is None:
            return
        if not isinstance(pf, quant):
            diags.append(_err(INSTANTIATION_MISMATCH, path,
                              f"{kind} principal must be a {quant.__name__} formula"))
            return
        sub = node.substitution or {}
        term = sub.get(pf.var)
        if term is None:
            diags.append(_err(INSTANTIATION_MISMATCH, path,
                              f"{kind} needs a substitution entry for {pf.var!r}"))
            return
        if not alpha_eq(fs[0], substitute(pf.body, pf.var, term)):
            diags.append(_err(INSTANTIATION_MISMATCH, path,
                              f"{kind} aux formula is not the declared instance of "
                              f"{format_formula(pf)}"))

    return check


def _check_strong_quant(kind: str, side: Side, quant: type) -> _Check:
    def check(node, path, diags):
        pf = _single_principal(node, side, INSTANTIATION_MISMATCH, path, diags)
        if pf is None:
            return
        fs = _aux_by_pattern(node, [(0, side)], INSTANTIATION_MISMATCH, path, diags)
        if fs is None:
            return
        if not isinstance(pf, quant):
            diags.append(_err(INSTANTIATION_MISMATCH, path,
                              f"{kind} principal must be a {quant.__name__} formula"))
            return
        ev = node.eigenvariable
        if not ev:
            diags.append(_err(EIGENVARIABLE_VIOLATION, path, f"{kind} needs an eigenvariable"))
            return
        if not alpha_eq(fs[0], substitute(pf.body, pf.var, Var(ev))):
            diags.append(_err(INSTANTIATION_MISMATCH, path,
                              f"{kind} aux formula is not the eigenvariable instance of "
                              f"{format_formula(pf)}"))
            return
        for s in (Side.ANT, Side.SUC):
            for f in node.conclusion.side(s):
                if ev in all_vars(f):
                    diags.append(_err(EIGENVARIABLE_VIOLATION, path,
                                      f"eigenvariable {ev!r} occurs in the conclusion"))
                    return

    return check


# --- equational rewriting ---------------------------------------------------


def _replace_term_everywhere(f: Formula, old: Term, new: Term) -> Formula:
    def in_term(t: Term) -> Term:
        if t == old:
            return new
        if isinstance(t, Fun) and t.args:
            return Fun(t.name, tuple(in_term(a) for a in t.args))
        return t

    match f:
        case Atom(pred, args):
            return Atom(pred, tuple(in_term(a) for a in args))
        case Neg(sub):
            return Neg(_replace_term_everywhere(sub, old, new))
        case And(l, r):
            return And(_replace_term_everywhere(l, old, new), _replace_term_everywhere(r, old, new))
        case Or(l, r):
            return Or(_replace_term_everywhere(l, old, new), _replace_term_everywhere(r, old, new))
        case Imp(l, r):
            return Imp(_replace_term_everywhere(l, old, new), _replace_term_everywhere(r, old, new))
        case All(v, body):
            return All(v, _replace_term_everywhere(body, old, new))
        case Ex(v, body):
            return Ex(v, _replace_term_everywhere(body, old, new))
    raise TypeError(f"not a formula: {f!r}")


def _replace_at_position(f, pos: tuple[int, ...], old: Term, new: Term):
    """Replace the subterm at a position path, or return None when the
    position is invalid or the subterm there is not `old`.

    Positions index child slots: Atom/Fun arguments by number, binary
    connectives 0/1, Neg and quantifier bodies 0.
    """
    if not pos:
        return new if (isinstance(f, (Var, Fun)) and f == old) else None
    head, rest = pos[0], pos[1:]
    if isinstance(f, (Var, Fun)):
        if isinstance(f, Var) or head >= len(f.args):
            return None
        repl = _replace_at_position(f.args[head], rest, old, new)
        if repl is None:
            return None
        args = list(f.args)
        args[head] = repl
        return Fun(f.name, tuple(args))
    match f:
        case Atom(pred, args):
            if head >= len(args):
                return None
            repl = _replace_at_position(args[head], rest, old, new)
            if repl is None:
                return None
            new_args = list(args)
            new_args[head] = repl
            return Atom(pred, tuple(new_args))
        case Neg(sub):
            repl = _replace_at_position(sub, pos[1:], old, new) if head == 0 else None
            return Neg(repl) if repl is not None else None
        case And(l, r) | Or(l, r) | Imp(l, r):
            ctor = type(f)
            if head == 0:
                repl = _replace_at_position(l, rest, old, new)
                return ctor(repl, r) if repl is not None else None
            if head == 1:
                repl = _replace_at_position(r, rest, old, new)
                return ctor(l, repl) if repl is not None else None
            return None
        case All(v, body) | Ex(v, body):
            if head != 0:
                return None
            repl = _replace_at_position(body, rest, old, new)
            return type(f)(v, repl) if repl is not None else None
    return None


def _rewrite(source: Formula, old: Term, new: Term,
             positions: tuple[tuple[int, ...], ...] | None) -> Formula | None:
    if positions is None:
        return _replace_term_everywhere(source, old, new)
    cur = source
    for pos in positions:
        cur = _replace_at_position(cur, pos, old, new)
        if cur is None:
            return None
    return cur


def _check_equational(kind: str, side: Side) -> _Check:
    def check(node, path, diags):
        pf = _single_principal(node, side, EQUATION_MISMATCH, path, diags)
        if pf is None:
            return
        fs = _aux_by_pattern(node, [(0, Side.ANT), (0, side)], EQUATION_MISMATCH, path, diags)
        if fs is None:
            return
        equation, source = fs
        if not is_equation(equation):
            diags.append(_err(EQUATION_MISMATCH, path,
                              f"{kind} first aux must be an antecedent equation"))
            return
        s, t = equation.args
        for old, new in ((s, t), (t, s)):
            rewritten = _rewrite(source, old, new, node.positions)
            if rewritten is not None and alpha_eq(rewritten, pf):
                return
        diags.append(_err(EQUATION_MISMATCH, path,
                          f"{kind} principal is not the declared rewrite of its aux formula"))

    return check


_LOGIC_CHECKS: dict[str, _Check] = {
    "Axiom": _check_axiom,
    "Cut": _check_cut,
    "WeakL": _check_weakening(Side.ANT),
    "WeakR": _check_weakening(Side.SUC),
    "ContrL": _check_contraction(Side.ANT),
    "ContrR": _check_contraction(Side.SUC),
    "NegL": _check_connective("NegL", Side.ANT, [(0, Side.SUC)], lambda fs: Neg(fs[0])),
    "NegR": _check_connective("NegR", Side.SUC, [(0, Side.ANT)], lambda fs: Neg(fs[0])),
    "AndL": _check_connective("AndL", Side.ANT, [(0, Side.ANT), (0, Side.ANT)],
                                    lambda fs: And(fs[0], fs[1]), distinct=True),
    "OrR": _check_connective("OrR", Side.SUC, [(0, Side.SUC), (0, Side.SUC)],
                                   lambda fs: Or(fs[0], fs[1]), distinct=True),
    "ImpR": _check_connective("ImpR", Side.SUC, [(0, Side.ANT), (0, Side.SUC)],
                                    lambda fs: Imp(fs[0], fs[1])),
    "AndR": _check_connective("AndR", Side.SUC, [(0, Side.SUC), (1, Side.SUC)],
                                    lambda fs: And(fs[0], fs[1])),
    "OrL": _check_connective("OrL", Side.ANT, [(0, Side.ANT), (1, Side.ANT)],
                                   lambda fs: Or(fs[0], fs[1])),
    "ImpL": _check_connective("ImpL", Side.ANT, [(0, Side.SUC), (1, Side.ANT)],
                                    lambda fs: Imp(fs[0], fs[1])),
    "AllL": _check_weak_quant("AllL", Side.ANT, All),
    "ExR": _check_weak_quant("ExR", Side.SUC, Ex),
    "AllR": _check_strong_quant("AllR", Side.SUC, All),
    "ExL": _check_strong_quant("ExL", Side.ANT, Ex),
    "EqL": _check_equational("EqL", Side.ANT),
    "EqR": _check_equational("EqR", Side.SUC),
}


def validate_logic(proof: Proof) -> list[Diagnostic]:
    """Per-rule local conditions; call only on structurally clean proofs.

    Other(...) rules skip logical checks entirely.
    """
    diags: list[Diagnostic] = []
    for path, node in iter_nodes(proof):
        check = _LOGIC_CHECKS.get(node.rule.kind)
        if check is not None:
            check(node, path, diags)
    return diags


def validate(proof: Proof) -> list[Diagnostic]:
    """Structure, then logic if the structure is sound."""
    diags = validate_structure(proof)
    if not any(d.severity is Severity.ERROR for d in diags):
        diags.extend(validate_logic(proof))
    return diags
