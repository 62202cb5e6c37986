"""The proofburst/1 JSON interchange format.

Document grammar::

    {"name": str, "root": Node}
    Node = {"rule": RuleName, "conclusion": {"ant": [F...], "suc": [F...]},
            "aux": [[premiseIdx, "ant"|"suc", idx]...],
            "principal": [["ant"|"suc", idx]...],
            "substitution": {var: Term}?, "eigenvariable": str?,
            "positions": [[int...]...]?, "premises": [Node...]}
    F = {"atom": {"pred": str, "args": [Term...]}} | {"neg": F} | {"and": [F, F]}
      | {"or": [F, F]} | {"imp": [F, F]} | {"all": [var, F]} | {"ex": [var, F]}
    Term = {"var": str} | {"fun": [str, [Term...]]}

Serialization is canonical: sorted object keys, compact separators,
ASCII escapes.  Parsing checks shape and typing only; semantic checks
live in :mod:`proofburst.validate`.  An optional top-level
``"format": "proofburst/1"`` key is accepted but never emitted.

Proof trees can be very deep, so document-level JSON work is routed
through a worker thread with a large stack when the stdlib decoder
hits the recursion limit, and the tree <-> dataclass conversion is
iterative.
"""

from __future__ import annotations

import json
import sys
import threading
from functools import partial
from typing import Any

from .formulas import All, And, Atom, Ex, Formula, Fun, Imp, Neg, Or, Term, Var
from .proof import (
    AuxOcc,
    InferenceNode,
    Path,
    PrinOcc,
    Proof,
    Rule,
    RULE_NAMES,
    Sequent,
    Side,
    other_rule,
    path_str,
    rule,
)

FORMAT_NAME = "proofburst/1"

_dumps = partial(json.dumps, sort_keys=True, separators=(",", ":"), ensure_ascii=True)


class ParseError(ValueError):
    """Malformed document: bad JSON, unknown rule name, or wrong shape.

    line/col are set for JSON syntax errors; shape errors carry the
    node path instead (positions are lost once the text is decoded).
    """

    def __init__(self, message: str, line: int | None = None, col: int | None = None,
                 path: Path | None = None):
        loc = ""
        if line is not None:
            loc = f" at line {line} column {col}"
        elif path is not None:
            loc = f" at node {path_str(path)!r}"
        super().__init__(message + loc)
        self.message = message
        self.line = line
        self.col = col
        self.path = path


# ---------------------------------------------------------------------------
# Deep-document support

_DEEP_STACK_BYTES = 1 << 28  # 256 MiB thread stack
_DEEP_RECURSION_LIMIT = 2_000_000


def _call_with_big_stack(fn):
    """Run fn() on a thread with a large stack and a raised recursion limit.

    The recursion limit is interpreter-wide; it is restored immediately,
    which is acceptable for a local tool.
    """
    box: dict[str, Any] = {}

    def run():
        old = sys.getrecursionlimit()
        sys.setrecursionlimit(_DEEP_RECURSION_LIMIT)
        try:
            box["value"] = fn()
        except BaseException as e:  # re-raised on the caller below
            box["error"] = e
        finally:
            sys.setrecursionlimit(old)

    old_size = threading.stack_size(_DEEP_STACK_BYTES)
    try:
        t = threading.Thread(target=run, name="proofburst-deep-json")
        t.start()
        t.join()
    finally:
        threading.stack_size(old_size)
    if "error" in box:
        raise box["error"]
    return box["value"]


def _loads(text: str) -> Any:
    try:
        return json.loads(text)
    except RecursionError:
        return _call_with_big_stack(lambda: json.loads(text))


# ---------------------------------------------------------------------------
# Parsing


def _shape_error(msg: str, path: Path) -> ParseError:
    return ParseError(msg, path=path)


def _parse_term(obj: Any, path: Path) -> Term:
    if not isinstance(obj, dict) or len(obj) != 1:
        raise _shape_error(f"term must be a single-key object, got {obj!r}", path)
    ((key, val),) = obj.items()
    if key == "var":
        if not isinstance(val, str) or not val:
            raise _shape_error("var name must be a non-empty string", path)
        return Var(val)
    if key == "fun":
        if not (isinstance(val, list) and len(val) == 2):
            raise _shape_error('"fun" takes [name, [args...]]', path)
        name, args = val
        if not isinstance(name, str) or not name:
            raise _shape_error("function name must be a non-empty string", path)
        if not isinstance(args, list):
            raise _shape_error("function args must be a list", path)
        return Fun(name, tuple(_parse_term(a, path) for a in args))
    raise _shape_error(f"unknown term key {key!r}", path)


def _parse_formula(obj: Any, path: Path) -> Formula:
    if not isinstance(obj, dict) or len(obj) != 1:
        raise _shape_error(f"formula must be a single-key object, got {obj!r}", path)
    ((key, val),) = obj.items()
    if key == "atom":
        if not isinstance(val, dict) or set(val) != {"pred", "args"}:
            raise _shape_error('"atom" takes {"pred":..., "args":...}', path)
        pred = val["pred"]
        if not isinstance(pred, str) or not pred:
            raise _shape_error("predicate name must be a non-empty string", path)
        if not isinstance(val["args"], list):
            raise _shape_error("atom args must be a list", path)
        return Atom(pred, tuple(_parse_term(a, path) for a in val["args"]))
    if key == "neg":
        return Neg(_parse_formula(val, path))
    if key in ("and", "or", "imp"):
        if not (isinstance(val, list) and len(val) == 2):
            raise _shape_error(f'"{key}" takes [F, F]', path)
        ctor = {"and": And, "or": Or, "imp": Imp}[key]
        return ctor(_parse_formula(val[0], path), _parse_formula(val[1], path))
    if key in ("all", "ex"):
        if not (isinstance(val, list) and len(val) == 2):
            raise _shape_error(f'"{key}" takes [var, F]', path)
        var, body = val
        if not isinstance(var, str) or not var:
            raise _shape_error("bound variable must be a non-empty string", path)
        ctor = All if key == "all" else Ex
        return ctor(var, _parse_formula(body, path))
    raise _shape_error(f"unknown formula key {key!r}", path)


def _req_int(v: Any, what: str, path: Path) -> int:
    if isinstance(v, bool) or not isinstance(v, int):
        raise _shape_error(f"{what} must be an integer, got {v!r}", path)
    return v


def _parse_side(v: Any, path: Path) -> Side:
    if v == "ant":
        return Side.ANT
    if v == "suc":
        return Side.SUC
    raise _shape_error(f'side must be "ant" or "suc", got {v!r}', path)


def _parse_rule(obj: Any, path: Path) -> Rule:
    if isinstance(obj, str):
        if obj in RULE_NAMES:
            return rule(obj)
        raise _shape_error(f"unknown rule {obj!r}", path)
    if isinstance(obj, dict) and set(obj) == {"other"}:
        name = obj["other"]
        if not isinstance(name, str) or not name:
            raise _shape_error("other rule name must be a non-empty string", path)
        return other_rule(name)
    raise _shape_error(f"rule must be a name or {{\"other\": name}}, got {obj!r}", path)


_NODE_REQUIRED = frozenset({"rule", "conclusion", "aux", "principal", "premises"})
_NODE_OPTIONAL = frozenset({"substitution", "eigenvariable", "positions"})


def _parse_node_shallow(obj: Any, path: Path) -> dict[str, Any]:
    """Everything except premises, which the caller linearizes."""
    if not isinstance(obj, dict):
        raise _shape_error(f"proof node must be an object, got {type(obj).__name__}", path)
    keys = set(obj)
    missing = _NODE_REQUIRED - keys
    if missing:
        raise _shape_error(f"node is missing keys: {sorted(missing)}", path)
    unknown = keys - _NODE_REQUIRED - _NODE_OPTIONAL
    if unknown:
        raise _shape_error(f"unknown node keys: {sorted(unknown)}", path)

    conc = obj["conclusion"]
    if not isinstance(conc, dict) or set(conc) != {"ant", "suc"}:
        raise _shape_error('conclusion takes {"ant": [...], "suc": [...]}', path)
    if not isinstance(conc["ant"], list) or not isinstance(conc["suc"], list):
        raise _shape_error("conclusion sides must be lists", path)
    try:
        conclusion = Sequent(
            tuple(_parse_formula(f, path) for f in conc["ant"]),
            tuple(_parse_formula(f, path) for f in conc["suc"]),
        )
    except RecursionError:
        raise _shape_error("formula nesting too deep", path) from None

    if not isinstance(obj["aux"], list):
        raise _shape_error("aux must be a list", path)
    aux = []
    for entry in obj["aux"]:
        if not (isinstance(entry, list) and len(entry) == 3):
            raise _shape_error(f"aux entry must be [premise, side, index], got {entry!r}", path)
        aux.append(AuxOcc(_req_int(entry[0], "aux premise", path),
                          _parse_side(entry[1], path),
                          _req_int(entry[2], "aux index", path)))

    if not isinstance(obj["principal"], list):
        raise _shape_error("principal must be a list", path)
    principal = []
    for entry in obj["principal"]:
        if not (isinstance(entry, list) and len(entry) == 2):
            raise _shape_error(f"principal entry must be [side, index], got {entry!r}", path)
        principal.append(PrinOcc(_parse_side(entry[0], path), _req_int(entry[1], "principal index", path)))

    substitution = None
    if "substitution" in obj:
        sub = obj["substitution"]
        if not isinstance(sub, dict):
            raise _shape_error("substitution must be an object", path)
        substitution = {}
        for var, term in sub.items():
            if not var:
                raise _shape_error("substituted variable must be non-empty", path)
            substitution[var] = _parse_term(term, path)

    eigenvariable = None
    if "eigenvariable" in obj:
        ev = obj["eigenvariable"]
        if not isinstance(ev, str) or not ev:
            raise _shape_error("eigenvariable must be a non-empty string", path)
        eigenvariable = ev

    positions = None
    if "positions" in obj:
        pos = obj["positions"]
        if not isinstance(pos, list):
            raise _shape_error("positions must be a list of index lists", path)
        acc = []
        for p in pos:
            if not isinstance(p, list):
                raise _shape_error("positions must be a list of index lists", path)
            acc.append(tuple(_req_int(i, "position step", path) for i in p))
        positions = tuple(acc)

    if not isinstance(obj["premises"], list):
        raise _shape_error("premises must be a list", path)

    return {
        "rule": _parse_rule(obj["rule"], path),
        "conclusion": conclusion,
        "aux": tuple(aux),
        "principal": tuple(principal),
        "substitution": substitution,
        "eigenvariable": eigenvariable,
        "positions": positions,
    }


def parse_proof(text: str | bytes) -> Proof:
    """Decode a proof document; raises ParseError, never returns diagnostics."""
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as e:
            raise ParseError(f"not valid UTF-8: {e}") from None
    try:
        doc = _loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(e.msg, line=e.lineno, col=e.colno) from None

    if not isinstance(doc, dict):
        raise ParseError("document must be a JSON object")
    unknown = set(doc) - {"name", "root", "format"}
    if unknown:
        raise ParseError(f"unknown document keys: {sorted(unknown)}")
    if "format" in doc and doc["format"] != FORMAT_NAME:
        raise ParseError(f"unsupported format {doc['format']!r}, expected {FORMAT_NAME!r}")
    if not isinstance(doc.get("name"), str):
        raise ParseError('document needs a string "name"')
    if "root" not in doc:
        raise ParseError('document needs a "root" node')

    # Linearize pre-order (iterative; proofs can be very deep), then build
    # the immutable node tree bottom-up.
    records: list[tuple[dict[str, Any], int, int]] = []  # (fields, parent, n_premises)
    stack: list[tuple[Any, int, Path]] = [(doc["root"], -1, ())]
    while stack:
        obj, parent, path = stack.pop()
        fields = _parse_node_shallow(obj, path)
        idx = len(records)
        prems = obj["premises"]
        records.append((fields, parent, len(prems)))
        for i in range(len(prems) - 1, -1, -1):
            stack.append((prems[i], idx, path + (i,)))

    built: list[list[InferenceNode]] = [[] for _ in records]
    root_node: InferenceNode | None = None
    for idx in range(len(records) - 1, -1, -1):
        fields, parent, n_prem = records[idx]
        premises = tuple(reversed(built[idx]))
        built[idx] = []  # release
        node = InferenceNode(premises=premises, **fields)
        if parent < 0:
            root_node = node
        else:
            built[parent].append(node)
    assert root_node is not None
    return Proof(doc["name"], root_node)


# ---------------------------------------------------------------------------
# Serialization


def _term_obj(t: Term) -> Any:
    if isinstance(t, Var):
        return {"var": t.name}
    return {"fun": [t.name, [_term_obj(a) for a in t.args]]}


def _formula_obj(f: Formula) -> Any:
    match f:
        case Atom(pred, args):
            return {"atom": {"pred": pred, "args": [_term_obj(a) for a in args]}}
        case Neg(sub):
            return {"neg": _formula_obj(sub)}
        case And(l, r):
            return {"and": [_formula_obj(l), _formula_obj(r)]}
        case Or(l, r):
            return {"or": [_formula_obj(l), _formula_obj(r)]}
        case Imp(l, r):
            return {"imp": [_formula_obj(l), _formula_obj(r)]}
        case All(v, body):
            return {"all": [v, _formula_obj(body)]}
        case Ex(v, body):
            return {"ex": [v, _formula_obj(body)]}
    raise TypeError(f"not a formula: {f!r}")


def _rule_obj(r: Rule) -> Any:
    return {"other": r.other_name} if r.kind == "Other" else r.kind


def _node_head(node: InferenceNode) -> str:
    # Keys in sorted order: aux, conclusion, eigenvariable?, positions?,
    # premises, principal, rule, substitution?
    parts = [
        '{"aux":',
        _dumps([[a.premise, a.side.value, a.index] for a in node.aux]),
        ',"conclusion":',
        _dumps({
            "ant": [_formula_obj(f) for f in node.conclusion.ant],
            "suc": [_formula_obj(f) for f in node.conclusion.suc],
        }),
    ]
    if node.eigenvariable is not None:
        parts.append(',"eigenvariable":')
        parts.append(_dumps(node.eigenvariable))
    if node.positions is not None:
        parts.append(',"positions":')
        parts.append(_dumps([list(p) for p in node.positions]))
    parts.append(',"premises":[')
    return "".join(parts)


def _node_tail(node: InferenceNode) -> str:
    parts = [
        '],"principal":',
        _dumps([[p.side.value, p.index] for p in node.principal]),
        ',"rule":',
        _dumps(_rule_obj(node.rule)),
    ]
    if node.substitution is not None:
        parts.append(',"substitution":')
        parts.append(_dumps({v: _term_obj(t) for v, t in node.substitution.items()}))
    parts.append("}")
    return "".join(parts)


def serialize_proof(proof: Proof) -> str:
    """Canonical UTF-8 text; parse_proof(serialize_proof(p)) == p structurally."""
    parts: list[str] = ['{"name":', _dumps(proof.name), ',"root":']
    stack: list[tuple[str, Any]] = [("str", "}"), ("node", proof.root)]
    while stack:
        kind, val = stack.pop()
        if kind == "str":
            parts.append(val)
            continue
        node: InferenceNode = val
        parts.append(_node_head(node))
        stack.append(("str", _node_tail(node)))
        for i in range(len(node.premises) - 1, -1, -1):
            stack.append(("node", node.premises[i]))
            if i > 0:
                stack.append(("str", ","))
    return "".join(parts)
