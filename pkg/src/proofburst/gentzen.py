"""Classical Gentzen tree layout.

Sequents become text boxes, inferences become horizontal lines between
the conclusion row and the premise row.  Premise subtrees sit side by
side separated by hgap, each claiming its own width; the conclusion box
is centered at the midpoint between the first and last premise box
centers (the Knuth-style layered scheme).

Coordinates are abstract: y = depth * rowHeight grows *toward the
premises*; renderers flip for screens, where proofs grow upward.  Text
metrics are a fixed-width character model so layouts are identical on
every platform.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, NamedTuple

import numpy as np

from . import _kernels
from .flatten import flatten
from .formulas import FormulaPrinter, NOTATIONS
from .proof import (
    InvalidOcc,
    OccRef,
    Path,
    Proof,
    InferenceNode,
    Sequent,
    Side,
    as_path,
    path_str,
)


class PathNotFound(LookupError):
    """The layout has no box for that path."""


HIDDEN_BOX_WIDTH = 12.0
BOX_HEIGHT_FRACTION = 0.4


@dataclass(frozen=True, slots=True)
class GentzenParams:
    char_width: float = 7.0
    row_height: float = 40.0
    hgap: float = 14.0
    hpad: float = 5.0
    hide_formulas: bool = False
    notation: str = "unicode"

    def __post_init__(self):
        if min(self.char_width, self.row_height, self.hgap, self.hpad) <= 0:
            raise ValueError("metrics must be positive")
        if self.notation not in NOTATIONS:
            raise ValueError(f"unknown notation {self.notation!r}")


@dataclass(frozen=True, slots=True)
class NodeBox:
    path: Path
    x: float
    y: float
    w: float
    h: float
    text: str


@dataclass(frozen=True, slots=True)
class InferenceLine:
    path: Path
    x1: float
    x2: float
    y: float
    label: str


class TextSpan(NamedTuple):
    """Character range of one formula in its node's rendered sequent."""

    path: Path
    side: Side
    index: int
    start: int
    end: int


@dataclass(slots=True)
class GentzenLayout:
    boxes: list[NodeBox]
    lines: list[InferenceLine]
    total_width: float
    total_height: float
    params: GentzenParams
    _index: dict[Path, int] = field(repr=False, default_factory=dict)
    _spans: dict[Path, tuple[tuple[tuple[int, int], ...], tuple[tuple[int, int], ...]]] = field(
        repr=False, default_factory=dict
    )


def render_sequent(s: Sequent, notation: str = "unicode") -> str:
    """Comma-separated antecedent, turnstile, comma-separated succedent."""
    text, _, _ = sequent_spans(s, FormulaPrinter(notation), NOTATIONS[notation]["turnstile"])
    return text


def sequent_spans(s: Sequent, printer: FormulaPrinter, turnstile: str):
    """Render a sequent and report each formula's character range."""
    parts: list[str] = []
    cursor = 0
    ant_spans: list[tuple[int, int]] = []
    for i, f in enumerate(s.ant):
        if i:
            parts.append(", ")
            cursor += 2
        t = printer(f)
        ant_spans.append((cursor, cursor + len(t)))
        parts.append(t)
        cursor += len(t)
    if s.ant:
        parts.append(" ")
        cursor += 1
    parts.append(turnstile)
    cursor += len(turnstile)
    suc_spans: list[tuple[int, int]] = []
    if s.suc:
        parts.append(" ")
        cursor += 1
        for i, f in enumerate(s.suc):
            if i:
                parts.append(", ")
                cursor += 2
            t = printer(f)
            suc_spans.append((cursor, cursor + len(t)))
            parts.append(t)
            cursor += len(t)
    return "".join(parts), tuple(ant_spans), tuple(suc_spans)


def _rule_label(node: InferenceNode) -> str:
    return "Ax" if node.rule.kind == "Axiom" else node.rule.display_name


def layout_gentzen(proof: Proof | InferenceNode, params: GentzenParams | None = None) -> GentzenLayout:
    params = params or GentzenParams()
    flat = flatten(proof)
    n = len(flat)

    printer = FormulaPrinter(params.notation)
    turnstile = NOTATIONS[params.notation]["turnstile"]

    texts: list[str] = []
    spans: dict[Path, tuple] = {}
    label_w = np.empty(n, np.float64)
    if params.hide_formulas:
        label_w.fill(HIDDEN_BOX_WIDTH)
        for path in flat.paths:
            texts.append("")
            spans[path] = ((), ())
    else:
        for i, node in enumerate(flat.nodes):
            text, ant_sp, suc_sp = sequent_spans(node.conclusion, printer, turnstile)
            texts.append(text)
            spans[flat.paths[i]] = (ant_sp, suc_sp)
            label_w[i] = len(text) * params.char_width + 2 * params.hpad

    width, span_x, center = _kernels.gentzen_geometry(
        flat.parent, flat.premise_index, flat.arity, label_w, params.hgap
    )

    box_h = BOX_HEIGHT_FRACTION * params.row_height
    boxes: list[NodeBox] = []
    index: dict[Path, int] = {}
    for i, path in enumerate(flat.paths):
        boxes.append(NodeBox(
            path=path,
            x=float(center[i] - label_w[i] * 0.5),
            y=float(flat.depth[i] * params.row_height),
            w=float(label_w[i]),
            h=box_h,
            text=texts[i],
        ))
        index[path] = i

    # line x-extent: union of the conclusion box and all premise boxes
    lines: list[InferenceLine] = []
    for i, path in enumerate(flat.paths):
        b = boxes[i]
        x1, x2 = b.x, b.x + b.w
        for j in range(len(flat.nodes[i].premises)):
            pb = boxes[index[path + (j,)]]
            x1 = min(x1, pb.x)
            x2 = max(x2, pb.x + pb.w)
        lines.append(InferenceLine(
            path=path,
            x1=x1,
            x2=x2,
            y=b.y + 0.5 * params.row_height,
            label=_rule_label(flat.nodes[i]),
        ))

    return GentzenLayout(
        boxes=boxes,
        lines=lines,
        total_width=float(width[0]),
        total_height=float((int(flat.depth.max()) + 1) * params.row_height),
        params=params,
        _index=index,
        _spans=spans,
    )


def bounds_of(layout: GentzenLayout, path: Path | str) -> NodeBox:
    """The node's box rectangle, for scroll-to and highlighting."""
    p = as_path(path)
    i = layout._index.get(p)
    if i is None:
        raise PathNotFound(f"no box at path {path!r}")
    return layout.boxes[i]


def highlight_occurrences(layout: GentzenLayout, occs: Iterable[OccRef]) -> list[TextSpan]:
    """Character ranges for per-formula coloring.

    In hidden-formula mode every range is empty (0, 0); renderers flag
    the whole box instead.
    """
    out: list[TextSpan] = []
    for occ in occs:
        spans = layout._spans.get(occ.path)
        if spans is None:
            raise InvalidOcc(f"no node at path {occ.path!r}")
        if layout.params.hide_formulas:
            out.append(TextSpan(occ.path, occ.side, occ.index, 0, 0))
            continue
        side_spans = spans[0] if occ.side is Side.ANT else spans[1]
        if occ.index >= len(side_spans):
            raise InvalidOcc(f"occurrence {occ} out of bounds")
        start, end = side_spans[occ.index]
        out.append(TextSpan(occ.path, occ.side, occ.index, start, end))
    return out


def layout_to_dict(layout: GentzenLayout) -> dict:
    return {
        "totalWidth": layout.total_width,
        "totalHeight": layout.total_height,
        "boxes": [
            {"path": path_str(b.path), "x": b.x, "y": b.y, "w": b.w, "h": b.h, "text": b.text}
            for b in layout.boxes
        ],
        "lines": [
            {"path": path_str(l.path), "x1": l.x1, "x2": l.x2, "y": l.y, "label": l.label}
            for l in layout.lines
        ],
    }
