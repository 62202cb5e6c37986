"""Deterministic SVG export of both layouts.

Output is byte-stable: fixed 4-decimal coordinates, pre-order element
ordering, no timestamps.  Exactly one drawing element per sector in the
sunburst view and one text/rect plus one line per node in the Gentzen
view; rule labels ride on the line elements as data-rule attributes and
<title> tooltips so the element counts stay flat.
"""

from __future__ import annotations

import math
from typing import Iterable
from xml.sax.saxutils import escape, quoteattr

from .gentzen import GentzenLayout, TextSpan
from .metrics import ColorProfile
from .proof import Path, as_path, path_str
from .sunburst import Sector, SunburstLayout, TWO_PI

SELECTED_DARKEN = 0.7
HIGHLIGHT_COLOR = "#2E7D32"
SELECT_FILL = "#0D47A1"
_FULL_SPAN_EPS = 1e-12


def _fmt(x: float) -> str:
    s = f"{x:.4f}"
    return "0.0000" if s == "-0.0000" else s


def darken(hex_color: str, factor: float = SELECTED_DARKEN) -> str:
    r = int(hex_color[1:3], 16)
    g = int(hex_color[3:5], 16)
    b = int(hex_color[5:7], 16)
    return f"#{int(r * factor):02X}{int(g * factor):02X}{int(b * factor):02X}"


def _point(r: float, theta: float) -> tuple[str, str]:
    # screen y grows downward; flip so counterclockwise math stays visual CCW
    return _fmt(r * math.cos(theta)), _fmt(-r * math.sin(theta))


def _full_circle_path(r: float) -> str:
    rr = _fmt(r)
    return (f"M {rr} 0 A {rr} {rr} 0 1 0 -{rr} 0 "
            f"A {rr} {rr} 0 1 0 {rr} 0 Z")


def _sector_path(s: Sector) -> str:
    span = s.theta_end - s.theta_start
    if span >= TWO_PI - _FULL_SPAN_EPS:
        # full annulus: outer circle minus inner circle, evenodd
        return _full_circle_path(s.r_outer) + " " + _full_circle_path(s.r_inner)
    large = 1 if span > math.pi else 0
    i0 = _point(s.r_inner, s.theta_start)
    i1 = _point(s.r_inner, s.theta_end)
    o1 = _point(s.r_outer, s.theta_end)
    o0 = _point(s.r_outer, s.theta_start)
    ri, ro = _fmt(s.r_inner), _fmt(s.r_outer)
    return (
        f"M {i0[0]} {i0[1]} A {ri} {ri} 0 {large} 0 {i1[0]} {i1[1]} "
        f"L {o1[0]} {o1[1]} A {ro} {ro} 0 {large} 1 {o0[0]} {o0[1]} Z"
    )


def sunburst_to_svg(layout: SunburstLayout, profile: ColorProfile | None = None,
                    selected: Path | str | None = None) -> str:
    """One filled element per sector; the selected sector is darkened."""
    profile = profile or layout.params.profile
    sel = as_path(selected) if selected is not None else None
    radius = layout.params.radius
    pad = 0.02 * radius
    lo, size = -(radius + pad), 2 * (radius + pad)
    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>\n'
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="{_fmt(lo)} {_fmt(lo)} '
        f'{_fmt(size)} {_fmt(size)}" width="640" height="640">'
    ]
    colors = profile.colors
    for path, sector in layout.sectors.items():
        fill = colors[sector.group]
        if sel is not None and path == sel:
            fill = darken(fill)
        # paths are digits and dots: no XML escaping needed
        if sector.r_inner == 0.0 and sector.span >= TWO_PI - _FULL_SPAN_EPS:
            parts.append(
                f'<circle cx="0" cy="0" r="{_fmt(sector.r_outer)}" fill="{fill}" '
                f'data-path="{path_str(path)}"/>'
            )
        else:
            parts.append(
                f'<path d="{_sector_path(sector)}" fill="{fill}" fill-rule="evenodd" '
                f'data-path="{path_str(path)}"/>'
            )
    parts.append("</svg>")
    return "\n".join(parts)


def gentzen_to_svg(layout: GentzenLayout, highlights: Iterable[TextSpan] = (),
                   selected: Path | str | None = None) -> str:
    """Sequent texts (rects in hidden mode) and labeled inference lines.

    Highlighted formula ranges are wrapped in green tspans; in hidden
    mode the whole box is outlined instead.
    """
    sel = as_path(selected) if selected is not None else None
    by_path: dict[Path, list[TextSpan]] = {}
    for h in highlights:
        by_path.setdefault(h.path, []).append(h)

    H = layout.total_height
    pad = 10.0
    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>\n'
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="{_fmt(-pad)} {_fmt(-pad)} '
        f'{_fmt(layout.total_width + 2 * pad)} {_fmt(H + 2 * pad)}" '
        f'font-family="monospace" font-size="12">'
    ]
    hidden = layout.params.hide_formulas
    hpad = layout.params.hpad
    for box in layout.boxes:
        attr_path = quoteattr(path_str(box.path))
        marked = box.path in by_path
        is_sel = sel is not None and box.path == sel
        if hidden:
            y = _fmt(H - box.y - box.h)
            stroke = f' stroke="{HIGHLIGHT_COLOR}" stroke-width="1.5"' if marked else ""
            fill = SELECT_FILL if is_sel else "#CFCFCF"
            parts.append(
                f'<rect x="{_fmt(box.x)}" y="{y}" width="{_fmt(box.w)}" '
                f'height="{_fmt(box.h)}" fill="{fill}"{stroke} data-path={attr_path}/>'
            )
            continue
        baseline = _fmt(H - box.y - box.h * 0.25)
        fill = f' fill="{SELECT_FILL}"' if is_sel else ""
        spans = sorted(by_path.get(box.path, ()), key=lambda t: t.start)
        if spans:
            chunks: list[str] = []
            cur = 0
            for t in spans:
                if t.start > cur:
                    chunks.append(escape(box.text[cur:t.start]))
                chunks.append(
                    f'<tspan fill="{HIGHLIGHT_COLOR}" font-weight="bold">'
                    f"{escape(box.text[t.start:t.end])}</tspan>"
                )
                cur = t.end
            if cur < len(box.text):
                chunks.append(escape(box.text[cur:]))
            content = "".join(chunks)
        else:
            content = escape(box.text)
        parts.append(
            f'<text x="{_fmt(box.x + hpad)}" y="{baseline}"{fill} '
            f"data-path={attr_path}>{content}</text>"
        )
    for line in layout.lines:
        y = _fmt(H - line.y)
        parts.append(
            f'<line x1="{_fmt(line.x1)}" y1="{y}" x2="{_fmt(line.x2)}" y2="{y}" '
            f'stroke="black" stroke-width="1" data-path={quoteattr(path_str(line.path))} '
            f"data-rule={quoteattr(line.label)}><title>{escape(line.label)}</title></line>"
        )
    parts.append("</svg>")
    return "\n".join(parts)
