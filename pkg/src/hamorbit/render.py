"""SVG drawings of shapes on regularly spaced circle points."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .burnside import enumerate_classes
from .errors import BadRadius
from .groups import Mode, ShapeKey
from .perms import check_cap


@dataclass(frozen=True)
class Layout:
    n: int
    points: tuple[tuple[float, float], ...]


@dataclass(frozen=True)
class Style:
    cell: float = 120.0
    margin: float = 14.0
    vertex_radius: float = 3.5
    stroke: str = "#1f3a93"
    stroke_width: float = 2.0
    vertex_fill: str = "#111111"
    background: str = "#ffffff"
    label: bool = True
    label_size: float = 11.0


def layout(n: int, radius: float, center: tuple[float, float] = (0.0, 0.0)) -> Layout:
    """Vertex ``i`` at angle ``2*pi*i/n`` clockwise from the top (screen y points down)."""
    if n < 1:
        raise ValueError(f"layout needs n >= 1, got {n}")
    if not radius > 0:
        raise BadRadius(f"radius must be positive, got {radius}")
    cx, cy = center
    pts = []
    for i in range(n):
        theta = 2 * math.pi * i / n
        pts.append((cx + radius * math.sin(theta), cy - radius * math.cos(theta)))
    return Layout(n, tuple(pts))


def _fmt(value: float) -> str:
    # adding 0.0 turns a rounded -0.0 into 0.0
    return f"{round(value, 3) + 0.0:.3f}"


def _shape_elements(key: ShapeKey, style: Style, origin: tuple[float, float]) -> list[str]:
    radius = style.cell / 2 - style.margin
    ox, oy = origin
    pts = layout(key.n, radius, (ox + style.cell / 2, oy + style.cell / 2)).points
    out = []
    for a, b in key.edges:
        (x1, y1), (x2, y2) = pts[a], pts[b]
        out.append(
            f'<line x1="{_fmt(x1)}" y1="{_fmt(y1)}" x2="{_fmt(x2)}" y2="{_fmt(y2)}" '
            f'stroke="{style.stroke}" stroke-width="{_fmt(style.stroke_width)}" stroke-linecap="round"/>'
        )
    for x, y in pts:
        out.append(f'<circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="{_fmt(style.vertex_radius)}" fill="{style.vertex_fill}"/>')
    return out


def _document(width: float, height: float, body: list[str], style: Style) -> str:
    head = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{_fmt(width)}" height="{_fmt(height)}" '
        f'viewBox="0 0 {_fmt(width)} {_fmt(height)}">',
        f'<rect x="0.000" y="0.000" width="{_fmt(width)}" height="{_fmt(height)}" fill="{style.background}"/>',
    ]
    return "\n".join(head + body + ["</svg>"]) + "\n"


def render_shape(key: ShapeKey, style: Style | None = None) -> str:
    style = style or Style()
    return _document(style.cell, style.cell, _shape_elements(key, style, (0.0, 0.0)), style)


def render_gallery(mode: Mode, columns: int = 6, style: Style | None = None, jobs: int | None = 1) -> str:
    """Grid with one cell per class representative, row-major in sorted order."""
    if columns < 1:
        raise ValueError(f"columns must be positive, got {columns}")
    check_cap(mode.n)
    style = style or Style()
    classes = enumerate_classes(mode, jobs)
    label_h = style.label_size + 6 if style.label else 0.0
    cell_h = style.cell + label_h
    cols = min(columns, len(classes))
    rows = -(-len(classes) // cols)
    body = []
    for idx, (rep, key) in enumerate(classes):
        ox, oy = (idx % cols) * style.cell, (idx // cols) * cell_h
        body.append(f'<g class="cell" id="cell-{idx}">')
        body.extend(_shape_elements(key, style, (ox, oy)))
        if style.label:
            body.append(
                f'<text x="{_fmt(ox + style.cell / 2)}" y="{_fmt(oy + style.cell + style.label_size)}" '
                f'font-family="monospace" font-size="{_fmt(style.label_size)}" text-anchor="middle">{rep}</text>'
            )
        body.append("</g>")
    return _document(cols * style.cell, rows * cell_h, body, style)
