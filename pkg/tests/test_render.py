import math
import xml.etree.ElementTree as ET
from collections import Counter

import pytest

from hamorbit.errors import BadRadius
from hamorbit.groups import EquivKind, GraphKind, Mode, ShapeKey, shape_key, transform_shape
from hamorbit.render import Style, layout, render_gallery, render_shape

SVG = "{http://www.w3.org/2000/svg}"


def parse(svg):
    return ET.fromstring(svg.encode("utf-8"))


def test_layout_quarter_turns():
    pts = layout(4, 10.0, (50.0, 50.0)).points
    expected = [(50, 40), (60, 50), (50, 60), (40, 50)]
    for (x, y), (ex, ey) in zip(pts, expected):
        assert abs(x - ex) < 1e-9 and abs(y - ey) < 1e-9


def test_layout_single_point_and_spacing():
    assert layout(1, 5.0).points == ((0.0, -5.0),)
    pts = layout(6, 1.0).points
    for i in range(6):
        (x1, y1), (x2, y2) = pts[i], pts[(i + 1) % 6]
        angle = math.degrees(math.acos(x1 * x2 + y1 * y2))
        assert abs(angle - 60) < 1e-9
    with pytest.raises(BadRadius):
        layout(4, 0)


def test_render_shape_counts():
    square = ShapeKey.from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
    doc = parse(render_shape(square))
    assert len(doc.findall(f"{SVG}circle")) == 4
    assert len(doc.findall(f"{SVG}line")) == 4
    path = shape_key((0, 1, 2, 3), GraphKind.PATH)
    doc = parse(render_shape(path))
    assert len(doc.findall(f"{SVG}circle")) == 4
    assert len(doc.findall(f"{SVG}line")) == 3


def _segments(svg):
    out = Counter()
    for line in parse(svg).findall(f"{SVG}line"):
        a = (float(line.get("x1")), float(line.get("y1")))
        b = (float(line.get("x2")), float(line.get("y2")))
        out[tuple(sorted([a, b]))] += 1
    return out


def _snap(p, pts):
    """Index of the layout point within 0.01 px of ``p``."""
    best = min(range(len(pts)), key=lambda i: math.dist(p, pts[i]))
    assert math.dist(p, pts[best]) < 1e-2
    return best


def _drawn_edges(segments, pts, move=lambda p: p):
    out = Counter()
    for (a, b), cnt in segments.items():
        out[frozenset((_snap(move(a), pts), _snap(move(b), pts)))] += cnt
    return out


@pytest.mark.parametrize("k", range(5))
def test_rotated_key_draws_rotated_figure(k):
    n = 5
    key = shape_key((0, 2, 4, 1, 3), GraphKind.PATH)
    style = Style()
    c = style.cell / 2
    pts = layout(n, style.cell / 2 - style.margin, (c, c)).points
    turn = 2 * math.pi * k / n

    def rot(p):
        # clockwise on screen, where y points down
        x, y = p[0] - c, p[1] - c
        return (c + x * math.cos(turn) - y * math.sin(turn), c + x * math.sin(turn) + y * math.cos(turn))

    original = _drawn_edges(_segments(render_shape(key, style)), pts, rot)
    drawn = _drawn_edges(_segments(render_shape(transform_shape(key, k, False), style)), pts)
    assert original == drawn


def test_reflection_axis_is_vertical():
    key = shape_key((0, 1, 2, 3, 4), GraphKind.PATH)
    style = Style()
    c = style.cell / 2
    pts = layout(5, style.cell / 2 - style.margin, (c, c)).points
    flipped = _drawn_edges(_segments(render_shape(key, style)), pts, lambda p: (2 * c - p[0], p[1]))
    drawn = _drawn_edges(_segments(render_shape(transform_shape(key, 0, True), style)), pts)
    assert flipped == drawn


@pytest.mark.parametrize(
    "graph, n, cells",
    [(GraphKind.PATH, 4, 3), (GraphKind.CYCLE, 5, 4), (GraphKind.PATH, 6, 38)],
)
def test_gallery_cells(graph, n, cells):
    svg = render_gallery(Mode(graph, EquivKind.SIMILAR, n), columns=6)
    doc = parse(svg)
    groups = doc.findall(f"{SVG}g")
    assert len(groups) == cells
    edges = n - 1 if graph is GraphKind.PATH else n
    for g in groups:
        assert len(g.findall(f"{SVG}circle")) == n
        assert len(g.findall(f"{SVG}line")) == edges


def test_gallery_deterministic_and_job_independent():
    mode = Mode(GraphKind.CYCLE, EquivKind.SIMILAR, 6)
    a = render_gallery(mode, 4, jobs=1)
    assert a == render_gallery(mode, 4, jobs=1)
    assert a == render_gallery(mode, 4, jobs=8)


def test_no_negative_zero_and_three_decimals():
    svg = render_shape(shape_key((0, 3, 1, 4, 2, 5), GraphKind.CYCLE))
    assert "-0.000" not in svg
    for line in parse(svg).findall(f"{SVG}line"):
        assert all(len(line.get(a).split(".")[1]) == 3 for a in ("x1", "y1", "x2", "y2"))


def test_style_colors():
    svg = render_shape(shape_key((0, 1, 2), GraphKind.CYCLE), Style(stroke="red", vertex_fill="blue", label=False))
    assert 'stroke="red"' in svg and 'fill="blue"' in svg


def test_bad_columns():
    with pytest.raises(ValueError):
        render_gallery(Mode(GraphKind.PATH, EquivKind.SIMILAR, 4), columns=0)
