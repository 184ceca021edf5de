import re

from artifact.broken import theta_lines
from artifact.dp5 import Dp5Params, chamber_point, dp5_diagram, dp5_model
from artifact.models import a2_initial
from artifact.scattering import ScatteringDiagram, complete
from artifact.serialize import lines_to_doc
from artifact.svg import render_svg


def test_empty_canvas_has_axes():
    svg = render_svg(None)
    assert svg.count('class="axis"') == 2
    assert "wall" not in svg.split("</style>")[1]


def test_a2_three_strokes_with_labels():
    svg = render_svg(complete(a2_initial(4), 4))
    strokes = re.findall(r'<line class="(wall|ray)"', svg)
    assert sorted(strokes) == ["ray", "wall", "wall"]
    assert "1 + s1*s2*x*y" in svg


def test_strokes_clipped_to_viewport():
    svg = render_svg(complete(a2_initial(4), 4), scale=10, viewport=(-1, -1, 1, 1))
    for v in re.findall(r'[xy][12]="(-?[\d.]+)"', svg):
        assert 0 <= float(v) <= 20


def test_label_truncated_to_three_terms():
    d = a2_initial(5)
    w = d.walls[0]
    big = w.with_function(w.function**5)
    assert len(big.function.terms) == 6
    svg = render_svg(ScatteringDiagram((big,), 5, d.context))
    text = re.findall(r"<text[^>]*>([^<]*)</text>", svg)[0]
    assert text == "1 + 5*s1*x + 10*s1^2*x^2 + ..."


def test_broken_line_dump_polylines_deterministic():
    p = Dp5Params()
    d = dp5_diagram(p, 4)
    u = chamber_point(p, "central")
    lines = theta_lines(d, u, dp5_model(p), 4)
    doc = lines_to_doc(lines, d.context.labels, u)
    a, b = render_svg(doc), render_svg(doc)
    assert a == b
    assert a.count("<polyline") == len(lines)
