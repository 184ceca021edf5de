"""Deterministic SVG rendering of scattering diagrams and broken-line dumps."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence
from xml.sax.saxutils import escape

from .scattering import ScatteringDiagram

Viewport = tuple[float, float, float, float]  # xmin, ymin, xmax, ymax


def _fmt(v: float) -> str:
    s = f"{v:.3f}".rstrip("0").rstrip(".")
    return "0" if s in ("-0", "") else s


def _clip(p0, d, t0: float, t1: float | None, vp: Viewport):
    """Liang-Barsky clip of ``p0 + t d`` for ``t`` in ``[t0, t1]`` (``t1=None`` means unbounded)."""
    lo, hi = t0, (float("inf") if t1 is None else t1)
    for pc, dc, mn, mx in ((p0[0], d[0], vp[0], vp[2]), (p0[1], d[1], vp[1], vp[3])):
        if dc == 0:
            if pc < mn or pc > mx:
                return None
            continue
        a, b = (mn - pc) / dc, (mx - pc) / dc
        if a > b:
            a, b = b, a
        lo, hi = max(lo, a), min(hi, b)
    if lo > hi or hi == float("inf"):
        return None
    return (p0[0] + lo * d[0], p0[1] + lo * d[1]), (p0[0] + hi * d[0], p0[1] + hi * d[1])


def auto_viewport(points: Sequence[Sequence], margin: float = 2.0, minimum: float = 3.0) -> Viewport:
    if not points:
        return (-minimum, -minimum, minimum, minimum)
    xs = [float(p[0]) for p in points]
    ys = [float(p[1]) for p in points]
    r = max(minimum, max(abs(v) for v in xs + ys) + margin)
    return (-r, -r, r, r)


class _Canvas:
    def __init__(self, vp: Viewport, scale: float):
        self.vp = vp
        self.scale = scale
        self.w = (vp[2] - vp[0]) * scale
        self.h = (vp[3] - vp[1]) * scale
        self.parts: list[str] = []

    def xy(self, p) -> tuple[str, str]:
        return _fmt((float(p[0]) - self.vp[0]) * self.scale), _fmt((self.vp[3] - float(p[1])) * self.scale)

    def line(self, a, b, cls: str):
        (x1, y1), (x2, y2) = self.xy(a), self.xy(b)
        self.parts.append(f'<line class="{cls}" x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}"/>')

    def polyline(self, pts, cls: str):
        coords = " ".join(",".join(self.xy(p)) for p in pts)
        self.parts.append(f'<polyline class="{cls}" fill="none" points="{coords}"/>')

    def text(self, p, s: str):
        x, y = self.xy(p)
        self.parts.append(f'<text x="{x}" y="{y}">{escape(s)}</text>')

    def axes(self):
        self.line((self.vp[0], 0), (self.vp[2], 0), "axis")
        self.line((0, self.vp[1]), (0, self.vp[3]), "axis")

    def document(self) -> str:
        style = (
            "<style>.axis{stroke:#bbb;stroke-width:0.5}.wall{stroke:#1f4e9c;stroke-width:1.2}"
            ".ray{stroke:#b3361b;stroke-width:1.2}.bline{stroke:#2a7f3a;stroke-width:0.9}"
            "text{font-family:monospace;font-size:9px}</style>"
        )
        head = (
            f'<svg xmlns="http://www.w3.org/2000/svg" width="{_fmt(self.w)}" height="{_fmt(self.h)}" '
            f'viewBox="0 0 {_fmt(self.w)} {_fmt(self.h)}">'
        )
        return "\n".join([head, style, *self.parts, "</svg>"]) + "\n"


def render_diagram(d: ScatteringDiagram, scale: float = 40.0, viewport: Viewport | None = None) -> str:
    walls = d.sorted_walls()
    if viewport is None:
        pts = [w.base for w in walls] + list(d.singular_points()) if walls else []
        viewport = auto_viewport(pts)
    c = _Canvas(viewport, scale)
    c.axes()
    for w in walls:
        p0 = (float(w.base[0]), float(w.base[1]))
        dv = (float(w.direction[0]), float(w.direction[1]))
        seg = _clip((p0[0] - 1e6 * dv[0], p0[1] - 1e6 * dv[1]), dv, 0.0, None, viewport) if w.is_line else _clip(p0, dv, 0.0, None, viewport)
        if seg is None:
            continue
        c.line(seg[0], seg[1], "wall" if w.is_line else "ray")
        c.text(seg[1], w.function.render(3))
    return c.document()


def render_lines(doc: dict, scale: float = 40.0, viewport: Viewport | None = None) -> str:
    lines = doc.get("lines", [])
    pts = [tuple(Fraction(v) for v in p) for ln in lines for p in ln["points"]]
    if viewport is None:
        viewport = auto_viewport(pts)
    c = _Canvas(viewport, scale)
    c.axes()
    for ln in lines:
        c.polyline([tuple(Fraction(v) for v in p) for p in ln["points"]], "bline")
    if doc.get("stop"):
        c.text(tuple(Fraction(v) for v in doc["stop"]), f"{len(lines)} lines")
    return c.document()


def render_svg(obj, scale: float = 40.0, viewport: Viewport | None = None) -> str:
    """A diagram, a diagram document or a broken-line document, as SVG text. ``None`` gives an empty canvas."""
    if obj is None:
        return _empty(scale, viewport)
    if isinstance(obj, ScatteringDiagram):
        return render_diagram(obj, scale, viewport)
    if isinstance(obj, dict):
        tag = obj.get("schema")
        if tag == "broken-lines/1":
            return render_lines(obj, scale, viewport)
        if tag == "diagram/1":
            from .serialize import diagram_from_doc

            return render_diagram(diagram_from_doc(obj), scale, viewport)
    raise TypeError(f"cannot render {type(obj).__name__}")


def _empty(scale, viewport):
    c = _Canvas(viewport or auto_viewport([]), scale)
    c.axes()
    return c.document()


__all__ = ["render_svg", "render_diagram", "render_lines", "auto_viewport"]
