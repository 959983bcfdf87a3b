"""Static SVG figures of a solved instance."""

from __future__ import annotations

import math
import xml.etree.ElementTree as ET
from typing import Optional

from .errors import GeometryError
from .fermat import FermatSolution
from .geometry import Circle, Point2, Triangle, std_angle
from .pedal import pedal_of

SVG_NS = "http://www.w3.org/2000/svg"

STYLE = {
    "triangle": dict(fill="none", stroke="#222", **{"stroke-width": "1.5"}),
    "circumcircle": dict(fill="none", stroke="#888", **{"stroke-dasharray": "4 3"}),
    "pedal": dict(fill="#cde", stroke="#468", **{"fill-opacity": "0.5"}),
    "arc": dict(fill="none", stroke="#d33", **{"stroke-width": "3"}),
    "view": dict(fill="none", stroke="#393", **{"stroke-width": "1"}),
}


def _fmt(v: float) -> str:
    return f"{v:.6g}"


class _Canvas:
    """Maps plane coordinates to SVG user space (y axis flipped)."""

    def __init__(self, lo: Point2, hi: Point2):
        self.lo, self.hi = lo, hi
        self.unit = max(hi.x - lo.x, hi.y - lo.y)
        self.root = ET.Element(
            "svg",
            xmlns=SVG_NS,
            version="1.1",
            viewBox=f"{_fmt(lo.x)} {_fmt(-hi.y)} {_fmt(hi.x - lo.x)} {_fmt(hi.y - lo.y)}",
            width="640",
            height=_fmt(640 * (hi.y - lo.y) / (hi.x - lo.x)),
        )
        self.root.set("stroke-width", _fmt(self.unit / 400))

    def _xy(self, p: Point2) -> tuple[str, str]:
        return _fmt(p.x), _fmt(-p.y)

    def _width(self, style: dict) -> dict:
        style = dict(style)
        if "stroke-width" in style:
            style["stroke-width"] = _fmt(float(style["stroke-width"]) * self.unit / 400)
        return style

    def polygon(self, pts, style, closed=True):
        coords = " ".join(",".join(self._xy(p)) for p in pts)
        tag = "polygon" if closed else "polyline"
        ET.SubElement(self.root, tag, points=coords, **self._width(style))

    def circle(self, c: Circle, style):
        x, y = self._xy(c.center)
        ET.SubElement(self.root, "circle", cx=x, cy=y, r=_fmt(c.radius), **self._width(style))

    def dot(self, p: Point2, color: str, label: Optional[str] = None):
        x, y = self._xy(p)
        ET.SubElement(self.root, "circle", cx=x, cy=y, r=_fmt(self.unit / 120), fill=color)
        if label:
            self.text(p, label, color)

    def text(self, p: Point2, s: str, color: str = "#000"):
        x, y = self._xy(p + Point2(self.unit / 80, self.unit / 80))
        el = ET.SubElement(self.root, "text", x=x, y=y, fill=color)
        el.set("font-size", _fmt(self.unit / 30))
        el.text = s


def _sweep(center: Point2, radius: float, t0: float, t1: float, n: int = 64) -> list[Point2]:
    return [
        center + Point2(math.cos(t0 + (t1 - t0) * i / n), math.sin(t0 + (t1 - t0) * i / n)) * radius
        for i in range(n + 1)
    ]


def arc_points(circle: Circle, p: Point2, q: Point2, avoid: Point2, n: int = 64) -> list[Point2]:
    """Points of the arc of ``circle`` from p to q that does not pass through ``avoid``."""
    c = circle.center
    ang = lambda z: math.atan2(z.y - c.y, z.x - c.x)  # noqa: E731
    t0, t1, ta = ang(p), ang(q), ang(avoid)
    span = (t1 - t0) % (2 * math.pi)
    if (ta - t0) % (2 * math.pi) < span:
        span -= 2 * math.pi
    return _sweep(c, circle.radius, t0, t0 + span, n)


def _view_arc(y: Point2, p: Point2, q: Point2, r: float) -> list[Point2]:
    t0 = math.atan2(p.y - y.y, p.x - y.x)
    t1 = math.atan2(q.y - y.y, q.x - y.x)
    span = (t1 - t0 + math.pi) % (2 * math.pi) - math.pi
    return _sweep(y, r, t0, t0 + span, 24)


def render_svg(t: Triangle, sol: Optional[FermatSolution] = None, neg: Optional[str] = None) -> str:
    k = t.circumcircle
    pts = [k.center + Point2(dx, dy) * k.radius for dx, dy in ((1, 1), (-1, -1))]
    extra = []
    if sol is not None:
        extra = [p for p in (sol.point, sol.witness) if p is not None]
    xs = [p.x for p in pts + extra]
    ys = [p.y for p in pts + extra]
    pad = 0.2 * max(max(xs) - min(xs), max(ys) - min(ys))
    cv = _Canvas(Point2(min(xs) - pad, min(ys) - pad), Point2(max(xs) + pad, max(ys) + pad))

    cv.circle(k, STYLE["circumcircle"])
    if sol is not None and sol.witness is not None:
        try:
            cv.polygon(pedal_of(t, sol.witness).feet, STYLE["pedal"])
        except GeometryError:
            pass
        cv.dot(sol.witness, "#468", "X" if neg is None else "P")
    cv.polygon(t.vertices, STYLE["triangle"])
    for label, v in zip("ABC", t.vertices):
        cv.dot(v, "#222", label + ("-" if label == neg else ""))

    if sol is None:
        return ET.tostring(cv.root, encoding="unicode")

    if sol.kind == "arc":
        A = t.vertex(neg)
        B, C = (t.vertex(v) for v in sol.vertices)
        cv.polygon(arc_points(k, B, C, A), STYLE["arc"], closed=False)
    elif sol.kind == "interior":
        y = sol.point
        r = 0.08 * t.scale
        for p, q in ((t.B, t.C), (t.C, t.A), (t.A, t.B)):
            cv.polygon(_view_arc(y, p, q, r), STYLE["view"], closed=False)
            mid = _view_arc(y, p, q, 1.6 * r)[12]
            cv.text(mid, f"{math.degrees(std_angle(y, p, q)):.1f}", "#393")
        cv.dot(y, "#d33", "Y" if neg is None else "Q")
    elif sol.kind in ("vertex", "tie"):
        for v in sol.vertices:
            cv.dot(t.vertex(v), "#d33")
    if sol.value is not None:
        cv.text(Point2(cv.lo.x, cv.lo.y), f"{sol.report.case_taken}: value {sol.value:.10g}")
    return ET.tostring(cv.root, encoding="unicode")
