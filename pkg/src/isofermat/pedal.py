"""Pedal triangles and the inverse problem of locating a point from the
angles of its pedal triangle."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import (
    AtVertexError,
    GeometryError,
    IdenticalAnglesError,
    NoSolutionFoundError,
    OnCircumcircleError,
)
from .geometry import (
    EPS_LINE,
    AngleTriple,
    Point2,
    Triangle,
    dist,
    extended_angle,
    foot,
    invert,
    orient,
    std_angle,
)

# Relative power-of-a-point threshold for "on the circumcircle".
EPS_CIRCLE = 1e-10
THIRD_ANGLE_TOL = 1e-7


@dataclass(frozen=True)
class PedalData:
    """Feet (A1, B1, C1) on lines BC, CA, AB, with angles and circumradius.

    ``orientation`` is the sign of the pedal triangle's signed area; compare
    it with ``Triangle.orientation`` of the base triangle.
    """

    feet: tuple[Point2, Point2, Point2]
    angles: AngleTriple
    R1: float
    orientation: int


def check_off_circle(t: Triangle, m: Point2) -> float:
    """Return the power of m w.r.t. the circumcircle; raise near vertices or on the circle."""
    for label, v in zip("ABC", t.vertices):
        if dist(m, v) <= EPS_LINE * t.scale:
            raise AtVertexError(f"point coincides with vertex {label}")
    k = t.circumcircle
    pw = k.power(m)
    if abs(pw) <= EPS_CIRCLE * k.radius**2:
        raise OnCircumcircleError("point lies on the circumcircle")
    return pw


def pedal_of(t: Triangle, m: Point2) -> PedalData:
    check_off_circle(t, m)
    A, B, C = t.vertices
    A1, B1, C1 = foot(B, C, m), foot(C, A, m), foot(A, B, m)
    a1 = std_angle(A1, B1, C1)
    b1 = std_angle(B1, C1, A1)
    g1 = math.pi - a1 - b1
    s_a, s_b, s_c = dist(B1, C1), dist(C1, A1), dist(A1, B1)
    twice_area = orient(A1, B1, C1)
    R1 = s_a * s_b * s_c / (2.0 * abs(twice_area))
    return PedalData(
        feet=(A1, B1, C1),
        angles=AngleTriple(a1, b1, g1),
        R1=R1,
        orientation=1 if twice_area > 0 else -1,
    )


def _chord(t: Triangle, i: int) -> tuple[Point2, Point2, Point2]:
    """(P, Q, ref) for the side opposite vertex i."""
    v = t.vertices
    return v[(i + 1) % 3], v[(i + 2) % 3], v[i]


def _locus(t: Triangle, i: int, theta: float):
    """Circle (center, radius) of points seeing side i under extended angle theta.

    Returns None for theta == pi, where the locus is the side itself.
    """
    p, q, ref = _chord(t, i)
    s = math.sin(theta)
    if abs(s) < 1e-12:
        return None
    mid = (p + q) * 0.5
    d = q - p
    h = 0.5 * abs(d)
    n = Point2(-d.y, d.x) / abs(d)
    if n.dot(ref - p) < 0:
        n = -n
    # One formula covers both arcs: cot(2*pi - theta) == -cot(theta).
    return mid + n * (h * math.cos(theta) / s), h / abs(s)


def locate_interior(t: Triangle, target: AngleTriple) -> Point2:
    """The unique point inside the circumcircle whose pedal angles are ``target``.

    The point sees side BC under the extended angle alpha + a1 (cyclically).
    Each pair of these loci shares a vertex, so their second intersection is
    the reflection of that vertex across the line of centers.
    """
    base = t.angles
    thetas = [base[i] + target[i] for i in range(3)]
    loci = [_locus(t, i, thetas[i]) for i in range(3)]
    k = t.circumcircle
    verts = t.vertices

    best, best_res = None, math.inf
    for i, j in ((0, 1), (1, 2), (2, 0)):
        shared = verts[3 - i - j]
        li, lj = loci[i], loci[j]
        if li is None and lj is None:
            continue
        if li is None or lj is None:
            line_idx, circ = (i, lj) if li is None else (j, li)
            p, q, _ = _chord(t, line_idx)
            m = foot(p, q, circ[0]) * 2.0 - shared
        else:
            ci, cj = li[0], lj[0]
            if dist(ci, cj) <= 1e-12 * t.scale:
                continue
            m = foot(ci, cj, shared) * 2.0 - shared
        if dist(m, shared) <= 1e-9 * t.scale or k.power(m) >= 0.0:
            continue
        try:
            res = max(
                abs(extended_angle(m, *_chord(t, n)) - thetas[n]) for n in range(3)
            )
        except GeometryError:
            continue
        if res < best_res:
            best, best_res = m, res
    if best is None or best_res > THIRD_ANGLE_TOL:
        raise NoSolutionFoundError(
            f"no locus intersection satisfies all three angle relations (residual {best_res})"
        )
    return best


def locate_exterior(t: Triangle, target: AngleTriple) -> Point2:
    """The unique point outside the circumcircle with pedal angles ``target``:
    the inverse, in the circumcircle, of the interior solution."""
    if target.isclose(AngleTriple(*t.angles), 1e-9):
        raise IdenticalAnglesError("target equals the triangle's own angles")
    m = locate_interior(t, target)
    k = t.circumcircle
    return invert(k.center, k.radius, m)


def conjugate_view_angles(t: Triangle, target: AngleTriple) -> tuple[float, float, float]:
    """Extended angles under which the isogonal conjugate of the interior
    point sees BC, CA, AB."""
    return tuple(math.pi - x for x in target)
