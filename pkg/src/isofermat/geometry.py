"""Plane geometry primitives: points, triangles, circles, extended angles,
inversion and perpendicular feet.

Every tolerance is relative to a length scale; for a triangle that scale is
its longest side.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator

from .errors import (
    CoincidentPointsError,
    DegenerateTriangleError,
    GeometryError,
    IdenticalCirclesError,
    OffChordError,
)

EPS_AREA = 1e-12
EPS_LINE = 1e-10
EPS_TANGENT = 1e-9

LABELS = ("A", "B", "C")


@dataclass(frozen=True, slots=True)
class Point2:
    x: float
    y: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise GeometryError(f"non-finite point ({self.x}, {self.y})")

    @classmethod
    def from_complex(cls, z: complex) -> Point2:
        return cls(z.real, z.imag)

    @property
    def z(self) -> complex:
        return complex(self.x, self.y)

    def __add__(self, other: Point2) -> Point2:
        return Point2(self.x + other.x, self.y + other.y)

    def __sub__(self, other: Point2) -> Point2:
        return Point2(self.x - other.x, self.y - other.y)

    def __mul__(self, k: float) -> Point2:
        return Point2(self.x * k, self.y * k)

    __rmul__ = __mul__

    def __truediv__(self, k: float) -> Point2:
        return Point2(self.x / k, self.y / k)

    def __neg__(self) -> Point2:
        return Point2(-self.x, -self.y)

    def __abs__(self) -> float:
        return math.hypot(self.x, self.y)

    def __iter__(self) -> Iterator[float]:
        yield self.x
        yield self.y

    def dot(self, other: Point2) -> float:
        return self.x * other.x + self.y * other.y

    def cross(self, other: Point2) -> float:
        return self.x * other.y - self.y * other.x


def dist(p: Point2, q: Point2) -> float:
    return math.hypot(p.x - q.x, p.y - q.y)


def orient(p: Point2, q: Point2, r: Point2) -> float:
    """Twice the signed area of pqr (positive when counter-clockwise)."""
    return (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x)


def std_angle(m: Point2, p: Point2, q: Point2) -> float:
    """Ordinary angle PMQ in [0, pi]."""
    u, v = p - m, q - m
    return math.atan2(abs(u.cross(v)), u.dot(v))


@dataclass(frozen=True, slots=True)
class Circle:
    center: Point2
    radius: float

    def __post_init__(self) -> None:
        if not (self.radius > 0 and math.isfinite(self.radius)):
            raise GeometryError(f"circle radius must be positive, got {self.radius}")

    def power(self, p: Point2) -> float:
        d = p - self.center
        return d.dot(d) - self.radius * self.radius

    def point_at(self, theta: float) -> Point2:
        return Point2(
            self.center.x + self.radius * math.cos(theta),
            self.center.y + self.radius * math.sin(theta),
        )


@dataclass(frozen=True)
class AngleTriple:
    """Three angles of a triangle, in radians."""

    a1: float
    b1: float
    g1: float

    def __post_init__(self) -> None:
        for v in self:
            if not (0.0 < v < math.pi):
                raise GeometryError(f"angle {v} outside (0, pi)")
        if abs(self.a1 + self.b1 + self.g1 - math.pi) > 1e-12:
            raise GeometryError("angles do not sum to pi")

    def __iter__(self) -> Iterator[float]:
        yield self.a1
        yield self.b1
        yield self.g1

    def __getitem__(self, i: int) -> float:
        return (self.a1, self.b1, self.g1)[i]

    def rotated(self, k: int) -> AngleTriple:
        v = tuple(self)
        return AngleTriple(*(v[(i + k) % 3] for i in range(3)))

    def isclose(self, other: AngleTriple, tol: float = 1e-9) -> bool:
        return all(abs(x - y) <= tol for x, y in zip(self, other))


@dataclass(frozen=True)
class Triangle:
    """Vertices stored as given; orientation is exposed, never normalized."""

    A: Point2
    B: Point2
    C: Point2

    def __post_init__(self) -> None:
        if abs(self.signed_area) <= EPS_AREA * self.scale**2:
            raise DegenerateTriangleError("triangle vertices are (nearly) collinear")

    @classmethod
    def from_coords(cls, coords) -> Triangle:
        return cls(*(Point2(float(x), float(y)) for x, y in coords))

    @property
    def vertices(self) -> tuple[Point2, Point2, Point2]:
        return (self.A, self.B, self.C)

    def vertex(self, label: str) -> Point2:
        return self.vertices[LABELS.index(label)]

    def rotated(self, k: int) -> Triangle:
        """Cyclic relabeling: the vertex at index k becomes A."""
        v = self.vertices
        return Triangle(v[k % 3], v[(k + 1) % 3], v[(k + 2) % 3])

    @cached_property
    def sides(self) -> tuple[float, float, float]:
        return (dist(self.B, self.C), dist(self.C, self.A), dist(self.A, self.B))

    @cached_property
    def scale(self) -> float:
        return max(dist(self.B, self.C), dist(self.C, self.A), dist(self.A, self.B))

    @cached_property
    def signed_area(self) -> float:
        return 0.5 * orient(self.A, self.B, self.C)

    @property
    def area(self) -> float:
        return abs(self.signed_area)

    @property
    def orientation(self) -> int:
        return 1 if self.signed_area > 0 else -1

    @cached_property
    def angles(self) -> tuple[float, float, float]:
        A, B, C = self.vertices
        return (std_angle(A, B, C), std_angle(B, C, A), std_angle(C, A, B))

    @cached_property
    def circumcircle(self) -> Circle:
        # Solved relative to A to limit cancellation.
        b = self.B - self.A
        c = self.C - self.A
        d = 2.0 * b.cross(c)
        bb, cc = b.dot(b), c.dot(c)
        ox = (c.y * bb - b.y * cc) / d
        oy = (b.x * cc - c.x * bb) / d
        a_, b_, c_ = self.sides
        return Circle(self.A + Point2(ox, oy), a_ * b_ * c_ / (4.0 * self.area))

    @cached_property
    def incenter(self) -> Point2:
        a, b, c = self.sides
        s = a + b + c
        return (self.A * a + self.B * b + self.C * c) / s

    @cached_property
    def centroid(self) -> Point2:
        return (self.A + self.B + self.C) / 3.0

    def barycentric(self, p: Point2) -> tuple[float, float, float]:
        """Signed-area barycentric coordinates, normalized to sum 1."""
        s = orient(self.A, self.B, self.C)
        u = orient(p, self.B, self.C) / s
        v = orient(self.A, p, self.C) / s
        w = orient(self.A, self.B, p) / s
        return (u, v, w)

    def from_barycentric(self, u: float, v: float, w: float) -> Point2:
        t = u + v + w
        return Point2(
            (u * self.A.x + v * self.B.x + w * self.C.x) / t,
            (u * self.A.y + v * self.B.y + w * self.C.y) / t,
        )


def sides(t: Triangle) -> tuple[float, float, float]:
    return t.sides


def angles(t: Triangle) -> tuple[float, float, float]:
    return t.angles


def circumcircle(t: Triangle) -> Circle:
    return t.circumcircle


def extended_angle(m: Point2, p: Point2, q: Point2, ref: Point2) -> float:
    """Angle PMQ in (0, 2*pi), measured from the side of ref.

    Equals the ordinary angle when m is on ref's side of line PQ, pi on the
    open chord PQ, and 2*pi minus the ordinary angle on the far side.
    """
    scale = max(dist(p, q), dist(p, ref), dist(q, ref))
    if dist(m, p) <= EPS_AREA * scale or dist(m, q) <= EPS_AREA * scale:
        raise CoincidentPointsError("apex coincides with a chord endpoint")
    pq = q - p
    L = abs(pq)
    d_m = pq.cross(m - p) / L
    d_ref = pq.cross(ref - p)
    if d_ref == 0.0:
        raise GeometryError("reference point lies on the chord's line")
    if abs(d_m) <= EPS_LINE * scale:
        s = pq.dot(m - p) / (L * L)
        if 0.0 < s < 1.0:
            return math.pi
        raise OffChordError("apex on the chord's line but outside the chord")
    ang = std_angle(m, p, q)
    if (d_m > 0) == (d_ref > 0):
        return ang
    return 2.0 * math.pi - ang


def invert(center: Point2, radius: float, p: Point2) -> Point2:
    d = p - center
    r2 = d.dot(d)
    if r2 == 0.0:
        raise CoincidentPointsError("cannot invert the center of inversion")
    return center + d * (radius * radius / r2)


def foot(line_p: Point2, line_q: Point2, m: Point2) -> Point2:
    d = line_q - line_p
    L2 = d.dot(d)
    if L2 == 0.0:
        raise CoincidentPointsError("line through two identical points")
    s = d.dot(m - line_p) / L2
    return line_p + d * s


def reflect_across_line(p: Point2, line_p: Point2, line_q: Point2) -> Point2:
    return foot(line_p, line_q, p) * 2.0 - p


def circle_circle_intersection(c1: Circle, c2: Circle) -> list[Point2]:
    """Real intersection points; tangency yields a single point."""
    d_vec = c2.center - c1.center
    d = abs(d_vec)
    r1, r2 = c1.radius, c2.radius
    tol = EPS_TANGENT * max(r1, r2)
    if d <= tol and abs(r1 - r2) <= tol:
        raise IdenticalCirclesError("circles coincide")
    if d > r1 + r2 + tol or d < abs(r1 - r2) - tol or d == 0.0:
        return []
    along = (d * d + r1 * r1 - r2 * r2) / (2.0 * d)
    base = c1.center + d_vec * (along / d)
    if abs(d - (r1 + r2)) <= tol or abs(d - abs(r1 - r2)) <= tol:
        return [base]
    h = math.sqrt(max(r1 * r1 - along * along, 0.0))
    off = Point2(-d_vec.y, d_vec.x) * (h / d)
    return [base + off, base - off]
