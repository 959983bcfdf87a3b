"""Isogonal conjugation, the complex cross-terms that characterize it, and
classification of conjugate pairs and plane regions."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .errors import AmbiguousVertexError, DegenerateInputError, OnCircumcircleError
from .geometry import EPS_LINE, LABELS, Point2, Triangle, dist
from .pedal import EPS_CIRCLE, pedal_of

EPS_IM = 1e-7
EPS_ZERO = 1e-9
EPS_INFINITY = 1e-10


@dataclass(frozen=True)
class CrossTerms:
    tA: complex
    tB: complex
    tC: complex

    def __iter__(self):
        yield self.tA
        yield self.tB
        yield self.tC

    @property
    def total(self) -> complex:
        return self.tA + self.tB + self.tC


@dataclass(frozen=True)
class ConjugacyType:
    kind: str  # "I", "II", "III" or "none"
    vertex: Optional[str] = None

    def __str__(self) -> str:
        if self.kind == "none":
            return "NotConjugate"
        if self.vertex is None:
            return f"Type{self.kind}"
        return f"Type{self.kind}({self.vertex})"


TYPE_I = ConjugacyType("I")
NOT_CONJUGATE = ConjugacyType("none")


@dataclass(frozen=True)
class RegionLabel:
    """kind is one of sigma, sigma12, sigma13, sigma13prime, on_circumcircle,
    side_line, vertex."""

    kind: str
    vertex: Optional[str] = None
    detail: Optional[str] = None

    def __str__(self) -> str:
        s = self.kind
        if self.vertex:
            s += f"({self.vertex})"
        if self.detail:
            s += f" [{self.detail}]"
        return s


def cross_terms(t: Triangle, x: Point2, y: Point2) -> CrossTerms:
    a, b, c = (v.z for v in t.vertices)
    xz, yz = x.z, y.z
    return CrossTerms(
        (xz - a) * (yz - a) / ((b - a) * (c - a)),
        (xz - b) * (yz - b) / ((a - b) * (c - b)),
        (xz - c) * (yz - c) / ((a - c) * (b - c)),
    )


def _side_distances(t: Triangle, p: Point2) -> list[float]:
    """Signed distances of p to lines BC, CA, AB (positive toward the opposite vertex)."""
    a, b, c = t.sides
    u, v, w = t.barycentric(p)
    h2 = 2.0 * t.area
    return [u * h2 / a, v * h2 / b, w * h2 / c]


def _vertex_at(t: Triangle, p: Point2) -> Optional[str]:
    for label, v in zip(LABELS, t.vertices):
        if dist(p, v) <= EPS_LINE * t.scale:
            return label
    return None


def isogonal_conjugate(t: Triangle, x: Point2) -> Point2:
    """Image of x under isogonal conjugation, computed in barycentrics as
    (u:v:w) -> (a^2 vw : b^2 wu : c^2 uv).

    A point on a side line maps to the opposite vertex.
    """
    label = _vertex_at(t, x)
    if label is not None:
        raise AmbiguousVertexError(f"the conjugate of vertex {label} is the whole opposite side")
    a, b, c = t.sides
    u, v, w = t.barycentric(x)
    d = _side_distances(t, x)
    tol = EPS_LINE * t.scale
    u, v, w = (0.0 if abs(d[i]) <= tol else (u, v, w)[i] for i in range(3))
    p = (a * a * v * w, b * b * w * u, c * c * u * v)
    mag = sum(abs(q) for q in p)
    if abs(sum(p)) <= EPS_INFINITY * mag:
        raise OnCircumcircleError("conjugate of a circumcircle point lies at infinity")
    return t.from_barycentric(*p)


def _sign(r: float) -> int:
    if abs(r) < EPS_ZERO:
        return 0
    return 1 if r > 0 else -1


def classify_conjugacy(t: Triangle, x: Point2, y: Point2) -> ConjugacyType:
    """Conjugacy type of the pair from the sign pattern of the cross-terms.

    Boundary pairs matching two patterns resolve in the order I, II, III.
    """
    terms = list(cross_terms(t, x, y))
    if any(abs(z.imag) > EPS_IM * (1.0 + abs(z)) for z in terms):
        return NOT_CONJUGATE
    signs = [_sign(z.real) for z in terms]
    if signs.count(0) > 1:
        raise DegenerateInputError("more than one cross-term vanishes")
    if all(s >= 0 for s in signs):
        return TYPE_I
    pos = [i for i, s in enumerate(signs) if s > 0]
    neg = [i for i, s in enumerate(signs) if s < 0]
    if len(pos) == 1:
        return ConjugacyType("II", LABELS[pos[0]])
    if len(neg) == 1:
        return ConjugacyType("III", LABELS[neg[0]])
    # Unreachable for real terms summing to 1.
    raise DegenerateInputError(f"unexpected cross-term sign pattern {signs}")


def _side_line_detail(t: Triangle, i: int, p: Point2) -> str:
    names = LABELS[(i + 1) % 3], LABELS[(i + 2) % 3]
    P, Q = t.vertex(names[0]), t.vertex(names[1])
    d = Q - P
    s = d.dot(p - P) / d.dot(d)
    side = names[0] + names[1]
    if s <= 0.0:
        return f"line {side} beyond {names[0]}"
    if s >= 1.0:
        return f"line {side} beyond {names[1]}"
    return f"segment {side}"


def classify_region(t: Triangle, x: Point2, tol: float = 1e-9) -> RegionLabel:
    """Region of x: inside the circumcircle the sums angle + pedal angle are
    compared with pi; outside, each angle is compared with its pedal angle."""
    label = _vertex_at(t, x)
    if label is not None:
        return RegionLabel("vertex", vertex=label)
    k = t.circumcircle
    power = k.power(x)
    if abs(power) <= EPS_CIRCLE * k.radius**2:
        return RegionLabel("on_circumcircle")
    for i, d in enumerate(_side_distances(t, x)):
        if abs(d) <= EPS_LINE * t.scale:
            return RegionLabel("side_line", detail=_side_line_detail(t, i, x))

    base = t.angles
    ped = tuple(pedal_of(t, x).angles)
    if power < 0:
        sums = [base[i] + ped[i] for i in range(3)]
        for i, s in enumerate(sums):
            if abs(s - math.pi) <= tol:
                return RegionLabel("side_line", detail=_side_line_detail(t, i, x))
        over = [i for i, s in enumerate(sums) if s > math.pi]
        if not over:
            return RegionLabel("sigma")
        return RegionLabel("sigma13", vertex=LABELS[over[0]])

    diffs = [ped[i] - base[i] for i in range(3)]
    for i, d in enumerate(diffs):
        if abs(d) <= tol:
            return RegionLabel("side_line", detail=_side_line_detail(t, i, x))
    up = [i for i, d in enumerate(diffs) if d > 0]
    down = [i for i, d in enumerate(diffs) if d < 0]
    if len(up) == 1:
        return RegionLabel("sigma12", vertex=LABELS[up[0]])
    return RegionLabel("sigma13prime", vertex=LABELS[down[0]])


def signed_form(t: Triangle, x: Point2, y: Point2, signs=(1, 1, 1)) -> float:
    """sA*a*AX*AY + sB*b*BX*BY + sC*c*CX*CY."""
    total = 0.0
    for s, side, v in zip(signs, t.sides, t.vertices):
        total += s * side * dist(v, x) * dist(v, y)
    return total


@dataclass(frozen=True)
class FormCheck:
    lhs: float
    rhs: float
    slack: float


def _signs_for(vertex: str) -> tuple[int, int, int]:
    return tuple(-1 if lab == vertex else 1 for lab in LABELS)


def hayashi_check(t: Triangle, x: Point2, y: Point2) -> FormCheck:
    """lhs = a AX AY + b BX BY + c CX CY against rhs = abc; slack >= 0 always,
    with equality exactly for type I conjugate pairs."""
    a, b, c = t.sides
    lhs = signed_form(t, x, y)
    rhs = a * b * c
    return FormCheck(lhs, rhs, lhs - rhs)


def characterization_check(t: Triangle, x: Point2, y: Point2, kind: str, vertex: str = "A") -> FormCheck:
    """Evaluate the distance-product form that characterizes conjugacy ``kind``.

    I:   a AX AY + b BX BY + c CX CY      vs  abc   (lhs >= rhs always)
    II:  same, negated at ``vertex``      vs -abc   (lhs >= rhs always)
    III: same, negated at ``vertex``      vs  abc   (equality only for conjugates)
    """
    if kind == "I":
        return hayashi_check(t, x, y)
    a, b, c = t.sides
    abc = a * b * c
    lhs = signed_form(t, x, y, _signs_for(vertex))
    if kind == "II":
        return FormCheck(lhs, -abc, lhs + abc)
    if kind == "III":
        return FormCheck(lhs, abc, lhs - abc)
    raise ValueError(f"unknown conjugacy type {kind!r}")
