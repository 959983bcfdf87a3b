"""Closed-form weighted Fermat points of a triangle.

Positive weights (lam, mu, nu) on A, B, C: the minimizer is the isogonal
conjugate of the interior point whose pedal triangle is similar to the
triangle with sides lam, mu, nu, unless that point leaves the triangle, in
which case a vertex wins.

One negative weight: the minimizer is the isogonal conjugate of the
exterior point with the same pedal angles, a whole circumcircle arc, or one
of the two other vertices.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

from .errors import GeometryError, NotATriangleError
from .geometry import EPS_LINE, LABELS, AngleTriple, Circle, Point2, Triangle, dist, orient
from .isogonal import isogonal_conjugate
from .pedal import locate_exterior, locate_interior, pedal_of

CASE_TOL = 1e-9
WEIGHT_TOL = 1e-12


@dataclass(frozen=True)
class Weights:
    lam: float
    mu: float
    nu: float

    def __post_init__(self) -> None:
        for v in self:
            if not (math.isfinite(v) and v > 0):
                raise GeometryError(f"weights must be finite and positive, got {tuple(self)}")

    def __iter__(self):
        yield self.lam
        yield self.mu
        yield self.nu

    def __getitem__(self, i: int) -> float:
        return (self.lam, self.mu, self.nu)[i]

    def rotated(self, k: int) -> Weights:
        v = tuple(self)
        return Weights(*(v[(i + k) % 3] for i in range(3)))

    def scaled(self, s: float) -> Weights:
        return Weights(self.lam * s, self.mu * s, self.nu * s)


@dataclass
class SolveReport:
    case_taken: str
    weight_angles: Optional[AngleTriple] = None
    kappa: Optional[float] = None
    notes: list[str] = field(default_factory=list)


@dataclass
class FermatSolution:
    """Tagged solver result.

    kind: "interior" (point, witness, R1), "vertex" (vertices has one label),
    "tie" (two labels), "arc" (circle plus the arc's endpoint labels) or
    "rejected" (reason).
    """

    kind: str
    value: Optional[float]
    report: SolveReport
    point: Optional[Point2] = None
    witness: Optional[Point2] = None
    R1: Optional[float] = None
    vertices: tuple[str, ...] = ()
    circle: Optional[Circle] = None
    reason: Optional[str] = None

    def minimizers(self, t: Triangle) -> list[Point2]:
        """Representative minimizers: the point, the vertex/vertices, or the arc endpoints."""
        if self.kind == "interior":
            return [self.point]
        return [t.vertex(v) for v in self.vertices]


def _dominant(w: Weights) -> Optional[int]:
    total = sum(w)
    for i, x in enumerate(w):
        if x >= (total - x) * (1.0 - WEIGHT_TOL):
            return i
    return None


def _kahan_area(p: float, q: float, r: float) -> float:
    a, b, c = sorted((p, q, r), reverse=True)
    prod = (a + (b + c)) * (c - (a - b)) * (c + (a - b)) * (a + (b - c))
    return 0.25 * math.sqrt(max(prod, 0.0))


def weight_angles(w: Weights) -> AngleTriple:
    """Angles of the triangle with sides lam, mu, nu; a1 is opposite lam."""
    i = _dominant(w)
    if i is not None:
        raise NotATriangleError(
            f"weight {LABELS[i]} = {w[i]} is not less than the sum of the others"
        )
    m = max(w)
    l, u, n = (x / m for x in w)
    K4 = 4.0 * _kahan_area(l, u, n)
    return AngleTriple(
        math.atan2(K4, u * u + n * n - l * l),
        math.atan2(K4, n * n + l * l - u * u),
        math.atan2(K4, l * l + u * u - n * n),
    )


def objective_positive(t: Triangle, w: Weights, y: Point2) -> float:
    return sum(wi * dist(v, y) for wi, v in zip(w, t.vertices))


def objective_mixed(t: Triangle, w: Weights, neg: str, y: Point2) -> float:
    k = LABELS.index(neg)
    return sum(
        (-wi if i == k else wi) * dist(v, y)
        for i, (wi, v) in enumerate(zip(w, t.vertices))
    )


def solve_positive(t: Triangle, w: Weights) -> FermatSolution:
    """Minimize lam*AY + mu*BY + nu*CY."""
    i = _dominant(w)
    if i is not None:
        v = LABELS[i]
        return FermatSolution(
            "vertex",
            objective_positive(t, w, t.vertices[i]),
            SolveReport("dominant", notes=[f"weight at {v} >= sum of the other two"]),
            vertices=(v,),
        )

    ang = weight_angles(w)
    kappa = w.lam / math.sin(ang.a1)
    base = t.angles
    sums = [base[j] + ang[j] for j in range(3)]
    x = locate_interior(t, ang)

    for j, s in enumerate(sums):
        if abs(s - math.pi) <= CASE_TOL:
            return FermatSolution(
                "vertex",
                objective_positive(t, w, t.vertices[j]),
                SolveReport("side", ang, kappa, [f"witness on side opposite {LABELS[j]}"]),
                witness=x,
                vertices=(LABELS[j],),
            )
    for j, s in enumerate(sums):
        if s > math.pi:
            return FermatSolution(
                "vertex",
                objective_positive(t, w, t.vertices[j]),
                SolveReport("exterior", ang, kappa, [f"witness beyond side opposite {LABELS[j]}"]),
                witness=x,
                vertices=(LABELS[j],),
            )

    y = isogonal_conjugate(t, x)
    R1 = pedal_of(t, x).R1
    return FermatSolution(
        "interior",
        kappa * t.area / R1,
        SolveReport("interior", ang, kappa),
        point=y,
        witness=x,
        R1=R1,
    )


def _map_label(label: str, k: int) -> str:
    return LABELS[(LABELS.index(label) + k) % 3]


def solve_mixed(t: Triangle, w: Weights, neg: str = "A") -> FermatSolution:
    """Minimize the weighted distance sum with the weight at ``neg`` negated.

    Internally relabels so that ``neg`` is A; labels in the result refer to
    the caller's triangle.
    """
    k = LABELS.index(neg)
    tr, wr = t.rotated(k), w.rotated(k)
    try:
        ang = weight_angles(wr)
    except NotATriangleError as exc:
        return FermatSolution("rejected", None, SolveReport("rejected"), reason=str(exc))

    kappa = wr.lam / math.sin(ang.a1)
    alpha, beta, gamma = tr.angles
    others = (_map_label("B", k), _map_label("C", k))

    if abs(ang.b1 - beta) <= CASE_TOL and abs(ang.g1 - gamma) <= CASE_TOL:
        return FermatSolution(
            "arc",
            0.0,
            SolveReport("arc", ang, kappa, [f"every point of arc {''.join(others)} away from {neg}"]),
            vertices=others,
            circle=t.circumcircle,
        )

    if ang.b1 < beta - CASE_TOL and ang.g1 < gamma - CASE_TOL:
        p = locate_exterior(tr, ang)
        q = isogonal_conjugate(tr, p)
        R1 = pedal_of(tr, p).R1
        return FermatSolution(
            "interior",
            -kappa * tr.area / R1,
            SolveReport("sigma12", ang, kappa),
            point=q,
            witness=p,
            R1=R1,
        )

    d1 = (math.sin(ang.b1) - math.sin(ang.g1)) / math.sin(ang.a1)
    d = (math.sin(beta) - math.sin(gamma)) / math.sin(alpha)
    report = SolveReport("vertex", ang, kappa, [f"d1={d1!r} d={d!r}"])
    if abs(d1 - d) <= WEIGHT_TOL * (1.0 + abs(d)):
        y = tr.B
        report.case_taken = "vertex-tie"
        return FermatSolution("tie", objective_mixed(t, w, neg, y), report, vertices=others)
    label = others[0] if d1 > d else others[1]
    return FermatSolution(
        "vertex", objective_mixed(t, w, neg, t.vertex(label)), report, vertices=(label,)
    )


def vertex_criterion_equiv(angles: AngleTriple, base: AngleTriple) -> tuple[bool, bool]:
    """Decide 'B beats C' by the sine ratio and by the half-angle tangent form."""
    a1, b1, g1 = angles
    a, b, g = base
    sine_form = (math.sin(b1) - math.sin(g1)) / math.sin(a1) > (math.sin(b) - math.sin(g)) / math.sin(a)
    tan_form = math.tan(b1 / 2) / math.tan(g1 / 2) > math.tan(b / 2) / math.tan(g / 2)
    return sine_form, tan_form


def halfplane_invariant(t: Triangle, neg: str, y: Point2) -> bool:
    """True iff y is in the closed half-plane of the opposite side line that
    does not contain the ``neg`` vertex."""
    k = LABELS.index(neg)
    A, B, C = t.rotated(k).vertices
    d = orient(B, C, y) / dist(B, C)
    if abs(d) <= EPS_LINE * t.scale:
        return True
    return (d > 0) != (orient(B, C, A) > 0)
