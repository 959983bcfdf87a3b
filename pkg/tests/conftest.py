import math
import random

import pytest

from isofermat.geometry import Point2, Triangle

SQRT3 = math.sqrt(3.0)


def equilateral():
    return Triangle.from_coords([(0, 0), (1, 0), (0.5, SQRT3 / 2)])


def right_isoceles():
    return Triangle.from_coords([(0, 0), (1, 0), (0, 1)])


def tri345():
    return Triangle.from_coords([(0, 0), (4, 0), (0, 3)])


def random_triangle(rng, min_angle=0.05, acute=False):
    while True:
        pts = [(rng.uniform(-1, 1), rng.uniform(-1, 1)) for _ in range(3)]
        try:
            t = Triangle.from_coords(pts)
        except ValueError:
            continue
        if min(t.angles) < min_angle:
            continue
        if acute and max(t.angles) >= math.pi / 2 - 0.05:
            continue
        return t


def region_by_signs(t, p):
    """Region from side-of-line signs and circumcircle membership only."""
    u = t.barycentric(p)
    neg = [i for i in range(3) if u[i] < 0]
    if not neg:
        return ("sigma", None)
    if len(neg) == 1:
        inside = t.circumcircle.power(p) < 0
        return ("sigma13" if inside else "sigma12", "ABC"[neg[0]])
    pos = next(i for i in range(3) if u[i] > 0)
    return ("sigma13prime", "ABC"[pos])


def _clear(t, p, margin):
    k = t.circumcircle
    if abs(k.power(p)) < margin * k.radius**2:
        return False
    return min(abs(x) for x in t.barycentric(p)) >= margin


def sample_region(rng, t, kind, vertex="A", margin=1e-3, box=4.0, tries=100_000):
    """Sample a point of the named region, away from the circle and side lines.

    Bounded regions are sampled constructively; unbounded ones by rejection
    from a box around the circumcircle. Membership is always re-checked with
    region_by_signs.
    """
    k = t.circumcircle
    want = (kind, None if kind == "sigma" else vertex)
    for _ in range(tries):
        if kind == "sigma":
            w = [rng.expovariate(1.0) for _ in range(3)]
            p = t.from_barycentric(*w)
        elif kind == "sigma13":
            # Between the chord opposite `vertex` and the far arc.
            i = "ABC".index(vertex)
            v = t.vertices
            P, Q, V = v[(i + 1) % 3], v[(i + 2) % 3], v[i]
            s = rng.random()
            chord = P + (Q - P) * s
            c = k.center
            th_p = math.atan2(P.y - c.y, P.x - c.x)
            th_q = math.atan2(Q.y - c.y, Q.x - c.x)
            th_v = math.atan2(V.y - c.y, V.x - c.x)
            span = (th_q - th_p) % (2 * math.pi)
            if (th_v - th_p) % (2 * math.pi) < span:
                span -= 2 * math.pi
            arc = k.point_at(th_p + span * s)
            p = chord + (arc - chord) * rng.random()
        else:
            p = k.center + Point2(rng.uniform(-box, box), rng.uniform(-box, box)) * k.radius
        if _clear(t, p, margin) and region_by_signs(t, p) == want:
            return p
    raise RuntimeError(f"could not sample region {kind}({vertex})")


def orthocenter(t):
    """Intersection of the altitudes from A and B, solved as a 2x2 system."""
    A, B, C = t.vertices
    # (H - A).(C - B) = 0, (H - B).(C - A) = 0
    a1, b1 = C.x - B.x, C.y - B.y
    a2, b2 = C.x - A.x, C.y - A.y
    r1 = a1 * A.x + b1 * A.y
    r2 = a2 * B.x + b2 * B.y
    det = a1 * b2 - a2 * b1
    return Point2((r1 * b2 - r2 * b1) / det, (a1 * r2 - a2 * r1) / det)


@pytest.fixture
def rng():
    return random.Random(20240601)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
