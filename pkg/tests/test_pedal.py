import math

import pytest

from conftest import equilateral, random_triangle, sample_region, tri345
from isofermat.errors import AtVertexError, IdenticalAnglesError, OnCircumcircleError
from isofermat.geometry import AngleTriple, Point2, dist, extended_angle, invert, std_angle
from isofermat.isogonal import classify_region, isogonal_conjugate
from isofermat.pedal import (
    conjugate_view_angles,
    locate_exterior,
    locate_interior,
    pedal_of,
)


def random_inside(rng, t, frac=0.9):
    k = t.circumcircle
    while True:
        r = k.radius * frac * math.sqrt(rng.random())
        th = rng.uniform(0, 2 * math.pi)
        m = k.center + Point2(math.cos(th), math.sin(th)) * r
        if min(dist(m, v) for v in t.vertices) > 0.02 * t.scale:
            return m


def random_outside(rng, t, lo=1.1, hi=3.0):
    k = t.circumcircle
    r = k.radius * rng.uniform(lo, hi)
    th = rng.uniform(0, 2 * math.pi)
    return k.center + Point2(math.cos(th), math.sin(th)) * r


def test_pedal_of_circumcenter_is_medial():
    t = tri345()
    pd = pedal_of(t, t.circumcircle.center)
    mids = [(t.B + t.C) * 0.5, (t.C + t.A) * 0.5, (t.A + t.B) * 0.5]
    for f, m in zip(pd.feet, mids):
        assert dist(f, m) < 1e-14
    assert tuple(pd.angles) == pytest.approx(t.angles, abs=1e-14)
    assert pd.R1 == pytest.approx(t.circumcircle.radius / 2, rel=1e-14)


def test_pedal_orientation_examples():
    e = equilateral()
    pd = pedal_of(e, e.incenter)
    assert tuple(pd.angles) == pytest.approx((math.pi / 3,) * 3, abs=1e-14)
    assert pd.orientation == e.orientation
    assert pedal_of(e, Point2(3, 0)).orientation == -e.orientation


def test_pedal_errors():
    t = tri345()
    with pytest.raises(OnCircumcircleError):
        pedal_of(t, t.circumcircle.point_at(2.0))
    with pytest.raises(AtVertexError):
        pedal_of(t, t.C)


def test_pedal_side_formulas(rng):
    for _ in range(1000):
        t = random_triangle(rng)
        m = random_inside(rng, t, 0.99) if rng.random() < 0.5 else random_outside(rng, t, 1.01, 4)
        pd = pedal_of(t, m)
        a, b, c = t.sides
        R = t.circumcircle.radius
        A1, B1, C1 = pd.feet
        assert dist(B1, C1) == pytest.approx(a / (2 * R) * dist(t.A, m), rel=1e-9)
        assert dist(C1, A1) == pytest.approx(b / (2 * R) * dist(t.B, m), rel=1e-9)
        assert dist(A1, B1) == pytest.approx(c / (2 * R) * dist(t.C, m), rel=1e-9)
        assert pd.R1 == pytest.approx(a * dist(t.A, m) / (4 * R * math.sin(pd.angles.a1)), rel=1e-9)
        inside = t.circumcircle.power(m) < 0
        assert (pd.orientation == t.orientation) == inside


def test_inversion_image_triangle_similar_to_pedal(rng):
    # Inverting A, B, C about m gives sides proportional to a*AM : b*BM : c*CM.
    for _ in range(200):
        t = random_triangle(rng)
        m = random_inside(rng, t) if rng.random() < 0.5 else random_outside(rng, t)
        img = [invert(m, 0.7, v) for v in t.vertices]
        a, b, c = t.sides
        ratios = [
            dist(img[1], img[2]) / (a * dist(t.A, m)),
            dist(img[2], img[0]) / (b * dist(t.B, m)),
            dist(img[0], img[1]) / (c * dist(t.C, m)),
        ]
        assert max(ratios) == pytest.approx(min(ratios), rel=1e-9)


def test_sum_bound_and_angle_relation_inside(rng):
    for _ in range(1000):
        t = random_triangle(rng)
        m = random_inside(rng, t, 0.99)
        if min(abs(u) for u in t.barycentric(m)) < 1e-6:
            continue
        ped = pedal_of(t, m).angles
        sums = [t.angles[i] + ped[i] for i in range(3)]
        assert sum(s >= math.pi for s in sums) <= 1
        A, B, C = t.vertices
        seen = (extended_angle(m, B, C, A), extended_angle(m, C, A, B), extended_angle(m, A, B, C))
        assert seen == pytest.approx(sums, abs=1e-7)


def test_angle_relation_outside(rng):
    for _ in range(1000):
        t = random_triangle(rng)
        m = random_outside(rng, t, 1.01, 4)
        ped = pedal_of(t, m).angles
        A, B, C = t.vertices
        assert std_angle(m, B, C) == pytest.approx(abs(ped.a1 - t.angles[0]), abs=1e-7)
        assert std_angle(m, C, A) == pytest.approx(abs(ped.b1 - t.angles[1]), abs=1e-7)


def test_locate_interior_examples():
    t = tri345()
    o = locate_interior(t, AngleTriple(*t.angles))
    assert dist(o, t.circumcircle.center) < 1e-12 * t.scale
    e = equilateral()
    c = locate_interior(e, AngleTriple(math.pi / 3, math.pi / 3, math.pi / 3))
    assert dist(c, e.centroid) < 1e-12


def test_locate_interior_round_trip(rng):
    for _ in range(500):
        t = random_triangle(rng)
        m0 = random_inside(rng, t)
        m = locate_interior(t, pedal_of(t, m0).angles)
        assert dist(m, m0) <= 1e-8 * t.circumcircle.radius
        assert pedal_of(t, m).angles.isclose(pedal_of(t, m0).angles, 1e-9)


def test_locate_on_side_segment():
    # Target with alpha + a1 == pi puts the point on segment BC.
    t = tri345()
    al, be, ga = t.angles
    a1 = math.pi - al
    target = AngleTriple(a1, 0.6 * al, 0.4 * al)
    m = locate_interior(t, target)
    assert str(classify_region(t, m)) == "side_line [segment BC]"
    assert pedal_of(t, m).angles.isclose(target, 1e-9)


def test_locate_exterior_round_trip(rng):
    for _ in range(500):
        t = random_triangle(rng)
        n0 = random_outside(rng, t)
        target = pedal_of(t, n0).angles
        n = locate_exterior(t, target)
        assert dist(n, n0) <= 1e-7 * t.circumcircle.radius
        k = t.circumcircle
        m = locate_interior(t, target)
        assert dist(k.center, m) * dist(k.center, n) == pytest.approx(k.radius**2, rel=1e-9)
        # Same ray from the center.
        assert (m - k.center).cross(n - k.center) == pytest.approx(0.0, abs=1e-9 * k.radius**2)
        assert (m - k.center).dot(n - k.center) > 0
        pd = pedal_of(t, n)
        assert pd.angles.isclose(target, 1e-7)
        assert pd.orientation == -t.orientation


def test_locate_exterior_identical_angles():
    t = tri345()
    with pytest.raises(IdenticalAnglesError):
        locate_exterior(t, AngleTriple(*t.angles))


def test_conjugate_view_angles_examples():
    e = equilateral()
    v = conjugate_view_angles(e, AngleTriple(math.pi / 3, math.pi / 3, math.pi / 3))
    assert v == pytest.approx((2 * math.pi / 3,) * 3)
    t = tri345()
    v = conjugate_view_angles(t, AngleTriple(*t.angles))
    assert v == pytest.approx(tuple(math.pi - x for x in t.angles))


def test_conjugate_view_angles_match_conjugate_point(rng):
    for _ in range(300):
        t = random_triangle(rng, min_angle=0.15)
        m = sample_region(rng, t, "sigma")
        target = pedal_of(t, m).angles
        n = isogonal_conjugate(t, m)
        A, B, C = t.vertices
        seen = (extended_angle(n, B, C, A), extended_angle(n, C, A, B), extended_angle(n, A, B, C))
        assert seen == pytest.approx(conjugate_view_angles(t, target), abs=1e-7)
