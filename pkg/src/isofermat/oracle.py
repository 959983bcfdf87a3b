"""Brute-force minimizers used only to cross-check the closed-form solvers.

Nothing here knows about conjugate points, pedal triangles or circumcircle
arcs; the solvers never call into this module.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .geometry import Point2, Triangle


@dataclass(frozen=True)
class OracleResult:
    point: Point2
    value: float
    iterations: int
    converged: bool


def distance_sum(sites: Sequence[Point2], weights: Sequence[float]) -> Callable:
    """f(x, y) = sum w_i |(x, y) - site_i|, for scalars or numpy arrays; weights may be negative."""
    sx = [p.x for p in sites]
    sy = [p.y for p in sites]

    def f(x, y):
        total = 0.0
        for wi, px, py in zip(weights, sx, sy):
            total = total + wi * np.hypot(x - px, y - py)
        return total

    return f


def _diameter(pts: Sequence[Point2]) -> float:
    return max(math.dist(tuple(p), tuple(q)) for p in pts for q in pts)


def weiszfeld(
    t: Triangle, w: Sequence[float], tol: float = 1e-12, max_iter: int = 200_000, vertex_rtol: float = 1e-9
) -> OracleResult:
    """Weighted Weiszfeld iteration with an explicit vertex optimality test.

    A vertex is accepted when the pull of the other two sites does not exceed
    its own weight by more than ``vertex_rtol`` (relative). Without that slack,
    instances sitting exactly on the vertex threshold converge only sublinearly.
    """
    pts = [tuple(p) for p in t.vertices]
    w = [float(x) for x in w]
    diam = _diameter(t.vertices)

    def F(p):
        return sum(wi * math.dist(p, q) for wi, q in zip(w, pts))

    def vertex_gradient(i):
        # Gradient of the other terms at vertex i.
        gx = gy = 0.0
        for j, q in enumerate(pts):
            if j != i:
                d = math.dist(pts[i], q)
                gx += w[j] * (pts[i][0] - q[0]) / d
                gy += w[j] * (pts[i][1] - q[1]) / d
        return gx, gy

    for i in range(3):
        if math.hypot(*vertex_gradient(i)) <= w[i] * (1.0 + vertex_rtol):
            p = pts[i]
            return OracleResult(Point2(*p), F(p), 0, True)

    sw = sum(w)
    p = (sum(wi * q[0] for wi, q in zip(w, pts)) / sw, sum(wi * q[1] for wi, q in zip(w, pts)) / sw)
    fp = F(p)
    for it in range(1, max_iter + 1):
        near = [i for i, q in enumerate(pts) if math.dist(p, q) <= tol * diam]
        if near:
            i = near[0]
            gx, gy = vertex_gradient(i)
            g = math.hypot(gx, gy)
            if g <= w[i] * (1.0 + vertex_rtol):
                return OracleResult(Point2(*pts[i]), F(pts[i]), it, True)
            h = 1e-6 * diam
            p = (pts[i][0] - h * gx / g, pts[i][1] - h * gy / g)
            fp = F(p)
            continue
        nx = ny = den = 0.0
        for wi, q in zip(w, pts):
            d = math.dist(p, q)
            nx += wi * q[0] / d
            ny += wi * q[1] / d
            den += wi / d
        new = (nx / den, ny / den)
        f_new = F(new)
        assert f_new <= fp * (1.0 + 1e-14) + 1e-300, "Weiszfeld step increased the objective"
        step = math.dist(new, p)
        p, fp = new, f_new
        if step < tol * diam:
            return OracleResult(Point2(*p), fp, it, True)
    return OracleResult(Point2(*p), fp, max_iter, False)


_POLL = [(1, 0), (-1, 0), (0, 1), (0, -1), (1, 1), (1, -1), (-1, 1), (-1, -1)]


def _pattern_search(f, x, y, step, min_step, max_iter):
    fx = float(f(x, y))
    it = 0
    while step >= min_step and it < max_iter:
        it += 1
        best = None
        for dx, dy in _POLL:
            cx, cy = x + dx * step, y + dy * step
            fc = float(f(cx, cy))
            if fc < fx and (best is None or fc < best[0]):
                best = (fc, cx, cy)
        if best is None:
            step *= 0.5
        else:
            fx, x, y = best
    return x, y, fx, it


def grid_refine(
    objective: Callable,
    bbox: tuple[float, float, float, float],
    grid_n: int = 400,
    refine_iters: int = 20_000,
    seeds: Sequence[Point2] = (),
    min_step: float = 1e-10,
) -> OracleResult:
    """Global minimum of ``objective(x, y)`` by grid scan plus pattern search.

    Refinement starts from the best grid node and from every point in
    ``seeds`` (pass the triangle's vertices). ``min_step`` is relative to the
    box width.
    """
    x0, y0, x1, y1 = bbox
    xs = np.linspace(x0, x1, grid_n)
    ys = np.linspace(y0, y1, grid_n)
    X, Y = np.meshgrid(xs, ys)
    Z = objective(X, Y)
    k = int(np.argmin(Z))
    gx, gy, gz = float(X.flat[k]), float(Y.flat[k]), float(Z.flat[k])
    cell = max(xs[1] - xs[0], ys[1] - ys[0])
    width = max(x1 - x0, y1 - y0)

    candidates = []
    total_it = 0
    for sx, sy in [(gx, gy)] + [(p.x, p.y) for p in seeds]:
        rx, ry, rf, it = _pattern_search(objective, sx, sy, cell, min_step * width, refine_iters)
        total_it += it
        candidates.append((rf, rx, ry))
    rf, rx, ry = min(candidates)
    assert rf <= gz
    for p in seeds:
        assert rf <= float(objective(p.x, p.y))
    return OracleResult(Point2(float(rx), float(ry)), float(rf), total_it, True)


def padded_bbox(t: Triangle, pad: float = 3.0) -> tuple[float, float, float, float]:
    xs = [p.x for p in t.vertices]
    ys = [p.y for p in t.vertices]
    d = pad * _diameter(t.vertices)
    return (min(xs) - d, min(ys) - d, max(xs) + d, max(ys) + d)
