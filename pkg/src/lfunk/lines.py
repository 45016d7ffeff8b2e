"""Travel time between a point and a line, with the point of the line realizing it.

Every formula works in a frame rotated so that the line is horizontal,
x2' = h, where h is the signed distance of the line from the origin.  The wind
is radial, so distances are unchanged by the rotation.
"""

from __future__ import annotations

import math
from typing import Literal, NamedTuple, Sequence

import numpy as np
from scipy import optimize

from .distance import distance, rotate, travel_time_array
from .errors import LineOutsideDomain, RealizerOutsideDomain
from .metric import DEFAULT_TOL, MetricContext, Point, Tolerances

__all__ = [
    "Line",
    "LineDistanceResult",
    "line_from_slope",
    "line_through",
    "rotate_line",
    "dist_line_to_point",
    "dist_point_to_line",
    "grid_line_distance",
]

HALF_PI = 0.5 * math.pi


class Line(NamedTuple):
    """Line of inclination ``theta`` in (-pi/2, pi/2].

    For theta != pi/2 it is y = tan(theta) x + offset; for theta == pi/2 it is
    the vertical line x = offset.
    """

    theta: float
    offset: float

    @property
    def vertical(self) -> bool:
        return self.theta == HALF_PI

    @property
    def height(self) -> float:
        """Signed distance from the origin, measured along the rotated x2 axis."""
        if self.vertical:
            return -self.offset
        return self.offset * math.cos(self.theta)

    @property
    def direction(self) -> tuple[float, float]:
        return (math.cos(self.theta), math.sin(self.theta))

    def point_at(self, t: float) -> Point:
        """Point at signed arc position ``t`` from the foot of the perpendicular."""
        return Point(*rotate((t, self.height), self.theta))

    def residual(self, x: Sequence[float]) -> float:
        """Signed Euclidean distance of ``x`` from the line."""
        c, s = math.cos(self.theta), math.sin(self.theta)
        return -x[0] * s + x[1] * c - self.height


class LineDistanceResult(NamedTuple):
    travel_time: float
    exponent_r: float
    realizer: Point


def _normalize_theta(theta: float) -> float:
    theta = math.remainder(theta, math.pi)  # now in [-pi/2, pi/2]
    return HALF_PI if theta <= -HALF_PI else theta


def line_from_slope(m: float, c: float) -> Line:
    """The line y = m x + c."""
    if not (math.isfinite(m) and math.isfinite(c)):
        raise ValueError("slope and intercept must be finite")
    return Line(math.atan(m), float(c))


def line_through(point: Sequence[float], direction: Sequence[float]) -> Line:
    """Line through ``point`` with direction ``direction`` (any nonzero vector)."""
    if direction[0] == 0.0 and direction[1] == 0.0:
        raise ValueError("direction must be nonzero")
    theta = _normalize_theta(math.atan2(direction[1], direction[0]))
    if theta == HALF_PI:
        return Line(theta, float(point[0]))
    return Line(theta, point[1] - math.tan(theta) * point[0])


def rotate_line(s: Line, angle: float) -> Line:
    """Image of ``s`` under the rotation by ``angle`` about the origin."""
    foot = s.point_at(0.0)
    return line_through(rotate(foot, angle), rotate(s.direction, angle))


def _frame(ctx: MetricContext, s: Line, x: Sequence[float], tol: Tolerances):
    ctx.require_inside(x, "point", tol)
    h = s.height
    if ctx.lam * abs(h) > 1.0 - tol.domain_rel:
        raise LineOutsideDomain(
            f"line at distance {abs(h)!r} from the origin misses the domain of radius {ctx.domain_radius!r}"
        )
    c, sn = math.cos(s.theta), math.sin(s.theta)
    a_rot = x[0] * c + x[1] * sn
    b_rot = -x[0] * sn + x[1] * c
    return h, a_rot, b_rot


def _finish(ctx, s, excess, along, tol) -> LineDistanceResult:
    realizer = Point(*rotate((along, s.height), s.theta))
    if not ctx.contains(realizer, tol):
        raise RealizerOutsideDomain(
            f"the minimizing point ({realizer.x1!r}, {realizer.x2!r}) lies outside the domain"
        )
    if ctx.lam == 0.0:
        return LineDistanceResult(excess, 1.0, realizer)
    return LineDistanceResult(math.log1p(excess) / ctx.lam, 1.0 + excess, realizer)


def dist_line_to_point(
    ctx: MetricContext, s: Line, q: Sequence[float], tol: Tolerances = DEFAULT_TOL
) -> LineDistanceResult:
    """Shortest travel time from some point of ``s`` to ``q``.

    For lambda = 0 this is the Euclidean distance to the foot of the perpendicular.
    """
    h, a, b = _frame(ctx, s, q, tol)
    lam = ctx.lam
    if lam == 0.0:
        return _finish(ctx, s, abs(h - b), a, tol)
    # r - 1 with r = (1 - lam^2 h b + lam |h - b|) / (1 - lam^2 b^2)
    excess = (lam * lam * b * (b - h) + lam * abs(h - b)) / ((1.0 - lam * b) * (1.0 + lam * b))
    return _finish(ctx, s, excess, (1.0 + excess) * a, tol)


def dist_point_to_line(
    ctx: MetricContext, p: Sequence[float], s: Line, tol: Tolerances = DEFAULT_TOL
) -> LineDistanceResult:
    """Shortest travel time from ``p`` to some point of ``s``."""
    h, a, b = _frame(ctx, s, p, tol)
    lam = ctx.lam
    if lam == 0.0:
        return _finish(ctx, s, abs(h - b), a, tol)
    # r - 1 with r = (1 - lam^2 h b + lam |h - b|) / (1 - lam^2 h^2)
    excess = (lam * lam * h * (h - b) + lam * abs(h - b)) / ((1.0 - lam * h) * (1.0 + lam * h))
    return _finish(ctx, s, excess, a / (1.0 + excess), tol)


def grid_line_distance(
    ctx: MetricContext,
    s: Line,
    x: Sequence[float],
    direction: Literal["to-point", "to-line"],
    samples: int = 100_000,
    tol: Tolerances = DEFAULT_TOL,
) -> LineDistanceResult:
    """Brute-force minimum of the point-to-point travel time over the chord of ``s``.

    ``direction="to-point"`` minimizes d(P', x) (line to point), ``"to-line"``
    minimizes d(x, P').  The chord is sampled uniformly and the best sample is
    refined by golden-section search between its neighbours.
    """
    if ctx.lam <= 0.0:
        raise ValueError("the grid oracle needs lambda > 0")
    h, _, _ = _frame(ctx, s, x, tol)
    lam = ctx.lam
    rad = (1.0 - 1e-9) * ctx.domain_radius
    half = math.sqrt(max(rad * rad - h * h, 0.0))
    ts = np.linspace(-half, half, samples)
    c, sn = math.cos(s.theta), math.sin(s.theta)
    px, py = ts * c - h * sn, ts * sn + h * c
    if direction == "to-point":
        times = travel_time_array(lam, px, py, x[0], x[1])
    elif direction == "to-line":
        times = travel_time_array(lam, x[0], x[1], px, py)
    else:
        raise ValueError(f"unknown direction {direction!r}")

    def along(t: float) -> float:
        pt = s.point_at(t)
        ends = (pt, x) if direction == "to-point" else (x, pt)
        return distance(ctx, *ends, tol).travel_time

    i = int(np.argmin(times))
    lo, hi = ts[max(i - 1, 0)], ts[min(i + 1, samples - 1)]
    if 0 < i < samples - 1 and times[i] < times[i - 1] and times[i] < times[i + 1]:
        res = optimize.minimize_scalar(along, bracket=(lo, ts[i], hi), method="golden", tol=1e-12)
    else:
        res = optimize.minimize_scalar(along, bounds=(lo, hi), method="bounded", options={"xatol": 1e-12})
    t_best = float(res.x) if res.fun <= times[i] else float(ts[i])
    best = min(float(res.fun), float(times[i]))
    return LineDistanceResult(best, math.exp(lam * best), s.point_at(t_best))
