"""Funk circles: points at a fixed travel time from or to a center.

Type 1 is the set reached from P in time rho, type 2 the set from which P is
reached in time rho.  Both are Euclidean circles, the second possibly cut by
the domain boundary.
"""

from __future__ import annotations

import math
from typing import NamedTuple, Sequence

from .metric import DEFAULT_TOL, MetricContext, Point, Tolerances

__all__ = ["EuclideanCircle", "circle_type1", "circle_type2", "sample_circle"]


class EuclideanCircle(NamedTuple):
    center: Point
    radius: float
    # only the arc inside the domain belongs to the locus
    clipped: bool = False
    # lambda == 0: a plain Euclidean circle about the given center
    euclidean: bool = False


def _validate(ctx: MetricContext, center, rho: float, tol: Tolerances) -> None:
    ctx.require_inside(center, "center", tol)
    if not rho >= 0.0:
        raise ValueError(f"radius time must be >= 0, got {rho!r}")


def circle_type1(
    ctx: MetricContext, center: Sequence[float], rho: float, tol: Tolerances = DEFAULT_TOL
) -> EuclideanCircle:
    """Locus d(P, X) = rho: the circle about P/r of radius (r - 1)/(lambda r)."""
    _validate(ctx, center, rho, tol)
    a, b = float(center[0]), float(center[1])
    lam = ctx.lam
    if lam == 0.0:
        return EuclideanCircle(Point(a, b), float(rho), False, True)
    # (r - 1)/r = -expm1(-lambda rho) stays accurate for small lambda*rho
    shrink = math.exp(-lam * rho)
    return EuclideanCircle(Point(a * shrink, b * shrink), -math.expm1(-lam * rho) / lam)


def circle_type2(
    ctx: MetricContext, center: Sequence[float], rho: float, tol: Tolerances = DEFAULT_TOL
) -> EuclideanCircle:
    """Locus d(X, P) = rho: the part inside the domain of the circle about rP of radius (r - 1)/lambda."""
    _validate(ctx, center, rho, tol)
    a, b = float(center[0]), float(center[1])
    lam = ctx.lam
    if lam == 0.0:
        return EuclideanCircle(Point(a, b), float(rho), False, True)
    r = math.exp(lam * rho)
    radius = math.expm1(lam * rho) / lam
    reach = r * math.hypot(a, b) + radius
    clipped = lam * reach >= 1.0 - tol.domain_rel
    return EuclideanCircle(Point(a * r, b * r), radius, clipped)


def sample_circle(
    ctx: MetricContext,
    circle: EuclideanCircle,
    n: int,
    in_domain_only: bool = True,
    tol: Tolerances = DEFAULT_TOL,
) -> list[Point]:
    """``n`` points at angles 2*pi*k/n, k = 0..n-1, optionally keeping only those inside the domain."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    (cx, cy), rad = circle.center, circle.radius
    out = []
    for k in range(n):
        ang = 2.0 * math.pi * k / n
        x = Point(cx + rad * math.cos(ang), cy + rad * math.sin(ang))
        if in_domain_only and not ctx.contains(x, tol):
            continue
        out.append(x)
    return out
