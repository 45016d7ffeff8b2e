"""Closed-form travel time between two points of the navigation disk.

Shortest paths are straight chords, so the travel time from P to Q is the
integral of F along the segment.  Writing the integrand's denominator as
-lambda^2 |Q-P|^2 (t - t1)(t - t2) gives

    d(P, Q) = (1/lambda) ln(t2 / (t2 - 1)),        t2 > 1,

where t2 is the larger root.  ``exponent_r = exp(lambda d)`` is the quantity
in which level sets of d become Euclidean circles.
"""

from __future__ import annotations

import math
from typing import NamedTuple, Optional, Sequence

import numpy as np

from .errors import NotApplicable
from .metric import DEFAULT_TOL, MetricContext, Tolerances

__all__ = [
    "DistanceResult",
    "distance",
    "distance_quotient",
    "travel_time_array",
    "exponent_for_distance",
    "check_theorem_5_1",
    "rotate",
    "is_rotation_invariant_witness",
]


class DistanceResult(NamedTuple):
    travel_time: float
    exponent_r: float
    # None when lambda == 0 or P == Q, where the chord factorization does not exist
    k: Optional[float]
    t2: Optional[float]


def _coincident(p, q, tol: Tolerances) -> bool:
    gap = math.hypot(q[0] - p[0], q[1] - p[1])
    scale = max(1.0, math.hypot(p[0], p[1]), math.hypot(q[0], q[1]))
    return gap <= tol.coincident * scale


def distance(
    ctx: MetricContext,
    p: Sequence[float],
    q: Sequence[float],
    tol: Tolerances = DEFAULT_TOL,
) -> DistanceResult:
    """Travel time from ``p`` to ``q`` along the optimal (straight) path."""
    ctx.require_inside(p, "from", tol)
    ctx.require_inside(q, "to", tol)
    lam = ctx.lam
    if lam == 0.0:
        return DistanceResult(math.hypot(q[0] - p[0], q[1] - p[1]), 1.0, None, None)
    if _coincident(p, q, tol):
        return DistanceResult(0.0, 1.0, 0.0, None)

    p1, p2 = float(p[0]), float(p[1])
    q1, q2 = float(q[0]), float(q[1])
    v1, v2 = q1 - p1, q2 - p2
    vv = v1 * v1 + v2 * v2
    pv = p1 * v1 + p2 * v2
    qv = q1 * v1 + q2 * v2
    k = vv * (1.0 - lam * lam * (p1 * p1 + p2 * p2)) + lam * lam * pv * pv
    sqk = math.sqrt(k)
    t2 = (sqk - lam * pv) / (lam * vv)

    # exponent_r - 1 = 1/(t2 - 1); t2 - 1 = (sqrt(k) - lam <Q, Q-P>) / (lam |Q-P|^2).
    # When <Q, Q-P> > 0 that difference cancels; use
    # sqrt(k) - lam<Q,Q-P> = |Q-P|^2 (1 - lam^2|Q|^2) / (sqrt(k) + lam<Q,Q-P>).
    if qv > 0.0:
        nq = math.hypot(q1, q2)
        excess = lam * (sqk + lam * qv) / ((1.0 - lam * nq) * (1.0 + lam * nq))
    else:
        excess = lam * vv / (sqk - lam * qv)
    return DistanceResult(math.log1p(excess) / lam, 1.0 + excess, k, t2)


def distance_quotient(
    ctx: MetricContext,
    p: Sequence[float],
    q: Sequence[float],
    tol: Tolerances = DEFAULT_TOL,
) -> float:
    """Travel time by the direct logarithm-of-a-quotient formula.

    Kept as a cross-check of :func:`distance`; it loses accuracy as q -> p and
    as q approaches the boundary.
    """
    ctx.require_inside(p, "from", tol)
    ctx.require_inside(q, "to", tol)
    lam = ctx.lam
    if lam == 0.0:
        return math.hypot(q[0] - p[0], q[1] - p[1])
    if _coincident(p, q, tol):
        return 0.0
    v1, v2 = q[0] - p[0], q[1] - p[1]
    vv = v1 * v1 + v2 * v2
    pv = p[0] * v1 + p[1] * v2
    qv = q[0] * v1 + q[1] * v2
    root = math.sqrt(lam * lam * pv * pv + (1.0 - lam * lam * (p[0] ** 2 + p[1] ** 2)) * vv)
    return math.log((root - lam * pv) / (root - lam * qv)) / lam


def travel_time_array(lam: float, p1, p2, q1, q2) -> np.ndarray:
    """Vectorized travel time for arrays of endpoints; no domain checks.

    Coincident endpoints give 0.  ``lam`` must be positive.
    """
    p1, p2, q1, q2 = np.broadcast_arrays(*(np.asarray(a, dtype=float) for a in (p1, p2, q1, q2)))
    v1, v2 = q1 - p1, q2 - p2
    vv = v1 * v1 + v2 * v2
    pv = p1 * v1 + p2 * v2
    qv = q1 * v1 + q2 * v2
    sqk = np.sqrt(vv * (1.0 - lam * lam * (p1 * p1 + p2 * p2)) + lam * lam * pv * pv)
    nq = np.hypot(q1, q2)
    with np.errstate(divide="ignore", invalid="ignore"):
        outward = lam * (sqk + lam * qv) / ((1.0 - lam * nq) * (1.0 + lam * nq))
        inward = lam * vv / (sqk - lam * qv)
    excess = np.where(qv > 0.0, outward, inward)
    return np.where(vv > 0.0, np.log1p(excess) / lam, 0.0)


def exponent_for_distance(ctx: MetricContext, d: float) -> float:
    """r = exp(lambda * d)."""
    if ctx.lam == 0.0:
        raise NotApplicable("the exponent form needs lambda > 0")
    if d < 0.0:
        raise ValueError(f"distance must be >= 0, got {d!r}")
    return math.exp(ctx.lam * d)


def check_theorem_5_1(
    ctx: MetricContext,
    p: Sequence[float],
    q: Sequence[float],
    tol: Tolerances = DEFAULT_TOL,
) -> float:
    """Residual of |P/r - Q| = (r - 1)/(lambda r) with r = exp(lambda d(P, Q))."""
    if ctx.lam == 0.0:
        raise NotApplicable("the circle characterization needs lambda > 0")
    r = distance(ctx, p, q, tol).exponent_r
    lhs = math.hypot(p[0] / r - q[0], p[1] / r - q[1])
    return lhs - (r - 1.0) / (ctx.lam * r)


def rotate(x: Sequence[float], theta: float) -> tuple[float, float]:
    """Rotate a point counter-clockwise by ``theta`` about the origin."""
    c, s = math.cos(theta), math.sin(theta)
    return (c * x[0] - s * x[1], s * x[0] + c * x[1])


def is_rotation_invariant_witness(
    ctx: MetricContext,
    p: Sequence[float],
    q: Sequence[float],
    theta: float,
    tol: Tolerances = DEFAULT_TOL,
) -> tuple[float, float]:
    """Return (d(P, Q), d(RP, RQ)) for the rotation R by ``theta``."""
    d1 = distance(ctx, p, q, tol).travel_time
    if theta == 0.0:
        return d1, d1
    d2 = distance(ctx, rotate(p, theta), rotate(q, theta), tol).travel_time
    return d1, d2
