"""Numerical travel time along arbitrary polygonal paths.

Nothing here uses the closed-form distance: the integrals are taken directly
from the metric, so these routines serve as an independent check of
:mod:`lfunk.distance` and of the claim that straight chords are optimal.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import NamedTuple, Sequence

import numpy as np

from .errors import DomainError
from .metric import DEFAULT_TOL, MetricContext, Tolerances, funk_array

__all__ = [
    "Rule",
    "QuadratureSpec",
    "DEFAULT_QUAD",
    "Polyline",
    "segment_time",
    "polyline_time",
    "SearchResult",
    "local_min_search",
    "distance_to_segment",
]


class Rule(str, Enum):
    MIDPOINT = "midpoint"
    SIMPSON = "simpson"
    GAUSS5 = "gauss5"


@dataclass(frozen=True)
class QuadratureSpec:
    panels: int = 64
    rule: Rule = Rule.GAUSS5

    def __post_init__(self) -> None:
        if self.panels < 1:
            raise ValueError(f"panels must be >= 1, got {self.panels}")
        object.__setattr__(self, "rule", Rule(self.rule))


DEFAULT_QUAD = QuadratureSpec()


@lru_cache(maxsize=64)
def _nodes_weights(rule: Rule, panels: int) -> tuple[np.ndarray, np.ndarray]:
    """Composite nodes in [0, 1] and their weights."""
    if rule is Rule.MIDPOINT:
        ref_x, ref_w = np.array([0.5]), np.array([1.0])
    elif rule is Rule.SIMPSON:
        ref_x, ref_w = np.array([0.0, 0.5, 1.0]), np.array([1.0, 4.0, 1.0]) / 6.0
    else:
        x, w = np.polynomial.legendre.leggauss(5)
        ref_x, ref_w = 0.5 * (x + 1.0), 0.5 * w
    left = np.arange(panels)[:, None] / panels
    nodes = (left + ref_x[None, :] / panels).ravel()
    weights = np.broadcast_to(ref_w / panels, (panels, ref_x.size)).ravel()
    nodes.flags.writeable = False
    weights = np.array(weights)
    weights.flags.writeable = False
    return nodes, weights


class Polyline:
    """Ordered vertices of a piecewise-linear path."""

    def __init__(self, vertices: Sequence[Sequence[float]]):
        v = np.array(vertices, dtype=float)
        if v.ndim != 2 or v.shape[1] != 2 or v.shape[0] < 2:
            raise ValueError("a polyline needs at least two 2D vertices")
        steps = np.hypot(*np.diff(v, axis=0).T)
        if np.any(steps == 0.0) and not np.all(steps == 0.0):
            raise ValueError("consecutive vertices coincide in a non-degenerate polyline")
        self.vertices = v

    def __len__(self) -> int:
        return len(self.vertices)

    def __repr__(self) -> str:
        return f"Polyline({self.vertices.tolist()!r})"


def _check_inside(ctx: MetricContext, pts: np.ndarray, tol: Tolerances) -> None:
    if ctx.lam == 0.0:
        return
    norms = np.hypot(pts[:, 0], pts[:, 1])
    bad = np.flatnonzero(ctx.lam * norms > 1.0 - tol.domain_rel)
    if bad.size:
        x = pts[bad[0]]
        raise DomainError(
            f"vertex ({x[0]!r}, {x[1]!r}) is not inside the domain of radius {ctx.domain_radius!r}"
        )


def _segments_time(lam: float, starts: np.ndarray, ends: np.ndarray, quad: QuadratureSpec) -> np.ndarray:
    nodes, weights = _nodes_weights(quad.rule, quad.panels)
    d = ends - starts
    x1 = starts[:, 0:1] + nodes[None, :] * d[:, 0:1]
    x2 = starts[:, 1:2] + nodes[None, :] * d[:, 1:2]
    f = funk_array(lam, x1, x2, d[:, 0:1], d[:, 1:2])
    return f @ weights


def segment_time(
    ctx: MetricContext,
    p: Sequence[float],
    q: Sequence[float],
    quad: QuadratureSpec = DEFAULT_QUAD,
    tol: Tolerances = DEFAULT_TOL,
) -> float:
    """Integral of F(c(t), q - p) over the chord c(t) = p + t (q - p), t in [0, 1]."""
    ends = np.array([p, q], dtype=float)
    _check_inside(ctx, ends, tol)
    return float(_segments_time(ctx.lam, ends[:1], ends[1:], quad)[0])


def polyline_time(
    ctx: MetricContext,
    path: Polyline | Sequence[Sequence[float]],
    quad: QuadratureSpec = DEFAULT_QUAD,
    tol: Tolerances = DEFAULT_TOL,
) -> float:
    """Total travel time along a polyline: the sum of its segment times."""
    v = path.vertices if isinstance(path, Polyline) else Polyline(path).vertices
    _check_inside(ctx, v, tol)
    return float(_segments_time(ctx.lam, v[:-1], v[1:], quad).sum())


def distance_to_segment(x: Sequence[float], a: Sequence[float], b: Sequence[float]) -> float:
    """Euclidean distance from ``x`` to the closed segment [a, b]."""
    a, b, x = (np.asarray(v, dtype=float) for v in (a, b, x))
    d = b - a
    dd = float(d @ d)
    t = 0.0 if dd == 0.0 else min(1.0, max(0.0, float((x - a) @ d) / dd))
    return float(np.hypot(*(x - a - t * d)))


class SearchResult(NamedTuple):
    best_time: float
    best_path: Polyline
    accepted: int


def local_min_search(
    ctx: MetricContext,
    p: Sequence[float],
    q: Sequence[float],
    interior_points: int = 8,
    trials: int = 2000,
    seed: int = 0,
    quad: QuadratureSpec = DEFAULT_QUAD,
    initial_path: Polyline | None = None,
    final_step: float = 1e-6,
    tol: Tolerances = DEFAULT_TOL,
) -> SearchResult:
    """Randomized coordinate descent over interior vertices of a p -> q polyline.

    Each trial moves one interior vertex by a uniform random offset in a disk
    whose radius shrinks geometrically from 0.1 |q - p| to ``final_step``
    times |q - p|, clamps it radially inside the domain, and keeps the move
    only if the total travel time drops.  Vertices start evenly spaced on the
    chord unless ``initial_path`` is given.
    """
    if not 1 <= interior_points <= 16:
        raise ValueError("interior_points must be between 1 and 16")
    if trials < 1:
        raise ValueError("trials must be positive")
    ends = np.array([p, q], dtype=float)
    _check_inside(ctx, ends, tol)
    lam = ctx.lam
    span = float(np.hypot(*(ends[1] - ends[0])))

    if initial_path is None:
        t = np.linspace(0.0, 1.0, interior_points + 2)[:, None]
        verts = ends[0] + t * (ends[1] - ends[0])
    else:
        verts = np.array(initial_path.vertices, dtype=float)
        if len(verts) != interior_points + 2 or not (
            np.array_equal(verts[0], ends[0]) and np.array_equal(verts[-1], ends[1])
        ):
            raise ValueError("initial_path must run from p to q with the requested interior count")
        _check_inside(ctx, verts, tol)

    seg = _segments_time(lam, verts[:-1], verts[1:], quad)
    best = float(seg.sum())
    if span == 0.0:
        return SearchResult(best, Polyline(verts), 0)

    limit = (1.0 - 1e-9) * ctx.domain_radius
    rng = np.random.default_rng(seed)
    shrink = (final_step / 0.1) ** (1.0 / max(trials - 1, 1))
    radius = 0.1 * span
    accepted = 0
    for _ in range(trials):
        i = int(rng.integers(1, interior_points + 1))
        ang = rng.uniform(0.0, 2.0 * math.pi)
        rad = radius * math.sqrt(rng.uniform())
        radius *= shrink
        cand = verts[i] + rad * np.array([math.cos(ang), math.sin(ang)])
        norm = math.hypot(cand[0], cand[1])
        if norm > limit:
            cand *= limit / norm
        pair = _segments_time(
            lam,
            np.array([verts[i - 1], cand]),
            np.array([cand, verts[i + 1]]),
            quad,
        )
        new_total = best - seg[i - 1] - seg[i] + pair[0] + pair[1]
        if new_total < best:
            verts[i] = cand
            seg[i - 1], seg[i] = pair
            # resum to keep round-off from drifting across many updates
            best = float(seg.sum())
            accepted += 1
    return SearchResult(best, Polyline(verts), accepted)
