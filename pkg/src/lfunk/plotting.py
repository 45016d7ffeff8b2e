"""Static figures of Funk circles and line distances.

Figures are built on :class:`matplotlib.figure.Figure` directly, so no
pyplot state or interactive backend is involved.  SVG output is made
byte-reproducible by fixing the hash salt and dropping the date stamp.
"""

from __future__ import annotations

import io
import math
from pathlib import Path

import matplotlib
import numpy as np
from matplotlib.figure import Figure

from .circles import EuclideanCircle, circle_type1, circle_type2, sample_circle
from .lines import Line, LineDistanceResult
from .metric import MetricContext

PALETTE = {
    "boundary": "#333333",
    "locus": "#1f77b4",
    "ghost": "#b0b0b0",
    "center": "#d62728",
    "line": "#2ca02c",
    "realizer": "#ff7f0e",
}

_SVG_RC = {"svg.hashsalt": "lfunk", "svg.fonttype": "none"}


def _axes(ctx: MetricContext, extent: float):
    fig = Figure(figsize=(5.0, 5.0))
    ax = fig.add_subplot()
    ax.set_aspect("equal")
    ax.set_xlim(-extent, extent)
    ax.set_ylim(-extent, extent)
    if ctx.lam > 0.0:
        ang = np.linspace(0.0, 2.0 * np.pi, 721)
        R = ctx.domain_radius
        ax.plot(R * np.cos(ang), R * np.sin(ang), color=PALETTE["boundary"], lw=1.2)
    ax.set_xlabel("$x_1$")
    ax.set_ylabel("$x_2$")
    return fig, ax


def _extent(ctx: MetricContext, *pts, reach: float = 0.0) -> float:
    if ctx.lam > 0.0:
        return 1.1 * ctx.domain_radius
    far = max([math.hypot(*p) for p in pts] + [0.0]) + reach
    return 1.1 * max(far, 1.0)


def circle_figure(
    ctx: MetricContext,
    kind: int,
    center,
    rho: float,
    circle: EuclideanCircle,
    samples: int = 256,
) -> Figure:
    fig, ax = _axes(ctx, _extent(ctx, center, circle.center, reach=circle.radius))
    ang = np.linspace(0.0, 2.0 * np.pi, 721)
    cx, cy = circle.center
    if circle.clipped:
        ax.plot(cx + circle.radius * np.cos(ang), cy + circle.radius * np.sin(ang),
                color=PALETTE["ghost"], lw=0.8, ls="--")
    pts = np.array(sample_circle(ctx, circle, samples, in_domain_only=True)).reshape(-1, 2)
    if len(pts):
        # break the curve where clipping removed samples
        gaps = np.hypot(*np.diff(pts, axis=0).T) > 3.0 * 2.0 * np.pi * circle.radius / samples
        xs, ys = pts[:, 0].copy(), pts[:, 1].copy()
        xs = np.insert(xs, np.flatnonzero(gaps) + 1, np.nan)
        ys = np.insert(ys, np.flatnonzero(gaps) + 1, np.nan)
        if not circle.clipped and circle.radius > 0.0:
            xs, ys = np.append(xs, xs[0]), np.append(ys, ys[0])
        ax.plot(xs, ys, color=PALETTE["locus"], lw=1.6)
    ax.plot([center[0]], [center[1]], "o", color=PALETTE["center"], ms=4)
    arrow = "d(P, X)" if kind == 1 else "d(X, P)"
    ax.set_title(f"type {kind}: {arrow} = {rho:.6g},  $\\lambda$ = {ctx.lam:g}")
    return fig


def line_figure(
    ctx: MetricContext,
    s: Line,
    point,
    result: LineDistanceResult,
    direction: str,
) -> Figure:
    extent = _extent(ctx, point, result.realizer)
    fig, ax = _axes(ctx, extent)
    ts = np.linspace(-2.0 * extent, 2.0 * extent, 2)
    c, sn = math.cos(s.theta), math.sin(s.theta)
    h = s.height
    ax.plot(ts * c - h * sn, ts * sn + h * c, color=PALETTE["line"], lw=1.2)
    if ctx.lam > 0.0 and result.travel_time > 0.0:
        if direction == "to-point":
            # locus d(X, Q) = travel time is tangent to the line at the realizer
            circ = circle_type2(ctx, point, result.travel_time)
        else:
            circ = circle_type1(ctx, point, result.travel_time)
        ang = np.linspace(0.0, 2.0 * np.pi, 721)
        ax.plot(circ.center[0] + circ.radius * np.cos(ang), circ.center[1] + circ.radius * np.sin(ang),
                color=PALETTE["locus"], lw=1.0, ls=":")
    ax.plot([point[0]], [point[1]], "o", color=PALETTE["center"], ms=4)
    ax.plot([result.realizer[0]], [result.realizer[1]], "s", color=PALETTE["realizer"], ms=4)
    ends = (result.realizer, point) if direction == "to-point" else (point, result.realizer)
    ax.plot([ends[0][0], ends[1][0]], [ends[0][1], ends[1][1]], color=PALETTE["realizer"], lw=1.0)
    label = "d(s, Q)" if direction == "to-point" else "d(P, s)"
    ax.set_title(f"{label} = {result.travel_time:.6g},  $\\lambda$ = {ctx.lam:g}")
    return fig


def figure_to_svg(fig: Figure) -> str:
    buf = io.StringIO()
    with matplotlib.rc_context(_SVG_RC):
        fig.savefig(buf, format="svg", metadata={"Date": None})
    return buf.getvalue()


def save_figure(fig: Figure, path: str | Path) -> Path:
    """Write ``fig`` to ``path``; the format follows the file extension."""
    path = Path(path)
    fmt = path.suffix.lstrip(".").lower() or "png"
    meta = {"svg": {"Date": None}, "png": {"Software": None}, "pdf": {"CreationDate": None}}.get(fmt, {})
    with matplotlib.rc_context(_SVG_RC):
        fig.savefig(path, format=fmt, metadata=meta, dpi=150)
    return path
