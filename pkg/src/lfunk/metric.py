"""The lambda-Funk Finsler metric and its spherically symmetric form.

The metric measures travel time of a unit-speed boat on the disk of radius
1/lambda under the radial wind W(x) = -lambda * x.  With lambda = 0 it is the
Euclidean norm, with lambda = 1 the classical Funk metric of the unit disk.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple, Sequence

import numpy as np

from .errors import DomainError, WindTooStrong, ZeroVector

__all__ = [
    "Tolerances",
    "DEFAULT_TOL",
    "MetricContext",
    "Point",
    "Vector",
    "PhiArgs",
    "PhiPartials",
    "Gram2x2",
    "lambda_funk_eval",
    "funk_array",
    "zermelo_metric_from_wind",
    "phi",
    "phi_partials",
    "pde_residual",
    "hessian_gram",
]


@dataclass(frozen=True)
class Tolerances:
    """Numerical thresholds shared by the library.

    Every public operation that takes ``tol`` accepts an instance of this
    class; the module-level :data:`DEFAULT_TOL` is used otherwise.
    """

    # a point x is inside when lambda*|x| <= 1 - domain_rel
    domain_rel: float = 1e-12
    # allowed excess of |s| over r in PhiArgs
    s_slack: float = 1e-12
    # |q - p| <= coincident * max(1, |p|, |q|) counts as p == q
    coincident: float = 1e-15
    # relative finite-difference step for the fundamental tensor
    hessian_step: float = 1e-4


DEFAULT_TOL = Tolerances()


class Point(NamedTuple):
    x1: float
    x2: float


class Vector(NamedTuple):
    y1: float
    y2: float


class PhiArgs(NamedTuple):
    """Arguments of the one-variable profile: r = |x|, s = <x, y>/|y|."""

    r: float
    s: float


class PhiPartials(NamedTuple):
    phi_r: float
    phi_s: float
    phi_rs: float
    phi_ss: float


class Gram2x2(NamedTuple):
    g11: float
    g12: float
    g22: float

    @property
    def leading_minors(self) -> tuple[float, float]:
        return self.g11, self.g11 * self.g22 - self.g12 * self.g12

    def is_positive_definite(self) -> bool:
        m1, m2 = self.leading_minors
        return m1 > 0.0 and m2 > 0.0

    def as_array(self) -> np.ndarray:
        return np.array([[self.g11, self.g12], [self.g12, self.g22]])


@dataclass(frozen=True)
class MetricContext:
    """Wind strength ``lam`` and the navigation disk it induces."""

    lam: float

    def __post_init__(self) -> None:
        if not math.isfinite(self.lam) or self.lam < 0.0:
            raise ValueError(f"lambda must be finite and >= 0, got {self.lam!r}")

    @property
    def domain_radius(self) -> float:
        return math.inf if self.lam == 0.0 else 1.0 / self.lam

    def contains(self, x: Sequence[float], tol: Tolerances = DEFAULT_TOL) -> bool:
        if self.lam == 0.0:
            return True
        return self.lam * math.hypot(x[0], x[1]) <= 1.0 - tol.domain_rel

    def require_inside(
        self, x: Sequence[float], name: str = "point", tol: Tolerances = DEFAULT_TOL
    ) -> None:
        if not self.contains(x, tol):
            raise DomainError(
                f"{name} ({x[0]!r}, {x[1]!r}) has norm {math.hypot(x[0], x[1])!r}, "
                f"not inside the domain of radius {self.domain_radius!r}"
            )


def _funk(lam: float, x1: float, x2: float, y1: float, y2: float) -> float:
    xy = x1 * y1 + x2 * y2
    yy = y1 * y1 + y2 * y2
    denom = 1.0 - lam * lam * (x1 * x1 + x2 * x2)
    root = math.sqrt(lam * lam * xy * xy + yy * denom)
    if xy < 0.0:
        # headwind: (root + lam*xy)/denom cancels; multiply through by the conjugate
        return yy / (root - lam * xy)
    return (root + lam * xy) / denom


def lambda_funk_eval(
    ctx: MetricContext,
    x: Sequence[float],
    y: Sequence[float],
    tol: Tolerances = DEFAULT_TOL,
) -> float:
    """Travel-time norm F(x, y) of the direction ``y`` at the point ``x``."""
    ctx.require_inside(x, "x", tol)
    return _funk(ctx.lam, x[0], x[1], y[0], y[1])


def funk_array(lam: float, x1, x2, y1, y2) -> np.ndarray:
    """Vectorized F(x, y) without domain checks (callers guarantee membership)."""
    x1, x2, y1, y2 = (np.asarray(a, dtype=float) for a in (x1, x2, y1, y2))
    xy = x1 * y1 + x2 * y2
    yy = y1 * y1 + y2 * y2
    denom = 1.0 - lam * lam * (x1 * x1 + x2 * x2)
    root = np.sqrt(lam * lam * xy * xy + yy * denom)
    with np.errstate(divide="ignore", invalid="ignore"):
        return np.where(xy < 0.0, yy / (root - lam * xy), (root + lam * xy) / denom)


def zermelo_metric_from_wind(w: Sequence[float], y: Sequence[float]) -> float:
    """Solve |y/F - w| = 1 for the unique F > 0.

    This is the navigation metric of a single tangent plane: the time needed
    to cover the displacement ``y`` when the wind blows with velocity ``w``.
    """
    ww = w[0] * w[0] + w[1] * w[1]
    if not ww < 1.0:
        raise WindTooStrong(f"wind speed {math.sqrt(ww)!r} must be < 1")
    yy = y[0] * y[0] + y[1] * y[1]
    if yy == 0.0:
        raise ZeroVector("direction y must be nonzero")
    wy = w[0] * y[0] + w[1] * y[1]
    one_minus = 1.0 - ww
    root = math.sqrt(wy * wy + yy * one_minus)
    if wy > 0.0:
        return yy / (root + wy)
    return (root - wy) / one_minus


def _check_phi_args(ctx: MetricContext, args: PhiArgs, tol: Tolerances) -> None:
    r, s = args
    if r < 0.0:
        raise DomainError(f"r must be >= 0, got {r!r}")
    if ctx.lam * r > 1.0 - tol.domain_rel:
        raise DomainError(f"r = {r!r} is not below the domain radius {ctx.domain_radius!r}")
    if abs(s) > r + tol.s_slack:
        raise DomainError(f"|s| = {abs(s)!r} exceeds r = {r!r}")


def phi(ctx: MetricContext, args: PhiArgs, tol: Tolerances = DEFAULT_TOL) -> float:
    """Profile function with F(x, y) = |y| * phi(|x|, <x, y>/|y|)."""
    _check_phi_args(ctx, args, tol)
    lam = ctx.lam
    r, s = args
    root = math.sqrt(1.0 + lam * lam * (s * s - r * r))
    if s < 0.0:
        # (root + lam s)(root - lam s) = 1 - lam^2 r^2
        return 1.0 / (root - lam * s)
    return (root + lam * s) / (1.0 - lam * lam * r * r)


def phi_partials(
    ctx: MetricContext, args: PhiArgs, tol: Tolerances = DEFAULT_TOL
) -> PhiPartials:
    """Closed-form phi_r, phi_s, phi_rs and phi_ss.

    All four are finite at r = 0, where phi_r and phi_rs vanish.
    """
    _check_phi_args(ctx, args, tol)
    lam = ctx.lam
    r, s = args
    l2 = lam * lam
    D = 1.0 - l2 * r * r
    S = 1.0 + l2 * (s * s - r * r)
    sqS = math.sqrt(S)
    S32 = S * sqS
    phi_r = l2 * r * (1.0 + l2 * (2.0 * s * s - r * r)) / (D * D * sqS) + (
        2.0 * l2 * lam * s * r / (D * D)
    )
    phi_s = l2 * s / (D * sqS) + lam / D
    phi_rs = l2 * l2 * r * s * (3.0 + l2 * (2.0 * s * s - 3.0 * r * r)) / (D * D * S32) + (
        2.0 * l2 * lam * r / (D * D)
    )
    phi_ss = l2 / S32
    return PhiPartials(phi_r, phi_s, phi_rs, phi_ss)


def pde_residual(ctx: MetricContext, args: PhiArgs, tol: Tolerances = DEFAULT_TOL) -> float:
    """r*phi_ss - phi_r + s*phi_rs; zero exactly when straight lines are geodesics."""
    p = phi_partials(ctx, args, tol)
    r, s = args
    return r * p.phi_ss - p.phi_r + s * p.phi_rs


def _funk_squared(lam: float, x1: float, x2: float, y1: float, y2: float) -> float:
    # expanded so that F^2 is exactly |y|^2 when lam*x = 0
    xy = x1 * y1 + x2 * y2
    yy = y1 * y1 + y2 * y2
    denom = 1.0 - lam * lam * (x1 * x1 + x2 * x2)
    a = lam * lam * xy * xy + yy * denom
    b = lam * xy
    if b < 0.0:
        return yy * yy / (a - 2.0 * b * math.sqrt(a) + b * b)
    return (a + 2.0 * b * math.sqrt(a) + b * b) / (denom * denom)


def hessian_gram(
    ctx: MetricContext,
    x: Sequence[float],
    y: Sequence[float],
    tol: Tolerances = DEFAULT_TOL,
) -> Gram2x2:
    """Fundamental tensor g_ij = 1/2 d^2(F^2)/dy_i dy_j by central differences."""
    ctx.require_inside(x, "x", tol)
    y1, y2 = float(y[0]), float(y[1])
    ny = math.hypot(y1, y2)
    if ny == 0.0:
        raise ZeroVector("direction y must be nonzero")
    # power-of-two step keeps y +- h exact for dyadic y
    h = 2.0 ** round(math.log2(tol.hessian_step * max(1.0, ny)))
    lam, x1, x2 = ctx.lam, float(x[0]), float(x[1])

    def f(a: float, b: float) -> float:
        return _funk_squared(lam, x1, x2, y1 + a, y2 + b)

    f0 = f(0.0, 0.0)
    g11 = (f(h, 0.0) - 2.0 * f0 + f(-h, 0.0)) / (2.0 * h * h)
    g22 = (f(0.0, h) - 2.0 * f0 + f(0.0, -h)) / (2.0 * h * h)
    # the four-corner stencil is symmetric in (i, j), so one g12 serves both
    g12 = (f(h, h) - f(h, -h) - f(-h, h) + f(-h, -h)) / (8.0 * h * h)
    return Gram2x2(g11, g12, g22)
