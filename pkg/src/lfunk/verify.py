"""Randomized self-checks of the closed forms against independent routes.

Each suite returns a :class:`VerifyReport`; the CLI's ``verify`` command
serializes them.  All randomness flows from one seed, so a report is fully
reproducible.
"""

from __future__ import annotations

import math
import os
from dataclasses import asdict, dataclass, field
from typing import Callable, Optional, Sequence

import numpy as np

from .arclength import DEFAULT_QUAD, distance_to_segment, local_min_search, segment_time
from .circles import circle_type1, circle_type2, sample_circle
from .distance import check_theorem_5_1, distance
from .metric import MetricContext, PhiArgs, pde_residual

__all__ = ["VerifyReport", "SUITES", "DEFAULT_TOLERANCES", "random_points", "run_suite", "resolve_tolerance"]

TOL_ENV = "LFUNK_TOL"

DEFAULT_TOLERANCES = {
    "pde": 1e-10,
    "theorem51": 1e-10,
    "oracle": 1e-8,
    "circles": 1e-10,
    "flatness": 1e-4,
}

DEFAULT_LAMBDAS = {
    "pde": (0.2, 0.5, 1.0, 2.5),
    "theorem51": (0.3, 1.0, 2.0),
    "oracle": (0.2, 1.0, 2.5),
    "circles": (),  # drawn at random per case
    "flatness": (1.0,),
}

DEFAULT_TRIALS = {"pde": 20, "theorem51": 1000, "oracle": 200, "circles": 20, "flatness": 10}

# oracle pairs stay where 64 uniform Gauss panels resolve the integrand
ORACLE_RADIUS_FRACTION = 0.95


@dataclass
class VerifyReport:
    suite: str
    cases_run: int
    max_residual: float
    passed: bool
    seed: int
    tolerance: float
    worst_case: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return asdict(self)


def random_points(rng: np.random.Generator, n: int, radius: float) -> np.ndarray:
    """``n`` points uniform in the disk of the given radius."""
    rho = radius * np.sqrt(rng.random(n))
    ang = 2.0 * np.pi * rng.random(n)
    return np.column_stack([rho * np.cos(ang), rho * np.sin(ang)])


def resolve_tolerance(suite: str, tol: Optional[float] = None) -> float:
    """Explicit ``tol``, else the ``LFUNK_TOL`` environment variable, else the suite default."""
    if tol is not None:
        return float(tol)
    env = os.environ.get(TOL_ENV)
    if env:
        return float(env)
    return DEFAULT_TOLERANCES[suite]


class _Worst:
    def __init__(self):
        self.value = -math.inf
        self.case: dict = {}
        self.count = 0

    def add(self, residual: float, **case) -> None:
        self.count += 1
        if not residual <= self.value:  # NaN always becomes the worst
            self.value = residual
            self.case = case


def _pairs(rng, n, lam, fraction=1.0 - 1e-9):
    return random_points(rng, n, fraction / lam), random_points(rng, n, fraction / lam)


def _suite_pde(trials, seed, lambdas, worst):
    n = max(int(trials), 2)
    for lam in lambdas:
        ctx = MetricContext(lam)
        for r in np.linspace(0.0, 0.95 / lam, n):
            for u in np.linspace(-1.0, 1.0, n):
                args = PhiArgs(float(r), float(r * u))
                worst.add(abs(pde_residual(ctx, args)), **{"lambda": lam, "r": args.r, "s": args.s})


def _suite_theorem51(trials, seed, lambdas, worst):
    rng = np.random.default_rng(seed)
    for lam in lambdas:
        ctx = MetricContext(lam)
        P, Q = _pairs(rng, trials, lam)
        for p, q in zip(P, Q):
            worst.add(abs(check_theorem_5_1(ctx, p, q)), **{"lambda": lam, "p": p.tolist(), "q": q.tolist()})


def _suite_oracle(trials, seed, lambdas, worst):
    rng = np.random.default_rng(seed)
    for lam in lambdas:
        ctx = MetricContext(lam)
        P, Q = _pairs(rng, trials, lam, ORACLE_RADIUS_FRACTION)
        for p, q in zip(P, Q):
            gap = abs(segment_time(ctx, p, q, DEFAULT_QUAD) - distance(ctx, p, q).travel_time)
            worst.add(gap, **{"lambda": lam, "p": p.tolist(), "q": q.tolist()})


def _suite_circles(trials, seed, lambdas, worst):
    rng = np.random.default_rng(seed)
    for _ in range(trials):
        lam = float(rng.choice(lambdas)) if lambdas else float(rng.uniform(0.2, 2.5))
        ctx = MetricContext(lam)
        center = random_points(rng, 1, 0.9 / lam)[0]
        rho = float(rng.uniform(0.0, 2.0 / lam))
        case = {"lambda": lam, "center": center.tolist(), "rho": rho}
        for x in sample_circle(ctx, circle_type1(ctx, center, rho), 32):
            worst.add(abs(distance(ctx, center, x).travel_time - rho), type=1, x=list(x), **case)
        for x in sample_circle(ctx, circle_type2(ctx, center, rho), 32, in_domain_only=True):
            worst.add(abs(distance(ctx, x, center).travel_time - rho), type=2, x=list(x), **case)


def _suite_flatness(trials, seed, lambdas, worst):
    rng = np.random.default_rng(seed)
    for lam in lambdas:
        ctx = MetricContext(lam)
        P, Q = _pairs(rng, trials, lam, 0.9)
        for j, (p, q) in enumerate(zip(P, Q)):
            best, path, _ = local_min_search(ctx, p, q, interior_points=8, trials=2000, seed=seed + j)
            d = distance(ctx, p, q).travel_time
            span = math.hypot(*(q - p))
            tube = max(distance_to_segment(v, p, q) for v in path.vertices)
            # tube violations count as infinite residual
            residual = abs(best - d) if tube <= 1e-3 * span else math.inf
            worst.add(residual, **{"lambda": lam, "p": p.tolist(), "q": q.tolist(), "tube": tube})


SUITES: dict[str, Callable] = {
    "pde": _suite_pde,
    "theorem51": _suite_theorem51,
    "oracle": _suite_oracle,
    "circles": _suite_circles,
    "flatness": _suite_flatness,
}


def run_suite(
    suite: str,
    trials: Optional[int] = None,
    seed: int = 0,
    tol: Optional[float] = None,
    lambdas: Optional[Sequence[float]] = None,
) -> VerifyReport:
    """Run one named suite; ``trials`` and ``lambdas`` default per suite.

    For ``pde`` the trial count is the grid side; for ``flatness`` it is the
    number of random point pairs searched.
    """
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; choose from {sorted(SUITES)}")
    trials = DEFAULT_TRIALS[suite] if trials is None else int(trials)
    lambdas = DEFAULT_LAMBDAS[suite] if lambdas is None else tuple(float(v) for v in lambdas)
    if any(lam <= 0.0 for lam in lambdas):
        raise ValueError("verification suites need lambda > 0")
    tolerance = resolve_tolerance(suite, tol)
    worst = _Worst()
    SUITES[suite](trials, seed, lambdas, worst)
    max_res = worst.value if worst.count else 0.0
    return VerifyReport(
        suite=suite,
        cases_run=worst.count,
        max_residual=max_res,
        passed=bool(max_res <= tolerance),
        seed=seed,
        tolerance=tolerance,
        worst_case=worst.case,
    )
