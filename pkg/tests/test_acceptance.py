"""Acceptance criteria, one test each, at their stated tolerances.

Each test prints a single PASS/FAIL line (visible with ``pytest -v`` or
``python3 tests/test_acceptance.py``).
"""

import math
import time

import mpmath
import numpy as np
import pytest

from lfunk.arclength import DEFAULT_QUAD, distance_to_segment, local_min_search, segment_time
from lfunk.circles import circle_type1, circle_type2, sample_circle
from lfunk.distance import check_theorem_5_1, distance, rotate
from lfunk.errors import RealizerOutsideDomain
from lfunk.lines import Line, dist_line_to_point, dist_point_to_line, grid_line_distance, line_from_slope
from lfunk.metric import MetricContext, PhiArgs, hessian_gram, pde_residual, phi_partials
from lfunk.verify import random_points

SEED = 20261017
O = (0.0, 0.0)


@pytest.fixture
def report(capsys):
    def emit(number, title, ok, detail):
        with capsys.disabled():
            print(f"\n[{'PASS' if ok else 'FAIL'}] criterion {number:2d}: {title}: {detail}")
        assert ok, detail

    return emit


def _best_time_of(fn, repeats=200):
    fn()
    best = math.inf
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def test_c01_line_to_point_example(report):
    ctx, s, q = MetricContext(0.4), line_from_slope(1.0, 1.0), (1.0, 0.1)
    res = dist_line_to_point(ctx, s, q)
    runtime = _best_time_of(lambda: dist_line_to_point(ctx, s, q))
    ok = (
        abs(res.travel_time - 1.36) <= 0.005
        and abs(res.realizer[0] - 0.45) <= 0.005
        and abs(res.realizer[1] - 1.45) <= 0.005
        and runtime < 1e-3
    )
    report(1, "line to point", ok, f"d={res.travel_time:.6f} realizer=({res.realizer[0]:.5f}, {res.realizer[1]:.5f}) "
           f"runtime={runtime * 1e6:.1f}us")


def test_c02_point_to_line_example(report):
    ctx, s, p = MetricContext(0.4), line_from_slope(1.0, 1.0), (1.0, 0.1)
    res = dist_point_to_line(ctx, p, s)
    runtime = _best_time_of(lambda: dist_point_to_line(ctx, p, s))
    ok = (
        abs(res.travel_time - 1.4) <= 0.05
        and abs(res.realizer[0] + 0.19) <= 0.005
        and abs(res.realizer[1] - 0.81) <= 0.005
        and runtime < 1e-3
    )
    report(2, "point to line", ok, f"d={res.travel_time:.6f} realizer=({res.realizer[0]:.5f}, {res.realizer[1]:.5f}) "
           f"runtime={runtime * 1e6:.1f}us")


def _classical_funk(p, q):
    v = q - p
    pv, qv = p @ v, q @ v
    root = math.sqrt(pv * pv + (1.0 - p @ p) * (v @ v))
    return math.log((root - pv) / (root - qv))


def test_c03_unit_wind_reduction(report):
    rng = np.random.default_rng(SEED)
    ctx = MetricContext(1.0)
    P, Q = random_points(rng, 1000, 1.0), random_points(rng, 1000, 1.0)
    worst = max(abs(distance(ctx, p, q).travel_time - _classical_funk(p, q)) / _classical_funk(p, q)
                for p, q in zip(P, Q))
    report(3, "lambda=1 classical Funk distance", worst <= 1e-12, f"max rel err={worst:.2e}")


def test_c04_circle_characterization(report):
    rng = np.random.default_rng(SEED)
    worst = 0.0
    for lam in (0.3, 1.0, 2.0):
        ctx = MetricContext(lam)
        P, Q = random_points(rng, 1000, 1.0 / lam), random_points(rng, 1000, 1.0 / lam)
        worst = max(worst, max(abs(check_theorem_5_1(ctx, p, q)) for p, q in zip(P, Q)))
    report(4, "|P/r - Q| = (r-1)/(lambda r)", worst <= 1e-10, f"max residual={worst:.2e}")


def test_c05_quadrature_oracle(report):
    rng = np.random.default_rng(SEED)
    t0 = time.perf_counter()
    worst = 0.0
    for lam in (0.2, 1.0, 2.5):
        ctx = MetricContext(lam)
        # pairs within 0.95 R, where 64 Gauss panels resolve the integrand
        P, Q = random_points(rng, 200, 0.95 / lam), random_points(rng, 200, 0.95 / lam)
        for p, q in zip(P, Q):
            worst = max(worst, abs(segment_time(ctx, p, q, DEFAULT_QUAD) - distance(ctx, p, q).travel_time))
    runtime = time.perf_counter() - t0
    report(5, "quadrature vs closed form", worst <= 1e-8 and runtime < 5.0,
           f"max abs err={worst:.2e} runtime={runtime:.2f}s")


def _fd_partials(lam, r, s, h="1e-6"):
    with mpmath.workdps(40):
        lam, r, s, h = (mpmath.mpf(v) for v in (lam, r, s, h))

        def f(dr, ds):
            rr, ss = r + dr, s + ds
            return (mpmath.sqrt(1 + lam**2 * (ss**2 - rr**2)) + lam * ss) / (1 - lam**2 * rr**2)

        return [
            float((f(h, 0) - f(-h, 0)) / (2 * h)),
            float((f(0, h) - f(0, -h)) / (2 * h)),
            float((f(h, h) - f(h, -h) - f(-h, h) + f(-h, -h)) / (4 * h * h)),
            float((f(0, h) - 2 * f(0, 0) + f(0, -h)) / (h * h)),
        ]


def test_c06_pde_and_partials(report):
    worst_pde, worst_fd = 0.0, 0.0
    for lam in (0.2, 0.5, 1.0, 2.5):
        ctx = MetricContext(lam)
        for r in np.linspace(0.0, 0.95 / lam, 20):
            for u in np.linspace(-1.0, 1.0, 20):
                a = PhiArgs(float(r), float(r * u))
                worst_pde = max(worst_pde, abs(pde_residual(ctx, a)))
                for cf, fd in zip(phi_partials(ctx, a), _fd_partials(lam, a.r, a.s)):
                    worst_fd = max(worst_fd, abs(cf - fd) / max(abs(cf), 1.0))
    report(6, "PDE residual and partials", worst_pde <= 1e-10 and worst_fd <= 1e-5,
           f"max residual={worst_pde:.2e} max partial rel err={worst_fd:.2e}")


def test_c07_path_search(report):
    rng = np.random.default_rng(SEED)
    ctx = MetricContext(1.0)
    P, Q = random_points(rng, 10, 0.9), random_points(rng, 10, 0.9)
    t0 = time.perf_counter()
    worst_gap, worst_tube = 0.0, 0.0
    for j, (p, q) in enumerate(zip(P, Q)):
        res = local_min_search(ctx, p, q, interior_points=8, trials=2000, seed=j)
        worst_gap = max(worst_gap, abs(res.best_time - distance(ctx, p, q).travel_time))
        span = math.hypot(*(q - p))
        worst_tube = max(worst_tube, max(distance_to_segment(v, p, q) for v in res.best_path.vertices) / span)
    runtime = time.perf_counter() - t0
    report(7, "straight chords minimize travel time", worst_gap <= 1e-4 and worst_tube <= 1e-3 and runtime < 60.0,
           f"max gap={worst_gap:.2e} max tube/span={worst_tube:.2e} runtime={runtime:.2f}s")


def test_c08_boundary_limits(report):
    ctx = MetricContext(1.0)
    edge = (1.0 - 1e-8, 0.0)
    inward = distance(ctx, edge, O).travel_time
    outward = distance(ctx, O, edge).travel_time
    ok = abs(inward - math.log(2.0)) <= 1e-6 and outward > 18.0
    report(8, "boundary limits", ok, f"d(P,O)-ln2={inward - math.log(2.0):.2e} d(O,Q)={outward:.4f}")


def test_c09_circle_round_trips(report):
    rng = np.random.default_rng(SEED)
    worst = 0.0
    for _ in range(20):
        lam = float(rng.uniform(0.2, 2.5))
        ctx = MetricContext(lam)
        P = random_points(rng, 1, 0.95 / lam)[0]
        rho = float(rng.uniform(0.0, 2.0 / lam))
        for x in sample_circle(ctx, circle_type1(ctx, P, rho), 32):
            worst = max(worst, abs(distance(ctx, P, x).travel_time - rho))
        for x in sample_circle(ctx, circle_type2(ctx, P, rho), 32, in_domain_only=True):
            worst = max(worst, abs(distance(ctx, x, P).travel_time - rho))
    report(9, "circle round trips", worst <= 1e-10, f"max residual={worst:.2e}")


def test_c10_asymmetry_rotation_translation(report):
    rng = np.random.default_rng(SEED)
    worst_origin = 0.0
    for lam in (0.3, 1.0, 2.0):
        ctx = MetricContext(lam)
        for p in random_points(rng, 100, 0.99 / lam):
            n = math.hypot(*p)
            worst_origin = max(
                worst_origin,
                abs(distance(ctx, O, p).travel_time + math.log(1 - lam * n) / lam),
                abs(distance(ctx, p, O).travel_time - math.log(1 + lam * n) / lam),
            )
    ctx = MetricContext(1.0)
    worst_rot = 0.0
    P, Q = random_points(rng, 25, 0.99), random_points(rng, 25, 0.99)
    for p, q, ang in zip(P, Q, rng.uniform(-math.pi, math.pi, 25)):
        d1 = distance(ctx, p, q).travel_time
        d2 = distance(ctx, rotate(p, ang), rotate(q, ang)).travel_time
        worst_rot = max(worst_rot, abs(d1 - d2))
    # translate the pair (O, -p0) by p0 to get (p0, O)
    p0 = np.array([0.4, 0.1])
    before, after = distance(ctx, O, -p0).travel_time, distance(ctx, p0, O).travel_time
    ok = worst_origin <= 1e-12 and worst_rot <= 1e-12 and before != after
    report(10, "origin formulas, rotations, translation", ok,
           f"origin err={worst_origin:.2e} rotation err={worst_rot:.2e} translated {before:.4f} vs {after:.4f}")


def test_c11_hessian_positive_definite(report):
    rng = np.random.default_rng(SEED)
    failures, total = 0, 0
    for lam in (0.5, 1.0, 2.0):
        ctx = MetricContext(lam)
        X = random_points(rng, 1000, (1.0 - 1e-9) / lam)
        Y = rng.normal(size=(1000, 2))
        for x, y in zip(X, Y):
            total += 1
            failures += not hessian_gram(ctx, x, y).is_positive_definite()
    report(11, "Hessian positive definite", failures == 0, f"{failures} of {total} failed")


def test_c12_line_grid_oracle(report):
    rng = np.random.default_rng(SEED)
    worst, checked, skipped = 0.0, 0, 0
    while checked < 50:
        lam = float(rng.uniform(0.2, 2.5))
        ctx = MetricContext(lam)
        s = Line(float(rng.uniform(-math.pi / 2, math.pi / 2)), float(rng.uniform(-0.8, 0.8)) / lam)
        if lam * abs(s.height) >= 0.95:
            continue
        x = random_points(rng, 1, 0.9 / lam)[0]
        try:
            to_point = dist_line_to_point(ctx, s, x)
        except RealizerOutsideDomain:
            # no interior minimizer on the chord to compare against
            skipped += 1
            continue
        to_line = dist_point_to_line(ctx, x, s)
        worst = max(
            worst,
            abs(grid_line_distance(ctx, s, x, "to-point").travel_time - to_point.travel_time),
            abs(grid_line_distance(ctx, s, x, "to-line").travel_time - to_line.travel_time),
        )
        checked += 1
    report(12, "line distances vs grid search", worst <= 1e-4,
           f"max abs err={worst:.2e} over {checked} configurations ({skipped} boundary-minimum draws skipped)")


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q"]))
