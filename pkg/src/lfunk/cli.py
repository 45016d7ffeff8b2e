"""Command-line front end.

    lfunk dist       --lambda L --from x,y --to x,y [--reverse]
    lfunk circle     --lambda L --type 1|2 --center x,y --radius-time T [--samples N]
    lfunk line-dist  --lambda L --line m,c|angle:theta,offset --point x,y --direction to-point|to-line
    lfunk verify     --suite all|pde|flatness|theorem51|oracle|circles [--trials N] [--seed S] [--tol T] [--lambdas a,b]

Records go to stdout (``--format json|csv|svg``), diagnostics to stderr.
Exit codes: 0 success, 2 input or domain error, 3 verification failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import re
import sys
from typing import Any, Sequence

from . import __version__
from .circles import circle_type1, circle_type2, sample_circle
from .distance import distance
from .errors import LFunkError
from .lines import Line, dist_line_to_point, dist_point_to_line, line_from_slope
from .metric import MetricContext
from .verify import SUITES, run_suite

EXIT_OK, EXIT_INPUT, EXIT_VERIFY = 0, 2, 3

# flags whose values may legitimately start with '-' (negative coordinates)
_VALUE_FLAGS = {"--from", "--to", "--center", "--point", "--line", "--lambdas"}
_NUMERIC_START = re.compile(r"^-[\d.]")


class UsageError(Exception):
    pass


def parse_point(text: str) -> tuple[float, float]:
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(f"expected x,y but got {text!r}")
    try:
        x, y = float(parts[0]), float(parts[1])
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected x,y but got {text!r}") from None
    if not (math.isfinite(x) and math.isfinite(y)):
        raise argparse.ArgumentTypeError(f"coordinates must be finite: {text!r}")
    return (x, y)


def parse_line(text: str) -> Line:
    """``m,c`` for y = m x + c, or ``angle:theta,offset`` (theta in radians)."""
    if text.startswith("angle:"):
        theta, offset = parse_point(text[len("angle:"):])
        if not -math.pi / 2 < theta <= math.pi / 2:
            raise argparse.ArgumentTypeError(f"angle must lie in (-pi/2, pi/2], got {theta!r}")
        return Line(theta, offset)
    m, c = parse_point(text)
    return line_from_slope(m, c)


def parse_lambda(text: str) -> float:
    try:
        lam = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"lambda must be a number, got {text!r}") from None
    if not (math.isfinite(lam) and lam >= 0.0):
        raise argparse.ArgumentTypeError(f"lambda must be finite and >= 0, got {text!r}")
    return lam


def parse_lambdas(text: str) -> list[float]:
    return [parse_lambda(v) for v in text.split(",") if v]


def _clean(value: Any) -> Any:
    """Make a record JSON-safe: tuples to lists, non-finite floats to null."""
    if isinstance(value, float):
        return value if math.isfinite(value) else None
    if isinstance(value, dict):
        return {k: _clean(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_clean(v) for v in value]
    return value


def _fmt(value: Any) -> str:
    if value is None:
        return "NA"
    if isinstance(value, float):
        # repr round-trips: the full 17 significant digits survive
        return repr(value)
    return str(value)


def emit_json(record: dict, out) -> None:
    json.dump(_clean(record), out, indent=2, allow_nan=False)
    out.write("\n")


def emit_keyvalue_csv(pairs: Sequence[tuple[str, Any]], out) -> None:
    w = csv.writer(out, lineterminator="\n")
    w.writerow(["key", "value"])
    for k, v in pairs:
        w.writerow([k, _fmt(v)])


def emit_points_csv(points, out) -> None:
    w = csv.writer(out, lineterminator="\n")
    w.writerow(["x", "y"])
    for x, y in points:
        w.writerow([_fmt(float(x)), _fmt(float(y))])


def _distance_record(res) -> dict:
    return {"travel_time": res.travel_time, "exponent_r": res.exponent_r, "k": res.k, "t2": res.t2}


def cmd_dist(args, out) -> int:
    ctx = MetricContext(args.lam)
    fwd = distance(ctx, args.src, args.dst)
    record = {"lambda": args.lam, "from": list(args.src), "to": list(args.dst), **_distance_record(fwd)}
    if args.reverse:
        back = distance(ctx, args.dst, args.src)
        record["reverse"] = _distance_record(back)
        record["difference"] = fwd.travel_time - back.travel_time
    if args.format == "json":
        emit_json(record, out)
    elif args.format == "csv":
        pairs = [(k, record[k]) for k in ("travel_time", "exponent_r", "k", "t2")]
        if args.reverse:
            pairs += [(f"reverse_{k}", v) for k, v in record["reverse"].items()]
            pairs.append(("difference", record["difference"]))
        emit_keyvalue_csv(pairs, out)
    else:
        raise UsageError("dist supports --format json or csv")
    return EXIT_OK


def cmd_circle(args, out) -> int:
    ctx = MetricContext(args.lam)
    if args.samples < 1:
        raise UsageError("--samples must be >= 1")
    build = circle_type1 if args.type == 1 else circle_type2
    circ = build(ctx, args.center, args.radius_time)
    pts = sample_circle(ctx, circ, args.samples, in_domain_only=True)
    fig = None
    if args.format == "svg" or args.figure:
        from .plotting import circle_figure

        fig = circle_figure(ctx, args.type, args.center, args.radius_time, circ)
    if args.format == "json":
        emit_json(
            {
                "lambda": args.lam,
                "type": args.type,
                "center": list(args.center),
                "radius_time": args.radius_time,
                "euclidean_center": list(circ.center),
                "euclidean_radius": circ.radius,
                "clipped": circ.clipped,
                "samples": [list(p) for p in pts],
            },
            out,
        )
    elif args.format == "csv":
        emit_points_csv(pts, out)
    else:
        from .plotting import figure_to_svg

        out.write(figure_to_svg(fig))
    if args.figure:
        from .plotting import save_figure

        save_figure(fig, args.figure)
    return EXIT_OK


def cmd_line_dist(args, out) -> int:
    ctx = MetricContext(args.lam)
    if args.direction == "to-point":
        res = dist_line_to_point(ctx, args.line, args.point)
    else:
        res = dist_point_to_line(ctx, args.point, args.line)
    fig = None
    if args.format == "svg" or args.figure:
        from .plotting import line_figure

        fig = line_figure(ctx, args.line, args.point, res, args.direction)
    if args.format == "json":
        emit_json(
            {
                "lambda": args.lam,
                "line": {"theta": args.line.theta, "offset": args.line.offset},
                "point": list(args.point),
                "direction": args.direction,
                "travel_time": res.travel_time,
                "exponent_r": res.exponent_r,
                "realizer": list(res.realizer),
            },
            out,
        )
    elif args.format == "csv":
        emit_keyvalue_csv(
            [
                ("travel_time", res.travel_time),
                ("exponent_r", res.exponent_r),
                ("realizer_x", res.realizer[0]),
                ("realizer_y", res.realizer[1]),
            ],
            out,
        )
    else:
        from .plotting import figure_to_svg

        out.write(figure_to_svg(fig))
    if args.figure:
        from .plotting import save_figure

        save_figure(fig, args.figure)
    return EXIT_OK


def cmd_verify(args, out) -> int:
    if args.format != "json":
        raise UsageError("verify reports are emitted as json only")
    names = sorted(SUITES) if args.suite == "all" else [args.suite]
    reports = [run_suite(n, args.trials, args.seed, args.tol, args.lambdas) for n in names]
    passed = all(r.passed for r in reports)
    emit_json({"passed": passed, "reports": [r.to_dict() for r in reports]}, out)
    for r in reports:
        if not r.passed:
            print(
                f"verify: suite {r.suite} failed: max residual {r.max_residual!r} > {r.tolerance!r}; "
                f"worst case {json.dumps(_clean(r.worst_case))}",
                file=sys.stderr,
            )
    return EXIT_OK if passed else EXIT_VERIFY


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="lfunk", description="Travel times under the lambda-Funk metric.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, formats=("json", "csv")):
        p.add_argument("--format", choices=formats, default="json")

    p = sub.add_parser("dist", help="point-to-point travel time")
    p.add_argument("--lambda", dest="lam", type=parse_lambda, required=True)
    p.add_argument("--from", dest="src", type=parse_point, required=True)
    p.add_argument("--to", dest="dst", type=parse_point, required=True)
    p.add_argument("--reverse", action="store_true", help="also report the opposite direction")
    common(p)
    p.set_defaults(func=cmd_dist)

    p = sub.add_parser("circle", help="type 1 or type 2 Funk circle")
    p.add_argument("--lambda", dest="lam", type=parse_lambda, required=True)
    p.add_argument("--type", type=int, choices=(1, 2), required=True)
    p.add_argument("--center", type=parse_point, required=True)
    p.add_argument("--radius-time", dest="radius_time", type=float, required=True)
    p.add_argument("--samples", type=int, default=64)
    p.add_argument("--figure", metavar="PATH", help="also write a figure (png/svg/pdf by extension)")
    common(p, ("json", "csv", "svg"))
    p.set_defaults(func=cmd_circle)

    p = sub.add_parser("line-dist", help="travel time between a point and a line")
    p.add_argument("--lambda", dest="lam", type=parse_lambda, required=True)
    p.add_argument("--line", type=parse_line, required=True, help="m,c or angle:theta,offset")
    p.add_argument("--point", type=parse_point, required=True)
    p.add_argument("--direction", choices=("to-point", "to-line"), required=True)
    p.add_argument("--figure", metavar="PATH", help="also write a figure (png/svg/pdf by extension)")
    common(p, ("json", "csv", "svg"))
    p.set_defaults(func=cmd_line_dist)

    p = sub.add_parser("verify", help="run randomized self-checks")
    p.add_argument("--suite", choices=("all", *sorted(SUITES)), default="all")
    p.add_argument("--trials", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--tol", type=float, default=None, help="overrides LFUNK_TOL and suite defaults")
    p.add_argument("--lambdas", type=parse_lambdas, default=None)
    common(p, ("json",))
    p.set_defaults(func=cmd_verify)
    return parser


def _join_negative_values(argv: Sequence[str]) -> list[str]:
    out, i = [], 0
    argv = list(argv)
    while i < len(argv):
        tok = argv[i]
        if tok in _VALUE_FLAGS and i + 1 < len(argv) and _NUMERIC_START.match(argv[i + 1]):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
            continue
        out.append(tok)
        i += 1
    return out


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = sys.stdout if out is None else out
    argv = sys.argv[1:] if argv is None else argv
    parser = build_parser()
    try:
        args = parser.parse_args(_join_negative_values(argv))
    except SystemExit as exc:
        return int(exc.code or 0)
    buf = io.StringIO()
    try:
        code = args.func(args, buf)
    except (LFunkError, UsageError, ValueError) as exc:
        print(f"lfunk {args.command}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    out.write(buf.getvalue())
    out.flush()
    return code


if __name__ == "__main__":
    sys.exit(main())
