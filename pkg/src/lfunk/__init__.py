"""Travel-time geometry of the lambda-Funk metric.

A unit-speed boat on the disk of radius 1/lambda is pushed by the radial wind
W(x) = -lambda x.  The package evaluates the resulting Finsler metric, exact
point-to-point and point/line travel times, Funk circles, and numerical
oracles that check the closed forms.
"""

__version__ = "0.1.0"

from .arclength import (
    DEFAULT_QUAD,
    Polyline,
    QuadratureSpec,
    Rule,
    local_min_search,
    polyline_time,
    segment_time,
)
from .circles import EuclideanCircle, circle_type1, circle_type2, sample_circle
from .distance import (
    DistanceResult,
    check_theorem_5_1,
    distance,
    distance_quotient,
    exponent_for_distance,
    is_rotation_invariant_witness,
)
from .errors import (
    DomainError,
    LFunkError,
    LineOutsideDomain,
    NotApplicable,
    RealizerOutsideDomain,
    WindTooStrong,
    ZeroVector,
)
from .lines import (
    Line,
    LineDistanceResult,
    dist_line_to_point,
    dist_point_to_line,
    grid_line_distance,
    line_from_slope,
)
from .metric import (
    DEFAULT_TOL,
    Gram2x2,
    MetricContext,
    PhiArgs,
    Point,
    Tolerances,
    Vector,
    hessian_gram,
    lambda_funk_eval,
    pde_residual,
    phi,
    phi_partials,
    zermelo_metric_from_wind,
)
