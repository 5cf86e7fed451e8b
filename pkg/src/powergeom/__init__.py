"""Four-dimensional Power Geometry for second-order polynomial ODEs."""

from powergeom.coefficient import Coefficient, GaussianRational
from powergeom.diffsum import DiffMonomial, DifferentialSum, expand_and_collect, format_sum
from powergeom.exponents import Convention, exponent, project, shear, shear_normal, support
from powergeom.parser import ParseError, parse_differential_sum
from powergeom.polyhedron import FaceLattice, affine_hull, convex_hull, facet_contains
from powergeom.oracle import oracle_hull
from powergeom.truncation import (
    admissible_facets,
    analyze,
    candidate_orders,
    degeneracy_verdict,
    parse_assumptions,
    truncate,
)
from powergeom.orders import RaySpec, derivative_order_gaps, estimate_order

__all__ = [
    "Coefficient", "GaussianRational", "DiffMonomial", "DifferentialSum",
    "expand_and_collect", "format_sum", "Convention", "exponent", "project",
    "shear", "shear_normal", "support", "ParseError", "parse_differential_sum",
    "FaceLattice", "affine_hull", "convex_hull", "facet_contains", "oracle_hull",
    "admissible_facets", "analyze", "candidate_orders", "degeneracy_verdict",
    "parse_assumptions", "truncate", "RaySpec", "derivative_order_gaps",
    "estimate_order",
]
__version__ = "0.1.0"
