"""Exact Alexander-polynomial, norm-ball and cyclic-cover computations for 3-manifold groups."""

__version__ = "0.1.0"

from .laurent import LaurentPoly, canonicalize, doteq, gcd, specialize, deg_alpha, floating_degree, newton_polytope
from .presentations import Presentation, parse_presentation, homology, cyclic_cover_presentation, betti_of_cyclic_cover
from .alexander import (
    alexander_matrix,
    multivariable_alexander,
    alexander_poly_psi,
    alexander_poly_psi_direct,
    betti_bound,
    scan_vanishing_classes,
)
from .polytopes import RationalPolytope, NormBallPair, convex_hull, polar, ball_from_functionals
from .medley import build_cover_plan, pushforward_euler, convex_realization, certify_virtual_realization

__all__ = [
    "LaurentPoly", "canonicalize", "doteq", "gcd", "specialize", "deg_alpha", "floating_degree",
    "newton_polytope", "Presentation", "parse_presentation", "homology", "cyclic_cover_presentation",
    "betti_of_cyclic_cover", "alexander_matrix", "multivariable_alexander", "alexander_poly_psi",
    "alexander_poly_psi_direct", "betti_bound", "scan_vanishing_classes", "RationalPolytope",
    "NormBallPair", "convex_hull", "polar", "ball_from_functionals", "build_cover_plan",
    "pushforward_euler", "convex_realization", "certify_virtual_realization",
]
