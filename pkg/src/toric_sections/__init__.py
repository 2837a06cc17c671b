"""Exact computation of section rings of divisors on complete toric varieties."""

__version__ = "0.1.0"

from .cones import (Fan, RationalCone, SemigroupBasis, ValidationReport, dual_cone,
                    gordan_generators, is_complete, is_strongly_convex, validate_fan)
from .divisor import CartierData, TDivisor, cartier_data, is_effective
from .errors import (DimensionMismatch, HeightLimitExceeded, InvalidFan, NotCartier,
                     NotStronglyConvex, RationalityCertificationFailed, ToricError,
                     Unbounded, VerificationFailed, ZeroVector)
from .lattice import hnf, primitive, solve_integer, solve_rational
from .polytope import HPolytope, VPolytope, build_polytope, dim_h0, lattice_points, vertices
from .ring import (RingGenerators, SectionCone, build_section_cone, hilbert_basis_sections,
                   ring_generators)
from .series import (EhrhartSeries, QuasiPolynomial, count_sequence, dimension_formula,
                     ehrhart_series)

__all__ = [
    "Fan", "RationalCone", "SemigroupBasis", "ValidationReport", "dual_cone",
    "gordan_generators", "is_complete", "is_strongly_convex", "validate_fan",
    "CartierData", "TDivisor", "cartier_data", "is_effective",
    "DimensionMismatch", "HeightLimitExceeded", "InvalidFan", "NotCartier", "NotStronglyConvex",
    "RationalityCertificationFailed", "ToricError", "Unbounded", "VerificationFailed", "ZeroVector",
    "hnf", "primitive", "solve_integer", "solve_rational",
    "HPolytope", "VPolytope", "build_polytope", "dim_h0", "lattice_points", "vertices",
    "RingGenerators", "SectionCone", "build_section_cone", "hilbert_basis_sections",
    "ring_generators",
    "EhrhartSeries", "QuasiPolynomial", "count_sequence", "dimension_formula", "ehrhart_series",
]
