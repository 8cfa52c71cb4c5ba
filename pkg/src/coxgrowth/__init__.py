"""Exact Poincaré series, growth rates and minimality for Coxeter systems."""
from .classification import (ClassLabel, classify, is_cocompact, signature_class,
                             spherical_residues)
from .coxeter import INF, CoxeterMatrix, parse_matrix, triangle_matrix
from .growth import GrowthRate, coefficients, growth_rate
from .order import in_X, is_leq, is_minimal
from .poincare import PoincareSeries, steinberg_poincare, triangle_poincare
from .polyarith import IntPolynomial, RationalFunction, rf_normalize

__version__ = "0.1.0"
