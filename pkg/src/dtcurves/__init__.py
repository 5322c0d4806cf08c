"""Dehn-Thurston coordinates for multicurves, their intersection embedding,
linearity cones, and the degree-graded skein product."""
from .dt_coords import DTVector
from .intersection_map import IntersectionVector, invert, iota_C, membership
from .pl_cones import build_complex, enumerate_cones, locate
from .skein_graded import Zero, graded_product, leading_term
from .surface_datum import CoordinateDatum, generate_standard_datum

__version__ = "0.1.0"
