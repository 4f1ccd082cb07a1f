"""Milnor algebras of projective hypersurfaces: Gröbner bases, resolutions,
Hilbert data, regularity and stability thresholds."""

from .bigraded import genericity_certificate, minimal_syzygy_search, slice_kernel, slice_matrix, strip_bieuler
from .families import (
    classify_free_nearly_free,
    cone_over_plane_curve,
    generic_determinantal,
    generic_hyperplane_arrangement,
    surface_arrangement,
)
from .groebner import Ideal, buchberger, normal_form, saturate_irrelevant
from .hilbert import hilbert_polynomial, quotient_series, stability_threshold
from .milnor import codim2_bounds, hessian, jacobian_ideal, milnor_report, spodzieja_test
from .polyring import GF32003, QQ, Polynomial, Ring, parse_field
from .resolution import betti_table, free_resolution, minimal_free_resolution, minimalize

__version__ = "0.1.0"

__all__ = [
    "GF32003",
    "QQ",
    "Ideal",
    "Polynomial",
    "Ring",
    "betti_table",
    "buchberger",
    "classify_free_nearly_free",
    "codim2_bounds",
    "cone_over_plane_curve",
    "free_resolution",
    "generic_determinantal",
    "generic_hyperplane_arrangement",
    "genericity_certificate",
    "hessian",
    "hilbert_polynomial",
    "jacobian_ideal",
    "milnor_report",
    "minimal_free_resolution",
    "minimal_syzygy_search",
    "minimalize",
    "normal_form",
    "parse_field",
    "quotient_series",
    "saturate_irrelevant",
    "slice_kernel",
    "slice_matrix",
    "spodzieja_test",
    "stability_threshold",
    "strip_bieuler",
    "surface_arrangement",
]
