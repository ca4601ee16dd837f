"""Exact positivity thresholds for twisted tangent sheaves on Hyperkahler families."""

from .algebraic import AlgebraicReal, isolate_real_roots, largest_real_root
from .exact import UniPoly, decimal_str, format_rational, parse_rational
from .family import HKFamily, PRESET_NAMES, preset
from .series import ChernMonomial, GradedSeries, UNIT
from .threshold import (
    build_threshold_poly,
    constant_C,
    gamma_p,
    is_pseff_sufficient,
    pseff_cone_member,
    threshold_result,
)

__all__ = [
    "AlgebraicReal",
    "ChernMonomial",
    "GradedSeries",
    "HKFamily",
    "PRESET_NAMES",
    "UNIT",
    "UniPoly",
    "build_threshold_poly",
    "constant_C",
    "decimal_str",
    "format_rational",
    "gamma_p",
    "is_pseff_sufficient",
    "isolate_real_roots",
    "largest_real_root",
    "parse_rational",
    "preset",
    "pseff_cone_member",
    "threshold_result",
]
