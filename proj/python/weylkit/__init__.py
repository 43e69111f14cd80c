"""Exact weight multiplicities, orbit lengths, dimensions and admissible weights
for the classical root systems A-D (reversed node labels)."""

from ._core import (
    InvariantViolation,
    ValidationError,
    __version__,
    classify,
    coeff_sequence,
    dim_closed,
    dim_weyl_module,
    dim_weyl_product,
    is_admissible,
    multiplicity,
    multiplicity_table,
    orbit_length,
    parse_weight,
    render_weight,
    run_cli,
    stabilizer_type,
    steinberg_decompose,
    weyl_order,
)

__all__ = [
    "InvariantViolation",
    "ValidationError",
    "__version__",
    "classify",
    "coeff_sequence",
    "dim_closed",
    "dim_weyl_module",
    "dim_weyl_product",
    "is_admissible",
    "multiplicity",
    "multiplicity_table",
    "orbit_length",
    "parse_weight",
    "render_weight",
    "run_cli",
    "stabilizer_type",
    "steinberg_decompose",
    "weyl_order",
]
