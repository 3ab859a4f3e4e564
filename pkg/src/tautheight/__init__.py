"""Exact height coefficients of tautological cycles on jacobians and
invariants of polarized metrized graphs."""

from .calculus import (
    CapacityError,
    ContractionDefect,
    GeneratorSystem,
    HeightCoefficients,
    IntersectionVector,
    LoopLabel,
    LoopLabelledGraph,
    arithmetic_intersection,
    evaluate,
    expand,
    generator_system,
    geometric_degree,
    height_coefficients,
    reduce_graph,
)
from .exact import format_fraction, parse_fraction
from .pmgraph import (
    GraphValidationError,
    InvariantReport,
    Measure,
    PolarizedMetrizedGraph,
    admissible_measure,
    canonical_measure,
    green_diagonal,
    green_value,
    invariants,
    subdivide,
    tau,
    vertex_resistance,
)

__version__ = "0.1.0"

__all__ = [
    "CapacityError",
    "ContractionDefect",
    "GeneratorSystem",
    "GraphValidationError",
    "HeightCoefficients",
    "IntersectionVector",
    "InvariantReport",
    "LoopLabel",
    "LoopLabelledGraph",
    "Measure",
    "PolarizedMetrizedGraph",
    "admissible_measure",
    "arithmetic_intersection",
    "canonical_measure",
    "evaluate",
    "expand",
    "format_fraction",
    "generator_system",
    "geometric_degree",
    "green_diagonal",
    "green_value",
    "height_coefficients",
    "invariants",
    "parse_fraction",
    "reduce_graph",
    "subdivide",
    "tau",
    "vertex_resistance",
]
