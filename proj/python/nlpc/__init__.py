"""Animated node-link / parallel-coordinates transitions."""

from ._nlpc import (
    ConsistencyError,
    Graph,
    ParseError,
    Transition,
    ValidationError,
    ease,
    interpolate_bent,
    interpolate_geometric,
    load_graph,
    preset_json,
    stagger_delay,
    with_attributes,
)

__all__ = [
    "ConsistencyError",
    "Graph",
    "ParseError",
    "Transition",
    "ValidationError",
    "ease",
    "interpolate_bent",
    "interpolate_geometric",
    "load_graph",
    "preset_json",
    "stagger_delay",
    "with_attributes",
]
