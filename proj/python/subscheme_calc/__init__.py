"""Closed subschemes of glued affine schemes over QQ, computed with Groebner bases."""

from ._core import (
    Algebra,
    Error,
    Ideal,
    Morphism,
    Report,
    RingMap,
    Scheme,
    Status,
    Subscheme,
    add,
    check_additive_law,
    compose,
    compose_maps,
    eliminate,
    empty,
    eq,
    from_surjection,
    ideal_sum,
    intersect,
    law_modules,
    mul,
    oracle,
    pullback,
    run_laws,
    run_script,
    samples,
    saturate,
    whole,
)

__all__ = [
    "Algebra",
    "Error",
    "Ideal",
    "Morphism",
    "Report",
    "RingMap",
    "Scheme",
    "Status",
    "Subscheme",
    "add",
    "check_additive_law",
    "compose",
    "compose_maps",
    "eliminate",
    "empty",
    "eq",
    "from_surjection",
    "ideal_sum",
    "intersect",
    "law_modules",
    "mul",
    "oracle",
    "pullback",
    "run_laws",
    "run_script",
    "samples",
    "saturate",
    "whole",
]
