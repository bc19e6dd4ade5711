"""Permutation-group toolkit for local analysis of arc-transitive graphs."""

from .chain import (
                    AuxAction,
                    EnumerationBoundExceeded,
                    PermGroup,
                    commutator_subgroup,
                    kernel_on_aux,
                    normal_closure,
                    stabiliser_on_aux,
)
from .construction import ConstructionParams, build_groups, default_params
from .coset import CosetGraphSpec, ExplicitGraph, ball, materialize, neighbors, validate_spec
from .local import LocalAnalysis, analyze
from .perm import CycleParseError, Permutation, from_cycles
from .props import centraliser, classify_action, fitting_and_fstar, invariant_signature, is_p_group, p_core

__version__ = "0.1.0"

__all__ = [
    "AuxAction",
    "CosetGraphSpec",
    "ConstructionParams",
    "CycleParseError",
    "EnumerationBoundExceeded",
    "ExplicitGraph",
    "LocalAnalysis",
    "PermGroup",
    "Permutation",
    "analyze",
    "ball",
    "build_groups",
    "centraliser",
    "classify_action",
    "commutator_subgroup",
    "default_params",
    "fitting_and_fstar",
    "from_cycles",
    "invariant_signature",
    "is_p_group",
    "kernel_on_aux",
    "materialize",
    "neighbors",
    "normal_closure",
    "p_core",
    "stabiliser_on_aux",
    "validate_spec",
]
