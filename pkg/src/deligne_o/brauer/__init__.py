"""Exact Brauer-category computations used to cross-check the diagram formulas."""

from .diagram import ArityError, BrauerDiagram, cap, compose, count_diagrams, cup, diagrams, identity, permutation, tensor
from .element import BrauerElement, composition_table
from .idempotent import (
    UndefinedIdempotentError,
    e_lambda,
    e_lambda_i,
    is_local,
    primitive_decomposition,
    young_symmetrizer,
)
from .oracle import CheckResult, dim_R, equivalent_idempotents, hom_dim, idempotent_classes, verify

__all__ = [
    "ArityError",
    "BrauerDiagram",
    "BrauerElement",
    "CheckResult",
    "UndefinedIdempotentError",
    "cap",
    "compose",
    "composition_table",
    "count_diagrams",
    "cup",
    "diagrams",
    "dim_R",
    "e_lambda",
    "e_lambda_i",
    "equivalent_idempotents",
    "hom_dim",
    "identity",
    "idempotent_classes",
    "is_local",
    "permutation",
    "primitive_decomposition",
    "tensor",
    "verify",
    "young_symmetrizer",
]
