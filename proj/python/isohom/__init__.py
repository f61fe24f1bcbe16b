"""Integral H_1 of surfaces isogenous to a product with abelian group action."""

from ._isohom import (
    Case,
    CaseFileError,
    InvariantFactors,
    ValidationError,
    abelian_invariants,
    builtin_case,
    builtin_cases,
    cross_check,
    h1_extension,
    kernel_h1,
    load_case,
    run_case,
    smith_normal_form,
)

__all__ = [
    "Case",
    "CaseFileError",
    "InvariantFactors",
    "ValidationError",
    "abelian_invariants",
    "builtin_case",
    "builtin_cases",
    "cross_check",
    "h1_extension",
    "kernel_h1",
    "load_case",
    "run_case",
    "smith_normal_form",
]
