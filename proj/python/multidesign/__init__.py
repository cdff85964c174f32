"""Hexagon/prism decompositions, packings and coverings of complete graphs."""

from ._multidesign import (
    Design,
    Error,
    FeasibilityReport,
    VerificationReport,
    catalog_get,
    catalog_keys,
    classify,
    confirm_nonexistence,
    construct,
    search,
    verify,
)

__all__ = [
    "Design",
    "Error",
    "FeasibilityReport",
    "VerificationReport",
    "catalog_get",
    "catalog_keys",
    "classify",
    "confirm_nonexistence",
    "construct",
    "search",
    "verify",
]
