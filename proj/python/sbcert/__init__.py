"""Exact cyclotomic fields, cyclic cubic division algebras and group certificates."""

import json

from ._core import (
    IMPORTED_LEMMA,
    PHI_CONVENTION,
    SCHEMA_VERSION,
    Algebra,
    AlgebraElem,
    Error,
    Field,
    FieldElem,
    choose_a,
    cubes_mod_p,
    is_cube_mod_p,
    is_prime,
    run_pipeline,
)

__all__ = [
    "IMPORTED_LEMMA",
    "PHI_CONVENTION",
    "SCHEMA_VERSION",
    "Algebra",
    "AlgebraElem",
    "Error",
    "Field",
    "FieldElem",
    "certify",
    "choose_a",
    "cubes_mod_p",
    "is_cube_mod_p",
    "is_prime",
    "run_pipeline",
]


def certify(p, **options):
    """Run the pipeline and return the certificate as a dict (keys in canonical order)."""
    return json.loads(run_pipeline(p, **options))
