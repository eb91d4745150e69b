"""Exact verification of Rees and fiber ideals of height three Gorenstein ideals."""

import json

from ._blowup import (
    CHECKS,
    DEFAULT_CHARACTERISTIC,
    DegenerateInstance,
    ParseError,
    Timeout,
    ValidationError,
    closed_form_hilbert,
    expected_multiplicity,
    generate,
    groebner_basis,
    monomial_count,
    verify_json,
)

__all__ = [
    "CHECKS",
    "DEFAULT_CHARACTERISTIC",
    "DegenerateInstance",
    "ParseError",
    "Timeout",
    "ValidationError",
    "closed_form_hilbert",
    "expected_multiplicity",
    "generate",
    "groebner_basis",
    "monomial_count",
    "verify",
    "verify_json",
]


def verify(instance, checks="", budget_pairs=0, budget_terms=0, tier="required"):
    """Verify an instance given as a JSON string or dict; returns the report as a dict."""
    if isinstance(instance, dict):
        instance = json.dumps(instance)
    if not isinstance(checks, str):
        checks = ",".join(checks)
    return json.loads(verify_json(instance, checks, budget_pairs, budget_terms, tier))
