"""Exact arithmetic in ordered polynomial rings modelling weak arithmetic."""

from .divisors import KmnDecomposition, KmnNotFound, divisors_gt1, is_pt, kappa_mu_nu, pt_check
from .errors import (
    ArithError,
    DomainMismatch,
    MalformedInput,
    OutOfCone,
    ParseError,
    UnsupportedElement,
    UnsupportedOperation,
)
from .lab import CheckReport, SamplerConfig, check_axiom, check_property, verify_claims
from .poly import DY_XYZ, INT, MODELS, Q2_X, R3_X, Z_X, PolyElem, divides, get_model, half_floor, parity
from .solver import solve_naive, solve_pruned
from .terms import parse_term, render

__all__ = [
    "ArithError", "CheckReport", "DY_XYZ", "DomainMismatch", "INT", "KmnDecomposition",
    "KmnNotFound", "MODELS", "MalformedInput", "OutOfCone", "ParseError", "PolyElem", "Q2_X",
    "R3_X", "SamplerConfig", "UnsupportedElement", "UnsupportedOperation", "Z_X",
    "check_axiom", "check_property", "divides", "divisors_gt1", "get_model", "half_floor",
    "is_pt", "kappa_mu_nu", "parity", "parse_term", "pt_check", "render", "solve_naive",
    "solve_pruned", "verify_claims",
]
