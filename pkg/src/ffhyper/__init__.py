"""Finite-field hypergeometric series and a catalog-driven identity checker."""

from .field import FieldCtx, FieldError, build_field, parse_q
from .value_domain import COMPLEX, MODULAR, Backend, ModValue, make_backend, values_equal
from .series import SeriesSpec, evaluate, evaluator

__version__ = "0.1.0"

__all__ = [
    "COMPLEX", "MODULAR", "Backend", "FieldCtx", "FieldError", "ModValue", "SeriesSpec",
    "build_field", "evaluate", "evaluator", "make_backend", "parse_q", "values_equal",
]
