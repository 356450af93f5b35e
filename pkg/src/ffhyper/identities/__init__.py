"""Catalog of identities and the machinery that verifies them."""

from . import greene, lemmas, products, values  # noqa: F401  (registers entries)
from .engine import (
    BUDGET_ENV, CATALOG, DEFAULT_BUDGET, BudgetError, ConstraintError, Env,
    Identity, IdentityError, VerificationReport, admissible_params, budget,
    env_for, exhaustive_size, expand_ids, get_identity, list_identities, parse_strategy, scan,
    strategy_text, tabulate_value, verify_instance,
)

__all__ = [
    "BUDGET_ENV", "CATALOG", "DEFAULT_BUDGET", "BudgetError", "ConstraintError", "Env",
    "Identity", "IdentityError", "VerificationReport", "admissible_params", "budget",
    "env_for", "exhaustive_size", "expand_ids", "get_identity", "list_identities", "parse_strategy", "scan",
    "strategy_text", "tabulate_value", "verify_instance",
]
