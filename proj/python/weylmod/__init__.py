"""Exact Weyl modules for the loop algebra of sl2.

Roots are passed as ``[(a, m), ...]`` meaning ``prod (1 - a u)^m``; ``a`` may be
an int, a string like ``"1/2"`` or a ``fractions.Fraction``.
"""

from ._weylmod import (
    ParseError,
    WeylModule,
    binomial_matrix_det,
    chain_check,
    divisibility_check,
    factor,
    garland_check,
    graded_quotient,
    irreducibility_predicate,
    pi_beta,
    positive_roots,
    run_cli,
    shipped_cartan_types,
    tensor,
    weyl_module,
)

__all__ = [
    "ParseError",
    "WeylModule",
    "binomial_matrix_det",
    "chain_check",
    "divisibility_check",
    "factor",
    "garland_check",
    "graded_quotient",
    "irreducibility_predicate",
    "pi_beta",
    "positive_roots",
    "run_cli",
    "shipped_cartan_types",
    "tensor",
    "weyl_module",
]
