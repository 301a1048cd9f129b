"""Point counts and Poincare polynomials of holomorphic symplectic quotients.

Polynomials are plain ``{exponent: coefficient}`` dicts; instances follow
the same JSON schema the ``hsqcount`` command reads.
"""

from ._core import (
    InternalError,
    ValidationError,
    adhm_count,
    adhm_poincare,
    brute_force_count,
    character_sum_count,
    interpolate_count,
    is_good_prime,
    quiver_count,
    quiver_dimension,
    quiver_poincare,
    run_cli,
    toric_count,
    toric_h_dual,
    toric_poincare,
)

__all__ = [
    "InternalError",
    "ValidationError",
    "adhm_count",
    "adhm_poincare",
    "brute_force_count",
    "character_sum_count",
    "interpolate_count",
    "is_good_prime",
    "quiver_count",
    "quiver_dimension",
    "quiver_poincare",
    "run_cli",
    "toric_count",
    "toric_h_dual",
    "toric_poincare",
]
