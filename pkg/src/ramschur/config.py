"""Resource limits for the exact computations."""

from dataclasses import dataclass


@dataclass(frozen=True)
class Caps:
    """Default ceilings; every capped entry point takes an override.

    schur_degree bounds full Schur expansions (memory grows with the
    partition count, p(45) = 89134).  maj_degree bounds major-index
    distributions.  factor_limit bounds the trial-division factorizer.
    matrix_divisors bounds the dense Ramanujan matrix.
    """

    schur_degree: int = 45
    maj_degree: int = 14
    factor_limit: int = 10**12
    matrix_divisors: int = 1024


DEFAULT_CAPS = Caps()
