"""Largest p-good numbers and the prime inequalities that bound them.

p-good numbers and their bounds, the prime inequalities behind them,
exact simulators of the positive cones of Z[X] and Q_Z[X], and a bounded
first-order evaluator for the arithmetic axioms.
"""

from .arith import (
    PrimeCtx,
    coprime,
    gcd,
    is_prime,
    kp_floor,
    max_prime_sq_below,
    nth_successor,
    predecessor_prime,
    smallest_prime_factor,
    successor_prime,
    totatives,
)
from .pgood import (
    PGoodReport,
    all_totatives_prime,
    enumerate_p_good,
    is_p_good,
    largest_p_good,
    strong_bound,
    weak_bound,
)
from .polys import IntPoly, QZPoly

__version__ = "0.1.0"
