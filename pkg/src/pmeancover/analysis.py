"""Closed-form approximation-ratio evaluators and structural utilities.

Covers the finite-n greedy ratio for any nonzero exponent, its constant
asymptotic form for positive exponents, the zeta-function bound for
exponents below -1, the general concave-cost ratio and its rent-or-buy
specialization, the inapproximability gap curve, and the prefix-sum
domination (majorization) test.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .objectives import check_concave_table

HARMONIC_EXACT_CAP = 10 ** 4
_EULER_GAMMA = 0.5772156649015328606


@dataclass(frozen=True)
class BoundReport:
    """One evaluated bound, as emitted by the bounds CLI."""

    kind: str
    p_or_q: float | None
    n: int | None
    beta: float | None
    a: float | None
    value: float


def power_sum(p: float, n: int) -> float:
    """Sum of j^p for j = 1..n, accumulated in log space."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    log_terms = [p * math.log(j) for j in range(1, n + 1)]
    peak = max(log_terms)
    return math.exp(peak) * math.fsum(math.exp(t - peak) for t in log_terms)


def ratio_exact(p: float, n: int) -> float:
    """Finite-n greedy ratio (n^(p+1) / sum_{j<=n} j^p)^(1/p).

    Valid for any nonzero p; for p < 0 the reciprocal 1/p root turns the
    power-sum inequality around, so the same expression still evaluates to
    a ratio >= 1.  No closed asymptotic form exists for -1 <= p < 0; only
    this finite-n expression is reported there.
    """
    if p == 0:
        raise ValueError("p=0 has no multiplicative ratio; use the entropy additive bound")
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    log_ratio = ((p + 1) * math.log(n) - math.log(power_sum(p, n))) / p
    return math.exp(log_ratio)


def ratio_asymptotic(p: float) -> float:
    """(p+1)^(1/p), the greedy guarantee for positive exponents."""
    if p <= 0:
        raise ValueError(f"p must be positive, got {p}")
    return (p + 1.0) ** (1.0 / p)


def zeta(q: float, tol: float = 1e-12, max_terms: int = 10 ** 4) -> float:
    """Riemann zeta by direct series with endpoint corrections.

    Sums j^-q until the integral remainder is negligible (or the term cap
    is hit) and then adds the integral remainder with Euler-Maclaurin
    boundary terms, so the error stays far below ``tol`` even for q close
    to 1.
    """
    if q <= 1:
        raise ValueError(f"the series requires q > 1, got {q}")
    total = 0.0
    j = 0
    while j < max_terms:
        j += 1
        total += j ** -q
        if j ** (1.0 - q) / (q - 1.0) < tol:
            return total
    n = float(j)
    tail = (n ** (1.0 - q) / (q - 1.0)          # integral of x^-q from n
            - 0.5 * n ** -q                     # trapezoid correction
            + q / 12.0 * n ** (-q - 1.0)        # first derivative term
            - q * (q + 1.0) * (q + 2.0) / 720.0 * n ** (-q - 3.0))
    return total + tail


def ratio_negative(q: float, n: int) -> float:
    """Greedy ratio n^(1-1/q) * zeta(q)^(1/q) for exponent p = -q < -1."""
    if q <= 1:
        raise ValueError(f"q must exceed 1 (the series diverges at q=1), got {q}")
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return n ** (1.0 - 1.0 / q) * zeta(q) ** (1.0 / q)


def harmonic_number(n: int):
    """H_n, exact as a Fraction up to 10^4 and floating beyond."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if n <= HARMONIC_EXACT_CAP:
        return sum((Fraction(1, j) for j in range(1, n + 1)), Fraction(0))
    return (math.log(n) + _EULER_GAMMA + 1.0 / (2.0 * n)
            - 1.0 / (12.0 * n * n))


def ratio_general_cost(table: Sequence, c_max: int | None = None):
    """Greedy ratio for a concave per-part cost table f(1..m).

    Evaluates max over 1 <= c <= c_max of (1/f(c)) * sum_{j<=c} f(j)/j.
    Exact rational arithmetic is used when every table entry is an int or
    Fraction (a unit table then returns the harmonic number H_{c_max}
    exactly); otherwise the result is a float.
    """
    if c_max is None:
        c_max = len(table)
    if not 1 <= c_max <= len(table):
        raise ValueError(f"c_max must be in 1..{len(table)}, got {c_max}")
    check_concave_table(table)
    exact = all(isinstance(v, (int, Fraction)) and not isinstance(v, bool) for v in table)
    values = [Fraction(v) if exact else float(v) for v in table]
    for c in range(1, c_max + 1):
        if values[c - 1] <= 0:
            raise ValueError(f"f({c}) = {values[c - 1]} is not positive")
    best = None
    partial = Fraction(0) if exact else 0.0
    for c in range(1, c_max + 1):
        partial += values[c - 1] / c
        candidate = partial / values[c - 1]
        if best is None or candidate > best:
            best = candidate
    return best


def ratio_rob(beta: float) -> float:
    """Greedy rent-or-buy guarantee 1 - ln(beta) for beta in (0, 1)."""
    if not 0 < beta < 1:
        raise ValueError(f"beta must be in (0, 1), got {beta}")
    return 1.0 - math.log(beta)


def inapprox_gap(p: float, a: float) -> float:
    """Hardness-construction gap curve for positive exponents.

    Evaluates ((1/(p+1)) (1 - e^{-a(p+1)}) + e^{-a(p+1)})^{-1/p}: strictly
    increasing in ``a``, approaching the (p+1)^(1/p) greedy guarantee, so
    no polynomial algorithm can beat that guarantee.
    """
    if p <= 0 or a <= 0:
        raise ValueError(f"need p > 0 and a > 0, got p={p}, a={a}")
    damp = math.exp(-a * (p + 1.0))
    bracket = (1.0 - damp) / (p + 1.0) + damp
    return bracket ** (-1.0 / p)


def power_sum_lower_margin(p: float, n: int) -> tuple[bool, float]:
    """Check sum_{j<=n} j^p >= n^(p+1)/(p+1) for p >= 0.

    Returns (holds, margin); the margin is the left side minus the right
    side and must be nonnegative.
    """
    if p < 0:
        raise ValueError(f"p must be >= 0, got {p}")
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    lhs = math.fsum(float(j) ** p for j in range(1, n + 1))
    rhs = float(n) ** (p + 1.0) / (p + 1.0)
    margin = lhs - rhs
    return margin >= 0, margin


def dominates(c: Sequence, c_prime: Sequence) -> bool:
    """Prefix-sum domination of sorted non-increasing size sequences.

    The shorter sequence is padded with zeros; inputs that are not
    non-increasing are rejected.
    """
    for name, seq in (("first", c), ("second", c_prime)):
        if any(seq[i] < seq[i + 1] for i in range(len(seq) - 1)):
            raise ValueError(f"{name} sequence is not sorted non-increasing")
    length = max(len(c), len(c_prime))
    prefix_a = prefix_b = 0
    for j in range(length):
        prefix_a += c[j] if j < len(c) else 0
        prefix_b += c_prime[j] if j < len(c_prime) else 0
        if prefix_a < prefix_b:
            return False
    return True
