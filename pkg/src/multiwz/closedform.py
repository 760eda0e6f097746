"""Right-hand side of the integral identity, by recurrence and by nested sum.

Both evaluators share the prefactor

    m! (2m+n+k-1)! (k/2)_m / (2m+k-1)! * (2(k-1)/k)^m

and differ in how they get the bracket ``T_k(m)``:

* ``t_value`` runs the first-order recurrence in ``m`` over the ``(k, m)``
  grid, about ``k*m`` steps;
* ``corollary_bracket`` enumerates every weakly decreasing chain
  ``m >= s_1 >= ... >= s_r >= 1``, about ``m**(k-2)`` chains.
"""

from fractions import Fraction
from itertools import combinations_with_replacement
from math import comb
import time

from .exact import factorial, rising_factorial
from .result import DomainError, EvalResult

__all__ = [
    "recurrence_table",
    "t_value",
    "recurrence_steps",
    "prefactor",
    "rhs_theorem",
    "corollary_bracket",
    "corollary_chain_count",
    "rhs_corollary",
]


def _check_km(k: int, m: int):
    if k < 1 or m < 0:
        raise DomainError(f"need k >= 1 and m >= 0, got (k={k}, m={m})")


def recurrence_table(k: int, m: int):
    """Return ``(rows, steps)`` where ``rows[j][s] == T_j(s)`` for ``j <= k, s <= m``.

    ``rows[0]`` is unused padding.  ``steps`` counts evaluated increments.
    """
    _check_km(k, m)
    rows = [None, [Fraction(0)] * (m + 1)]
    steps = 0
    for j in range(2, k + 1):
        prev = rows[j - 1]
        row = [Fraction(1)]
        # increment coefficient (j(j-2))^s ((j-1)/2)_s / ((j-1)^(2s) (j/2)_s), built up in s
        coef = Fraction(1)
        lead = Fraction(j * (j - 2), (j - 1) ** 2)
        for s in range(1, m + 1):
            coef *= lead * (Fraction(j - 1, 2) + s - 1) / (Fraction(j, 2) + s - 1)
            row.append(row[-1] + coef * prev[s])
            steps += 1
        rows.append(row)
    return rows, steps


def t_value(k: int, m: int) -> Fraction:
    rows, _ = recurrence_table(k, m)
    return rows[k][m]


def recurrence_steps(k: int, m: int) -> int:
    _check_km(k, m)
    return (k - 1) * m


def prefactor(k: int, m: int, n: int) -> Fraction:
    if k < 1 or m < 0 or n < 0:
        raise DomainError(f"need k >= 1 and m, n >= 0, got (k={k}, m={m}, n={n})")
    return (
        factorial(m)
        * factorial(2 * m + n + k - 1)
        * rising_factorial(Fraction(k, 2), m)
        / factorial(2 * m + k - 1)
        * Fraction(2 * (k - 1), k) ** m
    )


def rhs_theorem(k: int, m: int, n: int) -> EvalResult:
    if (k, m) == (1, 0):
        # LHS is n! under e2^0 = 1 but T_1 = 0 forces RHS = 0; refuse instead of guessing
        raise DomainError("(k, m) = (1, 0) is excluded: the identity does not hold there as stated")
    start = time.perf_counter()
    rows, steps = recurrence_table(k, m)
    value = prefactor(k, m, n) * rows[k][m]
    return EvalResult(k, m, n, "recurrence", value, steps, time.perf_counter() - start)


def _chain_factor(j: int, s: int) -> Fraction:
    # ((j^2 - 1)^s (j/2)_s) / (j^(2s) ((j+1)/2)_s), with j = k - i
    return (
        Fraction(j * j - 1) ** s
        * rising_factorial(Fraction(j, 2), s)
        / (Fraction(j) ** (2 * s) * rising_factorial(Fraction(j + 1, 2), s))
    )


def corollary_bracket(k: int, m: int):
    """Return ``(bracket, chains)`` by direct enumeration of every chain."""
    if k < 2 or m < 0:
        raise DomainError(f"the nested-sum form needs k >= 2 and m >= 0, got (k={k}, m={m})")
    factors = {
        i: [None] + [_chain_factor(k - i, s) for s in range(1, m + 1)]
        for i in range(1, k - 1)
    }
    total = Fraction(1)
    chains = 0
    for r in range(1, k - 1):
        # pool runs m..1 so each tuple comes out as s_1 >= s_2 >= ... >= s_r
        for chain in combinations_with_replacement(range(m, 0, -1), r):
            term = Fraction(1)
            for i, s in enumerate(chain, start=1):
                term *= factors[i][s]
            total += term
            chains += 1
    return total, chains


def corollary_chain_count(k: int, m: int) -> int:
    """Closed count of chains, ``sum_{r=1}^{k-2} C(m+r-1, r)``."""
    return sum(comb(m + r - 1, r) for r in range(1, k - 1))


def rhs_corollary(k: int, m: int, n: int) -> EvalResult:
    if k < 2:
        raise DomainError(f"the nested-sum form needs k >= 2, got k={k}")
    start = time.perf_counter()
    bracket, chains = corollary_bracket(k, m)
    value = prefactor(k, m, n) * bracket
    return EvalResult(k, m, n, "corollary", value, chains, time.perf_counter() - start)
