"""Brute-force exact value of the integral of e2^m e1^n exp(-e1) over [0, inf)^k.

The polynomial part is expanded into monomials and each monomial is
integrated coordinate-wise with the gamma integral
``int_0^inf x^a exp(-x) dx = a!``.
"""

from dataclasses import dataclass
from fractions import Fraction
import math
import time

from .poly import Poly, VarSet, e_sym
from .result import DomainError, EvalResult

DEFAULT_MAX_TERMS = 5_000_000


class BudgetExceeded(RuntimeError):
    def __init__(self, k, m, n, max_terms, reached):
        super().__init__(
            f"oracle expansion for (k={k}, m={m}, n={n}) reached {reached} terms, "
            f"over the budget of {max_terms} (raise --max-terms to allow it)"
        )
        self.k, self.m, self.n = k, m, n
        self.max_terms = max_terms


@dataclass(frozen=True)
class OracleBudget:
    max_terms: int = DEFAULT_MAX_TERMS

    def __post_init__(self):
        if self.max_terms < 1:
            raise ValueError(f"max_terms must be >= 1, got {self.max_terms}")


def integrate_monomial(exponents) -> Fraction:
    result = 1
    for a in exponents:
        if a < 0:
            raise ValueError(f"negative exponent {a}")
        result *= math.factorial(a)
    return Fraction(result)


def expand_integrand(k: int, m: int, n: int, budget: OracleBudget = OracleBudget()) -> Poly:
    """Expand ``e2(x)^m * e1(x)^n`` one factor at a time, enforcing the budget."""
    vs = VarSet(k, includes_params=False)
    e1, e2 = e_sym(vs, 1), e_sym(vs, 2)
    acc = Poly.one(vs)
    for factor, times in ((e2, m), (e1, n)):
        for _ in range(times):
            acc = acc * factor
            if len(acc) > budget.max_terms:
                raise BudgetExceeded(k, m, n, budget.max_terms, len(acc))
            if acc.is_zero():
                return acc
    return acc


def lhs_exact(k: int, m: int, n: int, budget: OracleBudget = OracleBudget()) -> EvalResult:
    if k < 1 or m < 0 or n < 0:
        raise DomainError(f"oracle needs k >= 1 and m, n >= 0; got (k={k}, m={m}, n={n})")
    start = time.perf_counter()
    expanded = expand_integrand(k, m, n, budget)
    total = Fraction(0)
    for mono, c in expanded.terms.items():
        total += c * integrate_monomial(mono)
    elapsed = time.perf_counter() - start
    return EvalResult(k, m, n, "oracle", total, len(expanded), elapsed)
