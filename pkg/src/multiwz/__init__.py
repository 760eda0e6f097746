"""Exact evaluation and WZ certification of a k-dimensional integral identity."""

from .closedform import corollary_bracket, rhs_corollary, rhs_theorem, t_value
from .exact import ExactRational, factorial, rising_factorial
from .oracle import OracleBudget, lhs_exact
from .poly import Poly, RatFunc, VarSet, e_sym
from .result import DomainError, EvalResult
from .wz import certificate_wz1, certificate_wz2, verify, wz_residual

__version__ = "0.1.0"
