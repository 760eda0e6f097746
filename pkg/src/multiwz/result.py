from dataclasses import dataclass
from fractions import Fraction

from .exact import render


class DomainError(ValueError):
    """Inputs outside the range where an evaluator is defined."""


@dataclass(frozen=True)
class EvalResult:
    k: int
    m: int
    n: int
    method: str
    value: Fraction
    term_count: int
    wall_time: float  # seconds, monotonic clock

    def to_row(self) -> dict:
        return {
            "k": self.k,
            "m": self.m,
            "n": self.n,
            "method": self.method,
            "value": render(self.value),
            "terms": self.term_count,
            "micros": round(self.wall_time * 1e6),
        }
