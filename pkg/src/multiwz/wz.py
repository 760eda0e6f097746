"""WZ certificates for the integral identity and their exact verification.

For a fixed ``k`` both certificates are rational functions in ``x1..xk``
with ``m`` and ``n`` left symbolic.  Dividing the divergence identity

    F(shifted) - F + sum_i D_{x_i}[R_i F] = 0

by ``F`` leaves

    shift_ratio - 1 + sum_i ( D_{x_i} R_i + R_i * D_{x_i} log F ),

which is a rational function with no factorials in it.  The certificate is
valid exactly when that residual is the zero rational function.

WZ1 shifts ``n -> n+1``; WZ2 shifts ``m -> m+1`` at ``n = 0``.
"""

from dataclasses import dataclass
import time
from typing import Callable, Tuple

from .poly import Poly, RatFunc, VarSet, e_sym, ratfunc_derivative
from .result import DomainError

KINDS = ("wz1", "wz2")


@dataclass(frozen=True)
class Certificate:
    k: int
    kind: str
    rs: Tuple[RatFunc, ...]

    def r_of(self, i: int) -> RatFunc:
        """``R(x_i; x-hat_i)`` for ``i`` in ``1..k``."""
        if not 1 <= i <= self.k:
            raise IndexError(f"i={i} outside 1..{self.k}")
        return self.rs[i - 1]

    @property
    def vars(self) -> VarSet:
        return self.rs[0].vars


@dataclass(frozen=True)
class ShiftData:
    kind: str
    shift_ratio: RatFunc
    log_derivative: Callable[[int], RatFunc]


def _params(k: int):
    if k < 2:
        raise DomainError(f"certificates are defined for k >= 2, got k={k}")
    vs = VarSet(k)
    return vs, Poly.var(vs, vs.m), Poly.var(vs, vs.n)


def certificate_wz1(k: int) -> Certificate:
    vs, m, n = _params(k)
    den = 2 * m + n + k
    return Certificate(k, "wz1", tuple(RatFunc(Poly.var(vs, vs.x(i)), den) for i in range(1, k + 1)))


def certificate_wz2(k: int) -> Certificate:
    vs, m, _ = _params(k)
    den = (k - 1) * (m + 1) * (2 * m + k)
    rs = []
    for i in range(1, k + 1):
        u = Poly.var(vs, vs.x(i))
        num = ((k - 1) * (m + 1) + e_sym(vs, 1, exclude=i)) * u + e_sym(vs, 2, exclude=i)
        rs.append(RatFunc(num, den))
    return Certificate(k, "wz2", tuple(rs))


def certificate(kind: str, k: int) -> Certificate:
    if kind == "wz1":
        return certificate_wz1(k)
    if kind == "wz2":
        return certificate_wz2(k)
    raise ValueError(f"unknown certificate kind {kind!r}")


def shift_data(kind: str, k: int) -> ShiftData:
    """Shift quotient and per-variable log-derivative of the normalized integrand."""
    vs, m, n = _params(k)
    e1, e2 = e_sym(vs, 1), e_sym(vs, 2)
    if kind == "wz1":
        ratio = RatFunc(e1, 2 * m + n + k)

        def log_derivative(i):
            # n/e1 + m*e1(x-hat_i)/e2 - 1 over the shared denominator e1*e2
            return RatFunc(n * e2 + m * e_sym(vs, 1, exclude=i) * e1 - e1 * e2, e1 * e2)

    elif kind == "wz2":
        ratio = RatFunc(k * e2, (m + 1) * (k - 1) * (2 * m + k))

        def log_derivative(i):
            return RatFunc(m * e_sym(vs, 1, exclude=i) - e2, e2)

    else:
        raise ValueError(f"unknown certificate kind {kind!r}")
    return ShiftData(kind, ratio, log_derivative)


def wz_residual(cert: Certificate) -> RatFunc:
    shift = shift_data(cert.kind, cert.k)
    vs = cert.vars
    derivs = None
    products = None
    for i in range(1, cert.k + 1):
        r = cert.r_of(i)
        d = ratfunc_derivative(r, vs.x(i))
        p = r * shift.log_derivative(i)
        derivs = d if derivs is None else derivs + d
        products = p if products is None else products + p
    return shift.shift_ratio + derivs + products - 1


@dataclass(frozen=True)
class VerifyReport:
    kind: str
    k: int
    is_valid: bool
    residual: RatFunc
    wall_time: float

    @property
    def residual_rendering(self) -> str:
        """Residual numerator; ``"0"`` for a valid certificate."""
        return str(self.residual.num)

    @property
    def num_terms(self) -> int:
        return len(self.residual.num)

    @property
    def den_terms(self) -> int:
        return len(self.residual.den)

    def to_row(self, show_residual: bool = False) -> dict:
        row = {
            "kind": self.kind,
            "k": self.k,
            "valid": self.is_valid,
            "num_terms": self.num_terms,
            "den_terms": self.den_terms,
            "micros": round(self.wall_time * 1e6),
        }
        if show_residual:
            row["residual"] = self.residual_rendering
        return row


def verify(cert: Certificate) -> VerifyReport:
    start = time.perf_counter()
    residual = wz_residual(cert)
    return VerifyReport(cert.kind, cert.k, residual.is_zero(), residual, time.perf_counter() - start)


def tamper(cert: Certificate, delta=1) -> Certificate:
    """Copy of ``cert`` with ``delta`` added to the constant term of every denominator."""
    rs = tuple(RatFunc(r.num, r.den + delta) for r in cert.rs)
    return Certificate(cert.k, cert.kind, rs)
