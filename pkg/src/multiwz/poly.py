"""Sparse multivariate polynomials and rational functions over the rationals.

Variables live in a :class:`VarSet`: the integration variables ``x1..xk``
at indices ``0..k-1``, then the symbolic parameters ``m`` and ``n`` at
indices ``k`` and ``k+1`` when ``includes_params`` is set.

A :class:`Poly` maps exponent vectors to nonzero :class:`~fractions.Fraction`
coefficients.  Missing keys mean coefficient zero, so the zero polynomial is
the empty map.  Terms iterate in descending graded-lex order with
``x1 < x2 < ... < xk < m < n``.

A :class:`RatFunc` is an unreduced quotient of two polynomials.  Equality and
zero tests use cross-multiplication, so no polynomial gcd is ever needed.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Dict, Iterable, Mapping, Optional, Tuple

from .exact import as_exact, render

Monomial = Tuple[int, ...]

__all__ = [
    "VarSet",
    "Monomial",
    "Poly",
    "RatFunc",
    "VarSetMismatch",
    "ZeroDenominatorError",
    "e_sym",
    "partial_derivative",
    "ratfunc_derivative",
    "eval_at",
    "permute_vars",
]


class VarSetMismatch(ValueError):
    """Operands were built over different variable sets."""


class ZeroDenominatorError(ZeroDivisionError):
    """A rational function was given the zero polynomial as denominator."""


@dataclass(frozen=True)
class VarSet:
    k: int
    includes_params: bool = True

    def __post_init__(self):
        if self.k < 1:
            raise ValueError(f"VarSet needs k >= 1, got {self.k}")

    @property
    def nvars(self) -> int:
        return self.k + 2 if self.includes_params else self.k

    def x(self, i: int) -> int:
        """Index of ``x_i`` (1-based, as in the math)."""
        if not 1 <= i <= self.k:
            raise IndexError(f"x{i} is not in x1..x{self.k}")
        return i - 1

    @property
    def m(self) -> int:
        self._need_params()
        return self.k

    @property
    def n(self) -> int:
        self._need_params()
        return self.k + 1

    def _need_params(self):
        if not self.includes_params:
            raise IndexError("this VarSet has no symbolic parameters m, n")

    def names(self) -> Tuple[str, ...]:
        xs = tuple(f"x{i}" for i in range(1, self.k + 1))
        return xs + ("m", "n") if self.includes_params else xs

    def index(self, var) -> int:
        """Resolve an index or a name such as ``"x2"`` or ``"m"``."""
        if isinstance(var, int):
            if not 0 <= var < self.nvars:
                raise IndexError(f"variable index {var} out of range for {self}")
            return var
        try:
            return self.names().index(var)
        except ValueError:
            raise IndexError(f"unknown variable {var!r} for {self}") from None


def _mono_key(mono: Monomial):
    # descending sort key: total degree, then lex from the largest variable down
    return (sum(mono), mono[::-1])


def _mono_str(mono: Monomial, names) -> str:
    parts = []
    for name, e in zip(names, mono):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


class Poly:
    """Immutable sparse polynomial over a :class:`VarSet`."""

    __slots__ = ("vars", "terms")

    def __init__(self, vars: VarSet, terms: Optional[Mapping[Monomial, object]] = None):
        clean: Dict[Monomial, Fraction] = {}
        if terms:
            width = vars.nvars
            for mono, c in terms.items():
                if len(mono) != width:
                    raise ValueError(f"monomial {mono} has wrong width for {vars}")
                if any(e < 0 for e in mono):
                    raise ValueError(f"negative exponent in {mono}")
                c = as_exact(c)
                if c:
                    clean[tuple(mono)] = c
        object.__setattr__(self, "vars", vars)
        object.__setattr__(self, "terms", clean)

    @classmethod
    def _raw(cls, vars: VarSet, terms: Dict[Monomial, Fraction]) -> "Poly":
        # trusted constructor: caller guarantees no zero coefficients
        p = object.__new__(cls)
        object.__setattr__(p, "vars", vars)
        object.__setattr__(p, "terms", terms)
        return p

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls, vars: VarSet) -> "Poly":
        return cls._raw(vars, {})

    @classmethod
    def const(cls, vars: VarSet, c) -> "Poly":
        return cls(vars, {(0,) * vars.nvars: c})

    @classmethod
    def one(cls, vars: VarSet) -> "Poly":
        return cls.const(vars, 1)

    @classmethod
    def var(cls, vars: VarSet, var) -> "Poly":
        idx = vars.index(var)
        mono = [0] * vars.nvars
        mono[idx] = 1
        return cls._raw(vars, {tuple(mono): Fraction(1)})

    # -- inspection -------------------------------------------------------

    def __len__(self):
        return len(self.terms)

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def items(self):
        """Terms in descending graded-lex order."""
        return sorted(self.terms.items(), key=lambda t: _mono_key(t[0]), reverse=True)

    def total_degree(self) -> int:
        return max((sum(m) for m in self.terms), default=-1)

    def degree_in(self, var) -> int:
        idx = self.vars.index(var)
        return max((m[idx] for m in self.terms), default=-1)

    def constant_value(self) -> Optional[Fraction]:
        """The value if this is a constant polynomial, else None."""
        if not self.terms:
            return Fraction(0)
        if len(self.terms) == 1:
            (mono, c), = self.terms.items()
            if not any(mono):
                return c
        return None

    def support_vars(self) -> set:
        return {i for mono in self.terms for i, e in enumerate(mono) if e}

    # -- arithmetic -------------------------------------------------------

    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            if other.vars != self.vars:
                raise VarSetMismatch(f"{self.vars} vs {other.vars}")
            return other
        if isinstance(other, (int, Fraction)):
            return Poly.const(self.vars, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for mono, c in other.terms.items():
            s = out.get(mono, 0) + c
            if s:
                out[mono] = s
            else:
                out.pop(mono, None)
        return Poly._raw(self.vars, out)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw(self.vars, {mono: -c for mono, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return Poly.zero(self.vars)
            return Poly._raw(self.vars, {mono: c * other for mono, c in self.terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: Dict[Monomial, Fraction] = {}
        get = out.get
        for ma, ca in self.terms.items():
            for mb, cb in other.terms.items():
                mono = tuple([x + y for x, y in zip(ma, mb)])
                out[mono] = get(mono, 0) + ca * cb
        return Poly._raw(self.vars, {mono: c for mono, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            raise ValueError(f"Poly exponent must be a non-negative int, got {e!r}")
        result = Poly.one(self.vars)  # 0**0 == 1 by convention
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    # -- comparison / rendering -------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.const(self.vars, other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.vars == other.vars and self.terms == other.terms

    def __hash__(self):
        return hash((self.vars, frozenset(self.terms.items())))

    def __str__(self):
        if not self.terms:
            return "0"
        names = self.vars.names()
        out = []
        for mono, c in self.items():
            body = _mono_str(mono, names)
            mag = abs(c)
            if not body:
                text = render(mag)
            elif mag == 1:
                text = body
            else:
                text = f"{render(mag)}*{body}"
            if not out:
                out.append(("-" if c < 0 else "") + text)
            else:
                out.append((" - " if c < 0 else " + ") + text)
        return "".join(out)

    def __repr__(self):
        return f"Poly({self.vars.k}, {self})"


def e_sym(vars: VarSet, degree: int, exclude: Optional[int] = None) -> Poly:
    """Elementary symmetric polynomial of ``degree`` 1 or 2 in the x-variables.

    ``exclude`` drops ``x_exclude`` (1-based), giving e.g. ``e1(x-hat_i)``.
    Too few remaining variables give the empty sum, i.e. zero.
    """
    if degree not in (1, 2):
        raise ValueError(f"degree must be 1 or 2, got {degree}")
    if exclude is not None and not 1 <= exclude <= vars.k:
        raise IndexError(f"exclude={exclude} is outside 1..{vars.k}")
    idxs = [vars.x(i) for i in range(1, vars.k + 1) if i != exclude]
    terms = {}
    for combo in combinations(idxs, degree):
        mono = [0] * vars.nvars
        for i in combo:
            mono[i] = 1
        terms[tuple(mono)] = Fraction(1)
    return Poly._raw(vars, terms)


def partial_derivative(p: Poly, var) -> Poly:
    idx = p.vars.index(var)
    out = {}
    for mono, c in p.terms.items():
        e = mono[idx]
        if e:
            lowered = mono[:idx] + (e - 1,) + mono[idx + 1:]
            out[lowered] = c * e
    return Poly._raw(p.vars, out)


def eval_at(p: Poly, point: Mapping) -> Fraction:
    """Substitute exact values for variables (keys are indices or names)."""
    values = {}
    for var, v in point.items():
        values[p.vars.index(var)] = as_exact(v)
    missing = p.support_vars() - values.keys()
    if missing:
        names = p.vars.names()
        raise KeyError("no value given for " + ", ".join(names[i] for i in sorted(missing)))
    total = Fraction(0)
    for mono, c in p.terms.items():
        term = c
        for i, e in enumerate(mono):
            if e:
                term *= values[i] ** e
        total += term
    return total


def permute_vars(p: Poly, mapping: Mapping[int, int]) -> Poly:
    """Rename variables: the exponent of ``i`` moves to ``mapping[i]``.

    Indices not in ``mapping`` stay put; the result must be a bijection.
    """
    width = p.vars.nvars
    target = [mapping.get(i, i) for i in range(width)]
    if sorted(target) != list(range(width)):
        raise ValueError(f"{dict(mapping)} is not a permutation of the variables")
    out = {}
    for mono, c in p.terms.items():
        new = [0] * width
        for i, e in enumerate(mono):
            new[target[i]] = e
        out[tuple(new)] = c
    return Poly._raw(p.vars, out)


class RatFunc:
    """Quotient ``num / den`` of two polynomials, kept unreduced."""

    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den=None):
        if den is None:
            den = Poly.one(num.vars)
        elif not isinstance(den, Poly):
            den = Poly.const(num.vars, den)
        if num.vars != den.vars:
            raise VarSetMismatch(f"{num.vars} vs {den.vars}")
        if den.is_zero():
            raise ZeroDenominatorError("rational function with zero denominator")
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RatFunc is immutable")

    @property
    def vars(self) -> VarSet:
        return self.num.vars

    def _coerce(self, other) -> "RatFunc":
        if isinstance(other, RatFunc):
            if other.vars != self.vars:
                raise VarSetMismatch(f"{self.vars} vs {other.vars}")
            return other
        if isinstance(other, Poly):
            return RatFunc(other)
        if isinstance(other, (int, Fraction)):
            return RatFunc(Poly.const(self.vars, other))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.den == other.den:
            return RatFunc(self.num + other.num, self.den)
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if other.num.is_zero():
            raise ZeroDenominatorError("division by the zero rational function")
        return RatFunc(self.num * other.den, self.den * other.num)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return (self.num * other.den - other.num * self.den).is_zero()

    __hash__ = None

    def eval_at(self, point: Mapping) -> Fraction:
        den = eval_at(self.den, point)
        if not den:
            raise ZeroDivisionError("denominator vanishes at this point")
        return eval_at(self.num, point) / den

    def strip_content(self) -> "RatFunc":
        """Divide numerator and denominator by the denominator's leading coefficient."""
        lead = self.den.items()[0][1]
        inv = 1 / lead
        return RatFunc(self.num * inv, self.den * inv)

    def __str__(self):
        num, den = str(self.num), str(self.den)
        if den == "1":
            return num
        return f"({num})/({den})"

    def __repr__(self):
        return f"RatFunc({self})"


def ratfunc_derivative(f: RatFunc, var) -> RatFunc:
    """Quotient rule; skips the ``den**2`` blow-up when ``den`` is free of ``var``."""
    dnum = partial_derivative(f.num, var)
    dden = partial_derivative(f.den, var)
    if dden.is_zero():
        return RatFunc(dnum, f.den)
    return RatFunc(dnum * f.den - f.num * dden, f.den * f.den)
