from fractions import Fraction
import itertools
import random

import pytest

from multiwz.poly import Poly, RatFunc, VarSet, e_sym, eval_at, permute_vars
from multiwz.result import DomainError
from multiwz.wz import (
    Certificate,
    certificate,
    certificate_wz1,
    certificate_wz2,
    shift_data,
    tamper,
    verify,
    wz_residual,
)


def _swap(f: RatFunc, a: int, b: int) -> RatFunc:
    perm = {a: b, b: a}
    return RatFunc(permute_vars(f.num, perm), permute_vars(f.den, perm))


def test_wz1_certificate_k3():
    vs = VarSet(3)
    m, n = Poly.var(vs, "m"), Poly.var(vs, "n")
    assert certificate_wz1(3).r_of(2) == RatFunc(Poly.var(vs, "x2"), 2 * m + n + 3)


def test_wz1_certificate_at_m0_n0():
    r = certificate_wz1(2).r_of(1)
    assert r.eval_at({"x1": 5, "m": 0, "n": 0}) == Fraction(5, 2)


def test_wz2_certificate_k2():
    vs = VarSet(2)
    x1, x2, m = Poly.var(vs, "x1"), Poly.var(vs, "x2"), Poly.var(vs, "m")
    assert certificate_wz2(2).r_of(1) == RatFunc(((m + 1) + x2) * x1, (m + 1) * (2 * m + 2))


def test_wz2_numerator_has_e2_of_hatted():
    cert = certificate_wz2(3)
    assert (0, 1, 1, 0, 0) in cert.r_of(1).num.terms


@pytest.mark.parametrize("kind", ["wz1", "wz2"])
@pytest.mark.parametrize("k", [2, 3, 4, 5])
def test_certificate_symmetric_in_hatted_vars(kind, k):
    cert = certificate(kind, k)
    vs = cert.vars
    for i in range(1, k + 1):
        r = cert.r_of(i)
        hatted = [vs.x(j) for j in range(1, k + 1) if j != i]
        for a, b in itertools.combinations(hatted, 2):
            assert _swap(r, a, b) == r
        assert not (r.den.support_vars() & set(range(k)))


def test_wz1_r_only_depends_on_own_variable():
    cert = certificate_wz1(2)
    assert _swap(cert.r_of(1), 0, 1) == cert.r_of(2)


def test_k_below_two_rejected():
    with pytest.raises(DomainError):
        certificate_wz1(1)
    with pytest.raises(DomainError):
        certificate_wz2(1)
    with pytest.raises(IndexError):
        certificate_wz1(3).r_of(4)


def test_shift_ratios():
    vs = VarSet(3)
    m, n = Poly.var(vs, "m"), Poly.var(vs, "n")
    assert shift_data("wz1", 3).shift_ratio == RatFunc(e_sym(vs, 1), 2 * m + n + 3)
    assert shift_data("wz2", 3).shift_ratio == RatFunc(3 * e_sym(vs, 2), (m + 1) * 2 * (2 * m + 3))


def test_log_derivative_matches_definition():
    # D_{x_i} log(e2^m e1^n e^{-e1}) evaluated at a concrete point, m, n numeric
    vs = VarSet(3)
    pt = {"x1": Fraction(1, 2), "x2": 3, "x3": Fraction(2, 7), "m": 4, "n": 5}
    e1 = eval_at(e_sym(vs, 1), pt)
    e2 = eval_at(e_sym(vs, 2), pt)
    for i in range(1, 4):
        de2 = eval_at(e_sym(vs, 1, exclude=i), pt)
        expected = 4 * de2 / e2 + Fraction(5) / e1 - 1
        assert shift_data("wz1", 3).log_derivative(i).eval_at(pt) == expected


@pytest.mark.parametrize("k", [2, 3, 4, 5, 6])
def test_wz1_valid(k):
    report = verify(certificate_wz1(k))
    assert report.is_valid
    assert report.residual_rendering == "0"


@pytest.mark.parametrize("k", [2, 3, 4, 5, 6])
def test_wz2_valid(k):
    assert verify(certificate_wz2(k)).is_valid


def test_wz1_tampered_denominator_detected():
    vs = VarSet(3)
    m, n = Poly.var(vs, "m"), Poly.var(vs, "n")
    bad = Certificate(3, "wz1", tuple(RatFunc(Poly.var(vs, vs.x(i)), 2 * m + n + 4) for i in (1, 2, 3)))
    report = verify(bad)
    assert not report.is_valid
    assert not wz_residual(bad).is_zero()
    assert report.residual_rendering != "0"


@pytest.mark.parametrize("kind", ["wz1", "wz2"])
def test_single_coefficient_perturbation_detected(kind):
    cert = certificate(kind, 3)
    r1 = cert.r_of(1)
    mono, c = r1.num.items()[0]
    bumped = RatFunc(r1.num + Poly(r1.vars, {mono: 1}), r1.den)
    bad = Certificate(3, kind, (bumped,) + cert.rs[1:])
    assert not verify(bad).is_valid


def _random_point(rng, vs):
    return {i: Fraction(rng.randint(1, 40), rng.randint(1, 9)) for i in range(vs.nvars)}


def test_residual_vanishes_at_random_points():
    rng = random.Random(11)
    for kind in ("wz1", "wz2"):
        res = wz_residual(certificate(kind, 4))
        for _ in range(20):
            assert eval_at(res.num, _random_point(rng, res.vars)) == 0


def test_tampered_residual_nonzero_somewhere():
    rng = random.Random(12)
    res = wz_residual(tamper(certificate_wz1(4)))
    values = [eval_at(res.num, _random_point(rng, res.vars)) for _ in range(20)]
    assert any(values)


def test_residual_by_hand_at_a_point():
    # residual evaluated straight from the divergence formula, outside the RatFunc machinery
    rng = random.Random(13)
    cert = tamper(certificate_wz1(3))
    pt = _random_point(rng, cert.vars)
    xs = [pt[i] for i in range(3)]
    m, n = pt[3], pt[4]
    D = 2 * m + n + 3 + 1
    e1 = sum(xs)
    e2 = xs[0] * xs[1] + xs[0] * xs[2] + xs[1] * xs[2]
    expected = e1 / (2 * m + n + 3) - 1
    for i in range(3):
        expected += 1 / D + xs[i] / D * (n / e1 + m * (e1 - xs[i]) / e2 - 1)
    assert wz_residual(cert).eval_at(pt) == expected


@pytest.mark.parametrize("kind", ["wz1", "wz2"])
def test_residual_symmetric_under_permutation(kind):
    res = wz_residual(tamper(certificate(kind, 3)))
    for perm in itertools.permutations(range(3)):
        mapping = dict(enumerate(perm))
        moved = RatFunc(permute_vars(res.num, mapping), permute_vars(res.den, mapping))
        assert moved == res


def test_report_row():
    row = verify(certificate_wz2(2)).to_row(show_residual=True)
    assert row["valid"] is True and row["residual"] == "0" and row["kind"] == "wz2"
