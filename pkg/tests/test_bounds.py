import math
import warnings
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ecseq.bounds import hs_bound, max_kappa_floor, thm1_bound, thm2_expr, verify
from ecseq.curves import find_point_of_order
from ecseq.errors import InconsistentDelta, RangeError
from ecseq.functions import lookup
from ecseq.generators import LCG, ECLinear, ECPower, ec_linear_seq, ec_power_seq, lcg_seq

from conftest import edwards_for


def test_thm1_example():
    assert thm1_bound(100, 4, 1000) == 6
    assert thm1_bound(100, 4, 4) == 0
    with pytest.raises(RangeError):
        thm1_bound(100, 4, 3)


def test_hs_example():
    for N in range(1, 60):
        assert hs_bound(30, 1, 1, N) == min(Fraction(N, 4), Fraction(30, 3))
    assert hs_bound(30, 2, 0, 10) == min(Fraction(10, 4), Fraction(30, 3))
    with pytest.raises(InconsistentDelta):
        hs_bound(30, 1, 0, 10)
    with pytest.raises(InconsistentDelta):
        hs_bound(30, 2, 1, 10)


def test_thm2_example():
    assert thm2_expr(4, 8, 1) == 1
    with pytest.warns(UserWarning):
        thm2_expr(4, 4, 4)


@given(st.integers(1, 10**6), st.integers(2, 10**5), st.integers(1, 50))
def test_thm2_expr_is_a_lower_rounding(t, order, deg):
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        expr = thm2_expr(t, order, deg)
    # expr <= t / (order^2 deg)^(1/3)  <=>  expr^3 * order^2 * deg <= t^3
    assert expr**3 * order * order * deg <= t**3
    # and it is tight: the denominator is the smallest integer cube root upper bound
    denom = Fraction(t) / expr
    assert denom.denominator == 1 and (denom - 1) ** 3 < order * order * deg


@given(st.integers(1, 500), st.integers(1, 8), st.integers(0, 400))
def test_thm1_monotone(t, deg, extra):
    N = deg + extra
    assert thm1_bound(t, deg, N) <= thm1_bound(t, deg, N + 1)
    assert thm1_bound(t, deg, N) <= thm1_bound(t + 1, deg, N)


@given(st.integers(1, 500), st.integers(1, 8), st.integers(1, 400))
def test_hs_monotone(t, deg_H, N):
    delta = 1 if deg_H == 1 else 0
    assert hs_bound(t, deg_H, delta, N) <= hs_bound(t, deg_H, delta, N + 1)
    assert hs_bound(t, deg_H, delta, N) <= hs_bound(t + 1, deg_H, delta, N)


def test_lcg_violates_linear_slope():
    seq = lcg_seq(LCG(3, 7, 101, 2), 202)
    report = verify(seq, "linear", slope=Fraction(1, 10))
    assert not report.holds
    assert all(r.N > 20 for r in report.violations())


@pytest.mark.parametrize("p", [13, 53, 101])
def test_thm1_report(p):
    C = edwards_for(p)
    G = find_point_of_order(C)
    t = C._cache["orders"][G]
    seq = ec_linear_seq(ECLinear(C, G, lookup("edwards", "u+v")), t)
    report = verify(seq, "thm1")
    assert report.holds
    assert [r.N for r in report.rows] == list(range(4, 2 * seq.period + 1))
    assert report.margin >= 0


def test_thm1_requires_ideal_pole():
    from ecseq.functions import make_user_map

    C = edwards_for(13)
    f = make_user_map("u", declared_degree=2, omega_pole=(False, False))
    seq = ec_linear_seq(ECLinear(C, find_point_of_order(C), f), 4)
    with pytest.raises(ValueError):
        verify(seq, "thm1")


def test_thm2_report_and_floor():
    C = edwards_for(101)
    G = find_point_of_order(C)
    reports = []
    order = C._cache["orders"][G]
    for e in [e for e in range(3, 30) if math.gcd(e, order) == 1][:3]:
        seq = ec_power_seq(ECPower(C, G, e, lookup("edwards", "u+v")), order)
        r = verify(seq, "thm2", kappa=Fraction(1, 2))
        assert r.max_kappa == Fraction(r.final_L) / thm2_expr(seq.period, r.instance["order_G"], 4)
        reports.append(r)
    assert max_kappa_floor(reports) == min(r.max_kappa for r in reports)


def test_thm2_small_group_note():
    C = edwards_for(5)
    G = find_point_of_order(C)
    order = C._cache["orders"][G]
    e = next(e for e in range(2, 20) if math.gcd(e, order) == 1)
    seq = ec_power_seq(ECPower(C, G, e, lookup("edwards", "u+v")), order)
    r = verify(seq, "thm2")
    if order <= 4:
        assert any(">= |G|" in n for n in r.notes)
