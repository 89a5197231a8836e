import math
import random

import pytest
import sympy

from ecseq.curves import EPoint, WeierstrassCurve, find_point_of_order, point_orders, psi_inv
from ecseq.errors import InvalidExponent, NotCoprime, PoleAtPoint
from ecseq.functions import evaluate_int, lookup, make_user_map
from ecseq.generators import (
    LCG,
    ClassicPower,
    ECLinear,
    ECPower,
    classic_power_seq,
    ec_linear_seq,
    ec_power_points,
    ec_power_seq,
    lcg_seq,
    mult_order,
)
from ecseq.complexity import bm_profile

from conftest import edwards_for

UV = lookup("edwards", "u+v")


def test_ec_linear_period(c13):
    G = find_point_of_order(c13)
    seq = ec_linear_seq(ECLinear(c13, G, UV), 24)
    assert seq.period == 8
    assert all(seq.terms[n] == seq.terms[n + 8] for n in range(16))
    # terms[k] is f((k+1) G)
    assert seq.terms[0] == evaluate_int(UV, c13, G)
    assert seq.terms[7] == 1  # 8G = (0, 1)


def test_zero_function(c13):
    zero = make_user_map("0/1", declared_degree=1)
    seq = ec_linear_seq(ECLinear(c13, find_point_of_order(c13), zero), 10)
    assert seq.terms == (0,) * 10


def test_order_two_point(c13):
    v = lookup("edwards", "v")
    seq = ec_linear_seq(ECLinear(c13, EPoint(0, 12), v), 6)
    assert seq.period == 2
    assert seq.terms == (12, 1, 12, 1, 12, 1)


def test_pole_reports_index(w13, c13):
    G = psi_inv(c13, find_point_of_order(c13))
    with pytest.raises(PoleAtPoint) as info:
        ec_linear_seq(ECLinear(w13, G, lookup("weierstrass", "x")), 20)
    assert info.value.index == 8
    seq = ec_linear_seq(ECLinear(w13, G, lookup("weierstrass", "x")), 20, pole_value=0)
    assert seq.terms[7] == 0


@pytest.mark.parametrize("p", [13, 29, 101, 211])
def test_power_sequence_period_and_index_map(p):
    C = edwards_for(p)
    G = find_point_of_order(C)
    order = point_orders(C)[G]
    lin = ec_linear_seq(ECLinear(C, G, UV), order)
    for e in [e for e in range(2, 40) if math.gcd(e, order) == 1][:4]:
        t = sympy.n_order(e, order)
        seq = ec_power_seq(ECPower(C, G, e, UV), 2 * t + 3)
        assert seq.period == t
        for n in range(len(seq)):
            k = pow(e, n + 1, order)  # r_n = w_{e^n mod |G|}
            assert seq.terms[n] == lin.terms[k - 1]
        assert all(seq.terms[n] == seq.terms[n + t] for n in range(t))


def test_power_sequence_trivial_exponent(c13):
    G = find_point_of_order(c13)
    seq = ec_power_seq(ECPower(c13, G, 9, UV), 5)  # 9 = 1 mod 8
    assert set(seq.terms) == {evaluate_int(UV, c13, G)}


def test_power_sequence_rejects_noncoprime(c13):
    with pytest.raises(InvalidExponent):
        ec_power_seq(ECPower(c13, find_point_of_order(c13), 2, UV), 5)


def test_power_points_match_scalar_mul():
    C = edwards_for(101)
    G = find_point_of_order(C)
    pts = ec_power_points(ECPower(C, G, 3, UV), 10)
    assert pts == [C.mul(3**n, G) for n in range(1, 11)]


def test_incremental_matches_scalar_generation():
    C = edwards_for(211)
    G = find_point_of_order(C)
    seq = ec_linear_seq(ECLinear(C, G, UV), 300)
    assert seq.terms == tuple(evaluate_int(UV, C, C.mul(n, G)) for n in range(1, 301))
    E = WeierstrassCurve.edwards_model(211, C.d)
    Gw = psi_inv(C, G)
    x = lookup("weierstrass", "x")
    seq = ec_linear_seq(ECLinear(E, Gw, x), 300, pole_value=0)
    direct = [E.mul(n, Gw) for n in range(1, 301)]
    assert seq.terms == tuple(0 if P == E.neutral else P.x for P in direct)


def test_lcg_examples():
    assert set(lcg_seq(LCG(1, 0, 13, 5), 10).terms) == {5}
    seq = lcg_seq(LCG(2, 3, 13, 1), 15)
    x, expected = 1, []
    for _ in range(15):
        expected.append(x)
        x = (2 * x + 3) % 13
    assert list(seq.terms) == expected
    assert seq.terms[:4] == (1, 5, 0, 3)
    assert all(seq.terms[n] == seq.terms[n + seq.period] for n in range(15 - seq.period))
    with pytest.raises(NotCoprime):
        LCG(13, 1, 13, 1)


def test_lcg_profile_at_most_two():
    rng = random.Random(0)
    for _ in range(30):
        m = rng.choice([q for q in range(5, 102) if sympy.isprime(q)])
        seq = lcg_seq(LCG(rng.randrange(1, m), rng.randrange(m), m, rng.randrange(1, m)), 2 * m)
        assert max(bm_profile(seq.terms, m).profile) <= 2


def test_classic_power_examples():
    assert set(classic_power_seq(ClassicPower(3, 13, 1), 6).terms) == {1}
    seq = classic_power_seq(ClassicPower(5, 101, 7), 40)
    for n, u in enumerate(seq.terms):
        assert u == pow(7, pow(5, n, 100), 101)
    square = classic_power_seq(ClassicPower(2, 101, 3), 20)
    assert all(square.terms[n + 1] == square.terms[n] ** 2 % 101 for n in range(19))
    k, t = square.preperiod, square.period
    assert all(square.terms[n] == square.terms[n + t] for n in range(k, 20 - t))


def test_mult_order():
    assert mult_order(1, 17) == 1
    assert mult_order(2, 7) == 3
    rng = random.Random(5)
    for _ in range(300):
        n = rng.randrange(2, 5000)
        e = rng.randrange(1, n)
        if math.gcd(e, n) != 1:
            with pytest.raises(NotCoprime):
                mult_order(e, n)
            continue
        t = mult_order(e, n)
        assert t == sympy.n_order(e, n)
        assert sympy.totient(n) % t == 0
