import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ecseq.complexity import (
    bm_profile,
    brute_force_profile,
    linear_complexity_periodic,
)
from ecseq.errors import ModulusMismatch, ScaleExceeded
from ecseq.field import PrimeModulus
from ecseq.generators import ClassicPower, GeneratedSequence, classic_power_seq


def test_conventions():
    assert bm_profile([0, 0, 0, 1], 5).profile == (0, 0, 0, 4)
    assert bm_profile([0, 0, 0, 0], 5).profile == (0, 0, 0, 0)
    assert bm_profile([3] * 10, 7).profile == (1,) * 10


def test_fibonacci_mod_13():
    s = [0, 1]
    while len(s) < 30:
        s.append((s[-1] + s[-2]) % 13)
    prof = bm_profile(s, 13)
    assert prof.final == 2
    assert prof.recurrence() == (1, 1)


def test_field_elements_accepted():
    F = PrimeModulus(13)
    assert bm_profile([F(1), F(2), F(4), F(8)]).profile == (1, 1, 1, 1)
    with pytest.raises(ModulusMismatch):
        bm_profile([F(1), PrimeModulus(17)(2)])
    with pytest.raises(ModulusMismatch):
        bm_profile([F(1)], 17)


def test_invalid_residues():
    with pytest.raises(ModulusMismatch):
        bm_profile([0, 13], 13)
    with pytest.raises(ModulusMismatch):
        bm_profile([0, 1], 12)


def test_oracle_scale_guard():
    with pytest.raises(ScaleExceeded):
        brute_force_profile([0] * 25, 5)
    with pytest.raises(ScaleExceeded):
        brute_force_profile([0] * 5, 17)


seqs = st.sampled_from([5, 7, 13]).flatmap(
    lambda p: st.tuples(st.just(p), st.lists(st.integers(0, p - 1), min_size=1, max_size=14))
)


@settings(max_examples=300, deadline=None)
@given(seqs)
def test_matches_oracle(case):
    p, s = case
    assert bm_profile(s, p).profile == brute_force_profile(s, p).profile


@settings(max_examples=300, deadline=None)
@given(seqs)
def test_profile_laws(case):
    p, s = case
    prof = bm_profile(s, p).profile
    prev = 0
    for N, L in enumerate(prof, start=1):
        assert prev <= L <= N
        if L != prev and prev > 0:
            assert L == N - prev  # jump to N + 1 - old L with N counted from 1
        prev = L


@settings(max_examples=300, deadline=None)
@given(seqs)
def test_recurrence_witness(case):
    p, s = case
    prof = bm_profile(s, p)
    L = prof.final
    if L == 0:
        assert not any(s)
        return
    c = prof.recurrence()
    for n in range(len(s) - L):
        assert s[n + L] == sum(cj * s[n + j] for j, cj in enumerate(c)) % p


def test_periodic_complexity_window():
    rng = random.Random(3)
    for _ in range(100):
        p = rng.choice([5, 7, 11, 13])
        t = rng.randrange(1, 12)
        block = tuple(rng.randrange(p) for _ in range(t))
        seq = GeneratedSequence(block, p, None, t)
        L = linear_complexity_periodic(seq)
        assert L <= t
        assert L == bm_profile(seq.extended(3 * t), p).final


def test_periodic_with_preperiod():
    seq = classic_power_seq(ClassicPower(2, 101, 3), 120)
    assert seq.preperiod > 0
    L = linear_complexity_periodic(seq)
    long = seq.extended(4 * (seq.preperiod + seq.period))
    assert L == bm_profile(long, 101).final
