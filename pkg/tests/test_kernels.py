import os
import random
import subprocess
import sys

import pytest

from ecseq import _pykernels
from ecseq.errors import DenominatorZero

ck = pytest.importorskip("ecseq._ckernels", reason="compiled kernels not built")


def test_bm_parity():
    rng = random.Random(11)
    for _ in range(500):
        p = rng.choice([5, 7, 13, 101, 65521, 2**31 - 1])
        s = [rng.randrange(p) if rng.random() < 0.8 else 0 for _ in range(rng.randrange(0, 60))]
        py, c = _pykernels.bm_synthesis(s, p), ck.bm_synthesis(s, p)
        assert list(py[0]) == list(c[0]) and list(py[1]) == list(c[1])


def test_multiples_parity():
    from ecseq.curves import WeierstrassCurve, find_point_of_order

    from conftest import edwards_for

    for p in (13, 29, 101, 211, 499):
        C = edwards_for(p)
        G = find_point_of_order(C)
        n = C.cardinality + 3
        a = _pykernels.edwards_multiples(p, C.c, C.d, G.u, G.v, n)
        b = ck.edwards_multiples(p, C.c, C.d, G.u, G.v, n)
        assert [list(x) for x in a] == [list(x) for x in b]
        E = WeierstrassCurve.edwards_model(p, C.d)
        P = E.points()[1]
        a = _pykernels.weierstrass_multiples(p, 0, E.a2, 0, E.a4, 0, P.x, P.y, n)
        b = ck.weierstrass_multiples(p, 0, E.a2, 0, E.a4, 0, P.x, P.y, n)
        assert [list(x) for x in a] == [list(x) for x in b]


def test_both_raise_on_zero_denominator():
    # with non-square d no denominator vanishes, so feed the raw kernels a square d
    p, d = 13, 3
    u, v = 1, 3  # d u^2 v^2 = 27 = 1 mod 13
    for mod in (_pykernels, ck):
        with pytest.raises(DenominatorZero):
            mod.edwards_multiples(p, 1, d, u, v, 3)


def test_pure_backend_forced():
    code = "import ecseq._backend as b; print(b.BACKEND)"
    env = dict(os.environ, ECSEQ_PURE="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True)
    assert out.stdout.strip() == "python"
    env.pop("ECSEQ_PURE")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True)
    assert out.stdout.strip() == "cython"
