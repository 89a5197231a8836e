"""Pure-Python hot kernels.

Reference implementations of the routines mirrored in ``_ckernels.pyx``.  The
two modules must agree exactly; ``tests/test_kernels.py`` runs both.

All inputs are canonical residues modulo an odd prime ``p < 2**31``.
Points at infinity in Weierstrass output are encoded as ``x = y = -1``.
"""

from .errors import DenominatorZero


def bm_synthesis(seq, p):
    """LFSR synthesis over F_p.

    Returns ``(profile, connection)`` where ``profile[N-1]`` is the linear
    complexity of the first N terms and ``connection`` is the final connection
    polynomial ``1 + C_1 x + ... + C_L x^L`` as a coefficient list of length
    ``L + 1``, so that ``s_n + C_1 s_{n-1} + ... + C_L s_{n-L} = 0``.
    """
    n_terms = len(seq)
    conn = [1] + [0] * n_terms
    prev = [1]
    prev_len = 1
    L = 0
    shift = 1
    last_disc = 1
    profile = []
    for n in range(n_terms):
        disc = seq[n]
        for i in range(1, L + 1):
            disc += conn[i] * seq[n - i]
        disc %= p
        if disc == 0:
            shift += 1
        else:
            coef = disc * pow(last_disc, p - 2, p) % p
            top = min(prev_len, n_terms + 1 - shift)
            if 2 * L <= n:
                saved = conn[: L + 1]
                for i in range(top):
                    conn[i + shift] = (conn[i + shift] - coef * prev[i]) % p
                prev_len = L + 1
                L = n + 1 - L
                prev = saved
                last_disc = disc
                shift = 1
            else:
                for i in range(top):
                    conn[i + shift] = (conn[i + shift] - coef * prev[i]) % p
                shift += 1
        profile.append(L)
    return profile, conn[: L + 1]


def edwards_multiples(p, c, d, u, v, count):
    """Affine multiples ``nP`` for ``n = 1..count`` by repeated addition."""
    us = []
    vs = []
    cu, cv = u, v
    for _ in range(count):
        us.append(cu)
        vs.append(cv)
        t = d * cu % p * u % p * cv % p * v % p
        den_u = c * (1 + t) % p
        den_v = c * (1 - t) % p
        if den_u == 0 or den_v == 0:
            raise DenominatorZero("Edwards addition denominator vanished")
        nu = (cu * v + u * cv) * pow(den_u, p - 2, p) % p
        nv = (cv * v - cu * u) * pow(den_v, p - 2, p) % p
        cu, cv = nu, nv
    return us, vs


def weierstrass_multiples(p, a1, a2, a3, a4, a6, x, y, count):
    """Multiples ``nP`` for ``n = 1..count``; infinity encoded as ``(-1, -1)``."""
    xs = []
    ys = []
    cx, cy = x, y
    for _ in range(count):
        xs.append(cx)
        ys.append(cy)
        if cx < 0:
            cx, cy = x, y
            continue
        if cx == x:
            s = (2 * cy + a1 * cx + a3) % p
            if cy != y or s == 0:
                cx = cy = -1
                continue
            num = (3 * cx * cx + 2 * a2 * cx + a4 - a1 * cy) % p
            lam = num * pow(s, p - 2, p) % p
        else:
            lam = (y - cy) * pow((x - cx) % p, p - 2, p) % p
        nx = (lam * lam + a1 * lam - a2 - cx - x) % p
        ny = (-(lam + a1) * nx - (cy - lam * cx) - a3) % p
        cx, cy = nx, ny
    return xs, ys
