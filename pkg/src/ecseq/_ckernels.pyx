# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels; contract identical to ``ecseq._pykernels``.

Residues are held in ``long long``; with ``p < 2**31`` every product of two
canonical residues fits without overflow.
"""

from libc.stdlib cimport malloc, free

from .errors import DenominatorZero

ctypedef long long i64


cdef inline i64 _mod(i64 a, i64 p) nogil:
    a %= p
    return a + p if a < 0 else a


cdef i64 _inv(i64 a, i64 p) nogil:
    # extended Euclid; caller guarantees a != 0 mod p
    cdef i64 t = 0, nt = 1, r = p, nr = _mod(a, p), q, tmp
    while nr != 0:
        q = r // nr
        tmp = t - q * nt
        t = nt
        nt = tmp
        tmp = r - q * nr
        r = nr
        nr = tmp
    return _mod(t, p)


def bm_synthesis(seq, long long p):
    cdef Py_ssize_t n_terms = len(seq)
    cdef i64 *s = <i64 *> malloc((n_terms + 1) * sizeof(i64))
    cdef i64 *conn = <i64 *> malloc((n_terms + 1) * sizeof(i64))
    cdef i64 *prev = <i64 *> malloc((n_terms + 1) * sizeof(i64))
    cdef i64 *tmp = <i64 *> malloc((n_terms + 1) * sizeof(i64))
    cdef Py_ssize_t *prof = <Py_ssize_t *> malloc((n_terms + 1) * sizeof(Py_ssize_t))
    if not s or not conn or not prev or not tmp or not prof:
        free(s); free(conn); free(prev); free(tmp); free(prof)
        raise MemoryError()
    cdef Py_ssize_t i, n, top, L = 0, shift = 1, prev_len = 1
    cdef i64 disc, coef, last_disc = 1
    try:
        for i in range(n_terms):
            s[i] = seq[i]
        for i in range(n_terms + 1):
            conn[i] = 0
            prev[i] = 0
        conn[0] = 1
        prev[0] = 1
        with nogil:
            for n in range(n_terms):
                disc = s[n]
                for i in range(1, L + 1):
                    disc = (disc + conn[i] * s[n - i]) % p
                disc = _mod(disc, p)
                if disc == 0:
                    shift += 1
                else:
                    coef = disc * _inv(last_disc, p) % p
                    top = prev_len
                    if top > n_terms + 1 - shift:
                        top = n_terms + 1 - shift
                    if 2 * L <= n:
                        for i in range(L + 1):
                            tmp[i] = conn[i]
                        for i in range(top):
                            conn[i + shift] = _mod(conn[i + shift] - coef * prev[i], p)
                        for i in range(L + 1):
                            prev[i] = tmp[i]
                        prev_len = L + 1
                        L = n + 1 - L
                        last_disc = disc
                        shift = 1
                    else:
                        for i in range(top):
                            conn[i + shift] = _mod(conn[i + shift] - coef * prev[i], p)
                        shift += 1
                prof[n] = L
        profile = [prof[i] for i in range(n_terms)]
        connection = [conn[i] for i in range(L + 1)]
    finally:
        free(s); free(conn); free(prev); free(tmp); free(prof)
    return profile, connection


def edwards_multiples(long long p, long long c, long long d,
                      long long u, long long v, Py_ssize_t count):
    cdef i64 cu = u, cv = v, t, den_u, den_v, nu, nv
    cdef Py_ssize_t k
    us = [0] * count
    vs = [0] * count
    for k in range(count):
        us[k] = cu
        vs[k] = cv
        t = d * cu % p * u % p * cv % p * v % p
        den_u = c * (1 + t) % p
        den_v = _mod(c * (1 - t), p)
        if den_u == 0 or den_v == 0:
            raise DenominatorZero("Edwards addition denominator vanished")
        nu = (cu * v % p + u * cv % p) % p * _inv(den_u, p) % p
        nv = _mod(cv * v % p - cu * u % p, p) * _inv(den_v, p) % p
        cu = nu
        cv = nv
    return us, vs


def weierstrass_multiples(long long p, long long a1, long long a2, long long a3,
                          long long a4, long long a6, long long x, long long y,
                          Py_ssize_t count):
    cdef i64 cx = x, cy = y, lam, num, s, nx, ny
    cdef Py_ssize_t k
    xs = [0] * count
    ys = [0] * count
    for k in range(count):
        xs[k] = cx
        ys[k] = cy
        if cx < 0:
            cx = x
            cy = y
            continue
        if cx == x:
            s = (2 * cy + a1 * cx % p + a3) % p
            if cy != y or s == 0:
                cx = -1
                cy = -1
                continue
            num = _mod(3 * cx % p * cx % p + 2 * a2 % p * cx % p + a4 - a1 * cy % p, p)
            lam = num * _inv(s, p) % p
        else:
            lam = _mod(y - cy, p) * _inv(_mod(x - cx, p), p) % p
        nx = _mod(lam * lam % p + a1 * lam % p - a2 - cx - x, p)
        ny = _mod(-((lam + a1) % p) * nx % p - _mod(cy - lam * cx % p, p) - a3, p)
        cx = nx
        cy = ny
    return xs, ys
