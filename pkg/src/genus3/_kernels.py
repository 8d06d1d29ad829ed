"""Compiled inner loops for point counting.

Field elements are handled in log form: ``-1`` is zero and ``0 <= a < n``
stands for ``g**a`` with ``g`` the primitive element chosen by
:meth:`FieldSpec.primitive_raw` and ``n = Q - 1``.  Multiplication is
addition of logs; addition goes through the Zech table
``zech[d] = log(1 + g**d)``.
"""

from __future__ import annotations

import numpy as np
from numba import njit

from .errors import FieldTooLarge

KERNEL_LIMIT = 1 << 24


class Tables:
    __slots__ = ("Q", "n", "half", "exp", "log", "zech", "qbits")

    def __init__(self, Q, n, half, exp, log, zech, qbits):
        self.Q, self.n, self.half = Q, n, half
        self.exp, self.log, self.zech, self.qbits = exp, log, zech, qbits


@njit(cache=True)
def _exp_table(p, k, modulus, gen, n):
    out = np.empty(n, np.int64)
    cur = np.zeros(k, np.int64)
    cur[0] = 1
    prod = np.zeros(2 * k - 1, np.int64)
    for i in range(n):
        e = 0
        for j in range(k - 1, -1, -1):
            e = e * p + cur[j]
        out[i] = e
        prod[:] = 0
        for a in range(k):
            if cur[a] != 0:
                for b in range(k):
                    prod[a + b] += cur[a] * gen[b]
        for t in range(2 * k - 2, k - 1, -1):
            c = prod[t] % p
            if c != 0:
                for j in range(k):
                    prod[t - k + j] -= c * modulus[j]
        for j in range(k):
            cur[j] = prod[j] % p
    return out


def tables_for(field) -> Tables:
    """Log/exp/Zech tables for ``field``, built once and cached on it."""
    if field.kernel_tables is not None:
        return field.kernel_tables
    if field.Q > KERNEL_LIMIT:
        raise FieldTooLarge(f"counting over a field of {field.Q} elements is not supported")
    with field._lock:
        if field.kernel_tables is None:
            p, k, Q = field.p, field.k, field.Q
            n = Q - 1
            g = np.array(field.digits(field.primitive_raw()), dtype=np.int64)
            modulus = np.array(field.modulus, dtype=np.int64)
            exp = _exp_table(p, k, modulus, g, n)
            log = np.full(Q, -1, dtype=np.int64)
            log[exp] = np.arange(n, dtype=np.int64)
            if n and (np.count_nonzero(log >= 0) != n):
                raise AssertionError("primitive element does not generate the group")
            plus1 = exp - exp % p + (exp % p + 1) % p
            zech = log[plus1]
            half = n // 2 if p != 2 else 0
            qbits = np.array([int(b) for b in bin(Q)[2:]], dtype=np.int64)
            field.kernel_tables = Tables(Q, n, half, exp, log, zech, qbits)
    return field.kernel_tables


@njit(inline="always")
def _mul(a, b, n):
    if a < 0 or b < 0:
        return -1
    s = a + b
    if s >= n:
        s -= n
    return s


@njit(inline="always")
def _add(a, b, n, zech):
    if a < 0:
        return b
    if b < 0:
        return a
    d = b - a
    if d < 0:
        d += n
    z = zech[d]
    if z < 0:
        return -1
    s = a + z
    if s >= n:
        s -= n
    return s


@njit(inline="always")
def _neg(a, n, half):
    if a < 0:
        return a
    s = a + half
    if s >= n:
        s -= n
    return s


@njit(cache=True)
def _mulmod(r, s, f, d, n, half, zech, prod, out):
    # out = r*s mod f; f monic of degree d (f[0..d-1] hold the lower coefficients)
    for i in range(2 * d - 1):
        prod[i] = -1
    for i in range(d):
        ri = r[i]
        if ri < 0:
            continue
        for j in range(d):
            if s[j] >= 0:
                prod[i + j] = _add(prod[i + j], _mul(ri, s[j], n), n, zech)
    for t in range(2 * d - 2, d - 1, -1):
        c = prod[t]
        if c >= 0:
            nc = _neg(c, n, half)
            for j in range(d):
                if f[j] >= 0:
                    prod[t - d + j] = _add(prod[t - d + j], _mul(nc, f[j], n), n, zech)
    for i in range(d):
        out[i] = prod[i]


@njit(cache=True)
def _distinct_roots(a, n, half, zech, qbits, f, r, s, prod, A, B):
    """Number of distinct roots of sum a[j] y^j (degree <= 4); -1 if a == 0."""
    d = 4
    while d >= 0 and a[d] < 0:
        d -= 1
    if d < 0:
        return -1
    if d == 0:
        return 0
    if d == 1:
        return 1
    inv = n - a[d]
    if inv >= n:
        inv -= n
    for j in range(d):
        f[j] = _mul(a[j], inv, n)
    # r = y^Q mod f, binary powering starting from the leading bit
    for j in range(d):
        r[j] = -1
    r[1] = 0
    for bi in range(1, qbits.shape[0]):
        _mulmod(r, r, f, d, n, half, zech, prod, s)
        if qbits[bi] == 1:
            top = s[d - 1]
            for j in range(d - 1, 0, -1):
                r[j] = s[j - 1]
            r[0] = -1
            if top >= 0:
                nt = _neg(top, n, half)
                for j in range(d):
                    if f[j] >= 0:
                        r[j] = _add(r[j], _mul(nt, f[j], n), n, zech)
        else:
            for j in range(d):
                r[j] = s[j]
    # r - y
    r[1] = _add(r[1], half, n, zech)
    # gcd(f, r): A holds f (monic), B holds r
    for j in range(d):
        A[j] = f[j]
    A[d] = 0
    da = d
    db = d - 1
    for j in range(d):
        B[j] = r[j]
    while db >= 0 and B[db] < 0:
        db -= 1
    while db >= 0:
        ib = n - B[db]
        if ib >= n:
            ib -= n
        while da >= db:
            c = A[da]
            if c >= 0:
                nc = _neg(_mul(c, ib, n), n, half)
                sh = da - db
                for j in range(db + 1):
                    if B[j] >= 0:
                        A[sh + j] = _add(A[sh + j], _mul(nc, B[j], n), n, zech)
            da -= 1
            while da >= 0 and A[da] < 0:
                da -= 1
        # swap
        for j in range(5):
            t = A[j]
            A[j] = B[j]
            B[j] = t
        t = da
        da = db
        db = t
    return da


def _work():
    return tuple(np.empty(m, np.int64) for m in (4, 4, 4, 7, 5, 5))


@njit(cache=True)
def _count_affine(c, n, half, zech, qbits, f, r, s, prod, A, B):
    """Sum over x0 of the distinct roots of y -> F(x0, y, 1).

    ``c[i, j]`` is the log of the coefficient of x^i y^j z^(4-i-j).
    Returns -(index + 2) for the first fibre that vanishes identically,
    where index -1 is x0 = 0 and index i >= 0 is x0 = g^i.
    """
    total = 0
    a = np.empty(5, np.int64)
    for xi in range(-1, n):
        for j in range(5):
            acc = -1
            for i in range(5 - j):
                cij = c[i, j]
                if cij < 0:
                    continue
                if xi < 0:
                    if i == 0:
                        acc = _add(acc, cij, n, zech)
                else:
                    acc = _add(acc, _mul(cij, (i * xi) % n, n), n, zech)
            a[j] = acc
        m = _distinct_roots(a, n, half, zech, qbits, f, r, s, prod, A, B)
        if m < 0:
            return -(xi + 2)
        total += m
    return total


def count_affine(tables: Tables, c: np.ndarray) -> int:
    return int(_count_affine(c, tables.n, tables.half, tables.zech, tables.qbits, *_work()))


def distinct_roots(tables: Tables, a) -> int:
    a = np.asarray(a, dtype=np.int64)
    return int(_distinct_roots(a, tables.n, tables.half, tables.zech, tables.qbits, *_work()))
