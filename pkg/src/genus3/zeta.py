"""L-polynomials of genus-3 curves from point counts."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

import numpy as np

from .errors import InconsistentCounts

GENUS = 3
MODULUS_RTOL = 1e-6


@dataclass(frozen=True)
class PowerSums:
    q: int
    S: tuple[int, int, int]


@dataclass(frozen=True)
class LPolynomial:
    q: int
    b: tuple[int, ...]

    def __str__(self):
        terms = []
        for k, c in enumerate(self.b):
            if c:
                terms.append(f"{c}" if k == 0 else f"{c}*T" if k == 1 else f"{c}*T^{k}")
        return " + ".join(terms).replace("+ -", "- ")

    def elementary(self) -> list[int]:
        """e_1..e_6 of the reciprocal roots."""
        return [(-1) ** k * self.b[k] for k in range(1, 2 * GENUS + 1)]


@dataclass(frozen=True)
class WeilResult:
    ok: bool
    reason: str
    max_relative_error: float | None = None

    def __bool__(self):
        return self.ok


def power_sums(q: int, N1: int, N2: int, N3: int) -> PowerSums:
    if min(N1, N2, N3) < 0:
        raise InconsistentCounts("point counts must be nonnegative")
    return PowerSums(q, tuple(q**r + 1 - N for r, N in enumerate((N1, N2, N3), start=1)))


def _exact_div(num: int, den: int, what: str) -> int:
    if num % den:
        raise InconsistentCounts(f"{what} = {num}/{den} is not an integer")
    return num // den


def l_polynomial_from_counts(q: int, N1: int, N2: int, N3: int) -> LPolynomial:
    S1, S2, S3 = power_sums(q, N1, N2, N3).S
    e1 = S1
    e2 = _exact_div(e1 * S1 - S2, 2, "e2")
    e3 = _exact_div(S3 - e1 * S2 + e2 * S1, 3, "e3")
    b1, b2, b3 = -e1, e2, -e3
    L = LPolynomial(q, (1, b1, b2, b3, q * b2, q * q * b1, q**3))
    check = weil_check(L)
    if not check:
        raise InconsistentCounts(f"counts ({N1}, {N2}, {N3}) over q = {q} violate Weil: {check.reason}")
    return L


def power_sum_sequence(L: LPolynomial, r_max: int) -> list[int]:
    """p_1..p_{r_max} of the reciprocal roots by Newton's recurrence."""
    e = [1] + L.elementary()
    p: list[int] = []
    for r in range(1, r_max + 1):
        acc = (-1) ** (r - 1) * r * e[r] if r <= 2 * GENUS else 0
        for i in range(1, min(r, 2 * GENUS + 1)):
            acc += (-1) ** (i - 1) * e[i] * p[r - i - 1]
        p.append(acc)
    return p


def predict_count(L: LPolynomial, r: int) -> int:
    if r < 1:
        raise ValueError("r must be >= 1")
    return L.q**r + 1 - power_sum_sequence(L, r)[-1]


def _squarefree_part(coeffs: list[int]) -> list[Fraction]:
    """Squarefree part of an integer polynomial (coefficients high degree first)."""

    def trim(a):
        while a and a[0] == 0:
            a = a[1:]
        return a

    def rem(a, b):
        a = trim(list(a))
        while len(a) >= len(b):
            c = a[0] / b[0]
            a = trim([u - c * v for u, v in zip(a, b)][1:] + a[len(b):])
        return a

    def gcd(a, b):
        while b:
            a, b = b, rem(a, b)
        return [c / a[0] for c in a]

    def quo(a, b):
        a = list(a)
        out = []
        while len(a) >= len(b):
            c = a[0] / b[0]
            out.append(c)
            for i in range(len(b)):
                a[i] -= c * b[i]
            a = a[1:]
        return out

    f = [Fraction(c) for c in coeffs]
    n = len(f) - 1
    df = [c * (n - i) for i, c in enumerate(f[:-1])]
    g = gcd(f, trim(df))
    return quo(f, g) if len(g) > 1 else f


def weil_check(L: LPolynomial) -> WeilResult:
    q, b = L.q, L.b
    if len(b) != 2 * GENUS + 1:
        return WeilResult(False, "degree")
    if b[0] != 1:
        return WeilResult(False, "b0")
    if b[4] != q * b[2] or b[5] != q * q * b[1] or b[6] != q**3:
        return WeilResult(False, "functional-equation")
    if b[1] * b[1] > 36 * q:
        return WeilResult(False, "b1-bound")
    if any(predict_count(L, r) < 0 for r in range(1, 2 * GENUS + 1)):
        return WeilResult(False, "negative-count")
    # roots of the reciprocal polynomial T^6 P(1/T) are the alpha_i; repeated
    # roots make numpy ill-conditioned, so work on the squarefree part
    sf = _squarefree_part(list(b))
    alphas = np.roots([float(c) for c in sf])
    err = float(np.max(np.abs(np.abs(alphas) ** 2 - q) / q)) if len(alphas) else 0.0
    if err > MODULUS_RTOL:
        return WeilResult(False, "root-modulus", err)
    return WeilResult(True, "ok", err)


def hasse_weil_upper(q: int) -> int:
    """floor(q + 1 + 6 sqrt(q))."""
    return q + 1 + isqrt(36 * q)
