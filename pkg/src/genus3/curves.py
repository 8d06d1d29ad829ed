"""Plane quartics and genus-3 hyperelliptic models: counting and geometry."""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .algebra import (
    DEFAULT_SEED,
    FieldElem,
    FieldSpec,
    UniPoly,
    _pderiv,
    _pdivmod,
    _peval,
    _pgcd,
    _pmonic,
    _pmul,
    _ppowmod,
    _psub,
    _padd,
    embedding,
    find_roots,
    make_field,
)
from .errors import (
    DegenerateAfterRetries,
    FieldMismatch,
    FieldTooLarge,
    InhomogeneousInput,
    InternalInconsistency,
    LineOnCurve,
    NotDivisible,
    NotGenus3,
    ZeroForm,
)
from .forms import TernaryForm, divide_exact, det3, partial, substitute_linear, variables

log = logging.getLogger(__name__)

BRUTE_LIMIT = 10**8
SMOOTH_ATTEMPTS = 20
SINGULAR_DEGREE_BOUND = 9


def extension(base: FieldSpec, k: int) -> FieldSpec:
    """F_{q^k} for q = |base|, with the default modulus."""
    if k < 1:
        raise ValueError("extension degree must be >= 1")
    if k == 1:
        return base
    return make_field(base.p, base.k * k)


@dataclass(frozen=True)
class PointCount:
    k: int
    N: int


@dataclass(frozen=True)
class PlaneQuartic:
    F: TernaryForm

    def __post_init__(self):
        if self.F.is_zero():
            raise ZeroForm("the zero form does not define a curve")
        if self.F.degree != 4:
            raise InhomogeneousInput(f"a plane quartic needs degree 4, got {self.F.degree}")

    @property
    def base(self) -> FieldSpec:
        return self.F.field

    @property
    def q(self) -> int:
        return self.F.field.Q


# ---------------------------------------------------------------------------
# counting


def count_points(C: PlaneQuartic, k: int = 1) -> PointCount:
    """|C(F_{q^k})| by counting distinct roots along every fibre x = x0."""
    E = extension(C.base, k)
    T = _kernels.tables_for(E)
    emb = embedding(C.base, E)
    c = np.full((5, 5), -1, dtype=np.int64)
    for (a, b, _), v in C.F.raw_terms().items():
        c[a, b] = T.log[emb(v)]
    affine = _kernels.count_affine(T, c)
    if affine < 0:
        idx = -affine - 2
        x0 = 0 if idx < 0 else int(T.exp[idx])
        raise LineOnCurve(f"F(x0, y, 1) vanishes identically at x0 = {FieldElem(E, x0)!r}")
    at_infinity = _kernels.distinct_roots(T, [c[4 - j, j] for j in range(5)])
    if at_infinity < 0:
        raise LineOnCurve("the line z = 0 lies on the curve")
    N = affine + at_infinity + (1 if c[0, 4] < 0 else 0)
    return PointCount(k, N)


def count_points_bruteforce(C, k: int = 1) -> PointCount:
    """Evaluate the form at one representative of every point of P^2(F_{q^k}).

    Accepts a PlaneQuartic or any TernaryForm (reducible and non-reduced
    forms included).
    """
    F = C.F if isinstance(C, PlaneQuartic) else C
    E = extension(F.field, k)
    Q = E.Q
    if Q * Q + Q + 1 > BRUTE_LIMIT:
        raise FieldTooLarge(f"{Q * Q + Q + 1} points exceed the brute-force budget")
    emb = embedding(F.field, E)
    add, mul, pw = E.add, E.mul, E.pow
    d = F.degree
    powers = [[pw(v, i) for i in range(d + 1)] for v in range(Q)]
    terms = [(a, b, c, emb(v)) for (a, b, c), v in F.raw_terms().items()]

    def vanishes(x, y, z):
        px, py, pz = powers[x], powers[y], powers[z]
        acc = 0
        for a, b, c, v in terms:
            acc = add(acc, mul(v, mul(px[a], mul(py[b], pz[c]))))
        return acc == 0

    N = sum(vanishes(1, y, z) for y in range(Q) for z in range(Q))
    N += sum(vanishes(0, 1, z) for z in range(Q))
    N += vanishes(0, 0, 1)
    return PointCount(k, N)


# ---------------------------------------------------------------------------
# smoothness


def _bivariate(G: TernaryForm) -> list[list[int]]:
    """Dehomogenise at z = 1: list indexed by y-degree of raw x-polynomials."""
    rows: list[list[int]] = [[] for _ in range(G.degree + 1)]
    for (a, b, _), v in G.raw_terms().items():
        row = rows[b]
        if len(row) <= a:
            row.extend([0] * (a + 1 - len(row)))
        row[a] = v
    while rows and not any(rows[-1]):
        rows.pop()
    return [_trim_row(r) for r in rows]


def _trim_row(r):
    while r and r[-1] == 0:
        r.pop()
    return r


def _bivariate_resultant(fld, A, B):
    """Res_y(A, B) in F_q[x] as the Sylvester determinant (Bareiss)."""
    m, n = len(A) - 1, len(B) - 1
    N = m + n
    M = []
    for i in range(n):
        row = [[] for _ in range(N)]
        for j in range(m + 1):
            row[i + j] = list(A[m - j])
        M.append(row)
    for i in range(m):
        row = [[] for _ in range(N)]
        for j in range(n + 1):
            row[i + j] = list(B[n - j])
        M.append(row)
    sign = 1
    prev = [1]
    for k in range(N - 1):
        if not M[k][k]:
            for i in range(k + 1, N):
                if M[i][k]:
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return []
        pk = M[k][k]
        for i in range(k + 1, N):
            mik = M[i][k]
            for j in range(k + 1, N):
                num = _pmul(fld, pk, M[i][j])
                if mik and M[k][j]:
                    num = _psub(fld, num, _pmul(fld, mik, M[k][j]))
                q, r = _pdivmod(fld, num, prev)
                if r:
                    raise InternalInconsistency("inexact Bareiss division")
                M[i][j] = q
            M[i][k] = []
        prev = pk
    det = M[N - 1][N - 1]
    if sign < 0:
        det = [fld.neg(c) for c in det]
    return det


def _candidate_x(fld, polys):
    """Polynomial in x vanishing at the x-coordinate of every common zero.

    Returns ``[]`` (the zero polynomial) when elimination degenerates.
    """
    g: list[int] = []
    rest = []
    for P in polys:
        if len(P) == 1:
            g = _pgcd(fld, g, P[0])
        else:
            rest.append(P)
    if len(g) == 1:
        return g
    if rest:
        # the form itself comes first; a smooth quartic is irreducible, so its
        # resultant against a partial only vanishes for non-reduced input
        pivot = polys[0] if len(polys[0]) > 1 else min(rest, key=len)
        for P in rest:
            if P is pivot:
                continue
            g = _pgcd(fld, g, _bivariate_resultant(fld, pivot, P))
            if len(g) == 1:
                break
    return g


def _roots_in_small_extensions(fld, g, seed):
    """Yield (E, roots) covering every root of g of degree <= 9 over fld."""
    g = _pmonic(fld, g)
    h = [0, 1]
    degs = {}
    for d in range(1, SINGULAR_DEGREE_BOUND + 1):
        h = _ppowmod(fld, h, fld.Q, g)
        gd = _pgcd(fld, g, _psub(fld, h, [0, 1]))
        degs[d] = len(gd) - 1
        below = max([degs[e] for e in range(1, d) if d % e == 0], default=0)
        if degs[d] <= below:
            continue
        E = extension(fld, d)
        emb = embedding(fld, E)
        roots = find_roots(UniPoly(E, [emb(c) for c in gd], raw=True), seed=seed)
        yield E, [r.value for r in roots]


def _common_zero_at(fld, polys, E, x0) -> bool:
    emb = embedding(fld, E)
    g: list[int] = []
    for P in polys:
        spec = _trim_row([_peval(E, [emb(c) for c in row], x0) for row in P])
        g = _pgcd(E, g, spec)
        if len(g) == 1:
            return False
    return True


def _singular_at_infinity(fld, forms) -> bool:
    g: list[int] = []
    for G in forms:
        row = [0] * (G.degree + 1)
        for (a, b, c), v in G.raw_terms().items():
            if c == 0:
                row[a] = v
        g = _pgcd(fld, g, _trim_row(row))
        if len(g) == 1:
            break
    if len(g) != 1:
        return True
    return all(G.coefficient((G.degree, 0, 0)).value == 0 for G in forms)


def _random_gl3(fld, rng):
    from .forms import _det3_raw

    while True:
        M = [[rng.randrange(fld.Q) for _ in range(3)] for _ in range(3)]
        if _det3_raw(fld, M):
            return M


def singular_point_search(C: PlaneQuartic, seed: int = DEFAULT_SEED, attempts: int = SMOOTH_ATTEMPTS):
    """None if C is smooth, else a short description of a singular point.

    Raises DegenerateAfterRetries when every coordinate change leaves the
    elimination identically zero.
    """
    fld = C.base
    rng = random.Random(seed)
    for attempt in range(attempts):
        if attempt == 0:
            G = C.F
        else:
            G = substitute_linear(C.F, _random_gl3(fld, rng))
        system = [G, partial(G, 0), partial(G, 1), partial(G, 2)]
        system = [S for S in system if not S.is_zero()]
        if len(system) == 1:
            return "all partial derivatives vanish identically"
        polys = [_bivariate(S) for S in system]
        g = _candidate_x(fld, polys)
        if not g:
            continue
        if _singular_at_infinity(fld, system):
            return "singular point on the line z = 0"
        if len(g) == 1:
            return None
        for E, roots in _roots_in_small_extensions(fld, g, seed):
            for x0 in roots:
                if _common_zero_at(fld, polys, E, x0):
                    return f"singular point with x = {FieldElem(E, x0)!r} over {E!r}"
        return None
    raise DegenerateAfterRetries(f"elimination degenerate after {attempts} coordinate changes")


def is_smooth(C: PlaneQuartic, seed: int = DEFAULT_SEED, strict: bool = False) -> bool:
    try:
        return singular_point_search(C, seed) is None
    except DegenerateAfterRetries:
        if strict:
            raise
        log.info("smoothness test degenerate for %r; treating as singular", C.F)
        return False


# ---------------------------------------------------------------------------
# hyperelliptic models y^2 + h(x) y = f(x)


@dataclass(frozen=True)
class HyperellipticG3:
    f: UniPoly
    h: UniPoly = None

    def __post_init__(self):
        if self.h is None:
            object.__setattr__(self, "h", UniPoly(self.f.field))
        if self.h.field != self.f.field:
            raise FieldMismatch("f and h over different fields")
        if self.f.degree > 8 or self.h.degree > 4:
            raise NotGenus3("need deg f <= 8 and deg h <= 4")

    @property
    def base(self) -> FieldSpec:
        return self.f.field


def _padded(c, n):
    return list(c) + [0] * (n - len(c))


def is_genus3(H: HyperellipticG3) -> bool:
    fld = H.base
    f, h = H.f._c, H.h._c
    if fld.p != 2:
        inv4 = fld.inv(4 % fld.p)
        F = _padd(fld, f, [fld.mul(c, inv4) for c in _pmul(fld, h, h)])
        if len(F) - 1 not in (7, 8):
            return False
        return len(_pgcd(fld, F, _pderiv(fld, F))) == 1
    if not h:
        return False

    def chart_ok(hh, ff):
        dh, df = _pderiv(fld, hh), _pderiv(fld, ff)
        w = _padd(fld, _pmul(fld, ff, _pmul(fld, dh, dh)), _pmul(fld, df, df))
        return len(_pgcd(fld, hh, w)) == 1

    rev_h = _trim_row(list(reversed(_padded(h, 5))))
    rev_f = _trim_row(list(reversed(_padded(f, 9))))
    return chart_ok(h, f) and chart_ok(rev_h, rev_f)


def _abs_trace(E, u):
    acc = u
    for _ in range(E.k - 1):
        u = E.mul(u, u)
        acc = E.add(acc, u)
    return acc


def _quadratic_solutions(E, b, c, inv4=None):
    """Number of v in E with v^2 + b v = c."""
    if E.p != 2:
        D = E.add(E.mul(E.mul(b, b), inv4), c)
        if D == 0:
            return 1
        return 2 if E.pow(D, (E.Q - 1) // 2) == 1 else 0
    if b == 0:
        return 1
    t = E.mul(c, E.inv(E.mul(b, b)))
    return 2 if _abs_trace(E, t) == 0 else 0


def count_hyperelliptic(H: HyperellipticG3, k: int = 1, check: bool = True) -> PointCount:
    """Count points of y^2 + h y = f; ``check=False`` skips the genus-3 test."""
    if check and not is_genus3(H):
        raise NotGenus3("model does not define a smooth genus-3 curve")
    E = extension(H.base, k)
    emb = embedding(H.base, E)
    f = [emb(c) for c in H.f._c]
    h = [emb(c) for c in H.h._c]
    inv4 = E.inv(4 % E.p) if E.p != 2 else None
    N = 0
    for x0 in range(E.Q):
        N += _quadratic_solutions(E, _peval(E, h, x0), _peval(E, f, x0), inv4)
    h4 = h[4] if len(h) > 4 else 0
    f8 = f[8] if len(f) > 8 else 0
    N += _quadratic_solutions(E, h4, f8, inv4)
    if N > 2 * E.Q + 2:
        raise InternalInconsistency(f"hyperelliptic count {N} exceeds 2q+2")
    return PointCount(k, N)


def count_hyperelliptic_bruteforce(H: HyperellipticG3, k: int = 1) -> PointCount:
    """Enumerate (x, y) in the affine chart and v in the chart at infinity."""
    E = extension(H.base, k)
    if E.Q * E.Q > BRUTE_LIMIT:
        raise FieldTooLarge("affine chart too large to enumerate")
    emb = embedding(H.base, E)
    f = [emb(c) for c in H.f._c]
    h = [emb(c) for c in H.h._c]
    add, mul, sub = E.add, E.mul, E.sub
    N = 0
    for x0 in range(E.Q):
        hv, fv = _peval(E, h, x0), _peval(E, f, x0)
        N += sum(sub(add(mul(y, y), mul(hv, y)), fv) == 0 for y in range(E.Q))
    h4 = h[4] if len(h) > 4 else 0
    f8 = f[8] if len(f) > 8 else 0
    N += sum(sub(add(mul(v, v), mul(h4, v)), f8) == 0 for v in range(E.Q))
    return PointCount(k, N)


# ---------------------------------------------------------------------------
# Frobenius non-classical machinery


def frobenius_form(C: PlaneQuartic) -> TernaryForm:
    """x^q F_x + y^q F_y + z^q F_z, a form of degree q + 3."""
    q = C.q
    out = TernaryForm(C.base, q + 3)
    for i, mono in enumerate(((q, 0, 0), (0, q, 0), (0, 0, q))):
        D = partial(C.F, i)
        if D:
            out = out + D.shift(mono)
    return out


def is_frobenius_nonclassical(C: PlaneQuartic) -> bool:
    try:
        divide_exact(frobenius_form(C), C.F)
    except NotDivisible:
        return False
    return True


def sv_bound(q: int) -> int:
    """Upper bound 2q + 6 for smooth quartics that are not Frobenius non-classical."""
    return 2 * q + 6


def hv_count(d: int, q: int) -> int:
    """Point count d(q - d + 2) of a Frobenius non-classical plane curve (may be <= 0)."""
    return d * (q - d + 2)


def derive_f2_fnc_quartic() -> PlaneQuartic:
    """The quartic over F_2 on which x, x^2 and x^8 are collinear.

    det(rows (x,y,z), (x^2,y^2,z^2), (x^8,y^8,z^8)) has degree 11; dividing
    out the seven F_2-rational lines leaves a quartic.
    """
    from .families import q8_form
    from .forms import product_of_linear_forms

    F2 = make_field(2)
    x, y, z = variables(F2)
    D = det3([[x, y, z], [x**2, y**2, z**2], [x**8, y**8, z**8]])
    elems = list(F2.elements())
    lines = [x + y * a + z * b for a in elems for b in elems] + [y + z * b for b in elems] + [z]
    if product_of_linear_forms(F2).degree != len(lines):
        raise InternalInconsistency("line enumeration disagrees with the line product")
    for L in lines:
        try:
            D = divide_exact(D, L)
        except NotDivisible as exc:
            raise InternalInconsistency(f"determinant not divisible by {L!r}") from exc
    if D != q8_form(F2):
        raise InternalInconsistency(f"derived quartic {D!r} differs from the expected one")
    return PlaneQuartic(D)
