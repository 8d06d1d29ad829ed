"""Explicit quartic families, registry curves and the HLP construction."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field as dc_field

from .algebra import FieldElem, FieldSpec, embed, is_square, make_field
from .curves import PlaneQuartic, count_points, is_smooth
from .errors import (
    CharacteristicTwo,
    ConditionNotSquare,
    FieldMismatch,
    InternalInconsistency,
    InvalidInput,
    LineOnCurve,
    SingularEllipticFactor,
    SingularModel,
    UnknownName,
    ZeroForm,
)
from .forms import TernaryForm, variables

log = logging.getLogger(__name__)

ARITY = {"C": 1, "D": 2, "X": 2, "Y": 2, "HLP": 3}


def coerce(field: FieldSpec, v) -> FieldElem:
    """Integers are prime-field residues; elements of a subfield are embedded."""
    if isinstance(v, FieldElem) and v.field != field:
        if v.field.p != field.p:
            raise FieldMismatch(f"{v!r} is not in characteristic {field.p}")
        return embed(v, v.field, field)
    return field(v)


@dataclass(frozen=True)
class FamilySpec:
    name: str
    params: tuple

    def __post_init__(self):
        if self.name not in ARITY:
            raise UnknownName(f"unknown family {self.name!r}")
        if len(self.params) != ARITY[self.name]:
            raise InvalidInput(f"family {self.name} takes {ARITY[self.name]} parameters, got {len(self.params)}")


def _family_form(name, fld, params) -> TernaryForm:
    x, y, z = variables(fld)
    if name == "C":
        (lam,) = params
        return x**4 + y**4 + z**4 - (x**2 * y**2 + y**2 * z**2 + x**2 * z**2) * (lam + 1)
    if name == "D":
        a, b = params
        return x**3 * z + y**3 * z + x**2 * y**2 + x * y * z**2 * a + z**4 * b
    if name == "X":
        a, b = params
        return (
            x**2 * y**2 + y**2 * z**2 + x**2 * z**2
            + (x**3 * y + y**3 * z + x * z**3) * a
            + (x**3 * z + x * y**3 + y * z**3) * b
        )
    if name == "Y":
        a, b = params
        return (x**2 * 3 + y**2) ** 2 + x * (x**2 - y**2) * z * a + z**4 * b
    return _hlp_form(fld, *params)


def family_curve(name: str, field: FieldSpec, params) -> PlaneQuartic:
    spec = FamilySpec(name, tuple(params))
    vals = [coerce(field, v) for v in spec.params]
    if name == "HLP":
        return hlp_quartic(field, *vals)
    F = _family_form(name, field, vals)
    if F.is_zero():
        raise ZeroForm(f"{name}{tuple(spec.params)} is the zero form")
    return PlaneQuartic(F)


# ---------------------------------------------------------------------------
# elliptic factors and the HLP quartic


@dataclass(frozen=True)
class EllipticModel:
    """y^2 = x(x-1)(x-lam) (kind "E") or y^2 = x(x^2+ax+b) (kind "E'")."""

    kind: str
    params: tuple

    @classmethod
    def legendre(cls, lam):
        return cls("E", (lam,))

    @classmethod
    def split(cls, a, b):
        return cls("E'", (a, b))

    def cubic(self, fld):
        """Coefficients (c0, c1, c2, c3) of the right-hand side over fld."""
        if self.kind == "E":
            lam = coerce(fld, self.params[0])
            return (fld.zero, lam, -(lam + 1), fld.one)
        if self.kind == "E'":
            a, b = (coerce(fld, v) for v in self.params)
            return (fld.zero, b, a, fld.one)
        raise UnknownName(f"unknown elliptic model {self.kind!r}")

    def check(self, fld):
        if fld.p == 2:
            raise CharacteristicTwo("elliptic models need odd characteristic")
        if self.kind == "E":
            lam = coerce(fld, self.params[0])
            if lam == 0 or lam == 1:
                raise SingularModel(f"E_lambda is singular for lambda = {lam!r}")
        else:
            a, b = (coerce(fld, v) for v in self.params)
            if b == 0 or a * a - 4 * b == 0:
                raise SingularModel(f"E'_(a,b) is singular for (a, b) = ({a!r}, {b!r})")


def count_elliptic(E: EllipticModel, fld: FieldSpec) -> int:
    E.check(fld)
    c = [v.value for v in E.cubic(fld)]
    add, mul, pw = fld.add, fld.mul, fld.pow
    half = (fld.Q - 1) // 2
    N = 1
    for x in range(fld.Q):
        v = add(mul(add(mul(add(mul(c[3], x), c[2]), x), c[1]), x), c[0])
        if v == 0:
            N += 1
        elif pw(v, half) == 1:
            N += 2
    if (N - fld.Q - 1) ** 2 > 4 * fld.Q:
        raise InternalInconsistency(f"elliptic count {N} violates the Hasse bound")
    return N


def _hlp_form(fld, lam, a, b) -> TernaryForm:
    x, y, z = variables(fld)
    lhs = (x**4 * lam + y**4 * b + z**4 * b + x**2 * y**2 * (lam * a) + x**2 * z**2 * (lam * a)) * (lam - 1)
    rhs = y**2 * z**2 * (lam * a * a - 2 * b * (lam + 1))
    return lhs - rhs


def hlp_quartic(fld: FieldSpec, lam, a, b) -> PlaneQuartic:
    if fld.p == 2:
        raise CharacteristicTwo("the HLP construction needs odd characteristic")
    lam, a, b = (coerce(fld, v) for v in (lam, a, b))
    cond = lam * (lam - 1) * (a * a * lam - 4 * b)
    if cond == 0 or not is_square(cond):
        raise ConditionNotSquare(f"lambda(lambda-1)(a^2 lambda-4b) = {cond!r} is not a nonzero square")
    if b == 0 or a * a - 4 * b == 0:
        raise SingularEllipticFactor(f"E'_(a,b) is singular for (a, b) = ({a!r}, {b!r})")
    return PlaneQuartic(_hlp_form(fld, lam, a, b))


def hlp_predicted_count(fld: FieldSpec, lam, a, b) -> int:
    q = fld.Q
    return count_elliptic(EllipticModel.legendre(lam), fld) + 2 * count_elliptic(EllipticModel.split(a, b), fld) - 2 * q - 2


def check_hlp_relation(fld: FieldSpec, lam, a, b) -> bool:
    C = hlp_quartic(fld, lam, a, b)
    return count_points(C).N == hlp_predicted_count(fld, lam, a, b)


# ---------------------------------------------------------------------------
# registry


def q8_form(fld: FieldSpec) -> TernaryForm:
    x, y, z = variables(fld)
    return (
        x**4 + y**4 + z**4 + x**2 * y**2 + y**2 * z**2 + x**2 * z**2
        + x**2 * y * z + x * y**2 * z + x * y * z**2
    )


def fermat4(fld: FieldSpec) -> PlaneQuartic:
    x, y, z = variables(fld)
    return PlaneQuartic(x**4 + y**4 + z**4)


def _example4(fld):
    x, y, z = variables(fld)
    return y**2 * z**2 + y * z**3 + x * y**3 + x**2 * y**2 + x**3 * z + x * z**3


def _misprint(fld):
    x, y, z = variables(fld)
    return (
        x**4 + y**4 + z**4 + x**2 * y**2 + y**2 * z**2 + x**2 * z**2
        + x**2 * y * z + x * y**2 * z
    )


SPECIAL = {
    "example4_f2": lambda: PlaneQuartic(_example4(make_field(2))),
    "misprint_f2": lambda: PlaneQuartic(_misprint(make_field(2))),
    "q8_f8": lambda: PlaneQuartic(q8_form(make_field(2, 3))),
    "fermat4_f9": lambda: fermat4(make_field(3, 2)),
}


def special_curve(name: str, field: FieldSpec | None = None) -> PlaneQuartic:
    """Registry curve by name; ``fermat4`` needs an explicit field."""
    if name == "fermat4":
        if field is None:
            raise InvalidInput("fermat4 needs a field")
        return fermat4(field)
    try:
        return SPECIAL[name]()
    except KeyError:
        raise UnknownName(f"unknown special curve {name!r}") from None


@dataclass(frozen=True)
class Witness:
    q: int
    status: str
    N: int | None = None
    family: str | None = None
    params: tuple = ()
    special: str | None = None

    def curve(self) -> PlaneQuartic:
        if self.special:
            return special_curve(self.special)
        return family_curve(self.family, make_field(*_pk(self.q)), self.params)

    def label(self) -> str:
        if self.special:
            return self.special
        return f"{self.family}{self.params}"


def _pk(q):
    from .algebra import prime_power

    return prime_power(q)


def _w(q, N, family=None, params=(), special=None):
    return Witness(q, "explicit", N, family, tuple(params), special)


WITNESSES = {
    2: _w(2, 7, special="example4_f2"),
    8: _w(8, 24, special="q8_f8"),
    9: _w(9, 28, special="fermat4_f9"),
    29: _w(29, 60, "C", (2,)),
    31: _w(31, 62, "D", (4, 2)),
    37: _w(37, 72, "HLP", (7, 0, 2)),
    41: _w(41, 78, "X", (-7, 8)),
    43: _w(43, 80, "C", (10,)),
    49: _w(49, 92, "C", (-1,)),
    53: _w(53, 96, "C", (2,)),
    59: _w(59, 102, "Y", (4, 6)),
    61: _w(61, 107, "D", (29, 34)),
    67: _w(67, 116, "C", (30,)),
    71: _w(71, 120, "C", (37,)),
    73: _w(73, 122, "D", (2, 48)),
    79: _w(79, 131, "D", (11, 8)),
    83: _w(83, 136, "HLP", (5, 4, 2)),
    89: _w(89, 144, "C", (13,)),
    97: _w(97, 155, "D", (56, 79)),
}
for _q in (27, 32, 64, 81):
    WITNESSES[_q] = Witness(_q, "external-reference")
for _q in (3, 4, 5, 7, 11, 13, 16, 17, 19, 23, 25):
    WITNESSES[_q] = Witness(_q, "serre-table")
WITNESSES[47] = Witness(47, "open")


# ---------------------------------------------------------------------------
# search


@dataclass
class SearchResult:
    hits: list = dc_field(default_factory=list)
    tried: int = 0
    skipped: int = 0
    budget_exceeded: bool = False


def _tuples(fld, arity):
    elems = list(fld.elements())
    if arity == 1:
        for e in elems:
            yield (e,)
        return
    for head in elems:
        for rest in _tuples(fld, arity - 1):
            yield (head,) + rest


def search_family(name: str, fld: FieldSpec, target: int | None = None, budget: int | None = None) -> SearchResult:
    """Sweep the family's parameters in field enumeration order.

    Members that contain a line, are degenerate or singular are skipped.
    The point count runs first and only candidate hits pay for the
    smoothness test, which is the expensive part.
    """
    if name not in ARITY:
        raise UnknownName(f"unknown family {name!r}")
    arity = ARITY[name]
    out = SearchResult()
    for params in _tuples(fld, arity):
        if budget is not None and out.tried >= budget:
            out.budget_exceeded = True
            break
        out.tried += 1
        try:
            C = family_curve(name, fld, params)
            N = count_points(C).N
        except (ZeroForm, LineOnCurve, ConditionNotSquare, SingularEllipticFactor):
            out.skipped += 1
            continue
        if target is not None and N != target:
            continue
        if not is_smooth(C):
            out.skipped += 1
            continue
        out.hits.append((params, N))
    return out


# ---------------------------------------------------------------------------
# exhaustive scan over F_2


@dataclass
class ScanSummary:
    forms: int
    orbits: int
    smooth_orbits: int
    smooth_forms: int
    max_smooth_count: int
    count_histogram: dict
    fnc_counts: list
    mismatches: list


def _gl3_f2():
    import itertools

    F2 = make_field(2)
    from .forms import _det3_raw

    for bits in itertools.product((0, 1), repeat=9):
        M = [list(bits[0:3]), list(bits[3:6]), list(bits[6:9])]
        if _det3_raw(F2, M):
            yield M


def exhaustive_f2_scan() -> ScanSummary:
    """Classify all 2^15 quartic forms over F_2 up to GL_3(F_2).

    Point counts, smoothness and the FNC property are invariant under
    linear coordinate changes, so they are computed once per orbit.
    """
    import numpy as np

    from .curves import is_frobenius_nonclassical, singular_point_search
    from .forms import monomials, substitute_linear

    F2 = make_field(2)
    monos = monomials(4)
    index = {e: i for i, e in enumerate(monos)}

    def mask_of(F):
        return sum(1 << index[e] for e in F.raw_terms())

    def form_of(mask):
        return TernaryForm(F2, 4, {e: 1 for i, e in enumerate(monos) if mask >> i & 1})

    n = len(monos)
    masks = np.arange(1 << n, dtype=np.int64)
    bits = [(masks >> i) & 1 for i in range(n)]
    canon = masks.copy()
    for M in _gl3_f2():
        images = [mask_of(substitute_linear(form_of(1 << i), M)) for i in range(n)]
        img = np.zeros_like(masks)
        for i in range(n):
            img ^= bits[i] * images[i]
        np.minimum(canon, img, out=canon)
    reps, sizes = np.unique(canon[1:], return_counts=True)

    # independent count: F(P) is the parity of the monomials equal to 1 at P
    points = [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 0), (1, 0, 1), (0, 1, 1), (1, 1, 1)]
    on_curve = []
    for P in points:
        pm = sum(1 << i for i, e in enumerate(monos) if all(P[j] or not e[j] for j in range(3)))
        on_curve.append(np.array([bin(int(v)).count("1") & 1 for v in (masks & pm)]) == 0)
    brute = np.sum(on_curve, axis=0)

    hist: dict = {}
    fnc, mismatches = [], []
    smooth_orbits = smooth_forms = 0
    best = -1
    for rep, size in zip(reps.tolist(), sizes.tolist()):
        C = PlaneQuartic(form_of(rep))
        if singular_point_search(C) is not None:
            continue
        smooth_orbits += 1
        smooth_forms += size
        N = count_points(C).N
        if N != int(brute[rep]):
            mismatches.append(rep)
        hist[N] = hist.get(N, 0) + size
        best = max(best, N)
        if is_frobenius_nonclassical(C):
            fnc.append((rep, N))
    return ScanSummary(
        forms=(1 << n) - 1,
        orbits=len(reps),
        smooth_orbits=smooth_orbits,
        smooth_forms=smooth_forms,
        max_smooth_count=best,
        count_histogram=dict(sorted(hist.items())),
        fnc_counts=fnc,
        mismatches=mismatches,
    )
