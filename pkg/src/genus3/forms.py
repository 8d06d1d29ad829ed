"""Homogeneous polynomials in x, y, z over a finite field.

Coefficients are kept sparsely, keyed by exponent triples, as raw field
encodings (see :mod:`genus3.algebra`).  Monomials are ordered graded-lex
with x > y > z; since all monomials of a form share one degree this is
plain lex order on the exponent tuple.
"""

from __future__ import annotations

import heapq
import itertools

from .algebra import FieldElem, FieldSpec, embedding
from .errors import (
    FieldMismatch,
    FieldTooLarge,
    InhomogeneousDeterminant,
    InhomogeneousInput,
    NotDivisible,
    SingularMatrix,
    ZeroDivisor,
    ZeroPoint,
)

VARS = "xyz"


def monomials(d: int) -> list[tuple[int, int, int]]:
    """Exponent triples of degree d, largest first."""
    return [(a, b, d - a - b) for a in range(d, -1, -1) for b in range(d - a, -1, -1)]


class TernaryForm:
    __slots__ = ("field", "degree", "_t")

    def __init__(self, field: FieldSpec, degree: int, coeffs=None):
        terms = {}
        for exps, c in (coeffs or {}).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != 3 or min(exps) < 0 or sum(exps) != degree:
                raise InhomogeneousInput(f"monomial {exps} does not have degree {degree}")
            v = field.raw(c)
            if v:
                terms[exps] = v
        self.field = field
        self.degree = degree
        self._t = terms

    @classmethod
    def _make(cls, field, degree, terms) -> "TernaryForm":
        obj = object.__new__(cls)
        obj.field = field
        obj.degree = degree
        obj._t = terms
        return obj

    # -- inspection

    @property
    def coeffs(self) -> dict[tuple[int, int, int], FieldElem]:
        return {e: FieldElem(self.field, self._t[e]) for e in sorted(self._t, reverse=True)}

    def raw_terms(self) -> dict:
        return dict(self._t)

    def coefficient(self, exps) -> FieldElem:
        return FieldElem(self.field, self._t.get(tuple(exps), 0))

    def is_zero(self) -> bool:
        return not self._t

    def __bool__(self):
        return bool(self._t)

    def __len__(self):
        return len(self._t)

    def leading_monomial(self):
        return max(self._t) if self._t else None

    def __eq__(self, other):
        if not isinstance(other, TernaryForm):
            return NotImplemented
        if self.field != other.field or self._t != other._t:
            return False
        return self.degree == other.degree or not self._t

    def __hash__(self):
        return hash((self.field.key, self.degree, frozenset(self._t.items())))

    def __repr__(self):
        if not self._t:
            return "0"
        parts = []
        for e in sorted(self._t, reverse=True):
            mono = "*".join(
                v if n == 1 else f"{v}^{n}" for v, n in zip(VARS, e) if n
            )
            c = self._t[e]
            cs = repr(FieldElem(self.field, c))
            if " + " in cs:
                cs = f"({cs})"
            if not mono:
                parts.append(cs)
            else:
                parts.append(mono if c == 1 else f"{cs}*{mono}")
        return " + ".join(parts)

    # -- arithmetic

    def _scalar(self, c) -> int | None:
        if isinstance(c, (int, FieldElem)):
            return self.field.raw(c)
        return None

    def _check(self, other: "TernaryForm"):
        if other.field != self.field:
            raise FieldMismatch(f"{self.field!r} vs {other.field!r}")

    def __add__(self, other):
        if not isinstance(other, TernaryForm):
            return NotImplemented
        self._check(other)
        if not other._t:
            return self
        if not self._t:
            return other
        if other.degree != self.degree:
            raise InhomogeneousInput(f"degree {self.degree} + degree {other.degree}")
        add = self.field.add
        t = dict(self._t)
        for e, c in other._t.items():
            v = add(t.get(e, 0), c)
            if v:
                t[e] = v
            else:
                t.pop(e, None)
        return TernaryForm._make(self.field, self.degree, t)

    def __neg__(self):
        neg = self.field.neg
        return TernaryForm._make(self.field, self.degree, {e: neg(c) for e, c in self._t.items()})

    def __sub__(self, other):
        if not isinstance(other, TernaryForm):
            return NotImplemented
        return self + (-other)

    def scale(self, c) -> "TernaryForm":
        return self._scale_raw(self.field.raw(c))

    def _scale_raw(self, c: int) -> "TernaryForm":
        if not c:
            return TernaryForm._make(self.field, self.degree, {})
        mul = self.field.mul
        return TernaryForm._make(self.field, self.degree, {e: mul(v, c) for e, v in self._t.items()})

    def __mul__(self, other):
        c = self._scalar(other)
        if c is not None:
            return self._scale_raw(c)
        if not isinstance(other, TernaryForm):
            return NotImplemented
        self._check(other)
        add, mul = self.field.add, self.field.mul
        t: dict = {}
        for (a1, b1, c1), u in self._t.items():
            for (a2, b2, c2), v in other._t.items():
                e = (a1 + a2, b1 + b2, c1 + c2)
                w = add(t.get(e, 0), mul(u, v))
                if w:
                    t[e] = w
                else:
                    t.pop(e, None)
        return TernaryForm._make(self.field, self.degree + other.degree, t)

    def __rmul__(self, other):
        c = self._scalar(other)
        if c is None:
            return NotImplemented
        return self._scale_raw(c)

    def __pow__(self, e: int):
        result = constant(self.field, 1)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def shift(self, exps) -> "TernaryForm":
        """Multiply by the monomial x^a y^b z^c."""
        a, b, c = exps
        t = {(e[0] + a, e[1] + b, e[2] + c): v for e, v in self._t.items()}
        return TernaryForm._make(self.field, self.degree + a + b + c, t)

    # -- calculus and evaluation

    def partial(self, var) -> "TernaryForm":
        return partial(self, var)

    def __call__(self, *point) -> FieldElem:
        return evaluate(self, point)

    def substitute_linear(self, M) -> "TernaryForm":
        return substitute_linear(self, M)


def make_form(field: FieldSpec, degree: int, coeffs=None) -> TernaryForm:
    return TernaryForm(field, degree, coeffs)


def constant(field: FieldSpec, c) -> TernaryForm:
    return TernaryForm(field, 0, {(0, 0, 0): c})


def variables(field: FieldSpec) -> tuple[TernaryForm, TernaryForm, TernaryForm]:
    one = {(1, 0, 0): 1}, {(0, 1, 0): 1}, {(0, 0, 1): 1}
    return tuple(TernaryForm(field, 1, c) for c in one)


def _var_index(var) -> int:
    if isinstance(var, int) and var in (0, 1, 2):
        return var
    if var in ("x", "y", "z"):
        return VARS.index(var)
    raise ValueError(f"unknown variable {var!r}")


def partial(F: TernaryForm, var) -> TernaryForm:
    i = _var_index(var)
    fld = F.field
    mul, p = fld.mul, fld.p
    t = {}
    for e, c in F._t.items():
        n = e[i] % p
        if n:
            e2 = list(e)
            e2[i] -= 1
            t[tuple(e2)] = mul(n, c)
    return TernaryForm._make(fld, max(F.degree - 1, 0), t)


def _coordinate_field(point) -> FieldSpec:
    fields = {c.field for c in point if isinstance(c, FieldElem)}
    if len(fields) > 1:
        raise FieldMismatch("point coordinates live in different fields")
    return fields.pop() if fields else None


def evaluate(F: TernaryForm, point) -> FieldElem:
    """F(point).  Coordinates may lie in an extension of F's field."""
    if len(point) != 3:
        raise ValueError("a point in P^2 has three coordinates")
    E = _coordinate_field(point) or F.field
    coords = [E.raw(c) for c in point]
    if not any(coords):
        raise ZeroPoint("(0:0:0) is not a projective point")
    emb = embedding(F.field, E)
    add, mul, pw = E.add, E.mul, E.pow
    powers = [[pw(c, n) for n in range(F.degree + 1)] for c in coords]
    acc = 0
    for (a, b, c), v in F._t.items():
        acc = add(acc, mul(emb(v), mul(powers[0][a], mul(powers[1][b], powers[2][c]))))
    return FieldElem(E, acc)


def divide_exact(G: TernaryForm, F: TernaryForm) -> TernaryForm:
    """Quotient Q with G = Q*F, or raise NotDivisible.

    Single-divisor division under graded lex: the leading monomial of the
    running remainder is cancelled when F's leading monomial divides it and
    moved to the residue otherwise.
    """
    if F.field != G.field:
        raise FieldMismatch(f"{G.field!r} vs {F.field!r}")
    if not F._t:
        raise ZeroDivisor("division by the zero form")
    fld = F.field
    qdeg = G.degree - F.degree
    if not G._t:
        return TernaryForm._make(fld, max(qdeg, 0), {})
    if qdeg < 0:
        raise NotDivisible(f"degree {G.degree} < divisor degree {F.degree}")
    add, mul, neg, inv = fld.add, fld.mul, fld.neg, fld.inv
    lm = max(F._t)
    lc_inv = inv(F._t[lm])
    rest = [(e, c) for e, c in F._t.items() if e != lm]
    rem = dict(G._t)
    heap = [tuple(-x for x in e) for e in rem]
    heapq.heapify(heap)
    quo = {}
    while heap:
        e = tuple(-x for x in heapq.heappop(heap))
        c = rem.pop(e, 0)
        if not c:
            continue
        s = (e[0] - lm[0], e[1] - lm[1], e[2] - lm[2])
        if min(s) < 0:
            raise NotDivisible(f"residue contains monomial {e}")
        qc = mul(c, lc_inv)
        quo[s] = qc
        nq = neg(qc)
        for f_e, f_c in rest:
            t = (f_e[0] + s[0], f_e[1] + s[1], f_e[2] + s[2])
            old = rem.get(t)
            v = add(old or 0, mul(nq, f_c))
            if v:
                rem[t] = v
                if old is None:
                    heapq.heappush(heap, tuple(-x for x in t))
            elif old is not None:
                del rem[t]
    return TernaryForm._make(fld, qdeg, quo)


def det3(M) -> TernaryForm:
    """Determinant of a 3x3 matrix of forms by cofactor expansion."""
    rows = [list(r) for r in M]
    if len(rows) != 3 or any(len(r) != 3 for r in rows):
        raise ValueError("det3 needs a 3x3 matrix")
    fields = {e.field for r in rows for e in r}
    if len(fields) != 1:
        raise FieldMismatch("matrix entries over different fields")
    fld = fields.pop()
    total = None
    for perm in itertools.permutations(range(3)):
        sign = _perm_sign(perm)
        a, b, c = (rows[i][perm[i]] for i in range(3))
        if not (a and b and c):
            continue
        term = a * b * c
        if sign < 0:
            term = -term
        if total is None:
            total = term
        elif term.degree != total.degree:
            raise InhomogeneousDeterminant(
                f"products of degree {total.degree} and {term.degree}"
            )
        else:
            total = total + term
    if total is None:
        return TernaryForm._make(fld, sum(rows[i][i].degree for i in range(3)), {})
    return total


def _perm_sign(perm) -> int:
    sign = 1
    for i in range(3):
        for j in range(i + 1, 3):
            if perm[i] > perm[j]:
                sign = -sign
    return sign


def _det3_raw(fld, M):
    add, sub, mul = fld.add, fld.sub, fld.mul

    def minor(a, b, c, d):
        return sub(mul(a, d), mul(b, c))

    t0 = mul(M[0][0], minor(M[1][1], M[1][2], M[2][1], M[2][2]))
    t1 = mul(M[0][1], minor(M[1][0], M[1][2], M[2][0], M[2][2]))
    t2 = mul(M[0][2], minor(M[1][0], M[1][1], M[2][0], M[2][1]))
    return add(sub(t0, t1), t2)


def substitute_linear(F: TernaryForm, M) -> TernaryForm:
    """F(M v) for the column vector v = (x, y, z).

    Row i of M gives the linear form that replaces the i-th variable, so
    ``(x, y, z) -> (x, -y, z)`` is ``[[1,0,0],[0,-1,0],[0,0,1]]``.
    """
    fld = F.field
    R = [[fld.raw(c) for c in row] for row in M]
    if _det3_raw(fld, R) == 0:
        raise SingularMatrix("coordinate change is not invertible")
    lin = [TernaryForm._make(fld, 1, {e: c for e, c in zip(((1, 0, 0), (0, 1, 0), (0, 0, 1)), row) if c}) for row in R]
    one = constant(fld, 1)
    powers = [[one] for _ in range(3)]
    for i in range(3):
        for _ in range(F.degree):
            powers[i].append(powers[i][-1] * lin[i])
    out = TernaryForm._make(fld, F.degree, {})
    for (a, b, c), v in F._t.items():
        out = out + (powers[0][a] * powers[1][b] * powers[2][c])._scale_raw(v)
    return out


def product_of_linear_forms(field: FieldSpec) -> TernaryForm:
    """Product of one normalised representative of every F_q-rational line."""
    if field.Q > 9:
        raise FieldTooLarge(f"q = {field.Q} > 9")
    x, y, z = variables(field)
    elems = list(field.elements())
    lines = [x + y * a + z * b for a in elems for b in elems]
    lines += [y + z * b for b in elems]
    lines.append(z)
    out = constant(field, 1)
    for L in lines:
        out = out * L
    return out
