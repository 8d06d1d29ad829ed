"""Finite fields F_{p^k} and univariate polynomials over them.

A field is F_p[t] modulo a monic irreducible.  Elements are stored as the
integer ``sum(c_i * p**i)``, i.e. their coefficient sequence read as base-p
digits; ``FieldElem.coeffs`` recovers the sequence.  Prime fields work on
bare residues, fields with at most ``TABLE_LIMIT`` elements use log/Zech
tables, larger ones multiply coefficient vectors directly.

The ``add``/``mul``/... methods of :class:`FieldSpec` act on these raw
integers and are what the inner loops elsewhere in the package use;
:class:`FieldElem` wraps them with operators.
"""

from __future__ import annotations

import random
import threading
from functools import lru_cache

from .errors import (
    DegreeUnsupported,
    DivisionByZero,
    FieldMismatch,
    NoRootFound,
    NotASquare,
    NotASubfield,
    NotPrime,
    NotPrimePower,
    ZeroPolynomial,
)

DEFAULT_SEED = 0x67335F47
MAX_CARDINALITY = 97**9
TABLE_LIMIT = 4096


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_factors(n: int) -> list[int]:
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1 if f == 2 else 2
    if n > 1:
        out.append(n)
    return out


def prime_power(q: int) -> tuple[int, int]:
    """Return ``(p, e)`` with ``q == p**e``; raise NotPrimePower otherwise."""
    if not isinstance(q, int) or q < 2:
        raise NotPrimePower(f"{q!r} is not a prime power")
    ps = prime_factors(q)
    if len(ps) != 1:
        raise NotPrimePower(f"{q} is not a prime power")
    p, e = ps[0], 0
    while q > 1:
        q //= p
        e += 1
    return p, e


# ---------------------------------------------------------------------------
# F_p[t] on plain int lists (constant term first), used to set fields up


def _fp_trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _fp_sub(a, b, p):
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    for i, c in enumerate(b):
        a[i] = (a[i] - c) % p
    return _fp_trim(a)


def _fp_mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _fp_trim([c % p for c in out])


def _fp_divmod(a, m, p):
    a = _fp_trim(list(a))
    dm = len(m) - 1
    inv = pow(m[-1], p - 2, p)
    quo = [0] * max(len(a) - dm, 0)
    while len(a) - 1 >= dm:
        c = a[-1] * inv % p
        s = len(a) - 1 - dm
        quo[s] = c
        for j in range(dm + 1):
            a[s + j] = (a[s + j] - c * m[j]) % p
        _fp_trim(a)
    return _fp_trim(quo), a


def _fp_mod(a, m, p):
    return _fp_divmod(a, m, p)[1]


def _fp_powmod(a, e, m, p):
    result = [1]
    base = _fp_mod(a, m, p)
    while e:
        if e & 1:
            result = _fp_mod(_fp_mul(result, base, p), m, p)
        e >>= 1
        if e:
            base = _fp_mod(_fp_mul(base, base, p), m, p)
    return result


def _fp_gcd(a, b, p):
    a, b = _fp_trim(list(a)), _fp_trim(list(b))
    while b:
        a, b = b, _fp_mod(a, b, p)
    if a:
        inv = pow(a[-1], p - 2, p)
        a = [c * inv % p for c in a]
    return a


def _fp_inverse(a, m, p):
    """Inverse of ``a`` modulo ``m`` in F_p[t] (extended Euclid)."""
    r0, r1 = list(m), _fp_trim(list(a))
    s0, s1 = [], [1]
    while r1:
        q, r = _fp_divmod(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, _fp_sub(s0, _fp_mul(q, s1, p), p)
    if len(r0) != 1:
        raise DivisionByZero("element is not invertible")
    inv = pow(r0[0], p - 2, p)
    return [c * inv % p for c in s0]


def is_irreducible_fp(poly, p: int) -> bool:
    """Ben-Or test: no factor of degree <= k/2 divides ``poly``."""
    f = _fp_trim(list(poly))
    k = len(f) - 1
    if k < 1:
        return False
    if k == 1:
        return True
    x = [0, 1]
    h = x
    for _ in range(k // 2):
        h = _fp_powmod(h, p, f, p)
        if len(_fp_gcd(f, _fp_sub(h, x, p), p)) > 1:
            return False
    return True


def smallest_irreducible(p: int, k: int) -> tuple[int, ...]:
    if k == 1:
        return (0, 1)
    # candidates in increasing order of sum(c_i p^i), constant term lowest
    for v in range(p**k):
        low = []
        for _ in range(k):
            v, c = divmod(v, p)
            low.append(c)
        if low[0] == 0:
            continue
        cand = tuple(low) + (1,)
        if is_irreducible_fp(cand, p):
            return cand
    raise AssertionError("unreachable: irreducibles exist in every degree")


# ---------------------------------------------------------------------------


class FieldSpec:
    """The field F_p[t]/(modulus) with ``Q = p**k`` elements."""

    def __init__(self, p: int, modulus):
        self.p = p
        self.modulus = tuple(modulus)
        self.k = len(self.modulus) - 1
        self.Q = p**self.k
        self.key = (p, self.modulus)
        self._lock = threading.RLock()
        self._embeddings: dict = {}
        self._primitive = None
        self.kernel_tables = None  # filled lazily by genus3._kernels
        self._pows = [p**i for i in range(self.k)]
        if self.k == 1:
            self.add, self.sub, self.neg = self._add_p, self._sub_p, self._neg_p
            self.mul, self.inv, self.pow = self._mul_p, self._inv_p, self._pow_p
        else:
            self.add, self.sub, self.neg = self._add_g, self._sub_g, self._neg_g
            self.mul, self.inv, self.pow = self._mul_g, self._inv_g, self._pow_g
            if self.Q <= TABLE_LIMIT:
                self._build_tables()

    # -- identity

    def __eq__(self, other):
        return isinstance(other, FieldSpec) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        return f"GF({self.p})" if self.k == 1 else f"GF({self.p}^{self.k})"

    @property
    def characteristic(self) -> int:
        return self.p

    # -- element construction

    def __call__(self, value) -> "FieldElem":
        if isinstance(value, FieldElem):
            if value.field is not self and value.field != self:
                raise FieldMismatch(f"{value!r} does not belong to {self!r}")
            return value
        if isinstance(value, int):
            return FieldElem(self, value % self.p)
        coeffs = [int(c) % self.p for c in value]
        if len(coeffs) > self.k:
            raise FieldMismatch(f"{len(coeffs)} coefficients for a degree-{self.k} field")
        return FieldElem(self, self.encode(coeffs))

    @property
    def zero(self) -> "FieldElem":
        return FieldElem(self, 0)

    @property
    def one(self) -> "FieldElem":
        return FieldElem(self, 1)

    @property
    def gen(self) -> "FieldElem":
        """The class of t (for k = 1 this is the residue 0, following t mod t)."""
        return FieldElem(self, self.p % self.Q if self.k > 1 else 0)

    def raw(self, value) -> int:
        """Integer encoding of an int residue or an element of this field."""
        if isinstance(value, int):
            return value % self.p
        return self(value).value

    def elements(self):
        """All elements, ordered by encoding (constant coefficient lowest)."""
        for v in range(self.Q):
            yield FieldElem(self, v)

    def random_element(self, rng: random.Random) -> "FieldElem":
        return FieldElem(self, rng.randrange(self.Q))

    def encode(self, coeffs) -> int:
        v = 0
        for c in reversed(list(coeffs)):
            v = v * self.p + c
        return v

    def digits(self, v: int) -> list[int]:
        p = self.p
        out = []
        for _ in range(self.k):
            v, c = divmod(v, p)
            out.append(c)
        return out

    # -- prime field arithmetic on residues

    def _add_p(self, a, b):
        return (a + b) % self.p

    def _sub_p(self, a, b):
        return (a - b) % self.p

    def _neg_p(self, a):
        return -a % self.p

    def _mul_p(self, a, b):
        return a * b % self.p

    def _inv_p(self, a):
        if a == 0:
            raise DivisionByZero("inverse of zero")
        return pow(a, self.p - 2, self.p)

    def _pow_p(self, a, e):
        if e < 0:
            a, e = self._inv_p(a), -e
        return pow(a, e, self.p)

    # -- extension arithmetic on coefficient vectors

    def _add_g(self, a, b):
        p = self.p
        out = 0
        for w in self._pows:
            out += ((a % p + b % p) % p) * w
            a //= p
            b //= p
        return out

    def _neg_g(self, a):
        p = self.p
        out = 0
        for w in self._pows:
            out += (-(a % p) % p) * w
            a //= p
        return out

    def _sub_g(self, a, b):
        return self.add(a, self.neg(b))

    def _mul_g(self, a, b):
        if not a or not b:
            return 0
        p, k, m = self.p, self.k, self.modulus
        da, db = self.digits(a), self.digits(b)
        prod = [0] * (2 * k - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] += x * y
        for t in range(2 * k - 2, k - 1, -1):
            c = prod[t] % p
            if c:
                for j in range(k):
                    prod[t - k + j] -= c * m[j]
        return self.encode([c % p for c in prod[:k]])

    def _inv_g(self, a):
        if a == 0:
            raise DivisionByZero("inverse of zero")
        inv = _fp_inverse(_fp_trim(self.digits(a)), self.modulus, self.p)
        return self.encode(inv + [0] * (self.k - len(inv)))

    def _pow_g(self, a, e):
        if e < 0:
            a, e = self.inv(a), -e
        result = 1
        while e:
            if e & 1:
                result = self.mul(result, a)
            e >>= 1
            if e:
                a = self.mul(a, a)
        return result

    # -- small extension fields: log / Zech tables

    def _build_tables(self):
        n = self.Q - 1
        g = self.primitive_raw()
        exp = [0] * (2 * n + 1)
        e = 1
        for i in range(n):
            exp[i] = e
            e = self._mul_g(e, g)
        exp[n : 2 * n] = exp[:n]
        exp[2 * n] = exp[0]
        log = [-1] * self.Q
        for i in range(n):
            log[exp[i]] = i
        p = self.p
        zech = [-1] * n
        for i in range(n):
            e = exp[i]
            zech[i] = log[e - e % p + (e % p + 1) % p]
        self._n, self._exp, self._log, self._zech = n, exp, log, zech
        self._negt = [self._neg_g(a) for a in range(self.Q)]
        self.add, self.sub, self.neg = self._add_t, self._sub_t, self._negt.__getitem__
        self.mul, self.inv, self.pow = self._mul_t, self._inv_t, self._pow_t

    def _add_t(self, a, b):
        if not a:
            return b
        if not b:
            return a
        log = self._log
        la = log[a]
        d = log[b] - la
        if d < 0:
            d += self._n
        z = self._zech[d]
        if z < 0:
            return 0
        return self._exp[la + z]

    def _sub_t(self, a, b):
        return self._add_t(a, self._negt[b])

    def _mul_t(self, a, b):
        if not a or not b:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    def _inv_t(self, a):
        if a == 0:
            raise DivisionByZero("inverse of zero")
        return self._exp[self._n - self._log[a]]

    def _pow_t(self, a, e):
        if a == 0:
            if e < 0:
                raise DivisionByZero("inverse of zero")
            return 1 if e == 0 else 0
        return self._exp[(self._log[a] * e) % self._n]

    # -- structure

    def primitive_raw(self) -> int:
        """Smallest (by encoding) generator of the multiplicative group."""
        if self._primitive is None:
            n = self.Q - 1
            rs = prime_factors(n) if n > 1 else []
            for g in range(1, self.Q):
                if all(self._pow_any(g, n // r) != 1 for r in rs):
                    self._primitive = g
                    break
        return self._primitive

    def _pow_any(self, a, e):
        return self._pow_p(a, e) if self.k == 1 else self._pow_g(a, e)

    def _embedding_powers(self, sub: "FieldSpec") -> list[int]:
        with self._lock:
            cached = self._embeddings.get(sub.key)
            if cached is None:
                image = UniPoly(self, list(sub.modulus))
                roots = find_roots(image)
                if not roots:
                    raise NoRootFound(f"{sub!r} modulus has no root in {self!r}")
                r = roots[0].value
                cached = [1]
                for _ in range(sub.k - 1):
                    cached.append(self.mul(cached[-1], r))
                self._embeddings[sub.key] = cached
        return cached


@lru_cache(maxsize=None)
def _cached_field(p: int, modulus: tuple) -> FieldSpec:
    return FieldSpec(p, modulus)


def make_field(p: int, k: int = 1, modulus=None) -> FieldSpec:
    """The field with ``p**k`` elements.

    By default the modulus is the lexicographically smallest monic
    irreducible of degree k (coefficients compared from the constant term
    up).  Repeated calls return the same object.
    """
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if k < 1 or p**k > MAX_CARDINALITY:
        raise DegreeUnsupported(f"degree {k} over F_{p} is outside the supported range")
    if modulus is None:
        modulus = _default_modulus(p, k)
    else:
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) != k + 1 or modulus[-1] != 1:
            raise DegreeUnsupported(f"modulus must be monic of degree {k}")
        if not is_irreducible_fp(modulus, p):
            raise DegreeUnsupported(f"modulus {modulus} is reducible over F_{p}")
    return _cached_field(p, modulus)


@lru_cache(maxsize=None)
def _default_modulus(p, k):
    return smallest_irreducible(p, k)


def field_of_order(q: int) -> FieldSpec:
    p, k = prime_power(q)
    return make_field(p, k)


class FieldElem:
    __slots__ = ("field", "value")

    def __init__(self, field: FieldSpec, value: int):
        self.field = field
        self.value = value

    @property
    def coeffs(self) -> tuple[int, ...]:
        return tuple(self.field.digits(self.value))

    def sort_key(self):
        return self.value

    def _other(self, other) -> int:
        if isinstance(other, FieldElem):
            if other.field is not self.field and other.field != self.field:
                raise FieldMismatch(f"{self.field!r} vs {other.field!r}")
            return other.value
        if isinstance(other, int):
            return other % self.field.p
        return NotImplemented

    def __add__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElem(self.field, self.field.add(self.value, b))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElem(self.field, self.field.sub(self.value, b))

    def __rsub__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElem(self.field, self.field.sub(b, self.value))

    def __mul__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElem(self.field, self.field.mul(self.value, b))

    __rmul__ = __mul__

    def __truediv__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElem(self.field, self.field.mul(self.value, self.field.inv(b)))

    def __rtruediv__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElem(self.field, self.field.mul(b, self.field.inv(self.value)))

    def __neg__(self):
        return FieldElem(self.field, self.field.neg(self.value))

    def __pow__(self, e: int):
        return FieldElem(self.field, self.field.pow(self.value, e))

    def inverse(self) -> "FieldElem":
        return FieldElem(self.field, self.field.inv(self.value))

    def __eq__(self, other):
        if isinstance(other, FieldElem):
            return self.field == other.field and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.field.p
        return NotImplemented

    def __hash__(self):
        return hash((self.field.key, self.value))

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        if self.field.k != 1:
            raise TypeError("only prime-field elements convert to int")
        return self.value

    def __repr__(self):
        terms = []
        for i, c in reversed(list(enumerate(self.coeffs))):
            if not c:
                continue
            mono = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
            if not mono:
                terms.append(str(c))
            else:
                terms.append(mono if c == 1 else f"{c}*{mono}")
        return " + ".join(terms) or "0"

    def frobenius(self, i: int = 1) -> "FieldElem":
        return frobenius_power(self, i)

    def is_square(self) -> bool:
        return is_square(self)

    def sqrt(self) -> "FieldElem":
        return sqrt(self)


# ---------------------------------------------------------------------------
# element-level operations


def arith(op: str, a: FieldElem, b=None) -> FieldElem:
    """Apply one of add|sub|mul|div|neg|inv|pow."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    if op == "neg":
        return -a
    if op == "inv":
        return a.inverse()
    if op == "pow":
        return a ** int(b)
    raise ValueError(f"unknown operation {op!r}")


def frobenius_power(a: FieldElem, i: int) -> FieldElem:
    """``a ** (p ** i)``."""
    F = a.field
    return FieldElem(F, F.pow(a.value, F.p ** (i % F.k)))


def is_square(a: FieldElem) -> bool:
    F = a.field
    if F.p == 2 or a.value == 0:
        return True
    return F.pow(a.value, (F.Q - 1) // 2) == 1


def sqrt(a: FieldElem) -> FieldElem:
    """A square root of ``a``; of the two roots, the one with smaller encoding."""
    F = a.field
    if F.p == 2:
        return FieldElem(F, F.pow(a.value, F.Q // 2))
    if a.value == 0:
        return a
    if not is_square(a):
        raise NotASquare(f"{a!r} is not a square in {F!r}")
    X = UniPoly(F, [F.neg(a.value), 0, 1], raw=True)
    return find_roots(X)[0]


def embedding(sub: FieldSpec, ext: FieldSpec):
    """Raw-encoding map F_sub -> F_ext (cached root of sub's modulus)."""
    if sub is ext or sub == ext:
        return lambda v: v
    if sub.p != ext.p or ext.k % sub.k:
        raise NotASubfield(f"{sub!r} is not a subfield of {ext!r}")
    if sub.k == 1:
        return lambda v: v
    powers = ext._embedding_powers(sub)
    add, mul, digits = ext.add, ext.mul, sub.digits

    def image(v):
        acc = 0
        for c, w in zip(digits(v), powers):
            if c:
                acc = add(acc, mul(c, w))
        return acc

    return image


def embed(a: FieldElem, sub: FieldSpec, ext: FieldSpec) -> FieldElem:
    if a.field != sub:
        raise FieldMismatch(f"{a!r} is not in {sub!r}")
    return FieldElem(ext, embedding(sub, ext)(a.value))


# ---------------------------------------------------------------------------
# raw polynomial helpers: lists of encodings, constant term first, trimmed


def _trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _padd(F, a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    add = F.add
    for i, c in enumerate(b):
        out[i] = add(out[i], c)
    return _trim(out)


def _psub(F, a, b):
    out = list(a) + [0] * max(0, len(b) - len(a))
    sub = F.sub
    for i, c in enumerate(b):
        out[i] = sub(out[i], c)
    return _trim(out)


def _pscale(F, a, c):
    if not c:
        return []
    mul = F.mul
    return [mul(x, c) for x in a]


def _pmul(F, a, b):
    if not a or not b:
        return []
    add, mul = F.add, F.mul
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] = add(out[i + j], mul(x, y))
    return _trim(out)


def _pdivmod(F, a, b):
    if not b:
        raise ZeroPolynomial("division by the zero polynomial")
    a = list(a)
    db = len(b) - 1
    if len(a) - 1 < db:
        return [], a
    add, mul, neg = F.add, F.mul, F.neg
    inv = F.inv(b[-1])
    quo = [0] * (len(a) - db)
    for s in range(len(a) - 1 - db, -1, -1):
        c = a[s + db]
        if c:
            c = mul(c, inv)
            quo[s] = c
            nc = neg(c)
            for j in range(db + 1):
                if b[j]:
                    a[s + j] = add(a[s + j], mul(nc, b[j]))
    return _trim(quo), _trim(a[:db])


def _pmod(F, a, b):
    return _pdivmod(F, a, b)[1]


def _pmonic(F, a):
    if not a or a[-1] == 1:
        return list(a)
    return _pscale(F, a, F.inv(a[-1]))


def _pgcd(F, a, b):
    a, b = list(a), list(b)
    while b:
        a, b = b, _pmod(F, a, b)
    return _pmonic(F, a)


def _ppowmod(F, a, e, m):
    result = _pmod(F, [1], m)
    base = _pmod(F, a, m)
    while e:
        if e & 1:
            result = _pmod(F, _pmul(F, result, base), m)
        e >>= 1
        if e:
            base = _pmod(F, _pmul(F, base, base), m)
    return result


def _pderiv(F, a):
    mul = F.mul
    p = F.p
    return _trim([mul(i % p, a[i]) for i in range(1, len(a))])


def _peval(F, a, x):
    add, mul = F.add, F.mul
    acc = 0
    for c in reversed(a):
        acc = add(mul(acc, x), c)
    return acc


def _pres(F, a, b):
    m, n = len(a) - 1, len(b) - 1
    if n == 0:
        return F.pow(b[0], m)
    if m == 0:
        return F.pow(a[0], n)
    r = _pmod(F, a, b)
    if not r:
        return 0
    s = F.mul(F.pow(b[-1], m - (len(r) - 1)), _pres(F, b, r))
    return F.neg(s) if (m * n) % 2 else s


class UniPoly:
    """Univariate polynomial over a FieldSpec, constant term first."""

    __slots__ = ("field", "_c")

    def __init__(self, field: FieldSpec, coeffs=(), raw: bool = False):
        self.field = field
        if raw:
            self._c = _trim(list(coeffs))
        else:
            self._c = _trim([field.raw(c) for c in coeffs])

    @classmethod
    def x(cls, field: FieldSpec) -> "UniPoly":
        return cls(field, [0, 1], raw=True)

    @property
    def coeffs(self) -> tuple[FieldElem, ...]:
        return tuple(FieldElem(self.field, c) for c in self._c)

    @property
    def degree(self) -> int:
        return len(self._c) - 1

    def is_zero(self) -> bool:
        return not self._c

    @property
    def lc(self) -> FieldElem:
        return FieldElem(self.field, self._c[-1] if self._c else 0)

    def _same(self, other) -> "UniPoly":
        if isinstance(other, UniPoly):
            if other.field != self.field:
                raise FieldMismatch(f"{self.field!r} vs {other.field!r}")
            return other
        return UniPoly(self.field, [other])

    def __add__(self, other):
        return UniPoly(self.field, _padd(self.field, self._c, self._same(other)._c), raw=True)

    __radd__ = __add__

    def __sub__(self, other):
        return UniPoly(self.field, _psub(self.field, self._c, self._same(other)._c), raw=True)

    def __rsub__(self, other):
        return UniPoly(self.field, _psub(self.field, self._same(other)._c, self._c), raw=True)

    def __neg__(self):
        return UniPoly(self.field, [self.field.neg(c) for c in self._c], raw=True)

    def __mul__(self, other):
        return UniPoly(self.field, _pmul(self.field, self._c, self._same(other)._c), raw=True)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        out = UniPoly(self.field, [1], raw=True)
        for _ in range(e):
            out = out * self
        return out

    def __divmod__(self, other):
        q, r = _pdivmod(self.field, self._c, self._same(other)._c)
        return UniPoly(self.field, q, raw=True), UniPoly(self.field, r, raw=True)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __eq__(self, other):
        if isinstance(other, UniPoly):
            return self.field == other.field and self._c == other._c
        return NotImplemented

    def __hash__(self):
        return hash((self.field.key, tuple(self._c)))

    def __call__(self, x) -> FieldElem:
        return FieldElem(self.field, _peval(self.field, self._c, self.field.raw(x)))

    def monic(self) -> "UniPoly":
        return UniPoly(self.field, _pmonic(self.field, self._c), raw=True)

    def derivative(self) -> "UniPoly":
        return UniPoly(self.field, _pderiv(self.field, self._c), raw=True)

    def __repr__(self):
        if not self._c:
            return "0"
        terms = []
        for i in range(len(self._c) - 1, -1, -1):
            c = self._c[i]
            if not c:
                continue
            mono = "" if i == 0 else ("X" if i == 1 else f"X^{i}")
            cs = repr(FieldElem(self.field, c))
            if " + " in cs:
                cs = f"({cs})"
            if not mono:
                terms.append(cs)
            else:
                terms.append(mono if c == 1 else f"{cs}*{mono}")
        return " + ".join(terms)


def _check_same(f: UniPoly, g: UniPoly):
    if f.field != g.field:
        raise FieldMismatch(f"{f.field!r} vs {g.field!r}")


def poly_gcd(f: UniPoly, g: UniPoly) -> UniPoly:
    _check_same(f, g)
    return UniPoly(f.field, _pgcd(f.field, f._c, g._c), raw=True)


def poly_powmod(base: UniPoly, e: int, m: UniPoly) -> UniPoly:
    _check_same(base, m)
    if m.degree < 1:
        raise ValueError("modulus must have degree >= 1")
    return UniPoly(m.field, _ppowmod(m.field, base._c, e, m._c), raw=True)


def _rootless_part(F, c):
    """gcd(f, X^Q - X): the product of the distinct linear factors of f."""
    f = _pmonic(F, c)
    h = _psub(F, _ppowmod(F, [0, 1], F.Q, f), [0, 1])
    return _pgcd(F, f, h)


def count_distinct_roots(f: UniPoly) -> int:
    if f.is_zero():
        raise ZeroPolynomial("zero polynomial has every element as a root")
    if f.degree == 0:
        return 0
    return len(_rootless_part(f.field, f._c)) - 1


def _split(F, g, rng, out):
    d = len(g) - 1
    if d <= 0:
        return
    if d == 1:
        out.append(F.neg(g[0]))
        return
    while True:
        c = rng.randrange(1, F.Q)
        if F.p == 2:
            # absolute trace of c*X modulo g
            u = _pmod(F, [0, c], g)
            w = list(u)
            for _ in range(F.k - 1):
                u = _pmod(F, _pmul(F, u, u), g)
                w = _padd(F, w, u)
        else:
            w = _psub(F, _ppowmod(F, [c, 1], (F.Q - 1) // 2, g), [1])
        h = _pgcd(F, g, w)
        if 0 < len(h) - 1 < d:
            _split(F, h, rng, out)
            _split(F, _pdivmod(F, g, h)[0], rng, out)
            return


def find_roots(f: UniPoly, seed: int = DEFAULT_SEED) -> list[FieldElem]:
    """All roots of ``f`` in its field, sorted by encoding."""
    if f.is_zero():
        raise ZeroPolynomial("zero polynomial has every element as a root")
    F = f.field
    if f.degree == 0:
        return []
    out: list[int] = []
    _split(F, _rootless_part(F, f._c), random.Random(seed), out)
    return sorted((FieldElem(F, v) for v in out), key=FieldElem.sort_key)


def resultant(f: UniPoly, g: UniPoly) -> FieldElem:
    _check_same(f, g)
    if f.is_zero() or g.is_zero():
        raise ZeroPolynomial("resultant with the zero polynomial")
    return FieldElem(f.field, _pres(f.field, f._c, g._c))
