"""Exact arithmetic in finite fields F_{p^k}, p an odd prime.

A FiniteField is either a prime field F_p or an extension of another
FiniteField by a monic irreducible modulus; a quadratic extension of an
already-extended field keeps that field as its base (a two-level tower),
it is never re-flattened over F_p.

Elements are immutable wrappers around a canonical raw value: an int in
[0, p) for prime fields, a fixed-length tuple of base raws for extensions
(polynomial basis, little-endian). All operations are pure; fields compare
structurally, so independently built copies of the same field interoperate.

The canonical index orders every field: ints order F_p, and an extension
element c_0 + c_1 t + ... has index sum(index(c_j) * q_base^j). Non-square
scans, square-root normalization and every deterministic enumeration in the
package use this order.
"""

from .errors import (
    DivisionByZero,
    EvenCharacteristic,
    FieldMismatch,
    NotPrime,
    ReducibleModulus,
)


def _is_prime(n):
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def _prime_divisors(n):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


# raw polynomial helpers over F_p (little-endian int lists), used only by
# the irreducibility check, which runs below the Polynomial type

def _intpoly_trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a

def _intpoly_rem(p, a, b):
    a = list(a)
    db = len(b) - 1
    inv_lead = pow(b[-1], p - 2, p)
    while a and len(a) - 1 >= db:
        c = a[-1] * inv_lead % p
        shift = len(a) - 1 - db
        for j, bj in enumerate(b):
            a[shift + j] = (a[shift + j] - c * bj) % p
        _intpoly_trim(a)
    return a

def _intpoly_gcd(p, a, b):
    a = _intpoly_trim(list(a))
    b = _intpoly_trim(list(b))
    while b:
        a, b = b, _intpoly_rem(p, a, b)
    return a


class FiniteField:
    """Descriptor of F_q with q = p^k; immutable and safe to share."""

    __slots__ = ("p", "k", "q", "base", "modulus", "_zero", "_one", "_hash",
                 "_nonsquare", "_ext")

    def __init__(self, p, modulus=None, base=None):
        self.p = p
        self.base = base
        if base is None:
            self.k = 1
            self.q = p
            self.modulus = None
        else:
            self.k = len(modulus)
            self.q = base.q ** self.k
            self.modulus = tuple(modulus)
        self._hash = None
        self._nonsquare = None
        self._ext = None
        self._zero = None
        self._one = None

    # --- identity ---

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, FiniteField):
            return NotImplemented
        return (self.p == other.p and self.k == other.k
                and self.modulus == other.modulus and self.base == other.base)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.p, self.k, self.modulus, self.base))
        return self._hash

    def __repr__(self):
        return "F_%d" % self.q

    # --- raw arithmetic ---

    def _zero_raw(self):
        if self.base is None:
            return 0
        return tuple(self.base._zero_raw() for _ in range(self.k))

    def _one_raw(self):
        if self.base is None:
            return 1
        return (self.base._one_raw(),) + tuple(self.base._zero_raw() for _ in range(self.k - 1))

    def _rfromint(self, n):
        if self.base is None:
            return n % self.p
        return (self.base._rfromint(n),) + tuple(self.base._zero_raw() for _ in range(self.k - 1))

    def _radd(self, a, b):
        if self.base is None:
            return (a + b) % self.p
        base = self.base
        return tuple(base._radd(x, y) for x, y in zip(a, b))

    def _rsub(self, a, b):
        if self.base is None:
            return (a - b) % self.p
        base = self.base
        return tuple(base._rsub(x, y) for x, y in zip(a, b))

    def _rneg(self, a):
        if self.base is None:
            return (-a) % self.p
        base = self.base
        return tuple(base._rneg(x) for x in a)

    def _rmul(self, a, b):
        if self.base is None:
            return a * b % self.p
        base = self.base
        k = self.k
        zero = base._zero_raw()
        prod = [zero] * (2 * k - 1)
        for i, ai in enumerate(a):
            if ai == zero:
                continue
            for j, bj in enumerate(b):
                prod[i + j] = base._radd(prod[i + j], base._rmul(ai, bj))
        # fold x^k = -(m_0 + ... + m_{k-1} x^{k-1}) down to length k
        mod = self.modulus
        for i in range(2 * k - 2, k - 1, -1):
            c = prod[i]
            if c == zero:
                continue
            for j in range(k):
                prod[i - k + j] = base._rsub(prod[i - k + j], base._rmul(c, mod[j]))
        return tuple(prod[:k])

    def _rpow(self, a, n):
        result = self._one_raw()
        while n > 0:
            if n & 1:
                result = self._rmul(result, a)
            a = self._rmul(a, a)
            n >>= 1
        return result

    def _rinv(self, a):
        if a == self._zero_raw():
            raise DivisionByZero("inverse of zero in %r" % self)
        if self.base is None:
            return pow(a, self.p - 2, self.p)
        return self._rpow(a, self.q - 2)

    # --- canonical index ---

    def _rindex(self, a):
        if self.base is None:
            return a
        base = self.base
        idx = 0
        for c in reversed(a):
            idx = idx * base.q + base._rindex(c)
        return idx

    def _rat(self, i):
        if self.base is None:
            return i
        base = self.base
        out = []
        for _ in range(self.k):
            i, digit = divmod(i, base.q)
            out.append(base._rat(digit))
        return tuple(out)

    # --- public element interface ---

    def __call__(self, value):
        if isinstance(value, FieldElement):
            if value.field == self:
                return value
            raise FieldMismatch("element of %r is not in %r" % (value.field, self))
        if isinstance(value, int):
            return FieldElement(self, self._rfromint(value))
        raise TypeError("cannot make a field element from %r" % (value,))

    def zero(self):
        if self._zero is None:
            self._zero = FieldElement(self, self._zero_raw())
        return self._zero

    def one(self):
        if self._one is None:
            self._one = FieldElement(self, self._one_raw())
        return self._one

    def element_at(self, index):
        if not 0 <= index < self.q:
            raise ValueError("index %d outside [0, %d)" % (index, self.q))
        return FieldElement(self, self._rat(index))

    def index_of(self, element):
        if element.field != self:
            raise FieldMismatch("element of %r is not in %r" % (element.field, self))
        return self._rindex(element.raw)

    def elements(self):
        """All field elements in canonical index order."""
        for i in range(self.q):
            yield FieldElement(self, self._rat(i))

    def modulus_coeffs(self):
        """Modulus coefficients c_0..c_{k-1} as base-field elements (None for F_p)."""
        if self.base is None:
            return None
        return tuple(FieldElement(self.base, c) for c in self.modulus)


class FieldElement:
    """Immutable element of a FiniteField; all operators are exact."""

    __slots__ = ("field", "raw")

    def __init__(self, field, raw):
        if field.base is None:
            raw = raw % field.p
        else:
            raw = tuple(raw)
            if len(raw) != field.k:
                raise ValueError("raw value needs %d coefficients" % field.k)
            if field.base.base is None:
                raw = tuple(c % field.p for c in raw)
        self.field = field
        self.raw = raw

    @property
    def coeffs(self):
        """Coefficient vector: ints over a prime base, base elements in a tower."""
        F = self.field
        if F.base is None:
            return (self.raw,)
        if F.base.base is None:
            return self.raw
        return tuple(FieldElement(F.base, c) for c in self.raw)

    def _other_raw(self, other):
        if isinstance(other, FieldElement):
            if other.field is self.field or other.field == self.field:
                return other.raw
            raise FieldMismatch("operands in %r and %r" % (self.field, other.field))
        if isinstance(other, int):
            return self.field._rfromint(other)
        return None

    def __add__(self, other):
        raw = self._other_raw(other)
        if raw is None:
            return NotImplemented
        return FieldElement(self.field, self.field._radd(self.raw, raw))

    __radd__ = __add__

    def __sub__(self, other):
        raw = self._other_raw(other)
        if raw is None:
            return NotImplemented
        return FieldElement(self.field, self.field._rsub(self.raw, raw))

    def __rsub__(self, other):
        raw = self._other_raw(other)
        if raw is None:
            return NotImplemented
        return FieldElement(self.field, self.field._rsub(raw, self.raw))

    def __mul__(self, other):
        raw = self._other_raw(other)
        if raw is None:
            return NotImplemented
        return FieldElement(self.field, self.field._rmul(self.raw, raw))

    __rmul__ = __mul__

    def __truediv__(self, other):
        raw = self._other_raw(other)
        if raw is None:
            return NotImplemented
        return FieldElement(self.field, self.field._rmul(self.raw, self.field._rinv(raw)))

    def __rtruediv__(self, other):
        raw = self._other_raw(other)
        if raw is None:
            return NotImplemented
        return FieldElement(self.field, self.field._rmul(raw, self.field._rinv(self.raw)))

    def __neg__(self):
        return FieldElement(self.field, self.field._rneg(self.raw))

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return FieldElement(self.field, self.field._rpow(self.field._rinv(self.raw), -n))
        return FieldElement(self.field, self.field._rpow(self.raw, n))

    def inv(self):
        return FieldElement(self.field, self.field._rinv(self.raw))

    def is_zero(self):
        return self.raw == self.field._zero_raw()

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.raw == other.raw
        if isinstance(other, int):
            return self.raw == self.field._rfromint(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.raw))

    def __int__(self):
        if self.field.base is not None:
            raise TypeError("only prime-field elements convert to int")
        return self.raw

    def __str__(self):
        return _raw_text(self.field, self.raw, nested=False)

    def __repr__(self):
        return "%s in %r" % (self, self.field)

    def __bool__(self):
        return not self.is_zero()


# --- construction ---

def ff_make(p, modulus_poly=None):
    """Build F_p (no modulus, or any monic linear one) or F_{p^k}.

    modulus_poly is a little-endian monic int coefficient list; degree >= 2
    moduli are checked for irreducibility over F_p.
    """
    if not isinstance(p, int) or not _is_prime(p):
        raise NotPrime("%r is not prime" % (p,))
    if p == 2:
        raise EvenCharacteristic("characteristic 2 is not supported")
    prime = FiniteField(p)
    if modulus_poly is None:
        return prime
    coeffs = [c % p for c in modulus_poly]
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    if len(coeffs) < 2:
        raise ValueError("modulus must have degree >= 1")
    if coeffs[-1] != 1:
        raise ValueError("modulus must be monic")
    k = len(coeffs) - 1
    if k == 1:
        return prime
    if not _is_irreducible(p, coeffs):
        raise ReducibleModulus("modulus factors over F_%d" % p)
    return FiniteField(p, modulus=tuple(coeffs[:-1]), base=prime)


def _is_irreducible(p, coeffs):
    """Rabin test for a monic degree-k polynomial over F_p, k >= 2."""
    k = len(coeffs) - 1
    F = FiniteField(p, modulus=tuple(coeffs[:-1]), base=FiniteField(p))
    u = (0, 1) + (0,) * (k - 2)
    if F._rpow(u, p ** k) != u:
        return False
    for t in _prime_divisors(k):
        w = F._rsub(F._rpow(u, p ** (k // t)), u)
        g = _intpoly_gcd(p, list(w), coeffs)
        if len(g) - 1 != 0:
            return False
    return True


# --- squares and square roots ---

def is_square(a):
    """Euler criterion: true iff a is a square in its own field."""
    F = a.field
    if a.raw == F._zero_raw():
        return True
    return F._rpow(a.raw, (F.q - 1) // 2) == F._one_raw()


def sqrt(a):
    """Both square roots (x, -x) of a, canonical index of x first; None if a
    is a non-square. Always verified by squaring before returning."""
    F = a.field
    if a.raw == F._zero_raw():
        return (F.zero(), F.zero())
    if F.q % 4 == 3:
        x = F._rpow(a.raw, (F.q + 1) // 4)
    else:
        if F._rpow(a.raw, (F.q - 1) // 2) != F._one_raw():
            return None
        x = _tonelli_shanks(F, a.raw)
    if F._rmul(x, x) != a.raw:
        return None
    nx = F._rneg(x)
    if F._rindex(x) > F._rindex(nx):
        x, nx = nx, x
    return (FieldElement(F, x), FieldElement(F, nx))


def _nonsquare_raw(F):
    """First non-square in canonical scan order 1, 2, 3, ...; cached."""
    if F._nonsquare is None:
        half = (F.q - 1) // 2
        one = F._one_raw()
        for i in range(1, F.q):
            cand = F._rat(i)
            if F._rpow(cand, half) != one:
                F._nonsquare = cand
                break
        else:
            raise AssertionError("no non-square found; field arithmetic is broken")
    return F._nonsquare


def _tonelli_shanks(F, a):
    s = F.q - 1
    e = 0
    while s % 2 == 0:
        s //= 2
        e += 1
    one = F._one_raw()
    c = F._rpow(_nonsquare_raw(F), s)
    t = F._rpow(a, s)
    r = F._rpow(a, (s + 1) // 2)
    m = e
    while t != one:
        t2 = t
        i = 0
        while t2 != one:
            t2 = F._rmul(t2, t2)
            i += 1
            if i == m:
                return F._zero_raw()   # not a square; caller's verify rejects
        b = c
        for _ in range(m - i - 1):
            b = F._rmul(b, b)
        m = i
        c = F._rmul(b, b)
        t = F._rmul(t, c)
        r = F._rmul(r, b)
    return r


def quadratic_extension(F):
    """(F_{q^2}, embedding) with modulus t^2 - n for the first non-square n.

    The extension keeps F itself as base field; results are cached, so the
    same field object is returned on every call.
    """
    if F._ext is None:
        n = _nonsquare_raw(F)
        # t^2 - n is irreducible precisely because n is a non-square
        F2 = FiniteField(F.p, modulus=(F._rneg(n), F._zero_raw()), base=F)
        zero = F._zero_raw()

        def embed(e):
            if e.field != F:
                raise FieldMismatch("cannot embed element of %r via %r" % (e.field, F))
            return FieldElement(F2, (e.raw, zero))

        F._ext = (F2, embed)
    return F._ext


# --- textual and JSON forms ---

def _raw_text(F, raw, nested):
    if F.base is None:
        return str(raw)
    parts = [_raw_text(F.base, c, nested=True) for c in raw]
    text = ",".join(parts)
    return "(%s)" % text if nested else text


def parse_element(F, text):
    """Parse 'c0,c1,...' (optionally parenthesized) into an element of F.

    Only prime fields and extensions with a prime base have a textual form.
    """
    s = text.strip()
    if s.startswith("(") and s.endswith(")"):
        s = s[1:-1]
    if F.base is None:
        try:
            return F(int(s))
        except ValueError:
            raise ValueError("bad element %r for %r" % (text, F)) from None
    if F.base.base is not None:
        raise ValueError("tower-field elements have no textual form")
    parts = s.split(",")
    if len(parts) != F.k:
        raise ValueError("element of %r needs %d coefficients, got %r" % (F, F.k, text))
    try:
        ints = [int(x) for x in parts]
    except ValueError:
        raise ValueError("bad element %r for %r" % (text, F)) from None
    return FieldElement(F, tuple(c % F.p for c in ints))


def element_to_json(e):
    """int for prime fields, (possibly nested) coefficient list otherwise."""
    return _raw_json(e.field, e.raw)


def _raw_json(F, raw):
    if F.base is None:
        return raw
    return [_raw_json(F.base, c) for c in raw]


def element_from_json(F, obj):
    return FieldElement(F, _raw_from_json(F, obj))


def _raw_from_json(F, obj):
    if F.base is None:
        if not isinstance(obj, int):
            raise ValueError("expected an int for an element of %r, got %r" % (F, obj))
        return obj % F.p
    if not isinstance(obj, list) or len(obj) != F.k:
        raise ValueError("expected %d coefficients for an element of %r, got %r" % (F.k, F, obj))
    return tuple(_raw_from_json(F.base, c) for c in obj)


def field_spec(F):
    """Textual form: 'p' or 'p^k:c0,...,c_{k-1}' (leading 1 implicit)."""
    if F.base is None:
        return str(F.p)
    if F.base.base is not None:
        raise ValueError("tower fields have no textual spec")
    return "%d^%d:%s" % (F.p, F.k, ",".join(str(c) for c in F.modulus))


def parse_field_spec(text):
    """Parse 'p' or 'p^k:c0,c1,...' (k or k+1 coefficients, monic)."""
    s = text.strip()
    if "^" not in s:
        try:
            p = int(s)
        except ValueError:
            raise ValueError("bad field spec %r" % text) from None
        return ff_make(p)
    head, _, tail = s.partition("^")
    kpart, sep, coeffpart = tail.partition(":")
    try:
        p = int(head)
        k = int(kpart)
    except ValueError:
        raise ValueError("bad field spec %r" % text) from None
    if not sep or k < 1:
        raise ValueError("bad field spec %r" % text)
    try:
        coeffs = [int(x) for x in coeffpart.split(",")]
    except ValueError:
        raise ValueError("bad field spec %r" % text) from None
    if len(coeffs) == k:
        coeffs.append(1)
    if len(coeffs) != k + 1:
        raise ValueError("field spec %r needs %d or %d coefficients" % (text, k, k + 1))
    return ff_make(p, coeffs)
